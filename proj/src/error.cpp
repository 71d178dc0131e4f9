// Copyright 2026 The hhcoset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hhcoset/error.hpp"

namespace hhcoset {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare:
            return "NonSquare";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NonFinite:
            return "NonFinite";
        case ErrorCode::InvalidTolerance:
            return "InvalidTolerance";
        case ErrorCode::DegeneratePivot:
            return "DegeneratePivot";
        case ErrorCode::NotUnitLength:
            return "NotUnitLength";
        case ErrorCode::LeadingComponentsNonzero:
            return "LeadingComponentsNonzero";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::WrongOrdering:
            return "WrongOrdering";
        case ErrorCode::MalformedFactor:
            return "MalformedFactor";
        case ErrorCode::BallViolation:
            return "BallViolation";
        case ErrorCode::RangeError:
            return "RangeError";
        case ErrorCode::OddDimension:
            return "OddDimension";
        case ErrorCode::InvalidDim:
            return "InvalidDim";
        case ErrorCode::TooFewSamples:
            return "TooFewSamples";
        case ErrorCode::Parse:
            return "Parse";
    }
    return "Unknown";
}

}  // namespace hhcoset
