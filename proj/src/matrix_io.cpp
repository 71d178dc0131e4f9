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

#include "hhcoset/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace hhcoset {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string &what) { throw Error(ErrorCode::Parse, what); }

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_error("expected [re, im], got " + j.dump());
    }
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        parse_error("non-finite number");
    }
    return z;
}

std::size_t positive_size(const json &obj, const char *key) {
    if (!obj.contains(key) || !obj[key].is_number_integer() || obj[key].get<long long>() <= 0) {
        parse_error(std::string("missing or non-positive integer field '") + key + "'");
    }
    return static_cast<std::size_t>(obj[key].get<long long>());
}

json matrix_to_json(const ComplexMatrix &m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        data.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_object()) {
        parse_error("matrix must be a JSON object");
    }
    const std::size_t rows = positive_size(j, "rows");
    const std::size_t cols = positive_size(j, "cols");
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows) {
        parse_error("'data' must be an array of " + std::to_string(rows) + " rows");
    }
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (const json &row : j["data"]) {
        if (!row.is_array() || row.size() != cols) {
            parse_error("every row must hold " + std::to_string(cols) + " entries");
        }
        for (const json &z : row) {
            entries.push_back(complex_from_json(z));
        }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

json factorization_to_json(const FactorizationFile &f) {
    json factors = json::array();
    for (const ComplexMatrix &m : f.factors) {
        factors.push_back(matrix_to_json(m));
    }
    json phases = json::array();
    for (const Complex z : f.phases) {
        phases.push_back(complex_to_json(z));
    }
    json out{{"kind", std::string(kind_name(f.kind))},
             {"dim", f.dim},
             {"factors", std::move(factors)},
             {"phases", std::move(phases)}};
    if (f.kind == FactorizationKind::householder) {
        out["pivot_phases"] = f.pivot_phases;
    }
    return out;
}

FactorizationFile factorization_from_json(const json &j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        parse_error("factorization must be an object with a string 'kind'");
    }
    FactorizationFile f;
    const auto kind = parse_kind(j["kind"].get<std::string>());
    if (!kind) {
        parse_error("unknown kind '" + j["kind"].get<std::string>() + "'");
    }
    f.kind = *kind;
    f.dim = positive_size(j, "dim");
    if (!j.contains("factors") || !j["factors"].is_array()) {
        parse_error("'factors' must be an array");
    }
    for (const json &m : j["factors"]) {
        f.factors.push_back(matrix_from_json(m));
        if (f.factors.back().rows() != f.dim || f.factors.back().cols() != f.dim) {
            parse_error("factor shape does not match dim");
        }
    }
    // An empty factor list is accepted and means a bare phase diagonal.
    if (!f.factors.empty() && f.factors.size() + 1 != f.dim) {
        parse_error("expected " + std::to_string(f.dim - 1) + " factors, got " + std::to_string(f.factors.size()));
    }
    if (!j.contains("phases") || !j["phases"].is_array() || j["phases"].size() != f.dim) {
        parse_error("'phases' must hold dim entries");
    }
    for (const json &z : j["phases"]) {
        f.phases.push_back(complex_from_json(z));
    }
    if (j.contains("pivot_phases")) {
        if (!j["pivot_phases"].is_array()) {
            parse_error("'pivot_phases' must be an array");
        }
        for (const json &a : j["pivot_phases"]) {
            if (!a.is_number()) {
                parse_error("pivot phase must be a number");
            }
            f.pivot_phases.push_back(a.get<double>());
        }
    }
    return f;
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        parse_error(e.what());
    }
}

}  // namespace

ComplexMatrix multiply_out(const FactorizationFile &f) {
    ComplexMatrix out = ComplexMatrix::diagonal(f.phases);
    const bool reversed = f.kind == FactorizationKind::coset_reversed;
    for (std::size_t idx = f.factors.size(); idx-- > 0;) {
        out = reversed ? out * f.factors[idx] : f.factors[idx] * out;
    }
    return out;
}

FactorizationFile to_file(const Factorization &f) {
    FactorizationFile out;
    out.kind = kind_of(f);
    if (const auto *h = std::get_if<HouseholderFactorization>(&f)) {
        if (h->ordering != Ordering::forward) {
            throw Error(ErrorCode::WrongOrdering, "householder files hold forward factorizations");
        }
        out.dim = h->dim;
        for (const Reflection &r : h->reflections) {
            out.factors.push_back(reflect_matrix(r));
        }
        out.phases = h->residual.entries;
        out.pivot_phases = h->pivot_phases;
    } else {
        const auto &c = std::get<CosetFactorization>(f);
        out.dim = c.dim;
        for (const CosetFactor &factor : c.factors) {
            out.factors.push_back(factor.matrix);
        }
        out.phases = c.terminal.entries;
    }
    return out;
}

std::string write_matrix(const ComplexMatrix &m) { return matrix_to_json(m).dump(2) + "\n"; }

std::string write_factorization(const FactorizationFile &f) { return factorization_to_json(f).dump(2) + "\n"; }

std::string write_samples(const std::vector<ComplexMatrix> &samples) {
    json out = json::array();
    for (const ComplexMatrix &m : samples) {
        out.push_back(matrix_to_json(m));
    }
    return out.dump(1) + "\n";
}

ComplexMatrix parse_matrix(const std::string &text) { return matrix_from_json(parse_json(text)); }

FactorizationFile parse_factorization(const std::string &text) {
    return factorization_from_json(parse_json(text));
}

std::vector<ComplexMatrix> parse_samples(const std::string &text) {
    const json j = parse_json(text);
    if (!j.is_array()) {
        parse_error("sample file must be a JSON array");
    }
    std::vector<ComplexMatrix> out;
    out.reserve(j.size());
    for (const json &m : j) {
        out.push_back(matrix_from_json(m));
    }
    return out;
}

FileContent parse_any(const std::string &text) {
    const json j = parse_json(text);
    if (j.is_array()) {
        std::vector<ComplexMatrix> out;
        for (const json &m : j) {
            out.push_back(matrix_from_json(m));
        }
        return out;
    }
    if (j.is_object() && j.contains("kind")) {
        return factorization_from_json(j);
    }
    return matrix_from_json(j);
}

std::string read_text(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        parse_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::string &path, const std::string &text, std::ostream &stdout_stream) {
    if (path.empty() || path == "-") {
        stdout_stream << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
    }
    out << text;
}

}  // namespace hhcoset
