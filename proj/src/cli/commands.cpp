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

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hhcoset/batch.hpp"
#include "hhcoset/cli.hpp"
#include "hhcoset/coset.hpp"
#include "hhcoset/haar.hpp"
#include "hhcoset/matrix_io.hpp"

namespace hhcoset::cli {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

/// Largest deviation of a factor from the structure its kind requires.
double structure_defect(const ComplexMatrix &factor, std::size_t level, FactorizationKind kind) {
    const std::size_t n = factor.rows();
    switch (kind) {
        case FactorizationKind::householder: {
            // Hermitian, involutive, identity above the level.
            double d = max_abs_difference(factor, factor.adjoint());
            d = std::max(d, max_abs_difference(factor * factor, ComplexMatrix::identity(n)));
            for (std::size_t i = 0; i < level; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    d = std::max(d, std::abs(factor(i, j) - (i == j ? 1.0 : 0.0)));
                    d = std::max(d, std::abs(factor(j, i) - (i == j ? 1.0 : 0.0)));
                }
            }
            return d;
        }
        case FactorizationKind::coset:
        case FactorizationKind::coset_reversed: {
            const CosetFactor c{kind == FactorizationKind::coset ? factor : factor.adjoint(), level};
            try {
                const CosetVector xv = extract_coset_vector(c);
                return max_abs_difference(coset_matrix_from_X(xv).matrix, c.matrix);
            } catch (const Error &) {
                return max_abs(factor) + 1.0;
            }
        }
    }
    return 0.0;
}

int verify_matrix(const ComplexMatrix &m, double tol, std::ostream &out) {
    if (!m.is_square()) {
        out << "not square: " << m.rows() << "x" << m.cols() << "\n";
        return kExitVerifyFailed;
    }
    const double err = unitarity_error(m);
    out << "unitarity_error: " << fmt(err) << "\n";
    return err <= tol ? kExitOk : kExitVerifyFailed;
}

int verify_factorization(const FactorizationFile &f, double tol, std::ostream &out) {
    bool ok = true;
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
        const double unit = unitarity_error(f.factors[k]);
        const double shape = structure_defect(f.factors[k], k, f.kind);
        out << "factor " << k << ": unitarity_error " << fmt(unit) << ", structure_defect " << fmt(shape) << "\n";
        ok = ok && unit <= tol && shape <= tol;
    }
    PhaseDiagonal phases{f.phases};
    const double modulus = phases.modulus_defect();
    out << "phases: modulus_defect " << fmt(modulus) << "\n";
    ok = ok && modulus <= tol;
    const double product = unitarity_error(multiply_out(f));
    out << "product: unitarity_error " << fmt(product) << "\n";
    ok = ok && product <= tol;
    return ok ? kExitOk : kExitVerifyFailed;
}

template <typename Body>
int guarded(std::ostream &err, Body body) {
    try {
        return body();
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::Parse:
            case ErrorCode::TooFewSamples:
            case ErrorCode::InvalidDim:
                return kExitParse;
            case ErrorCode::NotUnitary:
            case ErrorCode::NonSquare:
                return kExitNotUnitary;
            default:
                return kExitInternal;
        }
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace

int cmd_decompose(const DecomposeOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const ComplexMatrix u = parse_matrix(read_text(opts.input));
        if (!u.is_square()) {
            err << "input is not square: " << u.rows() << "x" << u.cols() << "\n";
            return kExitNotUnitary;
        }
        const double defect = unitarity_error(u);
        if (!(defect <= opts.tol)) {
            err << "input is not unitary: unitarity_error = " << fmt(defect) << " > tol " << fmt(opts.tol) << "\n";
            return kExitNotUnitary;
        }
        Tolerances tol;
        tol.unitarity_tol = opts.tol;
        const FactorizationFile file = to_file(factorize(u, opts.mode, tol));
        const double recon = max_abs_difference(multiply_out(file), u);
        if (!(recon <= tol.reconstruction_tol + 10.0 * defect)) {
            err << "internal: reconstruction error " << fmt(recon) << "\n";
            return kExitInternal;
        }
        write_text(opts.output, write_factorization(file), out);
        return kExitOk;
    });
}

int cmd_reconstruct(const ReconstructOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const FactorizationFile f = parse_factorization(read_text(opts.input));
        const ComplexMatrix u = multiply_out(f);
        if (!u.all_finite()) {
            err << "internal: product is not finite\n";
            return kExitInternal;
        }
        write_text(opts.output, write_matrix(u), out);
        return kExitOk;
    });
}

int cmd_sample(const SampleOptions &opts, std::ostream &out, std::ostream &err) {
    if (opts.dim < 1 || opts.count < 1) {
        err << "error: --dim and --count must be at least 1\n";
        return kExitParse;
    }
    return guarded(err, [&] {
        const auto samples =
            haar_batch(static_cast<std::size_t>(opts.dim), static_cast<std::size_t>(opts.count), opts.seed);
        write_text(opts.output, write_samples(samples), out);
        return kExitOk;
    });
}

int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const FileContent content = parse_any(read_text(opts.input));
        if (const auto *m = std::get_if<ComplexMatrix>(&content)) {
            return verify_matrix(*m, opts.tol, out);
        }
        if (const auto *f = std::get_if<FactorizationFile>(&content)) {
            return verify_factorization(*f, opts.tol, out);
        }
        const auto &samples = std::get<std::vector<ComplexMatrix>>(content);
        double worst = 0.0;
        for (const ComplexMatrix &m : samples) {
            if (!m.is_square()) {
                out << "not square: " << m.rows() << "x" << m.cols() << "\n";
                return kExitVerifyFailed;
            }
            worst = std::max(worst, unitarity_error(m));
        }
        out << "samples: " << samples.size() << ", max unitarity_error " << fmt(worst) << "\n";
        return worst <= opts.tol ? kExitOk : kExitVerifyFailed;
    });
}

int cmd_haar_test(const HaarTestOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        SampleReport report;
        if (!opts.input.empty()) {
            const auto samples = parse_samples(read_text(opts.input));
            if (samples.size() < kMinValidationSamples) {
                err << "error: need at least " << kMinValidationSamples << " samples, got " << samples.size()
                    << "\n";
                return kExitParse;
            }
            report = summarize_samples(samples);
        } else {
            if (opts.dim < 1 || opts.samples < 1) {
                err << "error: --dim and --samples must be at least 1\n";
                return kExitParse;
            }
            report = haar_validate(static_cast<std::size_t>(opts.dim), static_cast<std::size_t>(opts.samples),
                                   opts.seed);
        }
        out << "dim: " << report.dim << "\n";
        out << "sample_count: " << report.sample_count << "\n";
        out << "ks_statistic: " << fmt(report.ks_statistic) << "\n";
        out << "ks_threshold: " << fmt(report.ks_threshold) << "\n";
        out << "mean_moduli:\n";
        for (std::size_t i = 0; i < report.dim; ++i) {
            out << " ";
            for (std::size_t j = 0; j < report.dim; ++j) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), " %.5f", report.mean_modulus(i, j));
                out << buf;
            }
            out << "\n";
        }
        out << (report.passed() ? "PASS" : "FAIL") << "\n";
        return report.passed() ? kExitOk : kExitStatisticalFailure;
    });
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Householder / canonical coset decompositions and Haar sampling of unitary matrices"};
    app.require_subcommand(1);

    const std::map<std::string, FactorizationKind> modes{{"householder", FactorizationKind::householder},
                                                         {"coset", FactorizationKind::coset},
                                                         {"coset-reversed", FactorizationKind::coset_reversed}};

    DecomposeOptions decompose_opts;
    auto *decompose = app.add_subcommand("decompose", "Factor a unitary matrix");
    decompose->add_option("--input", decompose_opts.input, "MatrixFile path ('-' for stdin)")->required();
    decompose->add_option("--output", decompose_opts.output, "FactorizationFile path (default stdout)");
    decompose->add_option("--mode", decompose_opts.mode, "householder | coset | coset-reversed")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    decompose->add_option("--tol", decompose_opts.tol, "unitarity tolerance")->check(CLI::PositiveNumber);

    ReconstructOptions reconstruct_opts;
    auto *reconstruct = app.add_subcommand("reconstruct", "Multiply a factorization back out");
    reconstruct->add_option("--input", reconstruct_opts.input, "FactorizationFile path ('-' for stdin)")
        ->required();
    reconstruct->add_option("--output", reconstruct_opts.output, "MatrixFile path (default stdout)");

    SampleOptions sample_opts;
    auto *sample = app.add_subcommand("sample", "Draw Haar-random unitaries");
    sample->add_option("--dim", sample_opts.dim, "matrix dimension")->required();
    sample->add_option("--count", sample_opts.count, "number of matrices")->required();
    sample->add_option("--seed", sample_opts.seed, "RNG seed");
    sample->add_option("--output", sample_opts.output, "sample file path (default stdout)");

    VerifyOptions verify_opts;
    auto *verify = app.add_subcommand("verify", "Check unitarity / factorization consistency");
    verify->add_option("--input", verify_opts.input, "MatrixFile, FactorizationFile or sample file")->required();
    verify->add_option("--tol", verify_opts.tol, "tolerance")->check(CLI::PositiveNumber);

    HaarTestOptions haar_opts;
    auto *haar_test = app.add_subcommand("haar-test", "KS test of |U_00|^2 against Beta(1, N-1)");
    haar_test->add_option("--dim", haar_opts.dim, "matrix dimension");
    haar_test->add_option("--samples", haar_opts.samples, "number of samples (>= 1000)");
    haar_test->add_option("--seed", haar_opts.seed, "RNG seed");
    haar_test->add_option("--input", haar_opts.input, "read samples from a file instead of drawing them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    if (decompose->parsed()) {
        return cmd_decompose(decompose_opts, out, err);
    }
    if (reconstruct->parsed()) {
        return cmd_reconstruct(reconstruct_opts, out, err);
    }
    if (sample->parsed()) {
        return cmd_sample(sample_opts, out, err);
    }
    if (verify->parsed()) {
        return cmd_verify(verify_opts, out, err);
    }
    if (haar_test->parsed()) {
        if (haar_opts.input.empty() && (haar_test->count("--dim") == 0 || haar_test->count("--samples") == 0)) {
            err << "error: haar-test needs --dim and --samples, or --input\n";
            return kExitParse;
        }
        return cmd_haar_test(haar_opts, out, err);
    }
    return kExitParse;
}

}  // namespace hhcoset::cli
