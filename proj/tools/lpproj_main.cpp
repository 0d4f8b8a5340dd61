#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "lpproj/conjugation.hpp"
#include "lpproj/factorize.hpp"
#include "lpproj/io.hpp"
#include "lpproj/projections.hpp"

namespace {

using namespace lpproj;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_vector(const char* label, const RealVector& v) {
    std::cout << label << " [";
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::cout << (i ? ", " : "") << v[i];
    }
    std::cout << "]\n";
}

void print_verdict(const PythagoreanVerdict& v, NormOrder p,
                   const ProjectionResult& r) {
    const char* pow_note = p == NormOrder::L2 ? " (squared norms)" : "";
    double fit_term, res_term;
    if (p == NormOrder::L2) {
        const double nf = lp_norm(r.fitted, p);
        const double nr = lp_norm(r.residual, p);
        fit_term = nf * nf;
        res_term = nr * nr;
    } else {
        fit_term = lp_norm(r.fitted, p);
        res_term = lp_norm(r.residual, p);
    }
    if (v.relation == PythagoreanRelation::Equality) {
        std::cout << "equality: " << v.lhs << " = " << fit_term << " + " << res_term
                  << pow_note << "\n";
    } else {
        std::cout << "strict inequality: " << v.lhs << " < " << fit_term << " + "
                  << res_term << pow_note << "\n";
    }
}

int run_project(const std::string& method, const MatrixFile& xf, const MatrixFile& yf,
                const std::string& json_out) {
    const auto t0 = std::chrono::steady_clock::now();
    const RealVector x = read_vector(xf);
    const RealVector y = read_vector(yf);
    ProjectionResult r = method == "eucl"   ? project_euclidean(y, x)
                         : method == "l1op" ? project_l1_operator(y, x)
                                            : project_l1_min(y, x);
    const NormOrder p = method == "eucl" ? NormOrder::L2 : NormOrder::L1;
    std::cout << "alpha " << r.alpha << "\n";
    print_vector("fitted", r.fitted);
    print_vector("residual", r.residual);
    print_verdict(r.verdict, p, r);
    if (!json_out.empty()) {
        write_report(json_out, projection_report(y, x, r, seconds_since(t0)));
    }
    return kExitOk;
}

int run_decompose(const std::string& method_name_arg, std::size_t k, bool exhaustive,
                  double tol, int max_iter, const MatrixFile& mf,
                  const std::string& json_out) {
    const auto t0 = std::chrono::steady_clock::now();
    const RealMatrix X = read_matrix(mf);
    const FactorMethod method = method_name_arg == "svd"    ? FactorMethod::SvdL2
                                : method_name_arg == "tsvd" ? FactorMethod::TaxicabSvd
                                                            : FactorMethod::L1MinSvd;
    FactorOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    options.exhaustive_tsvd = exhaustive;
    const Decomposition d = decompose(X, method, k, options);
    const NormAccounting acc = norm_accounting(X, d);

    for (std::size_t s = 0; s < d.steps.size(); ++s) {
        const auto& st = d.steps[s];
        std::cout << "step " << (s + 1) << ": delta " << st.delta << " (start "
                  << st.start_label << ", " << st.iterations << " iterations"
                  << (st.converged ? "" : ", not converged") << ")\n";
    }
    std::cout << "residual trace:";
    for (double r : d.residual_trace) std::cout << " " << r;
    std::cout << "\nreconstruction error " << d.reconstruction_error << "\n";
    if (acc.order == NormOrder::L2) {
        std::cout << "total energy: sum x^2 = " << acc.total_observed
                  << ", sum delta^2 = " << acc.total_factor << "\n";
    } else {
        std::cout << "total norms: sum |x| = " << acc.total_observed
                  << " <= sum delta = " << acc.total_factor << "\n";
    }
    if (!json_out.empty()) {
        write_report(json_out, decompose_report(X, d, acc, seconds_since(t0)));
    }
    return kExitOk;
}

int run_conjugate(int p_order, const MatrixFile& mf, const std::string& json_out) {
    const RealMatrix X = read_matrix(mf);
    const NormOrder p = p_order == 1 ? NormOrder::L1 : NormOrder::L2;
    std::vector<RealVector> xs;
    for (std::size_t i = 0; i < X.rows(); ++i) xs.push_back(X.row(i));
    const ConjugateSet set = conjugate_gram_schmidt(xs, p);
    for (std::size_t i = 0; i < set.vectors.size(); ++i) {
        print_vector(("y" + std::to_string(i + 1)).c_str(), set.vectors[i]);
    }
    std::cout << "gram:\n";
    for (std::size_t i = 0; i < set.gram.rows(); ++i) {
        print_vector("  ", set.gram.row(i));
    }
    if (!json_out.empty()) {
        write_report(json_out, to_json(set));
    }
    return kExitOk;
}

// Invariant spot checks on a user matrix: residual annihilation on column
// pairs, the Pythagorean verdicts of the projections, and normalization and
// triangle checks for both operator decompositions.
int run_verify(const MatrixFile& mf) {
    const RealMatrix X = read_matrix(mf);
    int violations = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) ++violations;
    };

    const std::size_t npairs = std::min<std::size_t>(X.cols(), 4);
    for (std::size_t a = 0; a < npairs; ++a) {
        for (std::size_t b = 0; b < npairs; ++b) {
            if (a == b) continue;
            const RealVector x = X.col(a);
            const RealVector y = X.col(b);
            if (is_zero(x)) continue;
            for (NormOrder p : {NormOrder::L1, NormOrder::L2}) {
                const RealVector res = subtract(y, project_operator(y, x, p));
                const double lhs = std::abs(dot(norming_functional(x, p), res));
                check(lhs <= 1e-9 * std::max(1.0, lp_norm(y, p)),
                      "residual annihilation cols " + std::to_string(a) + "->" +
                          std::to_string(b) +
                          " p=" + (p == NormOrder::L1 ? std::string("1") : std::string("2")));
            }
            try {
                const ProjectionResult e = project_euclidean(y, x);
                check(e.verdict.relation == PythagoreanRelation::Equality,
                      "euclidean pythagoras cols " + std::to_string(a) + "->" +
                          std::to_string(b));
            } catch (const Error&) {
                // degenerate pair; nothing to verify
            }
        }
    }

    for (FactorMethod m : {FactorMethod::SvdL2, FactorMethod::TaxicabSvd}) {
        const std::size_t k = std::min(X.rows(), X.cols());
        Decomposition d;
        try {
            d = decompose(X, m, k);
        } catch (const Error& e) {
            check(false, std::string("decompose ") + method_name(m) + ": " + e.what());
            continue;
        }
        const NormOrder p = norm_order_of(m);
        for (std::size_t s = 0; s < d.steps.size(); ++s) {
            const auto& st = d.steps[s];
            const bool norms_ok =
                std::abs(lp_norm(st.a, p) - st.delta) <= 1e-9 * st.delta &&
                std::abs(lp_norm(st.b, p) - st.delta) <= 1e-9 * st.delta;
            check(norms_ok, std::string(method_name(m)) + " step " +
                                std::to_string(s + 1) + " factor norms equal delta");
        }
        const NormAccounting acc = norm_accounting(X, d);
        for (std::size_t s = 0; s < acc.triangle_holds.size(); ++s) {
            check(acc.triangle_holds[s], std::string(method_name(m)) + " step " +
                                             std::to_string(s + 1) +
                                             " triangle inequality");
        }
        if (p == NormOrder::L2 && acc.full_rank) {
            check(std::abs(acc.total_observed - acc.total_factor) <=
                      1e-9 * std::max(1.0, acc.total_factor),
                  "svd total energy identity");
        }
        if (p == NormOrder::L1) {
            check(acc.total_observed <=
                      acc.total_factor + 1e-9 * std::max(1.0, acc.total_factor),
                  "tsvd total norm inequality");
        }
    }

    std::cout << (violations == 0 ? "verify: all checks passed\n"
                                  : "verify: violations found\n");
    return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"l1/l2 projection regressions and stepwise rank-1 decompositions"};
    app.require_subcommand(1);

    // project
    auto* project = app.add_subcommand("project", "Regress vector y onto vector x");
    std::string proj_method;
    std::string x_path, y_path, proj_json;
    project->add_option("--method", proj_method, "eucl, l1op or l1min")
        ->required()
        ->check(CLI::IsMember({"eucl", "l1op", "l1min"}));
    project->add_option("--x", x_path, "regressor vector CSV")->required();
    project->add_option("--y", y_path, "target vector CSV")->required();
    project->add_option("--json", proj_json, "write a JSON report here");

    // decompose
    auto* dec = app.add_subcommand("decompose", "Stepwise rank-1 decomposition");
    std::string dec_method, dec_matrix, dec_json;
    std::size_t dec_k = 1;
    bool dec_exhaustive = false;
    double dec_tol = 1e-10;
    int dec_max_iter = 10000;
    dec->add_option("--method", dec_method, "svd, tsvd or l1min")
        ->required()
        ->check(CLI::IsMember({"svd", "tsvd", "l1min"}));
    dec->add_option("-k,--rank", dec_k, "number of factor steps")->required();
    dec->add_flag("--exhaustive", dec_exhaustive,
                  "use the exhaustive sign oracle for taxicab steps");
    dec->add_option("--tol", dec_tol, "l1-min objective stall tolerance");
    dec->add_option("--max-iter", dec_max_iter, "iteration cap");
    dec->add_option("matrix", dec_matrix, "matrix CSV")->required();
    dec->add_option("--json", dec_json, "write a JSON report here");

    // conjugate
    auto* conj = app.add_subcommand("conjugate", "Conjugate the rows of a matrix");
    int conj_p = 1;
    std::string conj_matrix, conj_json;
    conj->add_option("--p", conj_p, "norm order, 1 or 2")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    conj->add_option("matrix", conj_matrix, "matrix CSV, rows are the input vectors")
        ->required();
    conj->add_option("--json", conj_json, "write a JSON report here");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the invariant suite on a matrix");
    std::string verify_matrix;
    verify->add_option("matrix", verify_matrix, "matrix CSV")->required();

    // shared I/O flags
    bool has_header = false;
    char delimiter = ',';
    app.add_flag("--header", has_header, "skip the first CSV row");
    app.add_option("--delimiter", delimiter, "CSV delimiter (default comma)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (project->parsed()) {
            return run_project(proj_method, {x_path, has_header, delimiter},
                               {y_path, has_header, delimiter}, proj_json);
        }
        if (dec->parsed()) {
            return run_decompose(dec_method, dec_k, dec_exhaustive, dec_tol,
                                 dec_max_iter, {dec_matrix, has_header, delimiter},
                                 dec_json);
        }
        if (conj->parsed()) {
            return run_conjugate(conj_p, {conj_matrix, has_header, delimiter},
                                 conj_json);
        }
        return run_verify({verify_matrix, has_header, delimiter});
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const RaggedRows& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
}
