#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csym/instances.hpp"
#include "csym/kernels.hpp"
#include "csym/report.hpp"

namespace {

using namespace csym;

struct RunConfig {
    std::size_t dim = 32;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    std::size_t trials = 100;
    std::string format = "text";
    bool show_matrix = false;

    ToleranceConfig tolerances() const {
        ToleranceConfig t;
        t.identity_tol = tol;
        return t;
    }
    bool json() const { return format == "json"; }
};

std::string format_entry(cplx z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

std::string matrix_rows(const CMatrix& m, const char* row_sep) {
    std::string out;
    for (std::size_t j = 0; j < m.rows(); ++j) {
        if (j) out += row_sep;
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (k) out += " ";
            out += format_entry(m(j, k));
        }
    }
    return out;
}

void emit_report(const VerificationReport& rep, const RunConfig& cfg) {
    std::cout << (cfg.json() ? report_json(rep) : report_text(rep)) << "\n";
}

// Prints the per-instance reports in trial order plus a trailing summary;
// returns 1 if any instance failed (inconclusive instances do not fail the
// run; they are counted separately and never reported as passes).
int emit_sweep(const std::string& sweep, std::vector<VerificationReport>& reports,
               const RunConfig& cfg) {
    std::size_t passed = 0, failed = 0, inconclusive = 0;
    for (const VerificationReport& rep : reports) {
        emit_report(rep, cfg);
        if (rep.inconclusive())
            ++inconclusive;
        else if (rep.passed)
            ++passed;
        else
            ++failed;
    }
    VerificationReport summary;
    summary.name = "summary";
    summary.parameters["sweep"] = sweep;
    summary.parameters["trials"] = std::to_string(reports.size());
    summary.residuals["passed"] = static_cast<double>(passed);
    summary.residuals["failed"] = static_cast<double>(failed);
    summary.residuals["inconclusive"] = static_cast<double>(inconclusive);
    summary.passed = failed == 0;
    emit_report(summary, cfg);
    return failed == 0 ? 0 : 1;
}

VerificationReport describe_error(const std::string& name, std::uint64_t trial,
                                  const std::string& what) {
    VerificationReport rep;
    rep.name = name;
    rep.parameters["trial"] = std::to_string(trial);
    rep.passed = false;
    rep.notes = "error: " + what;
    return rep;
}

void stamp(VerificationReport& rep, const RunConfig& cfg, std::uint64_t trial) {
    rep.parameters["dim"] = std::to_string(cfg.dim);
    rep.parameters["seed"] = std::to_string(cfg.seed);
    rep.parameters["trial"] = std::to_string(trial);
}

VerificationReport trial_t21(const RunConfig& cfg, std::uint64_t trial) {
    const ToleranceConfig tol = cfg.tolerances();
    std::uint64_t s = mix_seed(cfg.seed, trial);
    Conjugation c = random_conjugation(cfg.dim, s);
    CMatrix f = fixed_basis(c, tol);
    CMatrix t = adjoint(f);

    VerificationReport rep;
    rep.name = "T2.1";
    stamp(rep, cfg, trial);
    rep.residuals["unitarity"] =
        frobenius_distance(multiply(t, adjoint(t)), CMatrix::identity(cfg.dim));
    rep.residuals["intertwining"] = frobenius_distance(multiply(t, c.matrix), conjugate(t));
    double worst_col = 0.0;
    for (std::size_t k = 0; k < cfg.dim; ++k) {
        CVector col = f.column(k);
        CVector img = apply_antilinear(c, col);
        for (std::size_t i = 0; i < cfg.dim; ++i) img[i] -= col[i];
        worst_col = std::max(worst_col, vector_norm(img));
    }
    rep.residuals["max_fixed_column"] = worst_col;
    rep.residuals["round_trip"] =
        frobenius_distance(conjugation_from_isomorphism(t, tol).matrix, c.matrix);

    rep.passed = rep.residuals["unitarity"] <= tol.identity_tol &&
                 rep.residuals["intertwining"] <= tol.identity_tol &&
                 rep.residuals["max_fixed_column"] <= tol.identity_tol &&
                 rep.residuals["round_trip"] <= std::max(1e-9, tol.identity_tol);
    return rep;
}

VerificationReport trial_p22(const RunConfig& cfg, std::uint64_t trial) {
    const ToleranceConfig tol = cfg.tolerances();
    std::uint64_t s = mix_seed(cfg.seed, trial);
    CMatrix u = random_unitary(cfg.dim, s);
    Conjugation c = conjugation_from_isomorphism(u, tol);
    VerificationReport rep = is_conjugation(c.as_antilinear(), tol);
    rep.name = "P2.2";
    stamp(rep, cfg, trial);
    return rep;
}

VerificationReport trial_r23(const RunConfig& cfg, std::uint64_t trial) {
    const ToleranceConfig tol = cfg.tolerances();
    std::uint64_t s = mix_seed(cfg.seed, trial);
    Conjugation c = random_conjugation(cfg.dim, s);
    CMatrix a = make_doubly_symmetric(random_gaussian(cfg.dim, mix_seed(s, 29)), c, c, tol);
    CMatrix t = intertwiner_from_conjugation(c, tol);
    CMatrix b = transport_operator(a, t, tol);

    VerificationReport rep = verify_intertwiner_rigidity(c, tol);
    rep.name = "R2.3";
    stamp(rep, cfg, trial);
    rep.residuals["transport_symmetry"] = frobenius_distance(b, transpose(b));
    rep.residuals["spectral_drift"] = spectral_distance(a, b);
    if (rep.residuals["transport_symmetry"] > 10.0 * tol.identity_tol) rep.passed = false;
    if (rep.residuals["spectral_drift"] > 1e-8) rep.passed = false;
    return rep;
}

VerificationReport trial_c24(const RunConfig& cfg, std::uint64_t trial) {
    std::uint64_t s = mix_seed(cfg.seed, trial);
    VerificationReport rep =
        check_symmetric_equivalence(random_gaussian(cfg.dim, s), cfg.tolerances());
    stamp(rep, cfg, trial);
    return rep;
}

VerificationReport trial_t25(const RunConfig& cfg, std::uint64_t trial, TheoremId id) {
    const ToleranceConfig tol = cfg.tolerances();
    DoublySymmetricInstance inst = doubly_symmetric_instance(cfg.dim, cfg.seed, trial);
    VerificationReport rep;
    if (id == TheoremId::T2_5)
        rep = verify_theorem_2_5(inst.a, inst.c, inst.j, tol);
    else if (id == TheoremId::R2_6)
        rep = verify_remark_2_6(inst.a, inst.c, inst.j, tol);
    else
        rep = verify_converse(inst.a, inst.c, inst.j, tol);
    stamp(rep, cfg, trial);
    return rep;
}

VerificationReport trial_c28(const RunConfig& cfg, std::uint64_t trial) {
    const ToleranceConfig tol = cfg.tolerances();
    std::uint64_t s = mix_seed(cfg.seed, trial);
    int max_bw = std::min<int>(4, (static_cast<int>(cfg.dim) - 2) / 2);
    Symbol phi;
    Conjugation c = c1_conjugation(cfg.dim), j = c1_conjugation(cfg.dim);
    switch (trial % 3) {
        case 0:
            phi = parse_symbol("z^2 + zbar^2");
            j = family_conjugation(cplx(-1.0, 0.0), cfg.dim);
            break;
        case 1: {
            cplx lambda = random_unimodular(mix_seed(s, 31));
            phi = family_symmetric_symbol(lambda, max_bw, mix_seed(s, 37), false);
            c = family_conjugation(lambda, cfg.dim);
            j = family_conjugation(lambda, cfg.dim);
            break;
        }
        default: {
            cplx lambda = random_unimodular(mix_seed(s, 41));
            phi = family_symmetric_symbol(lambda, std::max(2, max_bw), mix_seed(s, 43), true);
            c = family_conjugation(lambda, cfg.dim);
            j = family_conjugation(-lambda, cfg.dim);
            break;
        }
    }
    VerificationReport rep = verify_corollary_2_8(phi, c, j, cfg.dim, tol);
    stamp(rep, cfg, trial);
    return rep;
}

std::vector<VerificationReport> run_sweep(TheoremId id, const RunConfig& cfg) {
    const std::size_t trials = (id == TheoremId::EX) ? 1 : cfg.trials;
    std::vector<VerificationReport> reports(trials);
    const std::int64_t count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t trial = static_cast<std::uint64_t>(i);
        try {
            switch (id) {
                case TheoremId::T2_1: reports[i] = trial_t21(cfg, trial); break;
                case TheoremId::P2_2: reports[i] = trial_p22(cfg, trial); break;
                case TheoremId::R2_3: reports[i] = trial_r23(cfg, trial); break;
                case TheoremId::C2_4: reports[i] = trial_c24(cfg, trial); break;
                case TheoremId::T2_5:
                case TheoremId::R2_6:
                case TheoremId::P_CONVERSE: reports[i] = trial_t25(cfg, trial, id); break;
                case TheoremId::C2_8: reports[i] = trial_c28(cfg, trial); break;
                case TheoremId::EX: {
                    VerificationReport rep = example_report(cfg.dim, cfg.tolerances());
                    rep.parameters["seed"] = std::to_string(cfg.seed);
                    reports[i] = std::move(rep);
                    break;
                }
            }
        } catch (const std::exception& e) {
            reports[i] = describe_error(theorem_name(id), trial, e.what());
        }
    }
    return reports;
}

int cmd_verify(const std::string& id_text, const RunConfig& cfg) {
    std::vector<TheoremId> ids;
    if (id_text == "ALL") {
        ids = all_theorems();
    } else {
        auto id = theorem_from_name(id_text);
        if (!id) {
            std::string valid = "ALL";
            for (TheoremId t : all_theorems()) valid = theorem_name(t) + " " + valid;
            std::cerr << "error: unknown theorem id '" << id_text << "'; valid ids: " << valid
                      << "\n";
            return 2;
        }
        ids = {*id};
    }
    if (cfg.dim < 6)
        for (TheoremId t : ids)
            if (t == TheoremId::EX || t == TheoremId::C2_8) {
                std::cerr << "error: " << theorem_name(t)
                          << " needs --dim >= 2*bandwidth + 2 = 6 for its symbols\n";
                return 2;
            }
    int rc = 0;
    for (TheoremId t : ids) {
        std::vector<VerificationReport> reports = run_sweep(t, cfg);
        rc = std::max(rc, emit_sweep(theorem_name(t), reports, cfg));
    }
    return rc;
}

int cmd_toeplitz(const std::string& symbol_text, const std::string& mu_text,
                 const std::string& lambda_text, const RunConfig& cfg) {
    Symbol phi = parse_symbol(symbol_text);
    cplx mu = parse_complex(mu_text);
    cplx lambda = parse_complex(lambda_text);
    const std::size_t min_dim = 2 * static_cast<std::size_t>(phi.bandwidth()) + 2;
    if (cfg.dim < min_dim)
        throw std::invalid_argument("--dim " + std::to_string(cfg.dim) +
                                    " is below 2*bandwidth + 2 = " + std::to_string(min_dim) +
                                    "; symmetry of the truncation is only conclusive once the "
                                    "section contains the full band");
    const ToleranceConfig tol = cfg.tolerances();
    Conjugation c = family_conjugation(mu, lambda, cfg.dim, tol);
    CMatrix a = toeplitz_matrix(phi, cfg.dim);

    VerificationReport rep;
    rep.name = "toeplitz";
    rep.parameters["dim"] = std::to_string(cfg.dim);
    rep.parameters["symbol"] = print_symbol(phi);
    rep.parameters["mu"] = print_complex(mu);
    rep.parameters["lambda"] = print_complex(lambda);
    rep.residuals["csym"] = csym_residual(a, c);
    auto proxy = injectivity_proxy(a, tol);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", proxy.sigma_min);
    rep.notes = std::string("injectivity proxy: ") + (proxy.injective ? "clear" : "not clear") +
                ", sigma_min " + buf;
    if (cfg.show_matrix && cfg.json()) rep.notes += "; matrix: " + matrix_rows(a, "; ");
    rep.passed = rep.residuals["csym"] <= tol.identity_tol;

    if (cfg.show_matrix && !cfg.json()) std::cout << matrix_rows(a, "\n") << "\n";
    emit_report(rep, cfg);
    return rep.passed ? 0 : 1;
}

int cmd_fixed_basis(const std::string& spec, const RunConfig& cfg) {
    const ToleranceConfig tol = cfg.tolerances();
    Conjugation c{CMatrix{}, ""};
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    if (colon == std::string::npos || (head != "family" && head != "random"))
        throw std::invalid_argument("conjugation spec must be family:MU,LAMBDA or random:SEED");
    std::string rest = spec.substr(colon + 1);
    if (head == "family") {
        int depth = 0;
        std::size_t comma = std::string::npos;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == '(') ++depth;
            if (rest[i] == ')') --depth;
            if (rest[i] == ',' && depth == 0) {
                comma = i;
                break;
            }
        }
        if (comma == std::string::npos)
            throw std::invalid_argument("family spec needs two parameters: family:MU,LAMBDA");
        cplx mu = parse_complex(rest.substr(0, comma));
        cplx lambda = parse_complex(rest.substr(comma + 1));
        c = family_conjugation(mu, lambda, cfg.dim, tol);
    } else {
        std::size_t parsed = 0;
        std::uint64_t seed = std::stoull(rest, &parsed);
        if (parsed != rest.size()) throw std::invalid_argument("random spec needs an integer seed");
        c = random_conjugation(cfg.dim, seed);
    }

    CMatrix f = fixed_basis(c, tol);
    VerificationReport rep;
    rep.name = "fixed-basis";
    rep.parameters["dim"] = std::to_string(cfg.dim);
    rep.parameters["conjugation"] = c.label;
    rep.residuals["unitarity"] =
        frobenius_distance(multiply(adjoint(f), f), CMatrix::identity(cfg.dim));
    int width = static_cast<int>(std::to_string(cfg.dim - 1).size());
    for (std::size_t k = 0; k < cfg.dim; ++k) {
        CVector col = f.column(k);
        CVector img = apply_antilinear(c, col);
        for (std::size_t i = 0; i < cfg.dim; ++i) img[i] -= col[i];
        char key[32];
        std::snprintf(key, sizeof(key), "col_%0*zu", width, k);
        rep.residuals[key] = vector_norm(img);
    }
    rep.passed = true;
    for (const auto& [k, r] : rep.residuals)
        if (r > tol.identity_tol) rep.passed = false;
    if (cfg.json())
        rep.notes = "basis rows: " + matrix_rows(f, "; ");
    else
        std::cout << matrix_rows(f, "\n") << "\n";
    emit_report(rep, cfg);
    return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Verification toolkit for conjugations and complex symmetric Toeplitz "
                 "truncations on the finite Hardy-space model"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--dim", cfg.dim, "truncation dimension")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "base seed for randomized instances");
        sub->add_option("--tol", cfg.tol, "identity tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--trials", cfg.trials, "instances per sweep")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--show-matrix", cfg.show_matrix, "print the matrix under check");
    };

    std::string theorem_id, symbol_text, conj_spec;
    std::string mu_text = "1", lambda_text = "1";

    CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("theorem", theorem_id, "theorem id or ALL")->required();
    add_common(verify);

    CLI::App* toeplitz = app.add_subcommand("toeplitz", "check a Toeplitz truncation against a "
                                                        "family conjugation");
    toeplitz->add_option("symbol", symbol_text, "Laurent symbol, e.g. \"z^2 + zbar^2\"")
        ->required();
    toeplitz->add_option("--mu", mu_text, "family parameter mu (unimodular)");
    toeplitz->add_option("--lambda", lambda_text, "family parameter lambda (unimodular)");
    add_common(toeplitz);

    CLI::App* fixed = app.add_subcommand("fixed-basis", "construct a fixed orthonormal basis");
    fixed->add_option("conjugation", conj_spec, "family:MU,LAMBDA or random:SEED")->required();
    add_common(fixed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(theorem_id, cfg);
        if (toeplitz->parsed()) return cmd_toeplitz(symbol_text, mu_text, lambda_text, cfg);
        if (fixed->parsed()) return cmd_fixed_basis(conj_spec, cfg);
    } catch (const csym::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
