// Command-line front end: reports, LP certifications, identity scans, sampling
// experiments, and machine-readable exports.
//
// Exit codes: 0 success, 2 usage or parse error, 3 solver failure,
// 4 certified bound violation, 5 failed audit.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bellrand/certify.hpp"
#include "bellrand/coefficients.hpp"
#include "bellrand/json_io.hpp"
#include "bellrand/max_violation_space.hpp"
#include "bellrand/mermin.hpp"
#include "bellrand/randomness.hpp"

namespace {

using namespace bellrand;
namespace fs = std::filesystem;

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitBound = 4;
constexpr int kExitAudit = 5;

int require_odd(int n) {
    if (n < 2 || n > kMaxParties || n % 2 == 0) {
        std::cerr << "error: n must be an odd party count in [3," << kMaxParties << "], got "
                  << n << "\n";
        return kExitUsage;
    }
    return 0;
}

int cmd_report(int n, const std::string& json_path) {
    if (int rc = require_odd(n)) return rc;
    const PartyCount pc(n);
    const int h = h_n(pc);
    const Rational formula = ghz_guessing_formula(pc);
    const Rational mmax = algebraic_max(pc);
    const Behavior ghz = ghz_behavior(pc);

    std::cout << "n               : " << n << "\n"
              << "h_n             : " << (h > 0 ? "+1" : "-1") << "\n"
              << "G (closed form) : " << to_fraction_string(formula) << " = "
              << to_decimal_string(formula) << "\n"
              << "Mermin value    : " << to_fraction_string(mermin_value(ghz)) << " (algebraic max "
              << to_fraction_string(mmax) << ")\n";

    nlohmann::json inputs = nlohmann::json::array();
    bool theorem_ok = true;
    const Mask na = Mask{1} << n;
    for (Mask x = 0; x < na; ++x) {
        if (input_parity(x) != 1) continue;
        const GuessProb obs = observed_guessing_f(x, ghz);
        const GuessProb intr = intrinsic_guessing_max_violation(x, ghz);
        bool equal = obs.value == intr.value;
        // The closed form applies where the forced full correlator is +1; at
        // the remaining Mermin inputs f is deterministic.
        if (mermin_required_sign(x) > 0)
            equal = equal && obs.value == formula;
        else
            equal = equal && obs.value == 1;
        theorem_ok = theorem_ok && equal;
        std::cout << "  x=" << mask_to_bits(x, n) << "  G_obs=" << to_fraction_string(obs.value)
                  << "  G_int=" << to_fraction_string(intr.value)
                  << (equal ? "" : "  MISMATCH") << "\n";
        inputs.push_back({{"x", mask_to_bits(x, n)},
                          {"G_obs", to_fraction_string(obs.value)},
                          {"G_int", to_fraction_string(intr.value)}});
    }
    std::cout << "observed = intrinsic on every Mermin input: " << (theorem_ok ? "yes" : "NO")
              << "\n";

    if (!json_path.empty()) {
        write_json_file(json_path,
                        {{"n", n},
                         {"h_n", h},
                         {"G_formula", to_fraction_string(formula)},
                         {"mermin_value", to_fraction_string(mermin_value(ghz))},
                         {"algebraic_max", to_fraction_string(mmax)},
                         {"inputs", inputs},
                         {"observed_equals_intrinsic", theorem_ok}});
    }
    return theorem_ok ? 0 : 1;
}

int cmd_certify(int n, const std::string& mode_str, double tol, std::string outdir,
                bool drop_mermin) {
    if (int rc = require_odd(n)) return rc;
    const CertMode mode = mode_str == "float" ? CertMode::Float : CertMode::Exact;
    const char* exact_cap_env = std::getenv("BELLRAND_EXACT_CAP");
    const int exact_cap = exact_cap_env ? std::atoi(exact_cap_env) : 5;
    if (mode == CertMode::Exact && n > exact_cap) {
        std::cerr << "error: exact mode capped at n=" << exact_cap
                  << " (set BELLRAND_EXACT_CAP to override)\n";
        return kExitUsage;
    }
    if (outdir.empty())
        outdir = "certificates-n" + std::to_string(n) + "-" + (mode == CertMode::Exact ? "exact" : "float");
    fs::create_directories(outdir);

    CertifyResult result;
    try {
        result = certify_lemma1(PartyCount(n), mode, tol, drop_mermin);
    } catch (const Error& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    }

    for (const auto& [x, cert] : result.certificates) {
        const std::string stem = "input-" + mask_to_bits(x, n);
        const std::string witness_file = stem + "-witness.json";
        if (cert.witness) write_json_file(outdir + "/" + witness_file, behavior_to_json(*cert.witness));
        write_json_file(outdir + "/" + stem + ".json",
                        certificate_to_json(cert, n, x, witness_file));
        std::cout << "x=" << mask_to_bits(x, n) << "  min P(f=h|x) = "
                  << to_fraction_string(cert.value) << " = " << to_decimal_string(cert.value);
        if (cert.derived_from)
            std::cout << "  (relabeled from x=" << mask_to_bits(*cert.derived_from, n) << ")";
        std::cout << "\n";
    }
    std::size_t solved = 0;
    for (const auto& [x, cert] : result.certificates)
        if (!cert.derived_from) ++solved;
    std::cout << result.certificates.size() << " certificates written to " << outdir << " ("
              << solved << " programs solved; the rest follow by party relabeling)\n";
    if (!result.bound_holds) {
        std::cerr << "BOUND VIOLATION: some optimal value is below 1/2\n";
        return kExitBound;
    }
    return 0;
}

int cmd_scan(int n_max, const std::string& format, const std::string& out, bool with_lemma1) {
    if (int rc = require_odd(n_max)) return rc;
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) {
            std::cerr << "error: cannot write " << out << "\n";
            return kExitUsage;
        }
        os = &file;
    }

    nlohmann::json jrows = nlohmann::json::array();
    if (format == "csv") *os << "n,G_formula,G_ghz,h_n,lemma1_min\n";
    for (int n = 3; n <= n_max; n += 2) {
        const PartyCount pc(n);
        const Rational formula = ghz_guessing_formula(pc);
        const Behavior ghz = ghz_behavior(pc);
        const Rational g_ghz = observed_guessing_f(canonical_mermin_input(n), ghz).value;
        std::string lemma1;
        if (with_lemma1 && n <= 5) {
            const Certificate cert =
                certify_lemma1_input(pc, canonical_mermin_input(n), CertMode::Exact);
            lemma1 = to_fraction_string(cert.value);
        }
        if (format == "csv") {
            *os << n << ',' << to_fraction_string(formula) << ',' << to_fraction_string(g_ghz)
                << ',' << (h_n(pc) > 0 ? "+1" : "-1") << ',' << lemma1 << "\n";
        } else {
            jrows.push_back({{"n", n},
                             {"G_formula", to_fraction_string(formula)},
                             {"G_ghz", to_fraction_string(g_ghz)},
                             {"h_n", h_n(pc)},
                             {"lemma1_min", lemma1}});
        }
    }
    if (format == "json") *os << jrows.dump(2) << "\n";
    return 0;
}

int cmd_simulate(int n, long long shots, std::uint64_t seed, const std::string& json_path) {
    if (int rc = require_odd(n)) return rc;
    if (shots < 1) {
        std::cerr << "error: shots must be >= 1\n";
        return kExitUsage;
    }
    const PartyCount pc(n);
    const Behavior ghz = ghz_behavior(pc);
    const Mask x_m = canonical_mermin_input(n);
    const int h = h_n(pc);
    const std::vector<Mask> samples = sample_outcomes(ghz, x_m, shots, seed);
    long long hits = 0;
    for (Mask a : samples)
        if (f_value(a) == h) ++hits;
    const double p_hat = static_cast<double>(hits) / static_cast<double>(shots);
    const double se = std::sqrt(p_hat * (1 - p_hat) / static_cast<double>(shots));
    const double expected = ghz_guessing_formula(pc).get_d();
    std::cout << "n=" << n << " shots=" << shots << " seed=" << seed << "\n"
              << "empirical P(f=h_n|x_m) = " << p_hat << "\n"
              << "standard error         = " << se << "\n"
              << "closed form            = " << expected << "\n"
              << "deviation              = " << p_hat - expected << "\n";
    if (!json_path.empty())
        write_json_file(json_path, {{"n", n},
                                    {"shots", shots},
                                    {"seed", seed},
                                    {"p_hat", p_hat},
                                    {"standard_error", se},
                                    {"expected", expected},
                                    {"deviation", p_hat - expected}});
    return 0;
}

int cmd_audit(const std::string& dec_path, const std::string& target_path,
              const std::string& eps_str) {
    Decomposition d;
    Behavior target((PartyCount(2)));
    Rational eps;
    try {
        d = decomposition_from_json(read_json_file(dec_path));
        target = behavior_from_json(read_json_file(target_path));
        eps = rational_from_string(eps_str);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    AuditReport report;
    try {
        report = audit_decomposition(d, target, eps);
    } catch (const std::exception& e) {
        std::cerr << "audit error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (report.ok) {
        std::cout << "audit passed: " << d.components.size() << " component(s)\n";
        return 0;
    }
    std::cerr << "audit failed:\n";
    for (const std::string& reason : report.failures) std::cerr << "  - " << reason << "\n";
    return kExitAudit;
}

int cmd_coeffs(int n_max, const std::string& out) {
    if (int rc = require_odd(n_max)) return rc;
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        os = &file;
    }
    *os << "n,i,alpha_raw,alpha_primed,beta\n";
    for (int n = 3; n <= n_max; n += 2) {
        const PartyCount pc(n);
        for (int i = 0; i <= (n - 1) / 2; ++i)
            *os << n << ',' << i << ',' << alpha_raw(pc, i).get_str() << ','
                << alpha_primed_closed(pc, i).get_str() << ',' << beta(pc, i) << "\n";
    }
    return 0;
}

int cmd_expansion(int n, const std::string& out) {
    if (n < 2 || n > kMaxParties) {
        std::cerr << "error: n must be in [2," << kMaxParties << "]\n";
        return kExitUsage;
    }
    const nlohmann::json j = expansion_to_json(expand_mermin(PartyCount(n)));
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(out, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomness certification for maximally Mermin-violating no-signalling behaviors"};
    app.require_subcommand(1);

    int n = 3, n_max = 9;
    std::string mode = "exact", out, json_path, format = "csv";
    double tol = 1e-9;
    long long shots = 0;
    std::uint64_t seed = 0;
    bool drop_mermin = false, with_lemma1 = false;
    std::string dec_path, target_path, eps = "0";

    auto* report = app.add_subcommand("report", "Closed-form randomness report for odd n");
    report->add_option("--n", n, "party count (odd)")->required();
    report->add_option("--json", json_path, "also write a JSON report");

    auto* certify = app.add_subcommand("certify", "LP certification of the 1/2 guessing bound");
    certify->add_option("--n", n, "party count (odd)")->required();
    certify->add_option("--mode", mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    certify->add_option("--tol", tol, "float-mode tolerance");
    certify->add_option("--out", out, "output directory");
    certify->add_flag("--drop-mermin-constraints", drop_mermin)->group("");  // test hook

    auto* scan = app.add_subcommand("scan", "Closed-form scan over n = 3,5,...,n_max");
    scan->add_option("--n-max", n_max, "largest odd n")->required();
    scan->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--out", out, "output file (default stdout)");
    scan->add_flag("--lemma1", with_lemma1, "include exact LP minima for n <= 5");

    auto* simulate = app.add_subcommand("simulate", "Finite-sample estimate from seeded sampling");
    simulate->add_option("--n", n, "party count (odd)")->required();
    simulate->add_option("--shots", shots, "number of samples")->required();
    simulate->add_option("--seed", seed, "RNG seed")->required();
    simulate->add_option("--json", json_path, "also write a JSON report");

    auto* audit = app.add_subcommand("audit", "Audit a convex decomposition against a target");
    audit->add_option("--decomposition", dec_path, "decomposition JSON")->required();
    audit->add_option("--target", target_path, "target behavior JSON")->required();
    audit->add_option("--epsilon", eps, "weight positivity floor (rational)");

    auto* coeffs = app.add_subcommand("coeffs", "Export the inequality coefficient table");
    coeffs->add_option("--n-max", n_max, "largest odd n")->required();
    coeffs->add_option("--out", out, "CSV file (default stdout)");

    auto* expansion = app.add_subcommand("expansion", "Export the Mermin operator expansion");
    expansion->add_option("--n", n, "party count")->required();
    expansion->add_option("--out", out, "JSON file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (report->parsed()) return cmd_report(n, json_path);
        if (certify->parsed()) return cmd_certify(n, mode, tol, out, drop_mermin);
        if (scan->parsed()) return cmd_scan(n_max, format, out, with_lemma1);
        if (simulate->parsed()) return cmd_simulate(n, shots, seed, json_path);
        if (audit->parsed()) return cmd_audit(dec_path, target_path, eps);
        if (coeffs->parsed()) return cmd_coeffs(n_max, out);
        if (expansion->parsed()) return cmd_expansion(n, out);
    } catch (const InfeasibleProgram& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    } catch (const NumericallyUnstable& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
