// Command-line surface: logcoef, grunsky, verify, maximize, scan.
// Exit codes: 0 = all guards pass, 1 = theorem-guard or residual violation,
// 2 = usage/config error.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gammalab/bounds.hpp"
#include "gammalab/coefficients.hpp"
#include "gammalab/json_io.hpp"
#include "gammalab/scan.hpp"

namespace {

using namespace gammalab;

std::string shortest(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

FamilySpec spec_from_flags(const std::string& family, double theta, double beta) {
    FamilySpec spec;
    spec.family = family_from_name(family);
    spec.theta = theta;
    spec.beta = beta;
    return spec;
}

int run_logcoef(const std::string& family, double theta, double beta, int n, int order) {
    const FamilySpec spec = spec_from_flags(family, theta, beta);
    if (order < n + 1) order = n + 1;
    const Series f = realize(spec, order);
    const LogCoeffs lc = log_coefficients(f, n);
    std::cout << "# gamma_n of " << spec.describe() << "\n";
    std::cout << "n,re_gamma,im_gamma,abs_gamma\n";
    for (int k = 1; k <= n; ++k)
        std::cout << k << "," << shortest(lc(k).real()) << "," << shortest(lc(k).imag()) << ","
                  << shortest(lc.abs(k)) << "\n";
    return 0;
}

int run_grunsky(const std::string& family, double theta, double beta, int p_max, bool odd,
                int order) {
    const FamilySpec spec = spec_from_flags(family, theta, beta);
    const int needed = odd ? p_max + 1 : 2 * p_max + 1;
    if (order < needed) order = needed;
    const Series f = realize(spec, order);
    const GrunskyTable t = odd ? odd_grunsky(f, p_max) : grunsky_table(f, p_max);
    std::cout << "# omega_{p,q} of " << spec.describe() << (odd ? " (odd-index table)" : "")
              << ", max asymmetry " << shortest(t.max_asymmetry()) << "\n";
    std::cout << "p,q,re_omega,im_omega\n";
    for (int p = 0; p <= t.p_max(); ++p)
        for (int q = p; q <= t.p_max(); ++q) {
            if (!t.has(p, q) || (p == 0 && q == 0)) continue;
            const cplx w = t.omega(p, q);
            std::cout << p << "," << q << "," << shortest(w.real()) << "," << shortest(w.imag())
                      << "\n";
        }
    return 0;
}

int run_verify(const std::string& config_path, double tol, int vectors) {
    const CorpusSpec cspec = load_corpus_spec(config_path);
    const std::vector<FamilySpec> corpus = build_corpus(cspec);
    const VerifyReport rep = verify_corpus(corpus, cspec.order, tol, cspec.seed, vectors);
    std::cout << to_json(rep).dump(2) << "\n";
    return rep.all_pass ? 0 : 1;
}

int run_maximize(const std::string& objective, double grid, int rounds) {
    const Objective obj = objective == "phi" ? Objective::phi : Objective::psi;
    const MaxResult res = maximize(obj, grid, rounds);
    std::cout << to_json(res, objective).dump(2) << "\n";
    return 0;
}

int run_scan(const std::string& config_path, int n_max, const std::string& out_path,
             const std::string& format) {
    const CorpusSpec cspec = load_corpus_spec(config_path);
    const std::vector<FamilySpec> corpus = build_corpus(cspec);
    const ScanResult result = scan(corpus, n_max, cspec.order);

    const std::string payload =
        format == "json" ? report_json(result) : report_csv(result.records);
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        out << payload;
    }

    for (const SkipRecord& s : result.skipped)
        std::cerr << "skipped " << s.function_id << ": " << s.reason << "\n";
    std::cerr << "scanned " << corpus.size() << " functions, n = 2.." << n_max << "\n";
    std::cerr << "observed max d_3 = " << shortest(result.max_d3)
              << " (bound 1/sqrt(5) = " << shortest(1.0 / std::sqrt(5.0)) << ")\n";
    std::cerr << "observed max d_4 = " << shortest(result.max_d4)
              << " (bound 1/sqrt(7) = " << shortest(1.0 / std::sqrt(7.0)) << ")\n";
    for (const auto& [n, slack] : result.min_slack_by_n)
        if (n >= 5)
            std::cerr << "conjecture column n = " << n << ": min slack " << shortest(slack)
                      << "\n";
    if (!result.guard_pass) {
        std::cerr << "theorem guard VIOLATED\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logarithmic and Grunsky coefficient toolkit for univalent functions"};
    app.require_subcommand(1);

    std::string family = "koebe";
    double theta = 0.0, beta = 0.0;
    int order = 0;

    auto* logcoef = app.add_subcommand("logcoef", "print logarithmic coefficients gamma_1..gamma_N");
    int n = 8;
    logcoef->add_option("--family", family, "identity|koebe|halfplane|genKoebe|starlikePow");
    logcoef->add_option("--theta", theta, "genKoebe angle (radians)");
    logcoef->add_option("--beta", beta, "starlikePow exponent in [0,1]");
    logcoef->add_option("--n", n, "highest coefficient index")->check(CLI::PositiveNumber);
    logcoef->add_option("--order", order, "working truncation order (default: minimal)");

    auto* grunsky = app.add_subcommand("grunsky", "print the Grunsky coefficient table");
    int p_max = 4;
    bool odd = false;
    grunsky->add_option("--family", family, "identity|koebe|halfplane|genKoebe|starlikePow");
    grunsky->add_option("--theta", theta, "genKoebe angle (radians)");
    grunsky->add_option("--beta", beta, "starlikePow exponent in [0,1]");
    grunsky->add_option("--pmax", p_max, "largest index")->check(CLI::PositiveNumber);
    grunsky->add_flag("--odd", odd, "odd-index table of sqrt(f(z^2))");
    grunsky->add_option("--order", order, "working truncation order (default: minimal)");

    auto* verify = app.add_subcommand("verify", "run identity/inequality audits over a corpus");
    std::string config_path;
    double tol = 1e-9;
    int vectors = 100;
    verify->add_option("--config", config_path, "corpus config JSON")->required();
    verify->add_option("--tol", tol, "residual tolerance");
    verify->add_option("--vectors", vectors, "random test vectors per function");

    auto* maximize_cmd = app.add_subcommand("maximize", "maximize a bound objective on its domain");
    std::string objective = "phi";
    double grid = 1e-3;
    int rounds = 6;
    maximize_cmd->add_option("--objective", objective, "phi|psi")
        ->check(CLI::IsMember({"phi", "psi"}));
    maximize_cmd->add_option("--grid", grid, "initial grid step");
    maximize_cmd->add_option("--rounds", rounds, "refinement rounds");

    auto* scan_cmd = app.add_subcommand("scan", "scan |gamma_n|-|gamma_{n-1}| over a corpus");
    int n_max = 8;
    std::string out_path, format = "csv";
    scan_cmd->add_option("--config", config_path, "corpus config JSON")->required();
    scan_cmd->add_option("--nmax", n_max, "highest n column")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--out", out_path, "output file (default: stdout)");
    scan_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(logcoef)) return run_logcoef(family, theta, beta, n, order);
        if (app.got_subcommand(grunsky)) return run_grunsky(family, theta, beta, p_max, odd, order);
        if (app.got_subcommand(verify)) return run_verify(config_path, tol, vectors);
        if (app.got_subcommand(maximize_cmd)) return run_maximize(objective, grid, rounds);
        if (app.got_subcommand(scan_cmd)) return run_scan(config_path, n_max, out_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
