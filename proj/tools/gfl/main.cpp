#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "record.hpp"
#include "suites.hpp"

namespace {

bool parse_complex(const std::string& text, gfl::cplx& out) {
    const char* s = text.c_str();
    char* end = nullptr;
    double re = std::strtod(s, &end);
    if (end == s || *end != ',') return false;
    const char* imag_start = end + 1;
    double im = std::strtod(imag_start, &end);
    if (end == imag_start || *end != '\0') return false;
    if (!std::isfinite(re) || !std::isfinite(im)) return false;
    out = {re, im};
    return true;
}

bool parse_radii(const std::string& text, std::vector<double>& out) {
    out.clear();
    if (text.empty()) return true;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string piece = text.substr(pos, next == std::string::npos
                                                 ? std::string::npos
                                                 : next - pos);
        const char* s = piece.c_str();
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end == s || *end != '\0' || !std::isfinite(v)) return false;
        out.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return true;
}

bool radii_within(const std::vector<double>& radii, double lo, double hi) {
    for (double r : radii)
        if (!(r >= lo && r <= hi)) return false;
    return true;
}

int usage_error(const char* msg) {
    std::fprintf(stderr, "gfl: %s\n", msg);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    gfl::RunConfig cfg;
    std::string z_text;
    std::string radii_text;

    CLI::App app{"Square-lattice Bargmann-Fock toolkit: sigma evaluation, "
                 "verification suites, scans, finite-section reconstruction"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--tolerance", cfg.tolerance,
                        "numeric tolerance, must be positive")
            ->envname("GFL_TOLERANCE");
        cmd->add_option("--radius", cfg.radius, "truncation radius R, 2 to 24")
            ->check(CLI::Range(2.0, 24.0));
        cmd->add_option("--seed", cfg.seed, "seed for the seeded checks");
        cmd->add_option("--format", cfg.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", cfg.output, "output file (default stdout)");
        cmd->add_option("--jobs", cfg.jobs, "max concurrent checks")
            ->envname("GFL_JOBS")
            ->check(CLI::Range(1, 256));
    };

    CLI::App* c_sigma = app.add_subcommand("sigma", "evaluate sigma at a point");
    c_sigma->add_option("--z", z_text, "evaluation point, formatted re,im")
        ->required();
    add_common(c_sigma);

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify
        ->add_option("--suite", cfg.suite,
                     "biorth | bound | interchange | sampling | sigma | all")
        ->check(CLI::IsMember(
            {"biorth", "bound", "interchange", "sampling", "sigma", "all"}));
    add_common(c_verify);

    CLI::App* c_scan =
        app.add_subcommand("scan", "tabulate a quantity over a radius range");
    c_scan
        ->add_option("--quantity", cfg.quantity,
                     "gram-minsv | density | growth-ratio | coeff-bound")
        ->required()
        ->check(CLI::IsMember({"gram-minsv", "density", "growth-ratio", "coeff-bound"}));
    c_scan->add_option("--radii", radii_text,
                       "comma separated radii; empty emits the header only");
    add_common(c_scan);

    CLI::App* c_rec = app.add_subcommand(
        "reconstruct", "finite-section reconstruction residuals per radius");
    c_rec->add_option("--z", z_text,
                      "reconstruct the unit-norm atom at re,im (default source "
                      "is the degree-3 normalized monomial; passing --seed "
                      "without --z selects a seeded 5-kernel combination)");
    c_rec->add_option("--radii", radii_text, "radii list (default 2,3,4,5)");
    add_common(c_rec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!(cfg.tolerance > 0.0)) return usage_error("--tolerance must be positive");

    try {
        if (c_sigma->parsed()) {
            cfg.command = "sigma";
            gfl::cplx z;
            if (!parse_complex(z_text, z))
                return usage_error("--z expects re,im with finite parts");
            return gfl::run_sigma(cfg, z);
        }
        if (c_verify->parsed()) {
            cfg.command = "verify";
            if (cfg.suite.empty()) cfg.suite = "all";
            return gfl::run_verify(cfg);
        }
        if (c_scan->parsed()) {
            cfg.command = "scan";
            // scans are tables; they default to csv unless asked otherwise
            if (c_scan->count("--format") == 0) cfg.format = "csv";
            std::vector<double> radii;
            if (!parse_radii(radii_text, radii))
                return usage_error("--radii expects comma separated finite numbers");
            bool ok = true;
            if (cfg.quantity == "gram-minsv")
                ok = radii_within(radii, 1.0, 25.0);
            else if (cfg.quantity == "density")
                ok = radii_within(radii, 0.5, 128.0);
            else if (cfg.quantity == "growth-ratio")
                ok = radii_within(radii, 0.1, 24.0);
            else
                ok = radii_within(radii, 2.0, 24.0);
            if (!ok) return usage_error("--radii out of range for this quantity");
            return gfl::run_scan(cfg, radii);
        }
        cfg.command = "reconstruct";
        std::vector<double> radii{2.0, 3.0, 4.0, 5.0};
        if (c_rec->count("--radii") > 0) {
            if (!parse_radii(radii_text, radii) || radii.empty())
                return usage_error("--radii expects comma separated finite numbers");
            if (!radii_within(radii, 1.0, 12.0))
                return usage_error("--radii out of range, reconstruct takes 1 to 12");
        }
        bool have_z = c_rec->count("--z") > 0;
        gfl::cplx z{0.0, 0.0};
        if (have_z && !parse_complex(z_text, z))
            return usage_error("--z expects re,im with finite parts");
        bool have_seed = c_rec->count("--seed") > 0;
        return gfl::run_reconstruct(cfg, std::move(radii), have_z, z, have_seed);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "gfl: %s\n", ex.what());
        return 2;
    }
}
