// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit 1 on any
// failure.  Tolerances are pinned here, next to the check they govern, so a
// change to any of them shows up in review as a change to this file.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "gaborfock/bargmann.hpp"
#include "gaborfock/dual_systems.hpp"
#include "gaborfock/fock_function.hpp"
#include "gaborfock/hermite.hpp"
#include "gaborfock/inner_product.hpp"
#include "gaborfock/lattice.hpp"
#include "gaborfock/quadrature.hpp"
#include "gaborfock/rng.hpp"
#include "gaborfock/series_verify.hpp"
#include "gaborfock/sigma.hpp"

#include "frozen_constants.hpp"

using namespace gaborfock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// relative residual between two log-form values
double log_rel_diff(const LogComplex& a, const LogComplex& b) {
    double dm = a.log_abs - b.log_abs;
    double da = std::remainder(a.arg - b.arg, 2.0 * kPi);
    return std::abs(std::exp(cplx(dm, da)) - 1.0);
}

// 1. Every pairing of a biorthogonal element against a normalized kernel on
// the punctured lattice section |w| <= 4 must be a Kronecker delta.
Outcome criterion_biorthogonality(double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    GeneratingFunction g(GeneratorSpec::lattice());
    PointSet pts = PointSet::lattice_disk_punctured(4.0);
    double worst = 0.0;
    for (cplx lam : pts.points()) {
        BiorthogonalElement e = biorth_element(g, lam);
        for (cplx w : pts.points()) {
            cplx want = (lam == w) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            worst = std::max(worst, std::abs(biorth_pairing(e, w) - want));
        }
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = worst <= 1e-10 && elapsed < elapsed_limit;
    return {pass, "worst |pairing - delta| " + fmt(worst) + " over " +
                      std::to_string(pts.size() * pts.size()) + " pairs (budget 1e-10)"};
}

// 2. Quadrature norms of z^n against n!/pi^n.
Outcome criterion_monomial_norms(double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    double ref = 1.0;
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) ref *= n / kPi;
        FockFunction f = FockFunction::monomial(n);
        double q = disk_norm_sq(f, f.suggested_radius());
        worst = std::max(worst, std::abs(q / ref - 1.0));
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = worst <= 1e-8 && elapsed < elapsed_limit;
    return {pass, "worst relative error " + fmt(worst) + " for n <= 20 (budget 1e-8)"};
}

// 3. Norm preservation: time-side norm by grid summation vs Fock-side norm
// by disk quadrature of the transform, on 100 seeded Hermite spans.
Outcome criterion_unitarity(double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(303);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        HermiteExpansion f;
        f.coeffs.resize(13);
        for (cplx& c : f.coeffs) {
            double re = rng.uniform(-1.0, 1.0);
            double im = rng.uniform(-1.0, 1.0);
            c = {re, im};
        }
        SampledFunction s = sample_hermite(f);
        double time_sq = 0.0;
        for (cplx v : s.samples) time_sq += std::norm(v);
        time_sq *= s.dt;
        FockFunction big_f = bargmann_transform(f);
        double fock_sq = disk_norm_sq(big_f, big_f.suggested_radius());
        worst = std::max(worst, std::abs(std::sqrt(fock_sq / time_sq) - 1.0));
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = worst <= 1e-6 && elapsed < elapsed_limit;
    return {pass, "worst |norm ratio - 1| " + fmt(worst) + " over 100 spans (budget 1e-6)"};
}

// 4. |<atom_a, atom_b>| and |<image_a, image_b>| against the closed-form
// Gram modulus 2^{-1/2} e^{-pi d^2/2}, all integer locations |x|,|y| <= 3.
Outcome criterion_intertwining(double, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<GaborAtom> atoms;
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            atoms.push_back(GaborAtom{PhasePoint{double(x), double(y)}});
    std::vector<FockFunction> images;
    images.reserve(atoms.size());
    for (const GaborAtom& a : atoms) images.push_back(bargmann_atom(a));

    double worst_atom = 0.0, worst_fock = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            double dx = atoms[i].location.x - atoms[j].location.x;
            double dy = atoms[i].location.y - atoms[j].location.y;
            double ref = std::exp(-0.5 * kPi * (dx * dx + dy * dy)) / std::sqrt(2.0);
            double da = std::abs(atom_inner(atoms[i], atoms[j]));
            worst_atom = std::max(worst_atom, std::abs(da - ref));
            double df = std::abs(fock_inner_taylor(images[i], images[j], 1e-10).value);
            worst_fock = std::max(worst_fock, std::abs(df - ref));
        }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = worst_atom <= 1e-7 && worst_fock <= 1e-7;
    return {pass, "worst deviation: atoms " + fmt(worst_atom) + ", images " +
                      fmt(worst_fock) + " (budget 1e-7)"};
}

// 5. Translation law on 1000 seeded cell points, and tapered-product route
// against the reduced route on 200 seeded points with |z| <= 3.
Outcome criterion_sigma_routes(double, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    const SigmaEvaluator& ev = sigma_evaluator();
    SplitMix64 rng(505);
    const cplx shifts[] = {{1, 0}, {0, 1},  {1, 1},  {-1, 0},
                           {0, -1}, {2, -1}, {-2, 3}, {3, 3}};
    double worst_law = 0.0;
    for (int n = 0; n < 1000; ++n) {
        double u = rng.uniform();
        double v = rng.uniform();
        cplx z(u, v);
        cplx mu = shifts[n % 8];
        LogComplex lhs = ev.log_sigma(z + mu);
        cplx eta_term = ev.eta(mu) * (z + 0.5 * mu);
        LogComplex rhs = ev.log_sigma(z).scaled(eta_term.real(), eta_term.imag());
        if (lattice_sign(mu) < 0.0) rhs.arg += kPi;
        worst_law = std::max(worst_law, log_rel_diff(lhs, rhs));
    }
    double worst_route = 0.0;
    int got = 0;
    while (got < 200) {
        cplx z = rng.square(3.0);
        if (std::abs(z) > 3.0 || dist_to_lattice(z) < 0.05) continue;
        ++got;
        worst_route = std::max(
            worst_route, log_rel_diff(ev.log_sigma_product(z, 80.0), ev.log_sigma(z)));
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = worst_law <= 1e-10 && worst_route <= 1e-10;
    return {pass, "translation residual " + fmt(worst_law) + ", route disagreement " +
                      fmt(worst_route) + " (budget 1e-10)"};
}

// 6. log|sigma'(w)| against pi|w|^2/2 on lattice points 1 <= |w| <= 5.
Outcome criterion_derivative_modulus(double, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    const SigmaEvaluator& ev = sigma_evaluator();
    double worst = 0.0;
    PointSet pts = PointSet::lattice_disk_punctured(5.0);
    for (cplx w : pts.points()) {
        double ref = 0.5 * kPi * std::norm(w);
        worst = std::max(worst, std::abs(ev.log_sigma_prime(w).log_abs - ref) / ref);
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = worst <= 1e-8;
    return {pass, "worst log-space relative error " + fmt(worst) + " (budget 1e-8)"};
}

// 7. Growth ratio: lattice-shift invariance, and the [min, max] band over
// the fixed 200x200 grid restricted to |z| <= 6 against frozen constants.
Outcome criterion_growth_band(double, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    const SigmaEvaluator& ev = sigma_evaluator();
    SplitMix64 rng(2026);
    const cplx shifts[] = {{1, 0}, {0, 1}, {1, 1},  {-2, 1},
                           {3, 0}, {0, -3}, {2, -2}, {-1, -1}};
    double worst_period = 0.0;
    for (int n = 0; n < 200; ++n) {
        cplx z = rng.square(4.0);
        cplx mu = shifts[n % 8];
        worst_period = std::max(
            worst_period, std::abs(ev.growth_ratio(z + mu) - ev.growth_ratio(z)));
    }

    std::vector<double> xs(200);
    double step = 12.0 / 199.0;
    for (int k = 0; k < 200; ++k) xs[k] = -6.0 + k * step;
    xs[199] = 6.0;
    double c1 = 1e300, c2 = -1e300;
    for (int i = 0; i < 200; ++i)
        for (int j = 0; j < 200; ++j) {
            cplx z(xs[i], xs[j]);
            if (std::abs(z) > 6.0) continue;
            double r = ev.growth_ratio(z);
            c1 = std::min(c1, r);
            c2 = std::max(c2, r);
        }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = worst_period <= 1e-9 && c2 / c1 <= 10.0 &&
                std::abs(c1 - frozen::kGrowthBandLow) <= 1e-6 &&
                std::abs(c2 - frozen::kGrowthBandHigh) <= 1e-6;
    return {pass, "shift deviation " + fmt(worst_period) + ", band [" + fmt(c1) + ", " +
                      fmt(c2) + "] vs frozen (budget 1e-9 / 1e-6)"};
}

// 8. Gaussian sum over nonzero lattice points |w| <= 6, against 0.18034 and
// against the squared theta constant minus one.
Outcome criterion_sampling_sum(double, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    double direct = 0.0;
    PointSet pts = PointSet::lattice_disk_punctured(6.0);
    for (cplx w : pts.points()) direct += std::exp(-kPi * std::norm(w));
    double theta = 0.0;
    for (int n = -40; n <= 40; ++n) theta += std::exp(-kPi * double(n) * double(n));
    double cross = theta * theta - 1.0;
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = std::abs(direct - 0.18034) <= 1e-4 && std::abs(direct - cross) <= 1e-10;
    return {pass, "sum " + fmt(direct) + ", theta cross-check difference " +
                      fmt(std::abs(direct - cross)) + " (budgets 1e-4 / 1e-10)"};
}

// 9. Coefficient growth bound for five seeded kernel combinations: dyadic
// stabilization within 25% plus agreement with the frozen sups.
Outcome criterion_coefficient_bound(double, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(9001);
    bool pass = true;
    double worst_rel = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        FockFunction s;
        for (int j = 0; j < 5; ++j) {
            cplx a = rng.square(1.5);
            double re = rng.uniform(-1.0, 1.0);
            double im = rng.uniform(-1.0, 1.0);
            s += FockFunction::kernel(a, cplx(re, im));
        }
        VerificationReport rep = verify_coeff_bound(s, 8.0);
        double rel = std::abs(rep.reference - frozen::kCoeffBoundSup[trial]) /
                     frozen::kCoeffBoundSup[trial];
        worst_rel = std::max(worst_rel, rel);
        pass = pass && rep.pass && rel <= 1e-8;
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {pass, "all dyadic steps within 25%, worst drift from frozen sups " +
                      fmt(worst_rel) + " (budget 1e-8)"};
}

// 10. Interchange of lattice sum and pairing for the half-shifted system
// with a kernel source: truncation at 8 agrees with the direct pairing, and
// widening to 10 moves the sum by less than the reported tail.
Outcome criterion_interchange(double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    GeneratorSpec spec = GeneratorSpec::shifted({0.5, 0.5});
    GeneratingFunction g(spec);
    PointSet zeros = g.zero_set(1.2);
    if (zeros.size() != 3) return {false, "expected exactly 3 nearby zeros"};
    cplx z1 = zeros.points()[0], z2 = zeros.points()[1], z3 = zeros.points()[2];
    FockFunction s = FockFunction::kernel({2.0, 0.0});
    VerificationReport r8 = verify_interchange(spec, s, z1, z2, z3, 8.0);
    VerificationReport r10 = verify_interchange(spec, s, z1, z2, z3, 10.0);
    cplx lhs(r8.values[0], r8.values[1]);
    cplx rhs8(r8.values[2], r8.values[3]);
    cplx rhs10(r10.values[2], r10.values[3]);
    double rel = r8.values[4] / std::abs(lhs);
    double increment = std::abs(rhs10 - rhs8);
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = rel <= 1e-5 && increment <= r8.values[5] && elapsed < elapsed_limit;
    return {pass, "relative difference " + fmt(rel) + " (budget 1e-5), widening step " +
                      fmt(increment) + " <= tail " + fmt(r8.values[5])};
}

// 11. Residuals of the third Hermite image against growing sections decay
// strictly; seeded in-span combinations never produce a zero coefficient
// vector.
Outcome criterion_section_residuals(double, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    HermiteExpansion h3;
    h3.coeffs = {cplx(0, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)};
    FockFunction e3 = bargmann_transform(h3);
    bool decreasing = true;
    double worst_rel = 0.0;
    double prev = 1e300;
    for (int i = 0; i < 4; ++i) {
        double radius = 2.0 + i;
        ReconstructionResult rec =
            finite_section_reconstruct(e3, GeneratorSpec::lattice(), radius);
        decreasing = decreasing && rec.residual < prev;
        prev = rec.residual;
        worst_rel = std::max(worst_rel,
                             std::abs(rec.residual - frozen::kHermite3Residual[i]) /
                                 frozen::kHermite3Residual[i]);
    }

    SplitMix64 rng(1111);
    PointSet sec = PointSet::lattice_disk_punctured(3.0);
    bool all_nonzero = true;
    for (int trial = 0; trial < 50; ++trial) {
        FockFunction s;
        for (int j = 0; j < 3; ++j) {
            double pick = rng.uniform();
            std::size_t idx = std::min<std::size_t>(
                sec.size() - 1, static_cast<std::size_t>(pick * double(sec.size())));
            cplx w = sec.points()[idx];
            double re = 0.0, im = 0.0;
            do {
                re = rng.uniform(-1.0, 1.0);
                im = rng.uniform(-1.0, 1.0);
            } while (std::abs(re) + std::abs(im) < 1e-3);
            s += FockFunction::kernel(w, cplx(re, im) * std::exp(-0.5 * kPi * std::norm(w)));
        }
        ReconstructionResult rec =
            finite_section_reconstruct(s, GeneratorSpec::lattice(), 4.0);
        all_nonzero = all_nonzero && rec.coefficients.norm() > 1e-8;
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = decreasing && worst_rel <= 1e-6 && all_nonzero;
    return {pass, std::string("residuals ") + (decreasing ? "strictly decreasing" : "NOT decreasing") +
                      ", drift from frozen " + fmt(worst_rel) +
                      (all_nonzero ? ", 50/50 nonzero coefficient vectors"
                                   : ", zero coefficient vector seen")};
}

// 12. Minimum singular value of Gram sections shrinks strictly with the
// section radius and matches the frozen values.
Outcome criterion_gram_decay(double, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    bool decreasing = true;
    double worst_rel = 0.0;
    double prev = 1e300;
    for (int i = 0; i < 4; ++i) {
        MinSingularValue sv =
            min_singular_value(PointSet::lattice_disk_punctured(2.0 + i));
        decreasing = decreasing && !sv.rank_deficient && sv.value < prev;
        prev = sv.value;
        worst_rel = std::max(worst_rel, std::abs(sv.value - frozen::kGramMinSv[i]) /
                                            frozen::kGramMinSv[i]);
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = decreasing && worst_rel <= 1e-6;
    return {pass, std::string(decreasing ? "strictly decreasing" : "NOT decreasing") +
                      ", drift from frozen " + fmt(worst_rel) + " (budget 1e-6)"};
}

int run_command(const std::string& cmd) {
    int st = std::system(cmd.c_str());
    if (st == -1) return -1;
    if (WIFEXITED(st)) return WEXITSTATUS(st);
    return -2;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// 13. Two full seeded verification runs of the command line tool are byte
// identical and fast.
Outcome criterion_cli_determinism(double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    std::string bin = GFL_BINARY_PATH;
    std::string out_a = "/tmp/gfl_acceptance_a.jsonl";
    std::string out_b = "/tmp/gfl_acceptance_b.jsonl";
    std::remove(out_a.c_str());
    std::remove(out_b.c_str());
    std::string base = "\"" + bin + "\" verify --suite all --seed 7 --output ";
    int code_a = run_command(base + out_a);
    int code_b = run_command(base + out_b);
    std::string text_a = read_file(out_a);
    std::string text_b = read_file(out_b);
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = code_a == 0 && code_b == 0 && !text_a.empty() && text_a == text_b &&
                elapsed < elapsed_limit;
    return {pass, "exit codes " + std::to_string(code_a) + "/" + std::to_string(code_b) +
                      ", " + std::to_string(text_a.size()) + " bytes, " +
                      (text_a == text_b && !text_a.empty() ? "byte-identical" : "OUTPUTS DIFFER")};
}

} // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);

    struct Entry {
        const char* name;
        double time_limit; // seconds; 0 = no limit
        std::function<Outcome(double, double&)> fn;
    };
    const Entry entries[] = {
        {"biorthogonal pairings on the punctured lattice section", 1.0,
         criterion_biorthogonality},
        {"monomial norms against the factorial closed form", 5.0,
         criterion_monomial_norms},
        {"norm preservation on seeded Hermite spans", 30.0, criterion_unitarity},
        {"atom pairings against transformed-pair moduli", 0.0,
         criterion_intertwining},
        {"sigma translation law and product-route agreement", 0.0,
         criterion_sigma_routes},
        {"sigma derivative modulus at lattice points", 0.0,
         criterion_derivative_modulus},
        {"growth-ratio shift invariance and frozen band", 0.0,
         criterion_growth_band},
        {"lattice Gaussian sampling sum with theta cross-check", 0.0,
         criterion_sampling_sum},
        {"coefficient growth bound on seeded kernel combinations", 0.0,
         criterion_coefficient_bound},
        {"sum-vs-pairing interchange for the half-shifted system", 10.0,
         criterion_interchange},
        {"finite-section residual decay and nonzero coefficients", 0.0,
         criterion_section_residuals},
        {"Gram section minimum singular value decay", 0.0, criterion_gram_decay},
        {"command line determinism on the full seeded run", 120.0,
         criterion_cli_determinism},
    };

    int failed = 0;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        double elapsed = 0.0;
        Outcome out;
        try {
            double limit = e.time_limit > 0.0 ? e.time_limit : 1e300;
            out = e.fn(limit, elapsed);
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        if (!out.pass) ++failed;
        std::printf("[%s] %2d. %s: %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", index,
                    e.name, out.detail.c_str(), elapsed);
    }
    std::printf("acceptance: %d/13 criteria passed\n", 13 - failed);
    return failed == 0 ? 0 : 1;
}
