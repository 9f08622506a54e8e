#include "gaborfock/sigma.hpp"

#include <cmath>
#include <stdexcept>

#include "gaborfock/errors.hpp"

namespace gaborfock {

namespace {

constexpr int kInvariantCount = 16; // G_4 .. G_64
constexpr int kCellTerms = 17;      // sigma0 cell Taylor through z^64

// quintic taper weight: 1 on r <= L, 0 on r >= 2L, C^2 in between.
// A sharp box cut leaves an O(L^-3) boundary term in the grouped product and
// stalls around 1e-7; the smooth taper makes truncation superalgebraic.
double taper_weight(double r, double L) {
    double t = (r - L) / L;
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    return 1.0 - ((6.0 * t - 15.0) * t + 10.0) * t * t * t;
}

// G_{4j} = sum over nonzero lattice points of lam^{-4j}, computed from the
// quadrant representatives {m >= 1, n >= 0} times 4 (lam^{-4j} is invariant
// under lam -> i*lam).  The taper handles the conditionally convergent j = 1
// case; higher j converge absolutely and need only a small box.
void accumulate_invariants(std::vector<double>& g, int j_lo, int j_hi, double L) {
    long bound = static_cast<long>(std::ceil(2.0 * L));
    for (long m = 1; m <= bound; ++m) {
        for (long n = 0; n <= bound; ++n) {
            cplx lam(static_cast<double>(m), static_cast<double>(n));
            double r = std::abs(lam);
            double w = taper_weight(r, L);
            if (w == 0.0) continue;
            cplx inv2 = 1.0 / (lam * lam);
            cplx u = inv2 * inv2; // lam^{-4}
            cplx p = u;
            for (int j = 1; j <= j_hi; ++j) {
                if (j >= j_lo) g[static_cast<std::size_t>(j - 1)] += 4.0 * w * p.real();
                p *= u;
            }
        }
    }
}

cplx log1p_neg(cplx u) {
    // log(1 - u), series branch for small |u| to avoid cancellation
    if (std::abs(u) < 1e-4) {
        cplx acc = u / 6.0;
        acc = (acc + 1.0 / 5.0) * u;
        acc = (acc + 1.0 / 4.0) * u;
        acc = (acc + 1.0 / 3.0) * u;
        acc = (acc + 0.5) * u;
        acc = (acc + 1.0) * u;
        return -acc;
    }
    return std::log(cplx(1.0, 0.0) - u);
}

} // namespace

SigmaEvaluator::SigmaEvaluator() {
    g_.assign(kInvariantCount, 0.0);
    accumulate_invariants(g_, 1, 1, 160.0);
    accumulate_invariants(g_, 2, kInvariantCount, 24.0);

    // exp-series recurrence for sigma0 = exp(-sum_j G_{4j} z^{4j}/(4j)):
    // only powers z^{4K} appear; 4K * s_K' = -sum_j G_{4j} s_{K-j}'
    cell_.assign(kCellTerms, 0.0);
    cell_[0] = 1.0;
    for (int K = 1; K < kCellTerms; ++K) {
        double acc = 0.0;
        for (int j = 1; j <= K; ++j)
            acc += g_[static_cast<std::size_t>(j - 1)] * cell_[static_cast<std::size_t>(K - j)];
        cell_[static_cast<std::size_t>(K)] = -acc / (4.0 * K);
    }

    // eta1 = 2*zeta(1/2), with zeta(z) = 1/z - sum_j G_{4j} z^{4j-1} from the
    // cell expansion; eta2 = -i*eta1 because zeta(iz) = -i*zeta(z) on this
    // lattice.  The derived value equals pi to machine precision (asserted in
    // tests, not assumed here), and the Legendre relation
    // eta1*i - eta2 = 2*pi*i holds by construction.
    double zeta_half = 2.0;
    double p16 = 1.0 / 8.0; // (1/2)^{4j-1} at j = 1
    for (int j = 1; j <= kInvariantCount; ++j) {
        zeta_half -= g_[static_cast<std::size_t>(j - 1)] * p16;
        p16 /= 16.0;
    }
    eta1_ = cplx(2.0 * zeta_half, 0.0);
    eta2_ = cplx(0.0, -1.0) * eta1_;
}

cplx SigmaEvaluator::eta(cplx mu) const {
    return mu.real() * eta1_ + mu.imag() * eta2_;
}

LogComplex SigmaEvaluator::cell_sigma(cplx z0) const {
    if (z0 == cplx(0.0, 0.0)) return LogComplex::zero();
    cplx u = z0 * z0;
    u *= u;
    cplx acc(cell_.back(), 0.0);
    for (int K = kCellTerms - 2; K >= 0; --K)
        acc = acc * u + cell_[static_cast<std::size_t>(K)];
    return LogComplex::from(z0 * acc);
}

LogComplex SigmaEvaluator::log_sigma(cplx z) const {
    cplx mu = round_to_lattice(z);
    cplx z0 = z - mu;
    if (z0 == cplx(0.0, 0.0)) return LogComplex::zero();
    LogComplex lc = cell_sigma(z0);
    if (mu != cplx(0.0, 0.0)) {
        cplx e = eta(mu) * (z0 + 0.5 * mu);
        lc.log_abs += e.real();
        lc.arg += e.imag();
        if (lattice_sign(mu) < 0.0) lc.arg += kPi;
    }
    return lc;
}

LogComplex SigmaEvaluator::log_sigma0(cplx z) const {
    if (z == cplx(0.0, 0.0)) return LogComplex::from_log(0.0, 0.0); // sigma0(0) = 1
    LogComplex lc = log_sigma(z);
    if (lc.is_zero()) return lc;
    lc.log_abs -= std::log(std::abs(z));
    lc.arg -= std::arg(z);
    return lc;
}

LogComplex SigmaEvaluator::log_sigma_prime(cplx w) const {
    if (!is_lattice_point(w, 1e-9))
        throw NotALatticePointError("sigma_prime: not a lattice point");
    cplx mu = round_to_lattice(w);
    if (mu == cplx(0.0, 0.0)) return LogComplex::from_log(0.0, 0.0); // sigma'(0) = 1
    cplx e = eta(mu) * (0.5 * mu);
    LogComplex lc = LogComplex::from_log(e.real(), e.imag());
    if (lattice_sign(mu) < 0.0) lc.arg += kPi;
    return lc;
}

cplx SigmaEvaluator::sigma0_prime(cplx w) const {
    cplx mu = round_to_lattice(w);
    if (!is_lattice_point(w, 1e-9) || mu == cplx(0.0, 0.0))
        throw NotALatticePointError("sigma0_prime: requires a nonzero lattice point");
    return log_sigma_prime(mu).value() / mu;
}

cplx SigmaEvaluator::sigma0_second(cplx w) const {
    cplx mu = round_to_lattice(w);
    if (!is_lattice_point(w, 1e-9) || mu == cplx(0.0, 0.0))
        throw NotALatticePointError("sigma0_second: requires a nonzero lattice point");
    // sigma''(mu) = 2 eta(mu) sigma'(mu) since sigma''(0) = 0
    cplx sp = log_sigma_prime(mu).value();
    cplx spp = 2.0 * eta(mu) * sp;
    return spp / mu - 2.0 * sp / (mu * mu);
}

cplx SigmaEvaluator::sigma0_third(cplx w) const {
    cplx mu = round_to_lattice(w);
    if (!is_lattice_point(w, 1e-9) || mu == cplx(0.0, 0.0))
        throw NotALatticePointError("sigma0_third: requires a nonzero lattice point");
    // sigma'''(mu) = 3 eta(mu)^2 sigma'(mu) since sigma'''(0) = 0
    cplx et = eta(mu);
    cplx sp = log_sigma_prime(mu).value();
    cplx spp = 2.0 * et * sp;
    cplx sppp = 3.0 * et * et * sp;
    return sppp / mu - 3.0 * spp / (mu * mu) + 6.0 * sp / (mu * mu * mu);
}

double SigmaEvaluator::growth_ratio(cplx z) const {
    cplx mu = round_to_lattice(z);
    double r2 = std::norm(z);
    if (z == mu) {
        if (mu == cplx(0.0, 0.0)) return 1.0; // sigma'(0) = 1 exactly
        return std::exp(log_sigma_prime(mu).log_abs - 0.5 * kPi * r2);
    }
    double d = std::abs(z - mu);
    return std::exp(log_sigma(z).log_abs - 0.5 * kPi * r2 - std::log(d));
}

LogComplex SigmaEvaluator::log_sigma_product(cplx z, double taper_radius) const {
    const double L = taper_radius;
    if (std::abs(z) > 0.5 * L)
        throw DomainTooSmallError("sigma product: need |z| <= taper_radius/2");
    if (z == cplx(0.0, 0.0)) return LogComplex::zero();
    // quadruples {lam, i lam, -lam, -i lam} collapse to a single factor
    // (1 - z^4/lam^4): the compensator exponents cancel exactly within each
    // group, so only the grouped log terms remain.
    cplx z4 = z * z;
    z4 *= z4;
    long bound = static_cast<long>(std::ceil(2.0 * L));
    cplx acc(0.0, 0.0);
    for (long m = 1; m <= bound; ++m) {
        for (long n = 0; n <= bound; ++n) {
            cplx lam(static_cast<double>(m), static_cast<double>(n));
            double r = std::abs(lam);
            double w = taper_weight(r, L);
            if (w == 0.0) continue;
            cplx lam2 = lam * lam;
            cplx u = z4 / (lam2 * lam2);
            if (u == cplx(1.0, 0.0)) return LogComplex::zero(); // z on the lattice
            acc += w * log1p_neg(u);
        }
    }
    return LogComplex::from_log(std::log(std::abs(z)) + acc.real(),
                                std::arg(z) + acc.imag());
}

cplx SigmaEvaluator::sigma_theta(cplx z) const {
    if (std::abs(z.imag()) > 4.0)
        throw DomainTooSmallError("sigma theta route: restricted to |Im z| <= 4");
    // sigma(z) = e^{pi z^2/2} theta1(pi z, q) / (pi theta1'(0, q)), q = e^{-pi}
    cplx v = kPi * z;
    cplx th(0.0, 0.0);
    double thp = 0.0;
    double sign = 1.0;
    int n_max = static_cast<int>(std::ceil(2.0 * std::abs(z.imag()))) + 9;
    for (int n = 0; n <= n_max; ++n) {
        double a = (n + 0.5) * (n + 0.5);
        double qpow = std::exp(-kPi * a);
        th += sign * qpow * std::sin(double(2 * n + 1) * v);
        thp += sign * qpow * double(2 * n + 1);
        sign = -sign;
    }
    return std::exp(0.5 * kPi * z * z) * 2.0 * th / (kPi * 2.0 * thp);
}

const SigmaEvaluator& sigma_evaluator() {
    static const SigmaEvaluator instance;
    return instance;
}

} // namespace gaborfock
