#include "gaborfock/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "gaborfock/errors.hpp"
#include "gaborfock/sigma.hpp"

namespace gaborfock {

namespace {

constexpr int kDftSize = 4096;

// e^{-2 pi i j / M}, indexed by exact integer arithmetic (k*m mod M) so long
// DFTs accumulate no phase drift
const std::vector<cplx>& dft_roots() {
    static const std::vector<cplx> roots = [] {
        std::vector<cplx> r(kDftSize);
        for (int j = 0; j < kDftSize; ++j)
            r[static_cast<std::size_t>(j)] =
                std::polar(1.0, -2.0 * kPi * j / kDftSize);
        return r;
    }();
    return roots;
}

double band_half_width(double center) {
    return std::max(24.0, 0.35 * std::sqrt(74.0 * center));
}

std::vector<double> build_sigma0_table(int n_max) {
    const auto& ev = sigma_evaluator();
    const auto& roots = dft_roots();
    std::vector<double> coeffs(static_cast<std::size_t>(n_max) + 1, 0.0);
    coeffs[0] = 1.0;

    int covered = 1;
    std::vector<cplx> g(kDftSize);
    while (covered <= n_max) {
        int center = covered + static_cast<int>(band_half_width(covered));
        center = covered + static_cast<int>(band_half_width(center));
        int k_hi = std::min(n_max, center + static_cast<int>(band_half_width(center)));
        double r = std::sqrt(std::max(center, 1) / kPi);
        double damp = 0.5 * kPi * r * r;

        for (int m = 0; m < kDftSize; ++m) {
            cplx z = std::polar(r, 2.0 * kPi * m / kDftSize);
            LogComplex ls = ev.log_sigma0(z);
            g[static_cast<std::size_t>(m)] =
                ls.is_zero() ? cplx(0.0, 0.0)
                             : std::polar(std::exp(ls.log_abs - damp), ls.arg);
        }
        double log_r = std::log(r);
        for (int k = covered; k <= k_hi; ++k) {
            if (k % 4 != 0) continue; // sigma0 is a function of z^4
            cplx acc(0.0, 0.0);
            for (int m = 0; m < kDftSize; ++m)
                acc += g[static_cast<std::size_t>(m)] *
                       roots[(static_cast<std::size_t>(k) * static_cast<std::size_t>(m)) % kDftSize];
            acc /= static_cast<double>(kDftSize);
            double lw = damp - k * log_r + normalizer_log(k);
            // the coefficient is real by symmetry; the imaginary residue is
            // pure quadrature noise
            coeffs[static_cast<std::size_t>(k)] = acc.real() * std::exp(lw);
        }
        covered = k_hi + 1;
    }
    return coeffs;
}

std::mutex table_mutex;
std::shared_ptr<const std::vector<double>> sigma0_table;

} // namespace

double normalizer_log(int k) {
    return 0.5 * (std::lgamma(static_cast<double>(k) + 1.0) - k * std::log(kPi));
}

cplx eval_normalized(const std::vector<cplx>& c, cplx z) {
    cplx acc(0.0, 0.0);
    cplx e(1.0, 0.0); // e_k(z), updated as e *= z sqrt(pi/(k+1))
    for (std::size_t k = 0; k < c.size(); ++k) {
        acc += c[k] * e;
        e *= z * std::sqrt(kPi / (static_cast<double>(k) + 1.0));
    }
    return acc;
}

std::shared_ptr<const std::vector<double>> sigma0_taylor(int n_max) {
    if (n_max < 0) throw std::invalid_argument("sigma0_taylor: n_max < 0");
    std::lock_guard<std::mutex> lock(table_mutex);
    if (!sigma0_table || static_cast<int>(sigma0_table->size()) <= n_max)
        sigma0_table = std::make_shared<const std::vector<double>>(
            build_sigma0_table(std::max(n_max, 128)));
    return sigma0_table;
}

std::vector<cplx> kernel_taylor(cplx a, int n_max) {
    std::vector<cplx> c(static_cast<std::size_t>(n_max) + 1);
    cplx term(1.0, 0.0); // (conj(a) sqrt(pi))^k / sqrt(k!)
    cplx step = std::conj(a) * std::sqrt(kPi);
    for (int k = 0; k <= n_max; ++k) {
        c[static_cast<std::size_t>(k)] = term;
        term *= step / std::sqrt(static_cast<double>(k) + 1.0);
    }
    return c;
}

std::vector<cplx> times_linear(const std::vector<cplx>& c, cplx a) {
    std::vector<cplx> out(c.size() + 1, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < out.size(); ++k) {
        cplx v(0.0, 0.0);
        if (k >= 1) v += std::sqrt(static_cast<double>(k) / kPi) * c[k - 1];
        if (k < c.size()) v -= a * c[k];
        out[k] = v;
    }
    return out;
}

std::vector<cplx> divide_by_root(const std::vector<cplx>& c, cplx w) {
    if (static_cast<int>(c.size()) <= kDivideTailBuffer + 1)
        throw std::invalid_argument("divide_by_root: series too short for seed buffer");
    double residual = std::abs(eval_normalized(c, w)) * std::exp(-0.5 * kPi * std::norm(w));
    if (residual > 1e-8)
        throw NotAZeroError("divide_by_root: series does not vanish at the root");

    int top = static_cast<int>(c.size()) - 1;
    int n_out = top - kDivideTailBuffer;
    std::vector<cplx> q(static_cast<std::size_t>(n_out) + 1);
    int k_star = std::min(n_out, static_cast<int>(std::floor(kPi * std::norm(w))));

    cplx prev(0.0, 0.0);
    for (int k = 0; k <= k_star; ++k) {
        cplx qk = (std::sqrt(static_cast<double>(k) / kPi) * prev -
                   c[static_cast<std::size_t>(k)]) / w;
        q[static_cast<std::size_t>(k)] = qk;
        prev = qk;
    }
    cplx next(0.0, 0.0); // Q_top seed; the error contracts going down
    for (int k = top; k > k_star + 1; --k) {
        cplx qprev = std::sqrt(kPi / static_cast<double>(k)) *
                     (c[static_cast<std::size_t>(k)] + w * next);
        if (k - 1 <= n_out) q[static_cast<std::size_t>(k - 1)] = qprev;
        next = qprev;
    }
    return q;
}

std::vector<cplx> widen(const std::vector<double>& c) {
    std::vector<cplx> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = cplx(c[k], 0.0);
    return out;
}

} // namespace gaborfock
