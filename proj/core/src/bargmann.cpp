#include "gaborfock/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gaborfock/errors.hpp"

namespace gaborfock {

namespace {


// upper bound for integral over t > T of e^{-pi t^2 + 2 pi t c} dt,
// requiring T somewhat past the peak at t = c
double gaussian_tail(double T, double c) {
    double d = T - c;
    if (d < 0.5) return std::numeric_limits<double>::infinity();
    return std::exp(kPi * c * c - kPi * d * d) / (2.0 * kPi * d);
}

// trapezoid over every stride-th sample of f(t) e^{-pi t^2 + 2 pi t z}
cplx trapezoid(const SampledFunction& f, cplx z, std::size_t stride) {
    std::size_t n = f.samples.size();
    cplx acc(0.0, 0.0);
    std::size_t last = ((n - 1) / stride) * stride;
    for (std::size_t j = 0; j <= last; j += stride) {
        double t = f.t0 + static_cast<double>(j) * f.dt;
        cplx g = f.samples[j] * std::exp(cplx(-kPi * t * t, 0.0) + 2.0 * kPi * t * z);
        acc += (j == 0 || j == last) ? 0.5 * g : g;
    }
    return acc * (f.dt * static_cast<double>(stride));
}

} // namespace

cplx GaborAtom::value(double t) const {
    double d = t - location.x;
    return std::polar(std::exp(-kPi * d * d), 2.0 * kPi * location.y * t);
}

cplx atom_inner(const GaborAtom& a, const GaborAtom& b) {
    double dx = a.location.x - b.location.x;
    double dy = a.location.y - b.location.y;
    double mod = std::exp(-0.5 * kPi * (dx * dx + dy * dy)) / std::sqrt(2.0);
    return std::polar(mod, kPi * dy * (a.location.x + b.location.x));
}

cplx atom_kernel_point(const GaborAtom& a) {
    return {a.location.x, -a.location.y};
}

FockFunction bargmann_atom(const GaborAtom& a) {
    cplx w = atom_kernel_point(a);
    cplx scale = std::polar(std::pow(2.0, -0.25) * std::exp(-0.5 * kPi * std::norm(w)),
                            kPi * a.location.x * a.location.y);
    return FockFunction::kernel(w, scale);
}

FockFunction bargmann_transform(const HermiteExpansion& f) {
    FockFunction out;
    for (std::size_t n = 0; n < f.coeffs.size(); ++n)
        if (f.coeffs[n] != cplx(0.0, 0.0))
            out += FockFunction::normalized_monomial(static_cast<int>(n), f.coeffs[n]);
    return out;
}

InnerResult bargmann_pointwise(const SampledFunction& f, cplx z, double tolerance) {
    if (f.samples.size() < 9 || f.dt <= 0.0)
        throw std::invalid_argument("bargmann_pointwise: degenerate grid");
    double t_lo = f.t0;
    double t_hi = f.t0 + static_cast<double>(f.samples.size() - 1) * f.dt;

    // window tail: the integrand past the grid is bounded by the edge sample
    // magnitude times the Gaussian factor (inputs are assumed to keep
    // decaying outside the window; that is the documented error model)
    double m_lo = 0.0, m_hi = 0.0;
    for (std::size_t j = 0; j < 5; ++j) {
        m_lo = std::max(m_lo, std::abs(f.samples[j]));
        m_hi = std::max(m_hi, std::abs(f.samples[f.samples.size() - 1 - j]));
    }
    double c = z.real();
    cplx half_sq = -0.5 * kPi * z * z;
    double prefactor = std::pow(2.0, 0.25) * std::exp(half_sq.real());
    double tail = prefactor *
                  (m_hi * gaussian_tail(t_hi, c) + m_lo * gaussian_tail(-t_lo, -c));
    if (!(tail <= tolerance))
        throw DomainTooSmallError("bargmann_pointwise: window tail above tolerance");

    cplx fine = trapezoid(f, z, 1);
    cplx coarse = trapezoid(f, z, 2);
    cplx pre = std::pow(2.0, 0.25) * std::exp(half_sq);
    return {pre * fine, tail + std::abs(pre) * std::abs(fine - coarse)};
}

SampledFunction sample_atom(const GaborAtom& a, double t0, double dt, int count) {
    SampledFunction f{t0, dt, {}};
    f.samples.resize(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) f.samples[static_cast<std::size_t>(j)] = a.value(t0 + j * dt);
    return f;
}

SampledFunction sample_hermite(const HermiteExpansion& f, double t0, double dt, int count) {
    SampledFunction out{t0, dt, {}};
    out.samples.resize(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        out.samples[static_cast<std::size_t>(j)] = f.value(t0 + j * dt);
    return out;
}

} // namespace gaborfock
