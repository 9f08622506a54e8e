#include "gaborfock/fock_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gaborfock/errors.hpp"
#include "gaborfock/lattice.hpp"
#include "gaborfock/sigma.hpp"
#include "gaborfock/taylor.hpp"

namespace gaborfock {

namespace {

constexpr int kTaylorCap = 512;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ||sigma0(.)/(.-w)||^2 <= kQuotientEnvelope * log(1+|w|)/|w| on the
// punctured lattice; calibrated against quadrature (ratio peaks at |w| = 1)
constexpr double kQuotientEnvelope = 2.8;

void validate(const Primitive& t) {
    switch (t.kind) {
    case PrimitiveKind::monomial:
        if (t.degree < 0) throw std::invalid_argument("monomial: negative degree");
        break;
    case PrimitiveKind::sigma_quotient: {
        cplx mu = t.point - t.shift;
        if (!is_lattice_point(mu, 1e-9) || std::abs(mu) < 0.5)
            throw NotALatticePointError(
                "sigma_quotient: root - shift must be a nonzero lattice point");
        break;
    }
    default:
        break;
    }
}

// sigma0(z - a)/(z - w) with w - a on the lattice; a = 0 is the plain quotient
cplx eval_quotient(cplx z, cplx w, cplx a) {
    const auto& ev = sigma_evaluator();
    cplx mu = w - a;
    cplx h = z - w;
    // within 1e-3 of the removable singularity, switch to the local
    // expansion anchored at sigma0'(mu); the O(h^3) remainder is ~1e-9
    if (std::abs(h) <= 1e-3)
        return ev.sigma0_prime(mu) + 0.5 * ev.sigma0_second(mu) * h +
               ev.sigma0_third(mu) * h * h / 6.0;
    return ev.sigma0(z - a) / h;
}

LogComplex log_eval_term(const Primitive& t, cplx z) {
    LogComplex s = LogComplex::from(t.scale);
    if (s.is_zero()) return s;
    switch (t.kind) {
    case PrimitiveKind::constant:
        return s;
    case PrimitiveKind::monomial: {
        if (t.degree == 0) return s;
        if (z == cplx(0.0, 0.0)) return LogComplex::zero();
        return s.scaled(t.degree * std::log(std::abs(z)), t.degree * std::arg(z));
    }
    case PrimitiveKind::kernel:
        return s * log_exp(kPi * std::conj(t.point) * z);
    case PrimitiveKind::sigma_quotient: {
        if (t.shift != cplx(0.0, 0.0))
            s = s * log_exp(kPi * std::conj(t.shift) * z);
        cplx h = z - t.point;
        if (std::abs(h) <= 1e-3)
            return s * LogComplex::from(eval_quotient(z, t.point, t.shift));
        return s * sigma_evaluator().log_sigma0(z - t.shift) / LogComplex::from(h);
    }
    case PrimitiveKind::shifted_sigma:
        return s * log_exp(kPi * std::conj(t.point) * z) *
               sigma_evaluator().log_sigma0(z - t.point);
    }
    return LogComplex::zero();
}

// tail of the kernel series past degree n: sum_{k>n} (pi|a|^2)^k / k!,
// bounded by twice its first term once the term ratio is below 1/2
double kernel_tail(cplx a, double scale_abs, int n) {
    double x = kPi * std::norm(a);
    if (x == 0.0) return 0.0;
    if (x / (n + 2) > 0.5) return kInf;
    double log_t = (n + 1) * std::log(x) - std::lgamma(static_cast<double>(n) + 2.0);
    return scale_abs * std::sqrt(2.0) * std::exp(0.5 * log_t);
}

} // namespace

FockFunction::FockFunction(std::vector<Primitive> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_) validate(t);
}

FockFunction FockFunction::constant(cplx c) {
    return FockFunction({{PrimitiveKind::constant, c, 0, {}}});
}

FockFunction FockFunction::monomial(int degree, cplx scale) {
    return FockFunction({{PrimitiveKind::monomial, scale, degree, {}}});
}

FockFunction FockFunction::normalized_monomial(int degree, cplx scale) {
    return monomial(degree, scale * std::exp(-normalizer_log(degree)));
}

FockFunction FockFunction::kernel(cplx a, cplx scale) {
    return FockFunction({{PrimitiveKind::kernel, scale, 0, a}});
}

FockFunction FockFunction::sigma_quotient(cplx root, cplx scale) {
    return FockFunction({{PrimitiveKind::sigma_quotient, scale, 0, root}});
}

FockFunction FockFunction::shifted_quotient(cplx a, cplx root, cplx scale) {
    return FockFunction({{PrimitiveKind::sigma_quotient, scale, 0, root, a}});
}

FockFunction FockFunction::shifted_sigma(cplx a, cplx scale) {
    return FockFunction({{PrimitiveKind::shifted_sigma, scale, 0, a}});
}

cplx FockFunction::evaluate(cplx z) const {
    cplx acc(0.0, 0.0);
    for (const auto& t : terms_) {
        switch (t.kind) {
        case PrimitiveKind::constant:
            acc += t.scale;
            break;
        case PrimitiveKind::monomial:
            acc += t.scale * std::pow(z, t.degree);
            break;
        case PrimitiveKind::kernel:
            acc += t.scale * std::exp(kPi * std::conj(t.point) * z);
            break;
        case PrimitiveKind::sigma_quotient: {
            cplx v = eval_quotient(z, t.point, t.shift);
            if (t.shift != cplx(0.0, 0.0))
                v *= std::exp(kPi * std::conj(t.shift) * z);
            acc += t.scale * v;
            break;
        }
        case PrimitiveKind::shifted_sigma:
            acc += t.scale * std::exp(kPi * std::conj(t.point) * z) *
                   sigma_evaluator().sigma0(z - t.point);
            break;
        }
    }
    return acc;
}

LogComplex FockFunction::log_evaluate(cplx z) const {
    if (terms_.empty()) return LogComplex::zero();
    if (terms_.size() == 1) return log_eval_term(terms_[0], z);
    // sum in linear space, rescaled by the largest term so the exponents
    // stay in range
    double peak = -kInf;
    std::vector<LogComplex> parts;
    parts.reserve(terms_.size());
    for (const auto& t : terms_) {
        parts.push_back(log_eval_term(t, z));
        peak = std::max(peak, parts.back().log_abs);
    }
    if (std::isinf(peak) && peak < 0) return LogComplex::zero();
    cplx acc(0.0, 0.0);
    for (const auto& p : parts)
        if (!p.is_zero()) acc += std::polar(std::exp(p.log_abs - peak), p.arg);
    LogComplex out = LogComplex::from(acc);
    if (out.is_zero()) return out;
    return out.scaled(peak, 0.0);
}

TaylorData FockFunction::taylor_at(int degree) const {
    TaylorData data;
    data.coeffs.assign(static_cast<std::size_t>(degree) + 1, cplx(0.0, 0.0));
    for (const auto& t : terms_) {
        double sa = std::abs(t.scale);
        switch (t.kind) {
        case PrimitiveKind::constant:
            data.coeffs[0] += t.scale;
            break;
        case PrimitiveKind::monomial:
            if (t.degree <= degree)
                data.coeffs[static_cast<std::size_t>(t.degree)] +=
                    t.scale * std::exp(normalizer_log(t.degree));
            else
                data.tail_bound += sa * std::exp(normalizer_log(t.degree));
            break;
        case PrimitiveKind::kernel: {
            auto k = kernel_taylor(t.point, degree);
            for (std::size_t i = 0; i < k.size(); ++i) data.coeffs[i] += t.scale * k[i];
            data.tail_bound += kernel_tail(t.point, sa, degree);
            break;
        }
        case PrimitiveKind::sigma_quotient: {
            if (t.shift != cplx(0.0, 0.0))
                throw TailUnboundedError(
                    "taylor: no Taylor route for shifted quotient terms; "
                    "use point evaluation or quadrature");
            auto table = sigma0_taylor(degree + kDivideTailBuffer);
            std::vector<cplx> in(static_cast<std::size_t>(degree) + 1 + kDivideTailBuffer);
            for (std::size_t i = 0; i < in.size(); ++i) in[i] = cplx((*table)[i], 0.0);
            auto q = divide_by_root(in, t.point);
            for (std::size_t i = 0; i < q.size(); ++i) data.coeffs[i] += t.scale * q[i];
            // coefficient envelope |Q_k| <~ B/(k+1) gives a tail norm bound
            // B/sqrt(N+1); B is read off the computed top half (validated
            // against quadrature, factor ~2 conservative)
            double b = 0.0;
            for (int k = degree / 2; k <= degree; ++k)
                b = std::max(b, 2.0 * (k + 1) * std::abs(q[static_cast<std::size_t>(k)]));
            data.tail_bound += sa * b / std::sqrt(static_cast<double>(degree) + 1.0);
            break;
        }
        case PrimitiveKind::shifted_sigma:
            throw TailUnboundedError(
                "taylor: shifted_sigma term has no finite Fock tail");
        }
    }
    return data;
}

TaylorData FockFunction::taylor(double tolerance) const {
    int min_degree = 64;
    for (const auto& t : terms_)
        if (t.kind == PrimitiveKind::monomial) min_degree = std::max(min_degree, t.degree);
    if (min_degree > kTaylorCap) throw TaylorCapError("taylor: degree cap exceeded");
    int n = min_degree;
    while (true) {
        TaylorData data = taylor_at(n);
        if (data.tail_bound <= tolerance) return data;
        if (n >= kTaylorCap) break;
        n = std::min(2 * n, kTaylorCap);
    }
    throw TaylorCapError("taylor: tolerance unreachable at the degree cap");
}

double FockFunction::norm_bound() const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double sa = std::abs(t.scale);
        switch (t.kind) {
        case PrimitiveKind::constant:
            acc += sa;
            break;
        case PrimitiveKind::monomial:
            acc += sa * std::exp(normalizer_log(t.degree));
            break;
        case PrimitiveKind::kernel:
            acc += sa * std::exp(0.5 * kPi * std::norm(t.point));
            break;
        case PrimitiveKind::sigma_quotient: {
            // the kernel shift e^{pi conj(a) z} F(z - a) scales the norm by
            // exactly e^{pi|a|^2/2}, so the unshifted envelope transfers
            double r = std::abs(t.point - t.shift);
            acc += sa * std::exp(0.5 * kPi * std::norm(t.shift)) *
                   std::sqrt(kQuotientEnvelope * std::log1p(r) / r);
            break;
        }
        case PrimitiveKind::shifted_sigma:
            return kInf;
        }
    }
    return acc;
}

double FockFunction::tail_bound_outside(double radius) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double sa = std::abs(t.scale);
        switch (t.kind) {
        case PrimitiveKind::constant:
            acc += sa * std::exp(-0.5 * kPi * radius * radius);
            break;
        case PrimitiveKind::monomial: {
            // ||z^n||^2 outside R is Gamma(n+1, pi R^2)/pi^n <= 2 R^{2n} e^{-pi R^2}
            // once pi R^2 >= 2(n+1)
            double x = kPi * radius * radius;
            if (x < 2.0 * (t.degree + 1)) return kInf;
            acc += sa * std::sqrt(2.0) *
                   std::exp(t.degree * std::log(radius) - 0.5 * x);
            break;
        }
        case PrimitiveKind::kernel: {
            // |k_a|^2 e^{-pi|z|^2} = e^{pi|a|^2} e^{-pi|z-a|^2}: a shifted Gaussian
            double d = radius - std::abs(t.point);
            if (d <= 0.0) return kInf;
            acc += sa * std::exp(0.5 * kPi * (std::norm(t.point) - d * d));
            break;
        }
        case PrimitiveKind::sigma_quotient: {
            // |sigma0(z)| e^{-pi|z|^2/2} <= cap * dist(z,lattice)/|z| with
            // cap = 1.05 (the periodized growth ratio peaks at 1 on the
            // lattice; verified in tests), dist^2 <= 1/2, so the outside
            // mass is below cap^2 pi / (R (R - |w|)).  A kernel shift moves
            // the region |z| > R inside |z - a| > R - |a| and contributes
            // its exact norm factor e^{pi|a|^2/2}.
            constexpr double kGrowthCap = 1.05;
            double rr = radius - std::abs(t.shift);
            double d = rr - std::abs(t.point - t.shift);
            if (rr <= 0.0 || d < 1.0) return kInf;
            acc += sa * std::exp(0.5 * kPi * std::norm(t.shift)) * kGrowthCap *
                   std::sqrt(kPi / (rr * d));
            break;
        }
        case PrimitiveKind::shifted_sigma:
            return kInf;
        }
    }
    return acc;
}

double FockFunction::suggested_radius() const {
    double r = 6.0;
    for (const auto& t : terms_) {
        switch (t.kind) {
        case PrimitiveKind::monomial:
            r = std::max(r, std::sqrt(t.degree / kPi) + 4.0);
            break;
        case PrimitiveKind::kernel:
            r = std::max(r, std::abs(t.point) + 4.0);
            break;
        case PrimitiveKind::sigma_quotient:
            // the weighted integrand decays only like |z|^-4 here; callers
            // doing norm-accuracy work pair this with an explicit tail term
            r = std::max(r, std::abs(t.point) + 10.0);
            break;
        case PrimitiveKind::shifted_sigma:
            r = std::max(r, std::abs(t.point) + 6.0);
            break;
        default:
            break;
        }
    }
    return r;
}

FockFunction& FockFunction::operator+=(const FockFunction& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

FockFunction& FockFunction::operator*=(cplx factor) {
    for (auto& t : terms_) t.scale *= factor;
    return *this;
}

} // namespace gaborfock
