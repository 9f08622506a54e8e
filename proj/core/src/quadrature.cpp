#include "gaborfock/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gaborfock/errors.hpp"

namespace gaborfock {

namespace {


// 16-point Gauss-Legendre rule on [-1, 1], positive half
constexpr double kGlNode[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeight[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

struct RadialNode {
    double r;
    double weight; // GL weight * panel half-width * r (area element factor)
};

std::vector<RadialNode> radial_nodes(double radius, double max_panel) {
    int n_panels = std::max(1, static_cast<int>(std::ceil(radius / max_panel)));
    double width = radius / n_panels;
    std::vector<RadialNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n_panels) * 16);
    for (int p = 0; p < n_panels; ++p) {
        double c = (p + 0.5) * width, h = 0.5 * width;
        for (int i = 0; i < 8; ++i) {
            for (double s : {-1.0, 1.0}) {
                double r = c + s * h * kGlNode[i];
                nodes.push_back({r, kGlWeight[i] * h * r});
            }
        }
    }
    return nodes;
}

// one sweep at fixed angular resolution; peak reports the largest weighted
// integrand magnitude seen (the natural scale for cancellation)
cplx sweep(const FockFunction& f, const FockFunction& g,
           const std::vector<RadialNode>& radial, int m_angular, double* peak) {
    cplx total(0.0, 0.0);
    double w_max = 0.0;
    for (const auto& node : radial) {
        cplx ring(0.0, 0.0);
        double damp = kPi * node.r * node.r;
        for (int m = 0; m < m_angular; ++m) {
            cplx z = std::polar(node.r, 2.0 * kPi * m / m_angular);
            LogComplex lf = f.log_evaluate(z);
            if (lf.is_zero()) continue;
            LogComplex lg = g.log_evaluate(z);
            if (lg.is_zero()) continue;
            double mag = std::exp(lf.log_abs + lg.log_abs - damp);
            ring += std::polar(mag, lf.arg - lg.arg);
            w_max = std::max(w_max, mag);
        }
        total += node.weight * (2.0 * kPi / m_angular) * ring;
    }
    *peak = w_max;
    return total;
}

// disk integral of F conj(G) e^{-pi|z|^2}, with angular resolution doubled
// until the refinement residual meets spec.target_rel
cplx disk_integral(const FockFunction& f, const FockFunction& g, double radius,
                   const QuadratureSpec& spec, double* err_out) {
    if (!(radius > 0.0)) throw std::invalid_argument("quadrature: radius must be positive");
    auto radial = radial_nodes(radius, spec.radial_panel);
    double peak = 0.0;
    cplx prev = sweep(f, g, radial, spec.min_angular, &peak);
    for (int m = 2 * spec.min_angular; m <= spec.max_angular; m *= 2) {
        cplx cur = sweep(f, g, radial, m, &peak);
        double diff = std::abs(cur - prev);
        double scale = std::max(std::abs(cur), peak);
        if (diff <= spec.target_rel * scale || scale == 0.0) {
            // floor: accumulated roundoff across ~16/eps would need, keep
            // simple eps-level term proportional to integrand scale and area
            *err_out = diff + 1e-15 * peak * kPi * radius * radius;
            return cur;
        }
        prev = cur;
    }
    throw GridTooCoarseError("quadrature: angular refinement cap reached");
}

} // namespace

InnerResult fock_inner_quadrature(const FockFunction& f, const FockFunction& g,
                                  double radius, const QuadratureSpec& spec) {
    double qerr = 0.0;
    cplx v = disk_integral(f, g, radius, spec, &qerr);
    // Cauchy-Schwarz on the outside mass
    double tf = f.tail_bound_outside(radius), tg = g.tail_bound_outside(radius);
    double tail = (std::isinf(tf) || std::isinf(tg))
                      ? std::numeric_limits<double>::infinity()
                      : tf * tg;
    return {v, qerr + tail};
}

double disk_norm_sq(const FockFunction& f, double radius, const QuadratureSpec& spec) {
    double qerr = 0.0;
    return disk_integral(f, f, radius, spec, &qerr).real();
}

} // namespace gaborfock
