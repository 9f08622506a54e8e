#include "gaborfock/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace gaborfock {

namespace {

void sort_points(std::vector<cplx>& pts) {
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        double ra = std::abs(a), rb = std::abs(b);
        if (ra != rb) return ra < rb;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

} // namespace

PointSet::PointSet(std::vector<cplx> points, double truncation_radius)
    : points_(std::move(points)), radius_(truncation_radius) {
    sort_points(points_);
}

PointSet PointSet::lattice_disk(double radius, const std::vector<cplx>& exclusions) {
    std::vector<cplx> pts;
    auto excluded = [&](cplx w) {
        for (cplx e : exclusions)
            if (std::abs(w - e) < 1e-9) return true;
        return false;
    };
    long bound = static_cast<long>(std::floor(radius));
    for (long m = -bound; m <= bound; ++m) {
        for (long n = -bound; n <= bound; ++n) {
            cplx w(static_cast<double>(m), static_cast<double>(n));
            if (std::abs(w) <= radius && !excluded(w)) pts.push_back(w);
        }
    }
    return PointSet(std::move(pts), radius);
}

PointSet PointSet::lattice_disk_punctured(double radius) {
    return lattice_disk(radius, {cplx(0.0, 0.0)});
}

PointSet PointSet::lattice_annulus(double r_min, double r_max) {
    std::vector<cplx> pts;
    long bound = static_cast<long>(std::floor(r_max));
    for (long m = -bound; m <= bound; ++m) {
        for (long n = -bound; n <= bound; ++n) {
            cplx w(static_cast<double>(m), static_cast<double>(n));
            double r = std::abs(w);
            if (r > r_min && r <= r_max && r > 0.0) pts.push_back(w);
        }
    }
    return PointSet(std::move(pts), r_max);
}

std::vector<double> upper_density(const PointSet& set, const std::vector<double>& radii) {
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        std::size_t count = 0;
        for (cplx w : set.points())
            if (std::abs(w) <= r) ++count;
        out.push_back(r > 0.0 ? static_cast<double>(count) / (kPi * r * r) : 0.0);
    }
    return out;
}

} // namespace gaborfock
