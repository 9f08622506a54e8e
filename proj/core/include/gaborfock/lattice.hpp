#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "gaborfock/log_complex.hpp"

namespace gaborfock {

// A time-frequency location: x = time shift, y = frequency shift.
struct PhasePoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const PhasePoint&) const = default;
};

// Fixed indexing convention between the phase plane and the Fock plane:
// w = y - i*x.  This is the convention under which phase-plane point sets are
// named throughout the library.  Note it differs from the kernel point the
// Bargmann transform itself produces (see atom_kernel_point in bargmann.hpp);
// the two maps agree up to the unitary rotation w -> -i*conj(w).
inline cplx phase_to_fock(PhasePoint p) { return {p.y, -p.x}; }

inline PhasePoint fock_to_phase(cplx w) { return {-w.imag(), w.real()}; }

// --- square lattice Z + iZ helpers ---

inline cplx round_to_lattice(cplx z) {
    return {std::round(z.real()), std::round(z.imag())};
}

inline bool is_lattice_point(cplx z, double tol = 1e-12) {
    cplx mu = round_to_lattice(z);
    return std::abs(z - mu) <= tol;
}

inline double dist_to_lattice(cplx z) {
    return std::abs(z - round_to_lattice(z));
}

// sign epsilon(mu) = (-1)^{m+n+mn} in the translation law
// sigma(z+mu) = epsilon(mu) * sigma(z) * e^{eta(mu)(z+mu/2)}, mu = m+in.
inline double lattice_sign(std::int64_t m, std::int64_t n) {
    std::int64_t parity = (m & 1) + (n & 1) + (m & 1) * (n & 1);
    return (parity & 1) ? -1.0 : 1.0;
}

inline double lattice_sign(cplx mu) {
    return lattice_sign(static_cast<std::int64_t>(std::llround(mu.real())),
                        static_cast<std::int64_t>(std::llround(mu.imag())));
}

// A finite set of Fock-plane points with a truncation radius.  Lattice-rule
// constructors enumerate {m+in : |m+in| <= R} minus exclusions, sorted by
// (|w|, Re w, Im w) so downstream results are deterministic.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::vector<cplx> points, double truncation_radius);

    // lattice disk minus the origin (the canonical generating set)
    static PointSet lattice_disk_punctured(double radius);
    // lattice disk minus arbitrary exclusions
    static PointSet lattice_disk(double radius, const std::vector<cplx>& exclusions);
    // annulus r_min < |w| <= r_max over the punctured lattice
    static PointSet lattice_annulus(double r_min, double r_max);

    const std::vector<cplx>& points() const { return points_; }
    double truncation_radius() const { return radius_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

private:
    std::vector<cplx> points_;
    double radius_ = 0.0;
};

// counting ratios #(points in disk r) / (pi r^2)
std::vector<double> upper_density(const PointSet& set, const std::vector<double>& radii);

} // namespace gaborfock
