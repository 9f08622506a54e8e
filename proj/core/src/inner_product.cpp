#include "gaborfock/inner_product.hpp"

#include <algorithm>
#include <cmath>

#include "gaborfock/errors.hpp"

namespace gaborfock {

namespace {
constexpr int kCap = 512;
}

InnerResult fock_inner_taylor(const FockFunction& f, const FockFunction& g,
                              double tolerance) {
    int n = 64;
    while (true) {
        TaylorData df = f.taylor_at(n);
        TaylorData dg = g.taylor_at(n);
        double err = df.tail_bound * dg.tail_bound;
        if (err <= tolerance || n >= kCap) {
            if (err > tolerance)
                throw TaylorCapError(
                    "fock_inner_taylor: tolerance unreachable at the degree cap");
            cplx acc(0.0, 0.0);
            for (std::size_t k = 0; k < df.coeffs.size(); ++k)
                acc += df.coeffs[k] * std::conj(dg.coeffs[k]);
            return {acc, err};
        }
        n = std::min(2 * n, kCap);
    }
}

InnerResult fock_norm(const FockFunction& f, double tolerance) {
    InnerResult sq = fock_inner_taylor(f, f, tolerance);
    double v = std::max(0.0, sq.value.real());
    double n = std::sqrt(v);
    double err = (n > std::sqrt(sq.error_bound))
                     ? sq.error_bound / (2.0 * n)
                     : std::sqrt(sq.error_bound);
    return {cplx(n, 0.0), err};
}

} // namespace gaborfock
