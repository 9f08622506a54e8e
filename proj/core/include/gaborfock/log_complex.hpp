#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace gaborfock {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// A nonzero complex number stored as (log|v|, arg v).  Exact zeros are
// log_abs == -inf.  Products and quotients add/subtract components, so values
// like e^{pi|w|^2/2} stay representable far beyond double range.
struct LogComplex {
    double log_abs = -std::numeric_limits<double>::infinity();
    double arg = 0.0;

    static LogComplex zero() { return {}; }

    static LogComplex from(cplx v) {
        if (v == cplx(0.0, 0.0)) return zero();
        return {std::log(std::abs(v)), std::arg(v)};
    }

    static LogComplex from_log(double log_abs, double arg) { return {log_abs, arg}; }

    bool is_zero() const { return std::isinf(log_abs) && log_abs < 0; }

    // May overflow to inf for log_abs > ~709; callers that care use log_abs directly.
    cplx value() const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_abs), arg);
    }

    LogComplex operator*(const LogComplex& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return {log_abs + o.log_abs, arg + o.arg};
    }

    LogComplex operator/(const LogComplex& o) const {
        return {log_abs - o.log_abs, arg - o.arg};
    }

    LogComplex scaled(double factor_log_abs, double factor_arg) const {
        if (is_zero()) return zero();
        return {log_abs + factor_log_abs, arg + factor_arg};
    }
};

// exp(e) for complex e, kept in log form: |exp(e)| = e^{Re e}, arg = Im e.
inline LogComplex log_exp(cplx exponent) {
    return LogComplex::from_log(exponent.real(), exponent.imag());
}

} // namespace gaborfock
