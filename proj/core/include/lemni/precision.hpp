#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace lemni {

/// Arbitrary-precision real. Precision is per-variable; newly created values
/// pick up the thread's current default precision (see PrecisionScope).
using Real = boost::multiprecision::mpfr_float;

/// Working precision threaded through every numeric operation.
///
/// `digits` is the requested accuracy in decimal digits; `eps()` is the
/// coincidence tolerance used by every cross-check, deliberately only half
/// the working digits: the long construction chains burn the other half.
struct PrecisionContext {
    unsigned digits;

    explicit PrecisionContext(unsigned d = 30) : digits(d) {
        if (d < 15)
            throw std::domain_error("PrecisionContext: digits must be >= 15, got " +
                                    std::to_string(d));
    }

    Real eps() const {
        return pow(Real(10), -static_cast<int>(digits / 2));
    }

    /// Internal arithmetic runs with guard digits so that roundoff stays far
    /// below both eps and the requested accuracy.
    unsigned working_digits() const { return digits + kGuardDigits; }

    static constexpr unsigned kGuardDigits = 15;
};

/// RAII guard: sets the thread-default mpfr precision for the enclosed scope.
class PrecisionScope {
  public:
    explicit PrecisionScope(const PrecisionContext& ctx)
        : PrecisionScope(ctx.working_digits()) {}
    explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

/// Copy of x carried at the context's working precision (value preserved).
/// Results of mpfr arithmetic inherit the widest operand precision, so
/// every externally supplied value is widened once on entry.
inline Real at_working(Real x, const PrecisionContext& ctx) {
    x.precision(ctx.working_digits());
    return x;
}

Real pi_value();

/// Arithmetic-geometric mean of two positive reals at current precision.
Real agm(Real a, Real g);

/// Complex value over Real. std::complex is not specified for user-defined
/// scalar types, so the few operations needed here are spelled out.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(int r, int i) : re(r), im(i) {}

    Complex operator-() const { return {-re, -im}; }
    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& s) const { return {re * s, im * s}; }
    Complex operator/(const Real& s) const { return {re / s, im / s}; }
    Complex operator/(const Complex& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
};

inline Complex operator*(const Real& s, const Complex& z) { return z * s; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

/// Complex of modulus `mod` and argument `ang`.
inline Complex from_polar(const Real& mod, const Real& ang) {
    return {mod * cos(ang), mod * sin(ang)};
}

/// Principal square root (argument halved into (-pi/2, pi/2]).
inline Complex sqrt(const Complex& z) {
    return from_polar(sqrt(abs(z)), arg(z) / 2);
}

/// Principal n-th root.
inline Complex nth_root(const Complex& z, unsigned n) {
    return from_polar(pow(abs(z), Real(1) / n), arg(z) / n);
}

std::string to_decimal_string(const Real& x, unsigned digits = 0);

}  // namespace lemni
