#include "lemni/precision.hpp"

namespace lemni {

Real pi_value() { return 4 * atan(Real(1)); }

Real agm(Real a, Real g) {
    if (a <= 0 || g <= 0)
        throw std::domain_error("agm: arguments must be positive");
    // Quadratic convergence; stop a few ulps above the rounding floor, where
    // the pair would otherwise oscillate forever.
    long bits = std::max(mpfr_get_prec(a.backend().data()), mpfr_get_prec(g.backend().data()));
    const Real tol = ldexp(Real(1), -bits + 8);
    for (int iter = 0; iter < 200 && abs(a - g) > tol * a; ++iter) {
        Real an = (a + g) / 2;
        g = sqrt(a * g);
        a = an;
    }
    return (a + g) / 2;
}

std::string to_decimal_string(const Real& x, unsigned digits) {
    return x.str(digits);
}

}  // namespace lemni
