#include "lemni/division_radicals.hpp"

#include "lemni/numerics.hpp"

namespace lemni {

Complex Quartic::eval(const Complex& z) const {
    Complex acc = coeffs[0];
    for (int i = 1; i < 5; ++i)
        acc = acc * z + coeffs[i];
    return acc;
}

Quartic Quartic::reciprocal() const {
    return {{coeffs[4], coeffs[3], coeffs[2], coeffs[1], coeffs[0]}};
}

Quartic abel_quartic() {
    return {{Complex(1, 0), Complex(12, -20), Complex(-10, 28), Complex(-20, -12),
             Complex(1, 4)}};
}

namespace {

Complex principal_rho() {
    // rho = (1+4i)^(1/4), principal branch
    return nth_root(Complex(1, 4), 4);
}

Complex branch_rho(int k, const Complex& rho0) {
    Complex rho = rho0;
    const Complex i_unit(0, 1);
    for (int j = 0; j < (k % 4 + 4) % 4; ++j)
        rho = rho * i_unit;
    return rho;
}

Complex value_from_rho(const Complex& rho) {
    Complex rho2 = rho * rho;
    Complex rho3 = rho2 * rho;
    return Complex(-3, 5) - Complex(0, 3) * rho2 + Complex(4, 1) * rho +
           Complex(-2, 1) * rho3;
}

}  // namespace

Complex radical_branch_value(int k, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    return value_from_rho(branch_rho(k, principal_rho()));
}

namespace detail {

Real r1_from_u(const Complex& u) {
    Real m = abs(u);
    Real delta = arg(u);  // principal, in (-pi, pi]
    Complex w = -from_polar(sqrt(m), delta / 2);
    return 2 * sqrt(w - m * conj(w)).re / (1 + m);
}

}  // namespace detail

RadicalValue abel_radical_root(const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    const Quartic p = abel_quartic();
    const Complex rho0 = principal_rho();
    const Real om = omega(ctx);
    // Series bracket for phi(2w/17): phi(s) ~ s - s^5/10, good to ~5e-4 here.
    const Real s1 = 2 * om / 17;
    const Real series = s1 - pow(s1, 5) / 10;
    int found = -1;
    Complex found_rho;
    for (int k = 0; k < 4; ++k) {
        Complex rho = branch_rho(k, rho0);
        Complex u = value_from_rho(rho);
        if (abs(p.eval(u)) > ctx.eps())
            continue;
        Real r1 = detail::r1_from_u(u);
        if (r1 <= 0 || r1 >= 1 || abs(r1 - series) > Real(1) / 100)
            continue;
        if (found >= 0)
            throw std::logic_error("abel_radical_root: branch filter not unique");
        found = k;
        found_rho = rho;
    }
    if (found < 0)
        throw std::logic_error("abel_radical_root: no branch passed the filter");
    return {value_from_rho(found_rho), found, found_rho};
}

Complex rewritten_u(const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    const Complex p(Real(-1) / 2, Real(1) / 4);
    const Complex q(Real(1) / 4, Real(1));
    const Complex q_star(Real(-1) / 4, Real(1));
    const Real theta = arg(p);
    const Real phi = arg(q);
    const Real pi = pi_value();
    const Real abs_q = abs(q);
    const Real s = sqrt(abs_q) / 2;
    const Real r = sqrt(s);
    Complex third = from_polar(Real(3) / 2 * sqrt(abs_q), phi / 2 - pi / 2);
    Complex a = from_polar(abs(p), theta + 3 * phi / 4);
    Complex b = from_polar(sqrt(abs_q) / 2, 3 * pi / 2 - 3 * phi / 4);
    return p + q_star + third + 8 * (a - b) * (r * r * r);
}

SeventeenData phi_two_omega_17(const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    RadicalValue root = abel_radical_root(ctx);
    const Complex u = root.value;
    Real m = abs(u);
    Real delta = arg(u);
    Complex w = -from_polar(sqrt(m), delta / 2);
    Real r1 = 2 * sqrt(w - m * conj(w)).re / (1 + m);

    // Cross-check against the Fagnano form over the conjugate arguments:
    // a = phi(w/(1+4i)) is a square root of W, and the conjugate value pairs
    // off so the sum is real.
    Complex a = sqrt(w);
    Complex term = a * sqrt(Complex(Real(1), Real(0)) - conj(u));
    Real r1_fagnano = 2 * term.re / (1 + m);
    if (abs(r1 - r1_fagnano) > ctx.eps())
        throw std::runtime_error("phi_two_omega_17: closed forms disagree: " +
                                 Real(abs(r1 - r1_fagnano)).str(5));

    // And against the arc-length oracle.
    Real oracle = lemniscate_sine(ArcParam(2 * omega(ctx) / 17), ctx);
    if (abs(r1 - oracle) > ctx.eps())
        throw std::runtime_error("phi_two_omega_17: radical value disagrees with the "
                                 "arc-length oracle: " + Real(abs(r1 - oracle)).str(5));

    return {u, m, delta, w, r1, root.branch_k};
}

}  // namespace lemni
