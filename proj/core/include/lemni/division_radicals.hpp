#pragma once

#include "lemni/precision.hpp"

#include <array>

namespace lemni {

/// Complex value remembering which fourth root rho * i^k of 1+4i produced it.
struct RadicalValue {
    Complex value;
    int branch_k = 0;
    Complex rho;  // the fourth root actually used
};

/// Everything the 17-division needs downstream of the quartic root:
/// U = phi^4(w/(1+4i)), its modulus m and argument delta, the square root
/// W = phi^2(w/(1+4i)), and the first-vertex radius r1 = phi(2w/17).
struct SeventeenData {
    Complex U;
    Real m;
    Real delta;
    Complex W;
    Real r1;
    int branch_k = 0;
};

/// Degree-4 polynomial with Gaussian-integer coefficients, highest first.
struct Quartic {
    std::array<Complex, 5> coeffs;

    Complex eval(const Complex& z) const;
    /// Q(z) = z^4 P(1/z): the coefficient-reversed quartic.
    Quartic reciprocal() const;
};

/// P(z) = z^4 + (12-20i) z^3 - (10-28i) z^2 - (20+12i) z + (1+4i),
/// the minimal polynomial of phi^4(w/(1+4i)) over Q(i).
Quartic abel_quartic();

/// The radical expression (-3+5i) - 3i rho^2 + (4+i) rho + (-2+i) rho^3 over
/// one fourth root rho of 1+4i; k enumerates the candidates rho * i^k.
Complex radical_branch_value(int k, const PrecisionContext& ctx);

/// The branch whose downstream r1 is the first-vertex radius (the series
/// bracket 0.30 < r1 < 0.31 pins it; the other branches yield other
/// division radii). Verifies |P(value)| <= eps.
RadicalValue abel_radical_root(const PrecisionContext& ctx);

/// The rewritten polar-form expression for (1/4) phi^4(w/(1+4i)); multiplied
/// by 4 it must reproduce abel_radical_root().
Complex rewritten_u(const PrecisionContext& ctx);

/// r1 = phi(2w/17) two ways: 2 Re(sqrt(W - m conj W))/(1+m) and the Fagnano
/// sum over conjugate arguments; throws if the closed forms disagree.
SeventeenData phi_two_omega_17(const PrecisionContext& ctx);

namespace detail {
/// r1 candidate from a given quartic-root value (used by the branch sweep).
Real r1_from_u(const Complex& u);
}  // namespace detail

}  // namespace lemni
