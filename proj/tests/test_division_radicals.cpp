#include "lemni/division_radicals.hpp"

#include "lemni/numerics.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace lemni;

// frozen from the independent bisection oracle
static const char* kR1_60 =
    "0.308198240659732599527877412236600920446218360933485643038307";

TEST_SUITE("division_radicals") {

TEST_CASE("the quartic has the stated Gaussian-integer coefficients") {
    Quartic p = abel_quartic();
    CHECK(p.coeffs[0].re == 1);
    CHECK(p.coeffs[0].im == 0);
    CHECK(p.coeffs[1].re == 12);
    CHECK(p.coeffs[1].im == -20);
    CHECK(p.coeffs[2].re == -10);
    CHECK(p.coeffs[2].im == 28);
    CHECK(p.coeffs[3].re == -20);
    CHECK(p.coeffs[3].im == -12);
    CHECK(p.coeffs[4].re == 1);
    CHECK(p.coeffs[4].im == 4);

    Quartic q = p.reciprocal();
    CHECK(q.coeffs[0].re == 1);
    CHECK(q.coeffs[0].im == 4);
    CHECK(q.coeffs[4].re == 1);
    CHECK(q.coeffs[4].im == 0);
}

TEST_CASE("the radical expression is a quartic root at several precisions") {
    for (unsigned digits : {20u, 40u, 80u}) {
        PrecisionContext ctx(digits);
        PrecisionScope scope(ctx);
        RadicalValue root = abel_radical_root(ctx);
        CHECK(abs(abel_quartic().eval(root.value)) < ctx.eps());
        // the fourth root actually is one
        Complex rho4 = root.rho * root.rho * root.rho * root.rho;
        CHECK(abs(rho4 - Complex(1, 4)) < ctx.eps());
    }
}

TEST_CASE("branch selection is unique and lands on the first vertex") {
    PrecisionContext ctx(40);
    PrecisionScope scope(ctx);
    RadicalValue root = abel_radical_root(ctx);
    Real oracle(kR1_60);

    int in_unit_interval = 0, matching = 0;
    for (int k = 0; k < 4; ++k) {
        Real r1 = detail::r1_from_u(radical_branch_value(k, ctx));
        if (r1 > 0 && r1 < 1)
            ++in_unit_interval;
        if (abs(r1 - oracle) < ctx.eps())
            ++matching;
    }
    // every branch is some division radius in (0,1); only one is phi(2w/17),
    // which is why the filter carries the series bracket
    CHECK(in_unit_interval == 4);
    CHECK(matching == 1);
    CHECK(root.branch_k == 0);
}

TEST_CASE("the four branch values are exactly the roots of P (Vieta sweep)") {
    PrecisionContext ctx(40);
    PrecisionScope scope(ctx);
    Quartic p = abel_quartic();
    std::array<Complex, 4> v;
    for (int k = 0; k < 4; ++k) {
        v[k] = radical_branch_value(k, ctx);
        CHECK(abs(p.eval(v[k])) < ctx.eps());
    }
    // elementary symmetric functions against the coefficients
    Complex e1 = v[0] + v[1] + v[2] + v[3];
    Complex e2 = v[0] * v[1] + v[0] * v[2] + v[0] * v[3] + v[1] * v[2] + v[1] * v[3] +
                 v[2] * v[3];
    Complex e3 = v[0] * v[1] * v[2] + v[0] * v[1] * v[3] + v[0] * v[2] * v[3] +
                 v[1] * v[2] * v[3];
    Complex e4 = v[0] * v[1] * v[2] * v[3];
    CHECK(abs(e1 + p.coeffs[1]) < ctx.eps());  // e1 = -c3
    CHECK(abs(e2 - p.coeffs[2]) < ctx.eps());
    CHECK(abs(e3 + p.coeffs[3]) < ctx.eps());
    CHECK(abs(e4 - p.coeffs[4]) < ctx.eps());
}

TEST_CASE("rewritten expression equals the Lagrange-resolvent value") {
    PrecisionContext ctx(40);
    PrecisionScope scope(ctx);
    Complex rewritten = rewritten_u(ctx);
    RadicalValue root = abel_radical_root(ctx);
    CHECK(abs(rewritten * Real(4) - root.value) < ctx.eps());

    // |Q| = sqrt(17)/4 and arg(P) sits in the second quadrant
    CHECK(abs(abs(Complex(Real(1) / 4, Real(1))) - sqrt(Real(17)) / 4) < ctx.eps());
    Complex p_const(Real(-1) / 2, Real(1) / 4);
    CHECK(arg(p_const) > pi_value() / 2);
    CHECK(arg(p_const) < pi_value());
}

TEST_CASE("phi(2w/17): both closed forms, against the arc-length oracle") {
    PrecisionContext ctx(40);
    PrecisionScope scope(ctx);
    SeventeenData data = phi_two_omega_17(ctx);

    CHECK(abs(data.r1 - Real(kR1_60)) < ctx.eps());
    CHECK(data.r1 > Real("0.30"));
    CHECK(data.r1 < Real("0.31"));
    CHECK(1 + data.m > 1);

    // W is the stated square root of U
    CHECK(abs(data.W * data.W - data.U) < ctx.eps());
    CHECK(abs(abs(data.U) - data.m) < ctx.eps());
    CHECK(abs(arg(data.U) - data.delta) < ctx.eps());
    Complex w_expect = -from_polar(sqrt(data.m), data.delta / 2);
    CHECK(abs(data.W - w_expect) < ctx.eps());

    // module-numerics oracle
    Real sine = lemniscate_sine(ArcParam(2 * omega(ctx) / 17), ctx);
    CHECK(abs(data.r1 - sine) < ctx.eps());

    // the independent bisection oracle, for good measure
    Real brute = lemniscate_sine(ArcParam(2 * lemni::test::oracle_omega(ctx) / 17), ctx);
    CHECK(abs(data.r1 - brute) < ctx.eps());
}

}  // TEST_SUITE
