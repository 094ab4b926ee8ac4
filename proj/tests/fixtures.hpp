#pragma once

// The handcrafted decomposition of the remainder of t^2 - t^6:
//   1 - u^4 - 2u^3v - 3u^2v^2 - 4uv^3 - 5v^4
//     = 2 p3 q1 + 3 p2 q2 + 4 p1 q3 + p4 * 1 + 1 * q4
// with p_i(u) = a^i + u^i, q_i(v) = a^i - v^i (i = 1..3),
//   p4 = 1/2 - 4a^4 - 4a^3 u - 3a^2 u^2 - 2a u^3 - u^4,
//   q4 = 1/2 - 5a^4 + 2a^3 v + 3a^2 v^2 + 4a v^3 - 5v^4.
// The identity holds for every a; all eight factors are nonnegative on
// [-a, a] exactly when a <= 1/28^(1/4).

#include "tensorcalc.hpp"

namespace socrep::testing {

inline UniPoly x2mx6() { return UniPoly::from_coeffs({0, 0, 1, 0, 0, 0, -1}); }

inline UniPoly handcrafted_p(int i, const Rational& a) {
    return UniPoly::monomial(i, Rational(1)) + UniPoly::constant(rat_pow(a, static_cast<unsigned long>(i)));
}

inline UniPoly handcrafted_q(int i, const Rational& a) {
    return -UniPoly::monomial(i, Rational(1)) + UniPoly::constant(rat_pow(a, static_cast<unsigned long>(i)));
}

inline UniPoly handcrafted_p4(const Rational& a) {
    const Rational a2(a * a), a3(a2 * a), a4(a2 * a2);
    return UniPoly(std::vector<Rational>{Rational(Rational(1, 2) - 4 * a4), Rational(-4 * a3),
                                         Rational(-3 * a2), Rational(-2 * a), Rational(-1)});
}

inline UniPoly handcrafted_q4(const Rational& a) {
    const Rational a2(a * a), a3(a2 * a), a4(a2 * a2);
    return UniPoly(std::vector<Rational>{Rational(Rational(1, 2) - 5 * a4), Rational(2 * a3),
                                         Rational(3 * a2), Rational(4 * a), Rational(-5)});
}

inline TensorDecomposition handcrafted_decomposition(const Rational& a) {
    TensorDecomposition d;
    d.flat_order = 0;
    d.base = taylor_remainder(x2mx6());
    const UniPoly one = UniPoly::constant(Rational(1));
    d.terms.push_back({0, 0, handcrafted_p(3, a).scaled(Rational(2)), handcrafted_q(1, a)});
    d.terms.push_back({0, 0, handcrafted_p(2, a).scaled(Rational(3)), handcrafted_q(2, a)});
    d.terms.push_back({0, 0, handcrafted_p(1, a).scaled(Rational(4)), handcrafted_q(3, a)});
    d.terms.push_back({0, 0, handcrafted_p4(a), one});
    d.terms.push_back({0, 0, one, handcrafted_q4(a)});
    return d;
}

}  // namespace socrep::testing
