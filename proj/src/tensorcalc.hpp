#pragma once

// Tangent tensor of a polynomial graph x = t, y = f(t) and its positivity
// decompositions. The tensor T = f(u) - f(v) - (u-v) f'(v) is the pullback of
// the tangent-line functional along the graph; writing its second-order
// remainder as a sum of products that are positive at the base point t = 0 is
// what drives every representation this project emits.

#include <utility>
#include <vector>

#include "exactpoly.hpp"

namespace socrep {

// One summand u^mono_u * v^mono_v * p(u) * q(v) of a decomposition; valid
// terms have p(0) > 0 and q(0) > 0.
struct TensorTerm {
    int mono_u = 0;
    int mono_v = 0;
    UniPoly p;  // polynomial in u
    UniPoly q;  // polynomial in v

    bool operator==(const TensorTerm& o) const {
        return mono_u == o.mono_u && mono_v == o.mono_v && p == o.p && q == o.q;
    }
};

struct TensorDecomposition {
    BiPoly base;  // the decomposed tensor
    std::vector<TensorTerm> terms;
    int flat_order = 0;  // m - 2; 0 in the strictly convex case

    // Sum of all terms, for exact identity checks against `base`.
    BiPoly expand() const;
    // Exact identity plus positivity of every p(0), q(0), plus the monomial
    // degrees all summing to flat_order.
    bool invariants_hold() const;

    bool operator==(const TensorDecomposition& o) const {
        return base == o.base && terms == o.terms && flat_order == o.flat_order;
    }
};

// f(u) - f(v) - (u-v) f'(v).
BiPoly tangent_tensor(const UniPoly& f);

// R(u,v) = sum_{k>=2} f^(k)(v)/k! (u-v)^{k-2}; satisfies
// (u-v)^2 R = tangent_tensor(f) exactly.
BiPoly taylor_remainder(const UniPoly& f);

// S(m, n) = (m (u^n - v^n) - n v^{n-m} (u^m - v^m)) / (u - v)^2, as the
// explicit three-sum closed form. All coefficients are strictly positive
// integers supported exactly on total degree n - 2.
struct SPoly {
    int m = 0;
    int n = 0;
    BiPoly value;
};
SPoly s_polynomial(int m, int n);

// Splits a bivariate polynomial into elementary pairs (u^j, g_j(v)), one per
// occurring u-degree.
std::vector<std::pair<UniPoly, UniPoly>> elementary_pairs(const BiPoly& b);

// Rewrites sum_i a_i(u) b_i(v) as a sum of products positive at the base
// point, provided the residue theta = sum a_i(0) b_i(0) is positive. Output
// terms all carry mono_u = mono_v = 0. Throws std::domain_error when
// theta <= 0.
TensorDecomposition positive_residue_decompose(
    const std::vector<std::pair<UniPoly, UniPoly>>& pairs);

// Decomposition of taylor_remainder(f) for f strictly convex at 0
// (f''(0) > 0); flat_order = 0.
TensorDecomposition strict_decompose(const UniPoly& f);

// Decomposition for a flat tangent at 0: f = c_m t^m + ... with c_m > 0,
// m >= 2 and no affine part. Writes the remainder over the monomial
// generators u^{m-2-i} v^i and decomposes each cofactor. flat_order = m - 2;
// m = 2 coincides with the strict case.
TensorDecomposition flat_decompose(const UniPoly& f);

}  // namespace socrep
