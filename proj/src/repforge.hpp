#pragma once

// Lifted representations with 2x2 PSD blocks: the support-cone representation
// of an epigraph piece, the rank-1 PSD factorization induced by a tensor
// decomposition, and the set combinators (intersection, product, conic hull,
// hull of a union).

#include <array>
#include <string>
#include <vector>

#include "tensorcalc.hpp"

namespace socrep {

// c0 + <cx, x> + <cy, y>.
struct AffineForm {
    Rational c0;
    std::vector<Rational> cx;
    std::vector<Rational> cy;

    Rational eval(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    // Substitutes each variable by an affine form over a new variable space.
    AffineForm substituted(const std::vector<AffineForm>& xsub,
                           const std::vector<AffineForm>& ysub) const;
    bool operator==(const AffineForm& o) const { return c0 == o.c0 && cx == o.cx && cy == o.cy; }
};

// Symmetric affine matrix block of size 1 or 2, required PSD.
struct Block {
    int size = 1;
    std::vector<AffineForm> entries;  // row-major, size*size, symmetric

    bool operator==(const Block& o) const { return size == o.size && entries == o.entries; }
};

enum class RepKind { Set, Cone };

// Represented set: { x : exists y, every block evaluates to a PSD matrix }.
struct ConicRep {
    int n_vars = 0;
    int n_lifts = 0;
    RepKind kind = RepKind::Set;
    std::vector<Block> blocks;
    std::vector<std::string> labels;  // per-block provenance

    void validate() const;
    bool operator==(const ConicRep& o) const;
};

AffineForm affine_const(const Rational& c, int n_vars, int n_lifts);
Block block1(const AffineForm& e);
Block block2(const AffineForm& e00, const AffineForm& e01, const AffineForm& e11);

// Exact feasibility of a supplied witness: every block PSD at (x, y). A 2x2
// matrix is PSD iff both diagonal entries and the determinant are >= 0.
bool check_point(const ConicRep& r, const std::vector<Rational>& x,
                 const std::vector<Rational>& y);

ConicRep intersect(const ConicRep& r1, const ConicRep& r2);
ConicRep product(const ConicRep& r1, const ConicRep& r2);
// Homogenization: constants are scaled by a new lift s, and
// blocks [[s, x_i], [x_i, t]] bound the coordinates. Lift order: (y..., s, t).
ConicRep cone_hull(const ConicRep& r);
// Closed convex hull of the union via Minkowski sum of the two homogenized
// cones, sliced at weight 1. Lift order: (x', lambda', lifts of K~, lifts of L~).
ConicRep union_hull(const ConicRep& r1, const ConicRep& r2);

// Symmetric rational 2x2 matrix.
struct Mat2 {
    Rational m00, m01, m11;
    bool psd() const { return m00 >= 0 && m11 >= 0 && Rational(m00 * m11 - m01 * m01) >= 0; }
    bool operator==(const Mat2& o) const { return m00 == o.m00 && m01 == o.m01 && m11 == o.m11; }
};

// Coefficients (A, B, C) of the tangent functional
// tau_v = A x + B y + C = y - f(v) - (x - v) f'(v).
std::array<Rational, 3> tangent_line(const UniPoly& f, const Rational& v);

// Lifted representation of the support cone of
// K_a = { (x, y) : y >= f(x), |x| <= a }: a functional (A, B, C) is in the
// cone iff there are c >= 0 and PSD 2x2 matrices G_i with
//   A t + B f(t) + C = c (a^2 - t^2) + sum_i g_i(t) P_i(t),
// where g_i(t) = a_i t^2 + 2 b_i t + c_i comes from G_i and
// P_i(t) = t^{mu_i + mv_i} p_i(t).
struct SupportConeRep {
    UniPoly f;
    Rational a;
    TensorDecomposition decomp;
    ConicRep rep;  // over variables (A, B, C) with lifts {c} + 3 per term

    // P_i(t) for term i.
    UniPoly validity_poly(size_t i) const;
    int identity_degree_bound() const;
};

// Runs the strict or flat decomposition, certifies the radius over all p_i,
// q_i (capped at `cap`), and assembles the block representation. Throws
// std::domain_error when f is not convex at the base point (f''(0) < 0, odd
// flat order, or negative lowest coefficient).
SupportConeRep build_support_rep(const UniPoly& f, const Rational& cap, const Rational& precision);

// Assembles the block representation for an already-chosen radius and
// decomposition (no radius search); build_support_rep and bundle re-checking
// both go through this.
SupportConeRep make_support_rep(const UniPoly& f, const Rational& a,
                                const TensorDecomposition& decomp);

// A certificate for membership of a functional: the scalar c and one 2x2
// matrix per decomposition term.
struct SupportCertificate {
    Rational c;
    std::vector<Mat2> G;
};

// Certificate for tangent_line(f, v): c = 0 and G_i = q_i(v) [[1,-v],[-v,v^2]]
// on every term. Valid whenever all q_i(v) >= 0 (strict case on [-a, a]).
SupportCertificate tangent_certificate(const SupportConeRep& s, const Rational& v);

// Certificate for the vertical generator a + sign*x, realized as
// (a +- t)^2 / (2a) on a term with constant p (the residue construction
// always emits one) plus c = 1/(2a). Strict case only.
SupportCertificate vertical_certificate(const SupportConeRep& s, int sign);

// Moment-side representation of K_a itself, dual to the support cone: over
// (x, y) with a lifted pseudo-moment vector (m_0, ..., m_D), blocks
//   [[<m, P_i>, <m, t P_i>], [<m, t P_i>, <m, t^2 P_i>]] >= 0 per term,
//   <m, a^2 - t^2> >= 0, and pins m_0 = 1, m_1 = x, <m, f> = y.
// Witness lifts are synthesized for graph points only (m_k = x^k); exact lift
// synthesis for interior points would need a conic solver.
ConicRep moment_set_rep(const SupportConeRep& s);

// The graph-point witness m_k = t^k for moment_set_rep.
std::vector<Rational> graph_moment_lift(const SupportConeRep& s, const Rational& t);

// Rank-1 PSD factorization of the tangent slack (strict case):
// tau_v(u, f(u)) = sum_i <A_i(u), B_i(v)> with A_i(u) = p_i(u) [[1,u],[u,u^2]]
// and B_i(v) = q_i(v) [[v^2,-v],[-v,1]].
struct Mat2Poly {
    UniPoly m00, m01, m11;  // symmetric
};
struct PsdFactorization {
    Rational a;
    std::vector<std::pair<UniPoly, UniPoly>> terms;
    std::vector<Mat2Poly> A_form;  // in u
    std::vector<Mat2Poly> B_form;  // in v
};

// Requires decomp.flat_order == 0, decomp decomposing taylor_remainder(f),
// and every p_i, q_i nonnegative on [-a, a] (re-certified here; failures
// throw std::domain_error).
PsdFactorization psd_factorization(const UniPoly& f, const TensorDecomposition& decomp,
                                   const Rational& a);

// The factorization forms without any certification, for handcrafted data.
PsdFactorization make_factorization_forms(const std::vector<std::pair<UniPoly, UniPoly>>& terms,
                                          const Rational& a);

}  // namespace socrep
