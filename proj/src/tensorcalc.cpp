#include "tensorcalc.hpp"

#include <algorithm>

namespace socrep {

BiPoly TensorDecomposition::expand() const {
    BiPoly sum;
    for (const auto& t : terms) {
        BiPoly prod = BiPoly::from_u(t.p) * BiPoly::from_v(t.q);
        sum = sum + prod.mul_monomial(t.mono_u, t.mono_v);
    }
    return sum;
}

bool TensorDecomposition::invariants_hold() const {
    if (expand() != base) return false;
    for (const auto& t : terms) {
        if (t.p.eval(Rational(0)) <= 0 || t.q.eval(Rational(0)) <= 0) return false;
        if (t.mono_u < 0 || t.mono_v < 0 || t.mono_u + t.mono_v != flat_order) return false;
    }
    return true;
}

BiPoly tangent_tensor(const UniPoly& f) {
    return BiPoly::from_u(f) - BiPoly::from_v(f) - BiPoly::delta() * BiPoly::from_v(f.derivative());
}

BiPoly taylor_remainder(const UniPoly& f) {
    BiPoly sum;
    mpz_class kfac(2);  // k!
    for (int k = 2; k <= f.degree(); ++k) {
        const UniPoly fk = differentiate(f, static_cast<unsigned>(k));
        sum = sum + BiPoly::from_v(fk).scaled(Rational(mpz_class(1), kfac)) *
                        BiPoly::delta().pow(static_cast<unsigned>(k - 2));
        kfac *= k + 1;
    }
    return sum;
}

SPoly s_polynomial(int m, int n) {
    if (m < 1 || n <= m) throw std::invalid_argument("s_polynomial: need 1 <= m < n");
    BiPoly v;
    for (int i = 0; i <= m - 2; ++i)
        v.add_term(i, n - i - 2, Rational((n - m) * static_cast<long>(i + 1)));
    v.add_term(m - 1, n - m - 1, Rational(static_cast<long>(m) * (n - m)));
    for (int j = 0; j <= n - m - 2; ++j)
        v.add_term(n - 2 - j, j, Rational(static_cast<long>(m) * (j + 1)));
    return SPoly{m, n, std::move(v)};
}

std::vector<std::pair<UniPoly, UniPoly>> elementary_pairs(const BiPoly& b) {
    std::vector<std::pair<UniPoly, UniPoly>> pairs;
    for (const auto& [j, g] : b.group_by_u_degree())
        pairs.emplace_back(UniPoly::monomial(j, Rational(1)), g);
    return pairs;
}

TensorDecomposition positive_residue_decompose(
    const std::vector<std::pair<UniPoly, UniPoly>>& pairs) {
    Rational theta(0);
    for (const auto& [a, b] : pairs) theta += a.eval(Rational(0)) * b.eval(Rational(0));
    if (theta <= 0) throw std::domain_error("positive_residue_decompose: residue not positive");

    const size_t n = pairs.size();
    const Rational r(theta / 4), s(theta / 4);
    const Rational ri(1);
    const Rational si(theta / Rational(2 * static_cast<long>(n)));

    TensorDecomposition out;
    for (const auto& [a, b] : pairs) out.base = out.base + BiPoly::from_u(a) * BiPoly::from_v(b);

    // Split off the residues: a_i = c_i + alpha_i, b_i = d_i + beta_i with
    // alpha_i, beta_i vanishing at 0. The cross terms are absorbed into the
    // two extra pairs (r + sum (d_i - s_i) alpha_i) x 1 and
    // 1 x (s + sum (c_i - r_i) beta_i).
    UniPoly p_extra = UniPoly::constant(r);
    UniPoly q_extra = UniPoly::constant(s);
    std::vector<std::pair<UniPoly, UniPoly>> raw;
    for (const auto& [a, b] : pairs) {
        const Rational ci = a.eval(Rational(0)), di = b.eval(Rational(0));
        const UniPoly alpha = a - UniPoly::constant(ci);
        const UniPoly beta = b - UniPoly::constant(di);
        raw.emplace_back(alpha + UniPoly::constant(ri), beta + UniPoly::constant(si));
        p_extra = p_extra + alpha.scaled(Rational(di - si));
        q_extra = q_extra + beta.scaled(Rational(ci - ri));
    }
    raw.emplace_back(p_extra, UniPoly::constant(Rational(1)));
    raw.emplace_back(UniPoly::constant(Rational(1)), q_extra);

    // Pure scalar pairs collapse into a single 1 x const term; their residues
    // are positive, so the merged constant is too.
    Rational scalar_sum(0);
    bool have_scalar = false;
    for (auto& [p, q] : raw) {
        if (p.is_zero() || q.is_zero()) continue;
        if (p.degree() == 0 && q.degree() == 0) {
            scalar_sum += p.leading_coeff() * q.leading_coeff();
            have_scalar = true;
            continue;
        }
        out.terms.push_back({0, 0, std::move(p), std::move(q)});
    }
    if (have_scalar)
        out.terms.push_back({0, 0, UniPoly::constant(Rational(1)), UniPoly::constant(scalar_sum)});
    return out;
}

TensorDecomposition strict_decompose(const UniPoly& f) {
    if (differentiate(f, 2).eval(Rational(0)) <= 0)
        throw std::domain_error("strict_decompose: not strictly convex at base point");
    const BiPoly remainder = taylor_remainder(f);
    TensorDecomposition out = positive_residue_decompose(elementary_pairs(remainder));
    out.base = remainder;
    out.flat_order = 0;
    return out;
}

TensorDecomposition flat_decompose(const UniPoly& f) {
    if (f.coeff(0) != 0 || f.coeff(1) != 0)
        throw std::invalid_argument("flat_decompose: affine part must be zero");
    int m = -1;
    for (int k = 2; k <= f.degree(); ++k) {
        if (f.coeff(k) != 0) {
            m = k;
            break;
        }
    }
    if (m < 2) throw std::invalid_argument("flat_decompose: no term of degree >= 2");
    if (f.coeff(m) <= 0)
        throw std::invalid_argument("flat_decompose: lowest coefficient not positive");

    if (m == 2) return strict_decompose(f);

    const BiPoly remainder = taylor_remainder(f);
    const int order = m - 2;

    // Assign each monomial u^a v^b (a + b >= m - 2) to the generator
    // u^{m-2-i} v^i with the largest admissible i; the leftover factor joins
    // the cofactor G_i. The bottom-degree part of the remainder is
    // c_m * S(1, m), so G_i(0,0) = c_m * (i + 1) > 0.
    std::vector<BiPoly> cofactors(static_cast<size_t>(order) + 1);
    for (const auto& [key, c] : remainder.terms()) {
        const int a = key.first, b = key.second;
        if (a + b < order) throw std::domain_error("flat_decompose: remainder below expected order");
        const int i = std::min(b, order);
        cofactors[static_cast<size_t>(i)].add_term(a - (order - i), b - i, c);
    }

    TensorDecomposition out;
    out.base = remainder;
    out.flat_order = order;
    for (int i = 0; i <= order; ++i) {
        const BiPoly& g = cofactors[static_cast<size_t>(i)];
        if (g.is_zero()) continue;
        TensorDecomposition part = positive_residue_decompose(elementary_pairs(g));
        for (auto& term : part.terms) {
            term.mono_u = order - i;
            term.mono_v = i;
            out.terms.push_back(std::move(term));
        }
    }
    return out;
}

}  // namespace socrep
