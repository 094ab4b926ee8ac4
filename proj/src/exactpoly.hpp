#pragma once

// Exact rational scalars and univariate/bivariate polynomials over Q.
// All certification in this project reduces to arithmetic in these types,
// so nothing here may ever round: coefficients are GMP rationals kept in
// canonical form (positive denominator, reduced).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace socrep {

using Rational = mpq_class;

// Parses "p/q" or an integer literal. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational rat_from_string(const std::string& s);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rational& q);

Rational rat_pow(const Rational& x, unsigned long e);

inline int rat_sign(const Rational& x) { return sgn(x); }

// num/den in canonical form. The raw two-argument mpq_class constructor does
// not reduce, and GMP comparisons assume reduced operands, so computed
// fractions must go through here.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Dense univariate polynomial with rational coefficients. Index equals the
// exponent; the zero polynomial is the empty coefficient vector, and a
// nonzero polynomial never stores a zero leading coefficient.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int deg, const Rational& c);
    // Convenience for literals: {c0, c1, c2, ...}.
    static UniPoly from_coeffs(std::initializer_list<long> cs);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    Rational leading_coeff() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    UniPoly derivative() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Euclidean division; the divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    // Exact division; throws std::invalid_argument if the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& d) const;

    UniPoly monic() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

// k-th formal derivative; k = 0 returns p unchanged.
UniPoly differentiate(const UniPoly& p, unsigned k);

// p / gcd(p, p'); zero for the zero polynomial. The leading coefficient keeps
// the sign of p's.
UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition p = lc * prod_i f_i^i with the f_i monic, squarefree and
// pairwise coprime. Returns the (f_i, i) list (only nontrivial f_i) plus lc.
struct SquarefreeDecomposition {
    Rational lc;
    std::vector<std::pair<UniPoly, int>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const UniPoly& p);

// lc * prod over odd multiplicities. Vanishes exactly at the sign changes of
// p, and has the sign of p wherever the even part is nonzero.
UniPoly odd_multiplicity_part(const UniPoly& p);

// Sturm chain of a nonzero polynomial; members are rescaled by positive
// constants only, so all sign information is preserved.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& g);
    int variations(const Rational& x) const;
    // Number of distinct real roots in (a, b], a <= b.
    long count_roots_halfopen(const Rational& a, const Rational& b) const;
    // Number of distinct real roots in the open interval (a, b).
    long count_roots_open(const Rational& a, const Rational& b) const;

private:
    std::vector<UniPoly> seq_;
};

// Certificate that poly >= 0 on [lo, hi]: endpoint values are nonnegative and
// every interior real root has even multiplicity.
struct IntervalCert {
    UniPoly poly;
    Rational lo;
    Rational hi;
    UniPoly squarefree_part;
    long root_count_interior = 0;
    std::pair<Rational, Rational> endpoint_values;

    bool operator==(const IntervalCert& o) const;
};

struct NonnegResult {
    bool accepted = false;
    std::optional<IntervalCert> cert;   // set iff accepted
    std::optional<Rational> witness;    // set iff refuted; p(witness) < 0 exactly
};

// Complete decision procedure for p >= 0 on [lo, hi]. Always returns exactly
// one of {certificate, negative witness}. Throws std::invalid_argument if
// lo > hi.
NonnegResult nonneg_on_interval(const UniPoly& p, const Rational& lo, const Rational& hi);

// Largest certified radius a in (0, cap] such that every p in ps is
// nonnegative on [-a, a]; either a = cap or a is within `precision` of the
// supremum of valid radii. The search walks the Stern-Brocot tree on the
// exact predicate, so rational critical radii are returned exactly.
// Requires p(0) > 0 for every p, cap > 0, precision > 0.
Rational certified_radius(const std::vector<UniPoly>& ps, const Rational& cap,
                          const Rational& precision);

// Sparse bivariate polynomial in (u, v); keys are (deg_u, deg_v), zero
// coefficients are never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly constant(const Rational& c);
    static BiPoly monomial(int du, int dv, const Rational& c);
    static BiPoly from_u(const UniPoly& p);
    static BiPoly from_v(const UniPoly& p);
    // u - v.
    static BiPoly delta();

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int du, int dv) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(int du, int dv, const Rational& c);

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const Rational& c) const;
    BiPoly mul_monomial(int du, int dv) const;
    BiPoly pow(unsigned e) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    Rational eval(const Rational& u, const Rational& v) const;
    BiPoly swap_vars() const;

    int degree_u() const;
    int degree_v() const;

    // Collects terms by u-degree: result[j] is the v-polynomial g_j with
    // b = sum_j u^j g_j(v). Only nonzero groups are returned.
    std::map<int, UniPoly> group_by_u_degree() const;

    std::string to_string() const;

private:
    std::map<Key, Rational> terms_;
};

}  // namespace socrep
