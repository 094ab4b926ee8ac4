#include "exactpoly.hpp"

#include <algorithm>
#include <sstream>

namespace socrep {

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        mpz_class num(slash == std::string::npos ? s : s.substr(0, slash), 10);
        mpz_class den(1);
        if (slash != std::string::npos) {
            const std::string d = s.substr(slash + 1);
            if (d.empty()) throw std::invalid_argument("missing denominator");
            den = mpz_class(d, 10);
        }
        if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_pow(const Rational& x, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
    return r;  // powers of a canonical fraction stay canonical
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

UniPoly UniPoly::monomial(int deg, const Rational& c) {
    if (deg < 0) throw std::invalid_argument("negative degree");
    UniPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

UniPoly UniPoly::from_coeffs(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational UniPoly::leading_coeff() const {
    if (is_zero()) return Rational(0);
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = Rational(acc * x + *it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(coeffs_[k] * static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = Rational(-coeffs_[i]);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = Rational(coeffs_[i] * c);
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < d.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - d.degree()) + 1, Rational(0));
    const Rational lead = d.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const int shift = rem.degree() - d.degree();
        const Rational f(rem.leading_coeff() / lead);
        q[static_cast<size_t>(shift)] = f;
        rem = rem - d.scaled(f) * UniPoly::monomial(shift, Rational(1));
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coeff());
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rational c = coeff(k);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const Rational ac = Rational(abs(c));
        if (k == 0 || ac != 1) out << rat_to_string(ac);
        if (k > 0) {
            if (ac != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divrem(y).second;
        x = std::move(y);
        y = r.monic();  // positive rescaling keeps the root set
    }
    return x.monic();
}

UniPoly differentiate(const UniPoly& p, unsigned k) {
    UniPoly r = p;
    for (unsigned i = 0; i < k; ++i) r = r.derivative();
    return r;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return UniPoly::constant(p.leading_coeff());
    return p.divide_exact(gcd(p, p.derivative()));
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    SquarefreeDecomposition out;
    out.lc = p.leading_coeff();
    if (p.degree() == 0) return out;

    // Yun's algorithm on the monic part.
    const UniPoly f = p.monic();
    UniPoly g = gcd(f, f.derivative());
    UniPoly w = f.divide_exact(g);
    UniPoly y = f.derivative().divide_exact(g);
    UniPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UniPoly fi = gcd(w, z);
        if (fi.degree() > 0) out.factors.emplace_back(fi, i);
        w = w.divide_exact(fi);
        y = z.divide_exact(fi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

UniPoly odd_multiplicity_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    const SquarefreeDecomposition dec = squarefree_decomposition(p);
    UniPoly out = UniPoly::constant(dec.lc);
    for (const auto& [f, mult] : dec.factors)
        if (mult % 2 == 1) out = out * f;
    return out;
}

SturmChain::SturmChain(const UniPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    seq_.push_back(g);
    if (g.degree() > 0) seq_.push_back(g.derivative());
    while (seq_.back().degree() > 0) {
        UniPoly r = seq_[seq_.size() - 2].divrem(seq_.back()).second;
        if (r.is_zero()) break;
        // Negate, then rescale by a positive constant to tame growth.
        r = (-r).scaled(Rational(1) / Rational(abs(r.leading_coeff())));
        seq_.push_back(std::move(r));
    }
}

int SturmChain::variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& s : seq_) {
        const int sg = rat_sign(s.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

long SturmChain::count_roots_halfopen(const Rational& a, const Rational& b) const {
    if (a > b) throw std::invalid_argument("empty interval");
    return variations(a) - variations(b);
}

long SturmChain::count_roots_open(const Rational& a, const Rational& b) const {
    if (a >= b) return 0;
    long n = count_roots_halfopen(a, b);
    if (seq_.front().eval(b) == 0) --n;
    return n;
}

bool IntervalCert::operator==(const IntervalCert& o) const {
    return poly == o.poly && lo == o.lo && hi == o.hi && squarefree_part == o.squarefree_part &&
           root_count_interior == o.root_count_interior && endpoint_values == o.endpoint_values;
}

namespace {

// p has a sign change inside (lo, hi) (odd has >= 1 root there); returns a
// rational w with p(w) < 0. Bisection on the odd part; at a rational root the
// negative side is probed with shrinking offsets.
Rational bisect_negative_witness(const UniPoly& p, const UniPoly& odd, const SturmChain& odd_chain,
                                 Rational lo, Rational hi) {
    while (true) {
        const Rational mid((lo + hi) / 2);
        if (p.eval(mid) < 0) return mid;
        if (odd.eval(mid) == 0) {
            Rational eps((hi - lo) / 4);
            while (true) {
                if (p.eval(Rational(mid - eps)) < 0) return Rational(mid - eps);
                if (p.eval(Rational(mid + eps)) < 0) return Rational(mid + eps);
                eps /= 2;
            }
        }
        if (odd_chain.count_roots_open(lo, mid) > 0) hi = mid;
        else lo = mid;
    }
}

// p <= 0 with isolated zeros on [lo, hi]; sweep dyadic probes until one is
// strictly negative.
Rational sweep_negative_witness(const UniPoly& p, const Rational& lo, const Rational& hi) {
    for (long denom = 2;; denom *= 2) {
        for (long j = 1; j < denom; j += 2) {
            const Rational w(lo + (hi - lo) * frac(j, denom));
            if (p.eval(w) < 0) return w;
        }
    }
}

NonnegResult refuted(const Rational& w) {
    NonnegResult r;
    r.accepted = false;
    r.witness = w;
    return r;
}

}  // namespace

NonnegResult nonneg_on_interval(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("nonneg_on_interval: lo > hi");

    NonnegResult res;
    IntervalCert cert;
    cert.poly = p;
    cert.lo = lo;
    cert.hi = hi;
    cert.squarefree_part = squarefree_part(p);
    cert.endpoint_values = {p.eval(lo), p.eval(hi)};

    if (p.is_zero()) {  // the zero polynomial is nonnegative everywhere
        res.accepted = true;
        res.cert = cert;
        return res;
    }
    if (cert.endpoint_values.first < 0) return refuted(lo);
    if (cert.endpoint_values.second < 0) return refuted(hi);
    if (lo == hi) {
        res.accepted = true;
        res.cert = cert;
        return res;
    }

    const SturmChain sf_chain(cert.squarefree_part);
    cert.root_count_interior = sf_chain.count_roots_open(lo, hi);

    const UniPoly odd = odd_multiplicity_part(p);
    const SturmChain odd_chain(odd);
    if (odd_chain.count_roots_open(lo, hi) > 0)
        return refuted(bisect_negative_witness(p, odd, odd_chain, lo, hi));

    // No interior sign change; the odd part carries the sign of p away from
    // roots, and it cannot vanish at the midpoint here.
    const Rational mid((lo + hi) / 2);
    if (odd.eval(mid) > 0) {
        res.accepted = true;
        res.cert = cert;
        return res;
    }
    return refuted(sweep_negative_witness(p, lo, hi));
}

namespace {

struct RadiusPredicate {
    struct Entry {
        UniPoly p;
        UniPoly odd;
        SturmChain chain;
    };
    std::vector<Entry> entries;

    explicit RadiusPredicate(const std::vector<UniPoly>& ps) {
        for (const auto& p : ps) {
            if (p.eval(Rational(0)) <= 0)
                throw std::invalid_argument("certified_radius: not positive at base point");
            UniPoly odd = odd_multiplicity_part(p);
            entries.push_back({p, odd, SturmChain(odd)});
        }
    }

    // Equivalent to nonneg_on_interval(p, -a, a) accepting for every p: the
    // base value is positive, so acceptance means nonnegative endpoints and
    // no odd-multiplicity root in (-a, a).
    bool valid(const Rational& a) const {
        const Rational neg(-a);
        for (const auto& e : entries) {
            if (e.p.eval(a) < 0 || e.p.eval(neg) < 0) return false;
            if (e.chain.count_roots_open(neg, a) > 0) return false;
        }
        return true;
    }
};

}  // namespace

Rational certified_radius(const std::vector<UniPoly>& ps, const Rational& cap,
                          const Rational& precision) {
    if (cap <= 0) throw std::invalid_argument("certified_radius: cap must be positive");
    if (precision <= 0) throw std::invalid_argument("certified_radius: precision must be positive");

    const RadiusPredicate pred(ps);
    if (pred.valid(cap)) return cap;

    // Stern-Brocot walk between a valid lower fraction and an invalid upper
    // one. Mediants hit every rational boundary exactly once the bracketing
    // pair becomes adjacent, and the bracket width tends to zero.
    mpz_class ln(0), ld(1);
    mpz_class rn(cap.get_num()), rd(cap.get_den());
    while (true) {
        Rational lval(ln, ld), rval(rn, rd);
        lval.canonicalize();
        rval.canonicalize();
        if (ln > 0 && Rational(rval - lval) <= precision) {
            Rational out = lval;
            out.canonicalize();
            return out;
        }
        Rational mid(ln + rn, ld + rd);
        mid.canonicalize();
        if (pred.valid(mid)) {
            ln = ln + rn;
            ld = ld + rd;
        } else {
            rn = ln + rn;
            rd = ld + rd;
        }
    }
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int du, int dv, const Rational& c) {
    if (du < 0 || dv < 0) throw std::invalid_argument("negative exponent");
    BiPoly b;
    if (c != 0) b.terms_[{du, dv}] = c;
    return b;
}

BiPoly BiPoly::from_u(const UniPoly& p) {
    BiPoly b;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) b.terms_[{k, 0}] = p.coeff(k);
    return b;
}

BiPoly BiPoly::from_v(const UniPoly& p) {
    BiPoly b;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) b.terms_[{0, k}] = p.coeff(k);
    return b;
}

BiPoly BiPoly::delta() {
    BiPoly b;
    b.terms_[{1, 0}] = 1;
    b.terms_[{0, 1}] = -1;
    return b;
}

Rational BiPoly::coeff(int du, int dv) const {
    auto it = terms_.find({du, dv});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int du, int dv, const Rational& c) {
    if (du < 0 || dv < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({du, dv}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly b;
    for (const auto& [k, c] : terms_) b.terms_[k] = Rational(-c);
    return b;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly b = *this;
    for (const auto& [k, c] : o.terms_) b.add_term(k.first, k.second, c);
    return b;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly b;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            b.add_term(k1.first + k2.first, k1.second + k2.second, Rational(c1 * c2));
    return b;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly b;
    if (c == 0) return b;
    for (const auto& [k, v] : terms_) b.terms_[k] = Rational(v * c);
    return b;
}

BiPoly BiPoly::mul_monomial(int du, int dv) const {
    BiPoly b;
    for (const auto& [k, v] : terms_) b.terms_[{k.first + du, k.second + dv}] = v;
    return b;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly acc = BiPoly::constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Rational BiPoly::eval(const Rational& u, const Rational& v) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_)
        acc += c * rat_pow(u, static_cast<unsigned long>(k.first)) *
               rat_pow(v, static_cast<unsigned long>(k.second));
    return acc;
}

BiPoly BiPoly::swap_vars() const {
    BiPoly b;
    for (const auto& [k, c] : terms_) b.terms_[{k.second, k.first}] = c;
    return b;
}

int BiPoly::degree_u() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_v() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

std::map<int, UniPoly> BiPoly::group_by_u_degree() const {
    std::map<int, std::vector<Rational>> raw;
    for (const auto& [k, c] : terms_) {
        auto& v = raw[k.first];
        if (static_cast<int>(v.size()) <= k.second) v.resize(static_cast<size_t>(k.second) + 1, Rational(0));
        v[static_cast<size_t>(k.second)] = c;
    }
    std::map<int, UniPoly> out;
    for (auto& [j, v] : raw) out.emplace(j, UniPoly(std::move(v)));
    return out;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const Rational ac = Rational(abs(c));
        const bool unit = (ac == 1) && (k.first > 0 || k.second > 0);
        if (!unit) out << rat_to_string(ac);
        if (k.first > 0) {
            if (!unit) out << "*";
            out << "u";
            if (k.first > 1) out << "^" << k.first;
        }
        if (k.second > 0) {
            if (k.first > 0 || !unit) out << "*";
            out << "v";
            if (k.second > 1) out << "^" << k.second;
        }
    }
    return out.str();
}

}  // namespace socrep
