#include "repforge.hpp"

#include <algorithm>

namespace socrep {

Rational AffineForm::eval(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    if (x.size() != cx.size() || y.size() != cy.size())
        throw std::invalid_argument("affine form: dimension mismatch");
    Rational acc = c0;
    for (size_t i = 0; i < cx.size(); ++i) acc += cx[i] * x[i];
    for (size_t j = 0; j < cy.size(); ++j) acc += cy[j] * y[j];
    return acc;
}

AffineForm AffineForm::substituted(const std::vector<AffineForm>& xsub,
                                   const std::vector<AffineForm>& ysub) const {
    if (xsub.size() != cx.size() || ysub.size() != cy.size())
        throw std::invalid_argument("affine substitution: dimension mismatch");
    if (xsub.empty() && ysub.empty())
        throw std::invalid_argument("affine substitution: target space unknown");
    const AffineForm& probe = xsub.empty() ? ysub.front() : xsub.front();
    AffineForm out;
    out.c0 = c0;
    out.cx.assign(probe.cx.size(), Rational(0));
    out.cy.assign(probe.cy.size(), Rational(0));
    auto accumulate = [&out](const Rational& w, const AffineForm& f) {
        if (w == 0) return;
        out.c0 += w * f.c0;
        for (size_t i = 0; i < f.cx.size(); ++i) out.cx[i] += w * f.cx[i];
        for (size_t j = 0; j < f.cy.size(); ++j) out.cy[j] += w * f.cy[j];
    };
    for (size_t i = 0; i < cx.size(); ++i) accumulate(cx[i], xsub[i]);
    for (size_t j = 0; j < cy.size(); ++j) accumulate(cy[j], ysub[j]);
    return out;
}

void ConicRep::validate() const {
    if (!labels.empty() && labels.size() != blocks.size())
        throw std::invalid_argument("conic rep: label count mismatch");
    for (const auto& b : blocks) {
        if (b.size != 1 && b.size != 2) throw std::invalid_argument("conic rep: block size must be 1 or 2");
        if (b.entries.size() != static_cast<size_t>(b.size * b.size))
            throw std::invalid_argument("conic rep: entry count mismatch");
        if (b.size == 2 && !(b.entries[1] == b.entries[2]))
            throw std::invalid_argument("conic rep: block not symmetric");
        for (const auto& e : b.entries)
            if (e.cx.size() != static_cast<size_t>(n_vars) || e.cy.size() != static_cast<size_t>(n_lifts))
                throw std::invalid_argument("conic rep: entry dimension mismatch");
    }
}

bool ConicRep::operator==(const ConicRep& o) const {
    return n_vars == o.n_vars && n_lifts == o.n_lifts && kind == o.kind && blocks == o.blocks &&
           labels == o.labels;
}

AffineForm affine_const(const Rational& c, int n_vars, int n_lifts) {
    AffineForm f;
    f.c0 = c;
    f.cx.assign(static_cast<size_t>(n_vars), Rational(0));
    f.cy.assign(static_cast<size_t>(n_lifts), Rational(0));
    return f;
}

Block block1(const AffineForm& e) { return Block{1, {e}}; }

Block block2(const AffineForm& e00, const AffineForm& e01, const AffineForm& e11) {
    return Block{2, {e00, e01, e01, e11}};
}

bool check_point(const ConicRep& r, const std::vector<Rational>& x,
                 const std::vector<Rational>& y) {
    if (x.size() != static_cast<size_t>(r.n_vars) || y.size() != static_cast<size_t>(r.n_lifts))
        throw std::invalid_argument("check_point: dimension mismatch");
    for (const auto& b : r.blocks) {
        if (b.size == 1) {
            if (b.entries[0].eval(x, y) < 0) return false;
        } else {
            const Rational m00 = b.entries[0].eval(x, y);
            const Rational m01 = b.entries[1].eval(x, y);
            const Rational m11 = b.entries[3].eval(x, y);
            if (!Mat2{m00, m01, m11}.psd()) return false;
        }
    }
    return true;
}

namespace {

// Re-embeds a form into a larger variable space: x slots [x_off, ...),
// y slots [y_off, ...).
AffineForm widen(const AffineForm& e, int n_vars, int x_off, int n_lifts, int y_off) {
    AffineForm out = affine_const(e.c0, n_vars, n_lifts);
    for (size_t i = 0; i < e.cx.size(); ++i) out.cx[static_cast<size_t>(x_off) + i] = e.cx[i];
    for (size_t j = 0; j < e.cy.size(); ++j) out.cy[static_cast<size_t>(y_off) + j] = e.cy[j];
    return out;
}

void append_widened(ConicRep& dst, const ConicRep& src, int x_off, int y_off,
                    const std::string& tag) {
    for (size_t k = 0; k < src.blocks.size(); ++k) {
        Block b = src.blocks[k];
        for (auto& e : b.entries) e = widen(e, dst.n_vars, x_off, dst.n_lifts, y_off);
        dst.blocks.push_back(std::move(b));
        dst.labels.push_back(tag + (src.labels.empty() ? "" : ":" + src.labels[k]));
    }
}

}  // namespace

ConicRep intersect(const ConicRep& r1, const ConicRep& r2) {
    if (r1.n_vars != r2.n_vars) throw std::invalid_argument("intersect: dimension mismatch");
    if (r1.kind != RepKind::Set || r2.kind != RepKind::Set)
        throw std::invalid_argument("intersect: both representations must have kind = set");
    ConicRep out;
    out.n_vars = r1.n_vars;
    out.n_lifts = r1.n_lifts + r2.n_lifts;
    append_widened(out, r1, 0, 0, "lhs");
    append_widened(out, r2, 0, r1.n_lifts, "rhs");
    return out;
}

ConicRep product(const ConicRep& r1, const ConicRep& r2) {
    if (r1.kind != RepKind::Set || r2.kind != RepKind::Set)
        throw std::invalid_argument("product: both representations must have kind = set");
    ConicRep out;
    out.n_vars = r1.n_vars + r2.n_vars;
    out.n_lifts = r1.n_lifts + r2.n_lifts;
    append_widened(out, r1, 0, 0, "lhs");
    append_widened(out, r2, r1.n_vars, r1.n_lifts, "rhs");
    return out;
}

ConicRep cone_hull(const ConicRep& r) {
    if (r.kind != RepKind::Set) throw std::invalid_argument("cone_hull: kind must be set");
    ConicRep out;
    out.kind = RepKind::Cone;
    out.n_vars = r.n_vars;
    out.n_lifts = r.n_lifts + 2;
    const int s_idx = r.n_lifts, t_idx = r.n_lifts + 1;
    for (size_t k = 0; k < r.blocks.size(); ++k) {
        Block b = r.blocks[k];
        for (auto& e : b.entries) {
            AffineForm h = widen(e, out.n_vars, 0, out.n_lifts, 0);
            h.cy[static_cast<size_t>(s_idx)] = h.c0;  // constant part rides on s
            h.c0 = 0;
            e = std::move(h);
        }
        out.blocks.push_back(std::move(b));
        out.labels.push_back("homog" + (r.labels.empty() ? "" : ":" + r.labels[k]));
    }
    for (int i = 0; i < r.n_vars; ++i) {
        AffineForm s = affine_const(Rational(0), out.n_vars, out.n_lifts);
        s.cy[static_cast<size_t>(s_idx)] = 1;
        AffineForm xi = affine_const(Rational(0), out.n_vars, out.n_lifts);
        xi.cx[static_cast<size_t>(i)] = 1;
        AffineForm t = affine_const(Rational(0), out.n_vars, out.n_lifts);
        t.cy[static_cast<size_t>(t_idx)] = 1;
        out.blocks.push_back(block2(s, xi, t));
        out.labels.push_back("bound:x" + std::to_string(i));
    }
    return out;
}

ConicRep union_hull(const ConicRep& r1, const ConicRep& r2) {
    if (r1.n_vars != r2.n_vars) throw std::invalid_argument("union_hull: dimension mismatch");
    if (r1.kind != RepKind::Set || r2.kind != RepKind::Set)
        throw std::invalid_argument("union_hull: both representations must have kind = set");

    // Pin an extra coordinate to 1, then homogenize.
    ConicRep one;
    one.n_vars = 1;
    {
        AffineForm up = affine_const(Rational(-1), 1, 0);
        up.cx[0] = 1;
        AffineForm down = affine_const(Rational(1), 1, 0);
        down.cx[0] = -1;
        one.blocks = {block1(up), block1(down)};
        one.labels = {"pin:ge", "pin:le"};
    }
    const ConicRep k_tilde = cone_hull(product(r1, one));
    const ConicRep l_tilde = cone_hull(product(r2, one));

    const int n = r1.n_vars;
    ConicRep out;
    out.n_vars = n;
    // Lifts: x' (n), lambda' (1), then the lifts of both homogenized cones.
    out.n_lifts = n + 1 + k_tilde.n_lifts + l_tilde.n_lifts;

    std::vector<AffineForm> x_out;
    for (int i = 0; i < n; ++i) {
        AffineForm xi = affine_const(Rational(0), out.n_vars, out.n_lifts);
        xi.cx[static_cast<size_t>(i)] = 1;
        x_out.push_back(std::move(xi));
    }
    auto lift = [&](int j) {
        AffineForm f = affine_const(Rational(0), out.n_vars, out.n_lifts);
        f.cy[static_cast<size_t>(j)] = 1;
        return f;
    };

    // K~ reads (x', lambda'); L~ reads (x - x', 1 - lambda').
    std::vector<AffineForm> k_x, l_x;
    for (int i = 0; i < n; ++i) k_x.push_back(lift(i));
    k_x.push_back(lift(n));
    for (int i = 0; i < n; ++i) {
        AffineForm d = x_out[static_cast<size_t>(i)];
        d.cy[static_cast<size_t>(i)] = -1;
        l_x.push_back(std::move(d));
    }
    AffineForm lam2 = affine_const(Rational(1), out.n_vars, out.n_lifts);
    lam2.cy[static_cast<size_t>(n)] = -1;
    l_x.push_back(std::move(lam2));

    std::vector<AffineForm> k_y, l_y;
    for (int j = 0; j < k_tilde.n_lifts; ++j) k_y.push_back(lift(n + 1 + j));
    for (int j = 0; j < l_tilde.n_lifts; ++j) l_y.push_back(lift(n + 1 + k_tilde.n_lifts + j));

    auto append_substituted = [&](const ConicRep& src, const std::vector<AffineForm>& xs,
                                  const std::vector<AffineForm>& ys, const std::string& tag) {
        for (size_t k = 0; k < src.blocks.size(); ++k) {
            Block b = src.blocks[k];
            for (auto& e : b.entries) e = e.substituted(xs, ys);
            out.blocks.push_back(std::move(b));
            out.labels.push_back(tag + (src.labels.empty() ? "" : ":" + src.labels[k]));
        }
    };
    append_substituted(k_tilde, k_x, k_y, "left");
    append_substituted(l_tilde, l_x, l_y, "right");
    return out;
}

std::array<Rational, 3> tangent_line(const UniPoly& f, const Rational& v) {
    const Rational slope = f.derivative().eval(v);
    return {Rational(-slope), Rational(1), Rational(v * slope - f.eval(v))};
}

UniPoly SupportConeRep::validity_poly(size_t i) const {
    const auto& t = decomp.terms.at(i);
    return UniPoly::monomial(t.mono_u + t.mono_v, Rational(1)) * t.p;
}

int SupportConeRep::identity_degree_bound() const {
    int d = std::max(f.degree(), 2);
    for (size_t i = 0; i < decomp.terms.size(); ++i)
        d = std::max(d, 2 + validity_poly(i).degree());
    return d;
}

namespace {

TensorDecomposition decompose_convex(const UniPoly& f) {
    const Rational f2 = differentiate(f, 2).eval(Rational(0));
    if (f2 > 0) return strict_decompose(f);
    if (f2 < 0) throw std::domain_error("build_support_rep: not convex at base point");
    // Flat tangent: requires no affine part, an even contact order and a
    // positive lowest coefficient; anything else is not convex at 0.
    if (f.coeff(0) != 0 || f.coeff(1) != 0)
        throw std::invalid_argument("build_support_rep: affine part must be zero for a flat base point");
    int m = -1;
    for (int k = 2; k <= f.degree(); ++k)
        if (f.coeff(k) != 0) {
            m = k;
            break;
        }
    if (m < 2 || f.coeff(m) < 0 || m % 2 != 0)
        throw std::domain_error("build_support_rep: not convex at base point");
    return flat_decompose(f);
}

}  // namespace

SupportConeRep build_support_rep(const UniPoly& f, const Rational& cap, const Rational& precision) {
    const TensorDecomposition decomp = decompose_convex(f);
    std::vector<UniPoly> factors;
    for (const auto& t : decomp.terms) {
        factors.push_back(t.p);
        factors.push_back(t.q);
    }
    return make_support_rep(f, certified_radius(factors, cap, precision), decomp);
}

SupportConeRep make_support_rep(const UniPoly& f, const Rational& a,
                                const TensorDecomposition& decomp) {
    SupportConeRep s;
    s.f = f;
    s.decomp = decomp;
    s.a = a;

    const int n_terms = static_cast<int>(s.decomp.terms.size());
    ConicRep rep;
    rep.n_vars = 3;               // functional coefficients (A, B, C)
    rep.n_lifts = 1 + 3 * n_terms;  // c, then (a_i, b_i, c_i) per term
    const int c_idx = 0;
    auto g_idx = [](int i) { return 1 + 3 * i; };

    for (int i = 0; i < n_terms; ++i) {
        AffineForm e00 = affine_const(Rational(0), rep.n_vars, rep.n_lifts);
        e00.cy[static_cast<size_t>(g_idx(i))] = 1;
        AffineForm e01 = affine_const(Rational(0), rep.n_vars, rep.n_lifts);
        e01.cy[static_cast<size_t>(g_idx(i) + 1)] = 1;
        AffineForm e11 = affine_const(Rational(0), rep.n_vars, rep.n_lifts);
        e11.cy[static_cast<size_t>(g_idx(i) + 2)] = 1;
        rep.blocks.push_back(block2(e00, e01, e11));
        rep.labels.push_back("psd:G" + std::to_string(i));
    }
    {
        AffineForm c = affine_const(Rational(0), rep.n_vars, rep.n_lifts);
        c.cy[static_cast<size_t>(c_idx)] = 1;
        rep.blocks.push_back(block1(c));
        rep.labels.push_back("nonneg:c");
    }

    // Coefficient matching per t-degree:
    //   [k==1] A + f_k B + [k==0] C - c (a^2 [k==0] - [k==2])
    //   - sum_i (P_i[k-2] a_i + 2 P_i[k-1] b_i + P_i[k] c_i) = 0,
    // encoded as a pair of opposite 1x1 blocks.
    const int degree_bound = s.identity_degree_bound();
    for (int k = 0; k <= degree_bound; ++k) {
        AffineForm e = affine_const(Rational(0), rep.n_vars, rep.n_lifts);
        if (k == 1) e.cx[0] = 1;
        e.cx[1] = f.coeff(k);
        if (k == 0) e.cx[2] = 1;
        if (k == 0) e.cy[static_cast<size_t>(c_idx)] -= s.a * s.a;
        if (k == 2) e.cy[static_cast<size_t>(c_idx)] += 1;
        for (int i = 0; i < n_terms; ++i) {
            const UniPoly P = s.validity_poly(static_cast<size_t>(i));
            e.cy[static_cast<size_t>(g_idx(i))] -= P.coeff(k - 2);
            e.cy[static_cast<size_t>(g_idx(i) + 1)] -= Rational(2) * P.coeff(k - 1);
            e.cy[static_cast<size_t>(g_idx(i) + 2)] -= P.coeff(k);
        }
        AffineForm neg = affine_const(Rational(0), rep.n_vars, rep.n_lifts);
        neg.c0 = Rational(-e.c0);
        for (size_t j = 0; j < e.cx.size(); ++j) neg.cx[j] = Rational(-e.cx[j]);
        for (size_t j = 0; j < e.cy.size(); ++j) neg.cy[j] = Rational(-e.cy[j]);
        rep.blocks.push_back(block1(e));
        rep.labels.push_back("match:t^" + std::to_string(k) + ":ge");
        rep.blocks.push_back(block1(neg));
        rep.labels.push_back("match:t^" + std::to_string(k) + ":le");
    }
    s.rep = std::move(rep);
    return s;
}

SupportCertificate tangent_certificate(const SupportConeRep& s, const Rational& v) {
    if (s.decomp.flat_order != 0)
        throw std::domain_error("tangent_certificate: strict case only");
    SupportCertificate cert;
    cert.c = 0;
    for (const auto& t : s.decomp.terms) {
        const Rational qv = t.q.eval(v);
        cert.G.push_back(Mat2{qv, Rational(-qv * v), Rational(qv * v * v)});
    }
    return cert;
}

SupportCertificate vertical_certificate(const SupportConeRep& s, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("vertical_certificate: sign must be +-1");
    if (s.decomp.flat_order != 0)
        throw std::domain_error("vertical_certificate: strict case only");
    SupportCertificate cert;
    cert.c = Rational(1) / Rational(2 * s.a);
    size_t host = s.decomp.terms.size();
    for (size_t i = 0; i < s.decomp.terms.size(); ++i) {
        if (s.decomp.terms[i].p.degree() == 0) {
            host = i;
            break;
        }
    }
    if (host == s.decomp.terms.size())
        throw std::domain_error("vertical_certificate: no constant-p term available");
    // a + sign*t = c (a^2 - t^2) + (a + sign*t)^2 / (2a); spread the quadratic
    // over the constant-p term.
    const Rational p0 = s.decomp.terms[host].p.leading_coeff();
    const Rational scale = Rational(1) / Rational(2 * s.a * p0);
    for (size_t i = 0; i < s.decomp.terms.size(); ++i) {
        if (i != host) {
            cert.G.push_back(Mat2{Rational(0), Rational(0), Rational(0)});
            continue;
        }
        const Rational sa = Rational(sign) * s.a;
        cert.G.push_back(Mat2{scale, Rational(scale * sa), Rational(scale * sa * sa)});
    }
    return cert;
}

ConicRep moment_set_rep(const SupportConeRep& s) {
    const int degree_bound = s.identity_degree_bound();
    ConicRep rep;
    rep.n_vars = 2;                   // the plane point (x, y)
    rep.n_lifts = degree_bound + 1;   // pseudo-moments m_0 .. m_D

    // <m, p> as an affine form in the lifts.
    auto pairing = [&](const UniPoly& p) {
        AffineForm e = affine_const(Rational(0), rep.n_vars, rep.n_lifts);
        for (int k = 0; k <= p.degree(); ++k) e.cy[static_cast<size_t>(k)] = p.coeff(k);
        return e;
    };
    const UniPoly t = UniPoly::monomial(1, Rational(1));

    for (size_t i = 0; i < s.decomp.terms.size(); ++i) {
        const UniPoly P = s.validity_poly(i);
        rep.blocks.push_back(block2(pairing(P), pairing(t * P), pairing(t * t * P)));
        rep.labels.push_back("moment:G" + std::to_string(i));
    }
    {
        UniPoly radius = -UniPoly::monomial(2, Rational(1));
        radius = radius + UniPoly::constant(Rational(s.a * s.a));
        rep.blocks.push_back(block1(pairing(radius)));
        rep.labels.push_back("moment:radius");
    }

    auto pin = [&](AffineForm e, const std::string& label) {
        AffineForm neg = affine_const(Rational(-e.c0), rep.n_vars, rep.n_lifts);
        for (size_t j = 0; j < e.cx.size(); ++j) neg.cx[j] = Rational(-e.cx[j]);
        for (size_t j = 0; j < e.cy.size(); ++j) neg.cy[j] = Rational(-e.cy[j]);
        rep.blocks.push_back(block1(e));
        rep.labels.push_back(label + ":ge");
        rep.blocks.push_back(block1(std::move(neg)));
        rep.labels.push_back(label + ":le");
    };
    {
        AffineForm e = affine_const(Rational(-1), rep.n_vars, rep.n_lifts);
        e.cy[0] = 1;  // m_0 - 1 = 0
        pin(e, "pin:m0");
    }
    {
        AffineForm e = affine_const(Rational(0), rep.n_vars, rep.n_lifts);
        e.cy[1] = 1;
        e.cx[0] = -1;  // m_1 - x = 0
        pin(e, "pin:m1");
    }
    {
        AffineForm e = pairing(s.f);
        e.cx[1] = -1;  // <m, f> - y = 0
        pin(e, "pin:graph");
    }
    return rep;
}

std::vector<Rational> graph_moment_lift(const SupportConeRep& s, const Rational& t) {
    std::vector<Rational> m(static_cast<size_t>(s.identity_degree_bound()) + 1);
    Rational v(1);
    for (auto& mk : m) {
        mk = v;
        v *= t;
    }
    return m;
}

PsdFactorization make_factorization_forms(const std::vector<std::pair<UniPoly, UniPoly>>& terms,
                                          const Rational& a) {
    PsdFactorization fac;
    fac.a = a;
    fac.terms = terms;
    const UniPoly t = UniPoly::monomial(1, Rational(1));
    const UniPoly t2 = UniPoly::monomial(2, Rational(1));
    for (const auto& [p, q] : terms) {
        fac.A_form.push_back(Mat2Poly{p, t * p, t2 * p});
        fac.B_form.push_back(Mat2Poly{t2 * q, (-t) * q, q});
    }
    return fac;
}

PsdFactorization psd_factorization(const UniPoly& f, const TensorDecomposition& decomp,
                                   const Rational& a) {
    if (decomp.flat_order != 0)
        throw std::domain_error("psd_factorization: flat decompositions are unsupported");
    if (decomp.expand() != taylor_remainder(f))
        throw std::invalid_argument("psd_factorization: decomposition does not match f");
    std::vector<std::pair<UniPoly, UniPoly>> terms;
    for (const auto& t : decomp.terms) {
        if (!nonneg_on_interval(t.p, Rational(-a), a).accepted ||
            !nonneg_on_interval(t.q, Rational(-a), a).accepted)
            throw std::domain_error("psd_factorization: factor not certified nonnegative on [-a, a]");
        terms.emplace_back(t.p, t.q);
    }
    return make_factorization_forms(terms, a);
}

}  // namespace socrep
