#include "certcheck.hpp"

#include <sstream>

namespace socrep {

namespace {

std::string term_label(size_t i) { return "term " + std::to_string(i); }

}  // namespace

CheckReport check_decomposition_report(const UniPoly& f, const TensorDecomposition& d) {
    CheckReport rep;
    if (d.expand() != taylor_remainder(f))
        rep.fail("decomposition does not re-expand to the Taylor remainder of f");
    for (size_t i = 0; i < d.terms.size(); ++i) {
        const auto& t = d.terms[i];
        if (t.p.eval(Rational(0)) <= 0) rep.fail(term_label(i) + ": p(0) <= 0");
        if (t.q.eval(Rational(0)) <= 0) rep.fail(term_label(i) + ": q(0) <= 0");
    }
    return rep;
}

bool check_decomposition(const UniPoly& f, const TensorDecomposition& d) {
    return check_decomposition_report(f, d).ok;
}

CheckReport check_factorization_report(const UniPoly& f, const PsdFactorization& fac) {
    CheckReport rep;
    BiPoly sum;
    for (const auto& [pu, qv] : fac.terms) sum = sum + BiPoly::from_u(pu) * BiPoly::from_v(qv);
    if (BiPoly::delta().pow(2) * sum != tangent_tensor(f))
        rep.fail("factorization identity does not match the tangent tensor");
    const Rational lo(-fac.a);
    for (size_t i = 0; i < fac.terms.size(); ++i) {
        for (int side = 0; side < 2; ++side) {
            const UniPoly& poly = side == 0 ? fac.terms[i].first : fac.terms[i].second;
            const NonnegResult res = nonneg_on_interval(poly, lo, fac.a);
            if (!res.accepted) {
                std::ostringstream msg;
                msg << term_label(i) << ": " << (side == 0 ? "p" : "q") << " negative at t = "
                    << rat_to_string(*res.witness) << " (value "
                    << rat_to_string(poly.eval(*res.witness)) << ")";
                rep.fail(msg.str());
            }
        }
    }
    return rep;
}

bool check_factorization(const UniPoly& f, const PsdFactorization& fac) {
    return check_factorization_report(f, fac).ok;
}

bool check_support_certificate(const SupportConeRep& s, const std::array<Rational, 3>& F,
                               const Rational& c, const std::vector<Mat2>& G) {
    if (G.size() != s.decomp.terms.size())
        throw std::invalid_argument("check_support_certificate: certificate length mismatch");
    std::vector<Rational> x{F[0], F[1], F[2]};
    std::vector<Rational> y;
    y.reserve(1 + 3 * G.size());
    y.push_back(c);
    for (const auto& g : G) {
        y.push_back(g.m00);
        y.push_back(g.m01);
        y.push_back(g.m11);
    }
    return check_point(s.rep, x, y);
}

std::vector<std::string> sample_soundness(const SupportConeRep& s, int grid) {
    if (grid < 2) throw std::invalid_argument("sample_soundness: grid must be >= 2");
    std::vector<std::string> violations;
    const Rational a = s.a;
    auto sample = [&](int k) { return Rational(-a + frac(2 * k, grid - 1) * a); };

    for (int jv = 0; jv < grid; ++jv) {
        const Rational v = sample(jv);
        const auto tau = tangent_line(s.f, v);
        for (int jt = 0; jt < grid; ++jt) {
            const Rational t = sample(jt);
            const Rational lhs(tau[0] * t + tau[1] * s.f.eval(t) + tau[2]);
            Rational sum(0);
            for (const auto& term : s.decomp.terms) {
                sum += rat_pow(t, static_cast<unsigned long>(term.mono_u)) * term.p.eval(t) *
                       rat_pow(v, static_cast<unsigned long>(term.mono_v)) * term.q.eval(v);
            }
            const Rational rhs(Rational((t - v) * (t - v)) * sum);
            if (lhs != rhs || lhs < 0) {
                std::ostringstream msg;
                msg << "v=" << rat_to_string(v) << ", t=" << rat_to_string(t) << ": ";
                if (lhs != rhs)
                    msg << "identity mismatch (tau=" << rat_to_string(lhs)
                        << ", expansion=" << rat_to_string(rhs) << ")";
                else
                    msg << "negative tangent value " << rat_to_string(lhs);
                violations.push_back(msg.str());
            }
        }
    }
    return violations;
}

SupportConeRep support_rep_for_bundle(const CertificateBundle& b) {
    return make_support_rep(b.f, b.a, b.decomp);
}

namespace {

// The stored squarefree part may differ from the recomputed one by a positive
// scalar only.
bool positively_proportional(const UniPoly& stored, const UniPoly& computed) {
    if (stored.is_zero() || computed.is_zero()) return stored.is_zero() && computed.is_zero();
    if (stored.degree() != computed.degree()) return false;
    const Rational lambda(stored.leading_coeff() / computed.leading_coeff());
    return lambda > 0 && stored == computed.scaled(lambda);
}

void validate_interval_cert(CheckReport& rep, const IntervalCert& cert, const UniPoly& poly,
                            const Rational& lo, const Rational& hi, const std::string& what) {
    if (cert.poly != poly) {
        rep.fail(what + ": certificate is for a different polynomial");
        return;
    }
    if (cert.lo != lo || cert.hi != hi) {
        rep.fail(what + ": certificate covers the wrong interval");
        return;
    }
    const NonnegResult res = nonneg_on_interval(poly, lo, hi);
    if (!res.accepted) {
        rep.fail(what + ": polynomial is negative at t = " + rat_to_string(*res.witness));
        return;
    }
    if (cert.endpoint_values != res.cert->endpoint_values)
        rep.fail(what + ": stored endpoint values are wrong");
    if (cert.root_count_interior != res.cert->root_count_interior)
        rep.fail(what + ": stored interior root count is wrong");
    if (!positively_proportional(cert.squarefree_part, res.cert->squarefree_part))
        rep.fail(what + ": stored squarefree part is wrong");
}

}  // namespace

CheckReport verify_bundle_report(const CertificateBundle& b) {
    CheckReport rep = check_decomposition_report(b.f, b.decomp);
    if (b.a <= 0) rep.fail("radius must be positive");

    if (b.radius_certs.size() != 2 * b.decomp.terms.size()) {
        rep.fail("radius certificate count does not match the decomposition");
    } else {
        const Rational lo(-b.a);
        for (size_t i = 0; i < b.decomp.terms.size(); ++i) {
            validate_interval_cert(rep, b.radius_certs[2 * i], b.decomp.terms[i].p, lo, b.a,
                                   "radius cert for p of " + term_label(i));
            validate_interval_cert(rep, b.radius_certs[2 * i + 1], b.decomp.terms[i].q, lo, b.a,
                                   "radius cert for q of " + term_label(i));
        }
    }

    if (b.factorization) {
        if (b.factorization->a != b.a) rep.fail("factorization radius differs from bundle radius");
        const CheckReport fr = check_factorization_report(b.f, *b.factorization);
        if (!fr.ok)
            for (const auto& msg : fr.failures) rep.fail("factorization: " + msg);
    }

    if (!b.generator_certs.empty()) {
        const SupportConeRep s = support_rep_for_bundle(b);
        for (const auto& gc : b.generator_certs) {
            if (gc.v < -b.a || gc.v > b.a) {
                rep.fail("generator certificate at v = " + rat_to_string(gc.v) +
                         " lies outside [-a, a]");
                continue;
            }
            bool ok = false;
            try {
                ok = check_support_certificate(s, tangent_line(b.f, gc.v), gc.c, gc.G);
            } catch (const std::invalid_argument&) {
                ok = false;
            }
            if (!ok) rep.fail("generator certificate at v = " + rat_to_string(gc.v) + " rejected");
        }
    }
    return rep;
}

bool verify_bundle(const CertificateBundle& b) { return verify_bundle_report(b).ok; }

}  // namespace socrep
