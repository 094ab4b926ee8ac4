#include "pipeline.hpp"

namespace socrep {

CertificateBundle build_bundle(const UniPoly& f, const Rational& cap, const Rational& precision,
                               int tangent_samples) {
    if (tangent_samples < 2) throw std::invalid_argument("build_bundle: need >= 2 tangent samples");
    const SupportConeRep s = build_support_rep(f, cap, precision);

    CertificateBundle b;
    b.f = f;
    b.a = s.a;
    b.decomp = s.decomp;

    const Rational lo(-b.a);
    for (const auto& t : b.decomp.terms) {
        b.radius_certs.push_back(*nonneg_on_interval(t.p, lo, b.a).cert);
        b.radius_certs.push_back(*nonneg_on_interval(t.q, lo, b.a).cert);
    }

    if (b.decomp.flat_order == 0) {
        b.factorization = psd_factorization(f, b.decomp, b.a);
        for (int k = 0; k < tangent_samples; ++k) {
            const Rational v(lo + frac(2 * k, tangent_samples - 1) * b.a);
            const SupportCertificate cert = tangent_certificate(s, v);
            b.generator_certs.push_back({v, cert.c, cert.G});
        }
    }
    return b;
}

CertificateBundle build_bundle_oriented(const UniPoly& f, const Rational& cap,
                                        const Rational& precision, int tangent_samples) {
    try {
        return build_bundle(f, cap, precision, tangent_samples);
    } catch (const std::domain_error&) {
        if (f.leading_coeff() >= 0) throw;
        CertificateBundle b = build_bundle(-f, cap, precision, tangent_samples);
        b.orientation = Orientation::HypographReflected;
        return b;
    }
}

}  // namespace socrep
