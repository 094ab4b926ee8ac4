#pragma once

// End-to-end assembly: decomposition, certified radius, interval
// certificates, factorization and sampled tangent certificates bundled into
// one exactly re-checkable object.

#include "certcheck.hpp"

namespace socrep {

// Builds the full bundle for a convex epigraph piece. Strict-case bundles
// carry the PSD factorization and `tangent_samples` generator certificates at
// equally spaced tangency points in [-a, a]; flat-case bundles carry the
// decomposition and radius certificates only.
CertificateBundle build_bundle(const UniPoly& f, const Rational& cap, const Rational& precision,
                               int tangent_samples = 21);

// Like build_bundle, but a polynomial rejected as non-convex whose leading
// coefficient is negative is retried as -f (its hypograph is the mirrored
// epigraph); the bundle records the reflection.
CertificateBundle build_bundle_oriented(const UniPoly& f, const Rational& cap,
                                        const Rational& precision, int tangent_samples = 21);

}  // namespace socrep
