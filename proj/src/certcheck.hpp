#pragma once

// Exact verification of everything the pipeline emits. All checks compare
// canonical polynomial forms or decide 2x2 PSD-ness over Q; no check in this
// module carries a tolerance. sample_soundness is the one deliberate
// exception in style: it evaluates the identity pointwise as an independent
// kind of evidence.

#include <optional>
#include <string>
#include <vector>

#include "repforge.hpp"

namespace socrep {

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// Identity sum_i u^mu v^mv p_i(u) q_i(v) = taylor_remainder(f) plus
// positivity of every p_i(0), q_i(0).
bool check_decomposition(const UniPoly& f, const TensorDecomposition& d);
CheckReport check_decomposition_report(const UniPoly& f, const TensorDecomposition& d);

// Identity tangent_tensor(f) = sum_i p_i(u) q_i(v) (u-v)^2 plus certified
// nonnegativity of every factor on [-a, a].
bool check_factorization(const UniPoly& f, const PsdFactorization& fac);
CheckReport check_factorization_report(const UniPoly& f, const PsdFactorization& fac);

// Membership certificate for a functional F = (A, B, C): c >= 0, all G_i PSD,
// and A t + B f(t) + C = c (a^2 - t^2) + sum_i g_i(t) P_i(t) coefficient-wise.
bool check_support_certificate(const SupportConeRep& s, const std::array<Rational, 3>& F,
                               const Rational& c, const std::vector<Mat2>& G);

// For grid x grid sample pairs (v, t) in [-a, a]^2, checks exactly that
// tau_v(t, f(t)) equals (t-v)^2 sum_i Q_i(v) P_i(t) and that the value is
// nonnegative. Returns violation descriptions sorted by (v, t); empty on
// success.
std::vector<std::string> sample_soundness(const SupportConeRep& s, int grid);

enum class Orientation { Epigraph, HypographReflected };

struct GeneratorCert {
    Rational v;  // tangent base point
    Rational c;
    std::vector<Mat2> G;
};

// Everything needed to re-verify one representation end to end. The support
// cone representation itself is reconstructed deterministically from
// (f, a, decomp).
struct CertificateBundle {
    UniPoly f;
    Rational a;
    TensorDecomposition decomp;
    std::vector<IntervalCert> radius_certs;  // p_1, q_1, p_2, q_2, ...
    std::optional<PsdFactorization> factorization;
    std::vector<GeneratorCert> generator_certs;
    Orientation orientation = Orientation::Epigraph;
};

bool verify_bundle(const CertificateBundle& b);
CheckReport verify_bundle_report(const CertificateBundle& b);

// Rebuilds the block representation for a bundle's (f, a, decomp) without
// re-running the radius search.
SupportConeRep support_rep_for_bundle(const CertificateBundle& b);

}  // namespace socrep
