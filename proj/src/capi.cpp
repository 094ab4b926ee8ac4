#include "socrep.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "jsonio.hpp"
#include "pipeline.hpp"

struct socrep_bundle {
    socrep::CertificateBundle value;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
socrep_status guarded(F&& body) noexcept {
    try {
        return body();
    } catch (const socrep::ParseError& e) {
        g_last_error = e.what();
        return SOCREP_ERROR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SOCREP_ERROR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return SOCREP_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SOCREP_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SOCREP_ERROR_INTERNAL;
    }
}

socrep::Rational parse_rational_arg(const char* text, const char* what) {
    if (!text) throw std::invalid_argument(std::string(what) + " must not be null");
    try {
        return socrep::rat_from_string(text);
    } catch (const std::invalid_argument& e) {
        throw socrep::ParseError(e.what());
    }
}

std::string require(const char* text, const char* what) {
    if (!text) throw std::invalid_argument(std::string(what) + " must not be null");
    return text;
}

}  // namespace

extern "C" {

const char* socrep_version(void) { return "1.0.0"; }

const char* socrep_last_error(void) { return g_last_error.c_str(); }

void socrep_string_free(char* s) { std::free(s); }

void socrep_bundle_free(socrep_bundle* b) { delete b; }

socrep_status socrep_bundle_build(const char* poly_json, const char* cap, const char* precision,
                                  socrep_bundle** out) {
    return guarded([&]() -> socrep_status {
        if (!out) throw std::invalid_argument("output handle must not be null");
        const socrep::UniPoly f =
            socrep::unipoly_from_json(socrep::parse_json_text(require(poly_json, "poly_json")));
        socrep::CertificateBundle bundle = socrep::build_bundle_oriented(
            f, parse_rational_arg(cap, "cap"), parse_rational_arg(precision, "precision"));
        *out = new socrep_bundle{std::move(bundle)};
        return SOCREP_OK;
    });
}

socrep_status socrep_bundle_from_json(const char* json, socrep_bundle** out) {
    return guarded([&]() -> socrep_status {
        if (!out) throw std::invalid_argument("output handle must not be null");
        socrep::CertificateBundle bundle =
            socrep::bundle_from_json(socrep::parse_json_text(require(json, "json")));
        *out = new socrep_bundle{std::move(bundle)};
        return SOCREP_OK;
    });
}

socrep_status socrep_bundle_to_json(const socrep_bundle* b, char** json_out) {
    return guarded([&]() -> socrep_status {
        if (!b || !json_out) throw std::invalid_argument("bundle and output must not be null");
        *json_out = dup_string(socrep::to_file_string(socrep::bundle_to_json(b->value)));
        return SOCREP_OK;
    });
}

socrep_status socrep_bundle_verify(const socrep_bundle* b, int* ok_out, char** report_json_out) {
    return guarded([&]() -> socrep_status {
        if (!b || !ok_out) throw std::invalid_argument("bundle and ok_out must not be null");
        const socrep::CheckReport report = socrep::verify_bundle_report(b->value);
        *ok_out = report.ok ? 1 : 0;
        if (report_json_out)
            *report_json_out = dup_string(socrep::to_file_string(socrep::check_report_to_json(report)));
        return SOCREP_OK;
    });
}

socrep_status socrep_spoly_to_json(long m, long n, char** json_out) {
    return guarded([&]() -> socrep_status {
        if (!json_out) throw std::invalid_argument("output must not be null");
        const socrep::SPoly s = socrep::s_polynomial(static_cast<int>(m), static_cast<int>(n));
        *json_out = dup_string(socrep::to_file_string(socrep::spoly_to_json(s)));
        return SOCREP_OK;
    });
}

socrep_status socrep_factorize(const char* poly_json, const char* radius, const char* decomp_json,
                               char** fac_json_out) {
    return guarded([&]() -> socrep_status {
        if (!fac_json_out) throw std::invalid_argument("output must not be null");
        const socrep::UniPoly f =
            socrep::unipoly_from_json(socrep::parse_json_text(require(poly_json, "poly_json")));
        const socrep::TensorDecomposition decomp = socrep::decomposition_from_json(
            socrep::parse_json_text(require(decomp_json, "decomp_json")));
        const socrep::Rational a = parse_rational_arg(radius, "radius");
        if (!socrep::check_decomposition(f, decomp)) {
            g_last_error = "decomposition fails exact checks for this polynomial";
            return SOCREP_ERROR_VERIFY;
        }
        socrep::PsdFactorization fac;
        try {
            fac = socrep::psd_factorization(f, decomp, a);
        } catch (const std::domain_error& e) {
            g_last_error = e.what();
            return SOCREP_ERROR_VERIFY;
        }
        *fac_json_out = dup_string(socrep::to_file_string(socrep::factorization_to_json(fac)));
        return SOCREP_OK;
    });
}

socrep_status socrep_obstruct(const char* points_json, long d, long jobs, int* holds_out,
                              char** report_json_out) {
    return guarded([&]() -> socrep_status {
        if (!holds_out) throw std::invalid_argument("holds_out must not be null");
        const socrep::PointSet S =
            socrep::point_set_from_json(socrep::parse_json_text(require(points_json, "points_json")));
        const socrep::ObstructionReport report =
            socrep::condition_star(S, static_cast<int>(d), static_cast<int>(jobs));
        *holds_out = report.holds ? 1 : 0;
        if (report_json_out)
            *report_json_out =
                dup_string(socrep::to_file_string(socrep::obstruction_report_to_json(report)));
        return SOCREP_OK;
    });
}

}  // extern "C"
