// Command-line driver. Everything goes through the public C API; payloads are
// the documented JSON file formats. Exit codes: 0 success (bundle verified /
// condition holds), 1 a check failed or the condition was refuted, 2
// malformed input or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "socrep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct StringDeleter {
    void operator()(char* s) const { socrep_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct BundleDeleter {
    void operator()(socrep_bundle* b) const { socrep_bundle_free(b); }
};
using OwnedBundle = std::unique_ptr<socrep_bundle, BundleDeleter>;

class CliError : public std::runtime_error {
public:
    CliError(std::string msg, int code) : std::runtime_error(std::move(msg)), code(code) {}
    int code;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot open " + path, kExitBadInput);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot write " + path, kExitBadInput);
    out << content;
    if (!out) throw CliError("cannot write " + path, kExitBadInput);
}

[[noreturn]] void raise_status(socrep_status status) {
    const std::string msg = socrep_last_error();
    switch (status) {
        case SOCREP_ERROR_VERIFY:
            throw CliError(msg, kExitCheckFailed);
        default:
            throw CliError(msg, kExitBadInput);
    }
}

void expect_ok(socrep_status status) {
    if (status != SOCREP_OK) raise_status(status);
}

int run_repr(const std::string& poly_path, const std::string& cap, const std::string& precision,
             const std::string& out_path) {
    socrep_bundle* raw = nullptr;
    expect_ok(socrep_bundle_build(read_file(poly_path).c_str(), cap.c_str(), precision.c_str(), &raw));
    OwnedBundle bundle(raw);
    char* json = nullptr;
    expect_ok(socrep_bundle_to_json(bundle.get(), &json));
    OwnedString owned(json);
    write_file(out_path, owned.get());
    return kExitOk;
}

int run_factorize(const std::string& poly_path, const std::string& radius,
                  const std::string& decomp_path, const std::string& out_path) {
    char* json = nullptr;
    expect_ok(socrep_factorize(read_file(poly_path).c_str(), radius.c_str(),
                               read_file(decomp_path).c_str(), &json));
    OwnedString owned(json);
    write_file(out_path, owned.get());
    return kExitOk;
}

int run_verify(const std::string& bundle_path) {
    socrep_bundle* raw = nullptr;
    expect_ok(socrep_bundle_from_json(read_file(bundle_path).c_str(), &raw));
    OwnedBundle bundle(raw);
    int ok = 0;
    char* report = nullptr;
    expect_ok(socrep_bundle_verify(bundle.get(), &ok, &report));
    OwnedString owned(report);
    std::cout << owned.get();
    return ok ? kExitOk : kExitCheckFailed;
}

int run_spoly(long m, long n) {
    char* json = nullptr;
    expect_ok(socrep_spoly_to_json(m, n, &json));
    OwnedString owned(json);
    std::cout << owned.get();
    return kExitOk;
}

int run_obstruct(const std::string& points_path, long d, long jobs) {
    int holds = 0;
    char* report = nullptr;
    expect_ok(socrep_obstruct(read_file(points_path).c_str(), d, jobs, &holds, &report));
    OwnedString owned(report);
    std::cout << owned.get();
    return holds ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "socrep: second-order cone representations of planar convex sets, with exact "
        "certificates"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string poly_path, out_path, decomp_path, bundle_path, points_path;
    std::string cap, precision, radius;
    long m = 0, n = 0, d = 0, jobs = 1;

    auto* repr = app.add_subcommand(
        "repr", "Build the certificate bundle for the epigraph of a convex polynomial");
    repr->add_option("--poly", poly_path, "polynomial JSON file")->required();
    repr->add_option("--cap", cap, "radius cap, rational like 2/5")->required();
    repr->add_option("--precision", precision, "radius search precision, rational")->required();
    repr->add_option("--out", out_path, "output bundle JSON file")->required();

    auto* factorize =
        app.add_subcommand("factorize", "Emit the rank-1 PSD factorization for a decomposition");
    factorize->add_option("--poly", poly_path, "polynomial JSON file")->required();
    factorize->add_option("--radius", radius, "validity radius, rational")->required();
    factorize->add_option("--decomp", decomp_path, "decomposition JSON file")->required();
    factorize->add_option("--out", out_path, "output factorization JSON file")->required();

    auto* verify = app.add_subcommand("verify", "Run every exact check on a bundle");
    verify->add_option("--bundle", bundle_path, "bundle JSON file")->required();

    auto* spoly = app.add_subcommand("spoly", "Print the S-polynomial S(m, n)");
    spoly->add_option("-m", m, "lower exponent, >= 1")->required();
    spoly->add_option("-n", n, "upper exponent, > m")->required();

    auto* obstruct =
        app.add_subcommand("obstruct", "Decide condition (*) for all d-subsets of a point set");
    obstruct->add_option("--points", points_path, "point set JSON file")->required();
    obstruct->add_option("-d", d, "subset size")->required();
    obstruct->add_option("--jobs", jobs, "parallel LP workers (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return kExitBadInput;
    }

    try {
        if (repr->parsed()) return run_repr(poly_path, cap, precision, out_path);
        if (factorize->parsed()) return run_factorize(poly_path, radius, decomp_path, out_path);
        if (verify->parsed()) return run_verify(bundle_path);
        if (spoly->parsed()) return run_spoly(m, n);
        if (obstruct->parsed()) return run_obstruct(points_path, d, jobs);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    }
    return kExitBadInput;
}
