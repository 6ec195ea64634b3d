#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kerrho/binomial.hpp"
#include "kerrho/generators.hpp"
#include "kerrho/restriction.hpp"
#include "kerrho/verify.hpp"
#include "output.hpp"

namespace {

using namespace kerrho;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalidInput = 2;
constexpr int kIoError = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path + " for writing");
    file << text;
    if (!file) throw IoError("failed writing " + path);
}

SemigroupContext context_or_throw(long n) {
    if (n < 3) throw InvalidArgument("n must be at least 3, got " + std::to_string(n));
    return build_context(n);
}

int cmd_gens(long n, const std::string& format, const std::string& out, bool with_leading) {
    SemigroupContext ctx = context_or_throw(n);
    GeneratorSet gs = build_all(ctx);
    if (format == "json")
        emit(cli::generators_to_json(gs).dump(2) + "\n", out);
    else if (format == "cas-script")
        emit(cli::cas_script(ctx, gs), out);
    else
        emit(cli::generators_text(gs, with_leading), out);
    return kOk;
}

long bound_from_factor(const SemigroupContext& ctx, const std::string& factor) {
    Rational f;
    if (f.set_str(factor, 10) != 0) throw InvalidArgument("order-bound-factor must be a rational p or p/q");
    f.canonicalize();
    if (f <= 0) throw InvalidArgument("order-bound-factor must be positive");
    Rational scaled = f * Rational(ctx.la);
    Integer ceil_value;
    mpz_cdiv_q(ceil_value.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return ceil_value.get_si() - 1;
}

int cmd_verify(long n, const std::string& factor, const std::string& format, long brute_max_n) {
    SemigroupContext ctx = context_or_throw(n);
    ReportOptions options;
    options.order_bound = bound_from_factor(ctx, factor);
    options.brute_search_max_n = brute_max_n;
    VerificationReport report = full_report(ctx, options);
    if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : report.checks)
            checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
        nlohmann::json doc{{"n", report.n}, {"checks", checks}, {"notes", report.notes}, {"overall", report.overall}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n=" << report.n << "\n";
        for (const CheckResult& c : report.checks)
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
        std::cout << "overall: " << (report.overall ? "pass" : "fail") << "\n";
    }
    return report.overall ? kOk : kFailure;
}

std::string exponent_string(const Exponent& e) {
    return "(" + std::to_string(e.x) + "," + std::to_string(e.y) + "," + std::to_string(e.z) + ")";
}

int cmd_inspect(long n, long r, const std::string& format) {
    SemigroupContext ctx = context_or_throw(n);
    if (r < 0) throw InvalidArgument("r must be non-negative");
    ElementProfile p = profile(ctx, r);
    if (!p.member) {
        if (format == "json")
            std::cout << nlohmann::json{{"n", n}, {"r", r}, {"member", false}}.dump(2) << "\n";
        else
            std::cout << "r=" << r << " is not in S\n";
        return kOk;
    }
    std::vector<Exponent> facts = factorizations(ctx, r);
    std::vector<Exponent> basis = wr_basis(ctx, r);
    GoodSet good = good_set(ctx, r);
    RestrictionMatrix rm = restriction_matrix(ctx, r, p.h_set);
    long dim = kernel_dim(ctx, r, good.elements);
    std::vector<Poly> kernel = good_kernel_basis(ctx, r);

    if (format == "json") {
        nlohmann::json doc{{"n", n},
                           {"r", r},
                           {"member", true},
                           {"ell", p.ell},
                           {"eps", p.eps},
                           {"phi", {p.phi.x, p.phi.y, p.phi.z}},
                           {"kappa", p.kappa},
                           {"iota", p.iota},
                           {"c", p.c},
                           {"delta", p.delta},
                           {"I", p.i_set.values()},
                           {"H", p.h_set.values()},
                           {"good_set", good.elements.values()},
                           {"kernel_dim", dim}};
        nlohmann::json fj = nlohmann::json::array(), bj = nlohmann::json::array(), mj = nlohmann::json::array(),
                       kj = nlohmann::json::array();
        for (const Exponent& e : facts) fj.push_back({e.x, e.y, e.z});
        for (const Exponent& e : basis) bj.push_back({e.x, e.y, e.z});
        for (std::size_t i = 0; i < rm.matrix.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < rm.matrix.cols(); ++j) row.push_back(rational_to_string(rm.matrix(i, j)));
            mj.push_back(row);
        }
        for (const Poly& k : kernel) kj.push_back(cli::poly_to_json(k));
        doc["factorizations"] = fj;
        doc["wr_basis"] = bj;
        doc["rotated_matrix"] = mj;
        doc["kernel_basis"] = kj;
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }
    std::cout << "r=" << r << " in S\n";
    std::cout << "ell=" << p.ell << " eps=" << p.eps << " phi=" << exponent_string(p.phi) << " kappa=" << p.kappa
              << " iota=" << p.iota << " c=" << p.c << " delta=" << p.delta << "\n";
    std::cout << "I=" << p.i_set.to_string() << " H=" << p.h_set.to_string() << "\n";
    std::cout << "factorizations:";
    for (const Exponent& e : facts) std::cout << " " << exponent_string(e);
    std::cout << "\nW_r basis:";
    for (const Exponent& e : basis) std::cout << " " << monomial_to_string(e);
    std::cout << "\nrotated matrix on H (" << rm.matrix.rows() << "x" << rm.matrix.cols() << "):\n"
              << rm.matrix.to_string();
    std::cout << "G=" << good.elements.to_string() << "\n";
    std::cout << "kernel dimension " << dim << "\n";
    for (std::size_t i = 0; i < kernel.size(); ++i) std::cout << "kernel[" << i << "] = " << kernel[i].to_string() << "\n";
    return kOk;
}

int cmd_export(long n, const std::string& out) {
    SemigroupContext ctx = context_or_throw(n);
    emit(cli::cas_script(ctx, build_all(ctx)), out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal generators of the kernel of x -> t^a(1+t^q), y -> t^(a+1), z -> t^(a+2)"};
    app.require_subcommand(1);

    long n = 0, r = 0, brute_max_n = 8;
    std::string format = "text", out, factor = "1";
    bool with_leading = false;

    auto* gens = app.add_subcommand("gens", "print the generators f_1..f_n");
    gens->add_option("--n", n, "number of generators")->required();
    gens->add_option("--format", format, "text, json or cas-script")
        ->check(CLI::IsMember({"text", "json", "cas-script"}));
    gens->add_option("--out", out, "output file (default stdout)");
    gens->add_flag("--with-leading", with_leading, "also print g_k and sigma-orders");

    auto* verify = app.add_subcommand("verify", "run every verification check");
    verify->add_option("--n", n, "number of generators")->required();
    verify->add_option("--order-bound-factor", factor, "brute-search bound is ceil(factor*la)-1");
    verify->add_option("--brute-max-n", brute_max_n, "largest n for the brute-force search");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* inspect = app.add_subcommand("inspect", "show the data attached to one semigroup element");
    inspect->add_option("--n", n, "number of generators")->required();
    inspect->add_option("--r", r, "semigroup element")->required();
    inspect->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* exporter = app.add_subcommand("export", "write a CAS cross-check script");
    exporter->add_option("--n", n, "number of generators")->required();
    exporter->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*gens) return cmd_gens(n, format, out, with_leading);
        if (*verify) return cmd_verify(n, factor, format, brute_max_n);
        if (*inspect) return cmd_inspect(n, r, format);
        if (*exporter) return cmd_export(n, out);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
