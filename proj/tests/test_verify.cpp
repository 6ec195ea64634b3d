#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kerrho/restriction.hpp"
#include "kerrho/verify.hpp"
#include "oracles.hpp"

using namespace kerrho;

namespace {

std::vector<Poly> leading_of(const SemigroupContext& ctx, const std::vector<Poly>& found) {
    std::vector<Poly> out;
    for (const Poly& p : found) out.push_back(sigma_split(ctx, p).leading);
    return out;
}

GeneratorSet golden_set(const oracles::Golden& golden) {
    GeneratorSet gs{golden.n, {}};
    for (std::size_t k = 0; k < golden.f.size(); ++k)
        gs.generators.push_back({static_cast<long>(k) + 1, Poly::parse(golden.f[k]), Poly::parse(golden.g[k]),
                                 golden.sigma_orders[k]});
    return gs;
}

}  // namespace

TEST_CASE("verify_kernel on the reference generators") {
    CHECK(verify_kernel(build_context(6), golden_set(oracles::kN6)).passed);
    CHECK(verify_kernel(build_context(3), golden_set(oracles::kN3)).passed);
}

TEST_CASE("verify_kernel reports a perturbed coefficient") {
    GeneratorSet gs = golden_set(oracles::kN6);
    gs.generators[0].f.add_term({1, 1, 3}, 1);
    CheckResult r = verify_kernel(build_context(6), gs);
    CHECK_FALSE(r.passed);
    CHECK(r.detail.find("f_1") != std::string::npos);
    CHECK(r.detail.find("t^") != std::string::npos);
}

TEST_CASE("verify_below_s0") {
    CheckResult three = verify_below_s0(build_context(3));
    CHECK(three.passed);
    CHECK(three.detail.find("5 elements") != std::string::npos);
    CHECK(verify_below_s0(build_context(6)).passed);
    SemigroupContext nine = build_context(9);
    CHECK(kernel_dim(nine, 218, good_set(nine, 218).elements) == 0);
}

TEST_CASE("mod-z monomial lists") {
    auto as_list = [](const std::vector<std::pair<long, long>>& v) { return v; };
    CHECK(as_list(expected_mod_z_monomials(3)) == oracles::kColengthN3);
    CHECK(as_list(expected_mod_z_monomials(4)) == oracles::kColengthN4);
    CHECK(as_list(expected_mod_z_monomials(5)) == oracles::kColengthN5);
    CHECK(as_list(expected_mod_z_monomials(6)) == oracles::kColengthN6);
}

TEST_CASE("staircase counts") {
    CHECK(staircase_count(oracles::kColengthN6) == 17);
    CHECK(staircase_count(oracles::kColengthN3) == 5);
    CHECK(staircase_count(oracles::kColengthN4) == 8);
    CHECK(staircase_count({{2, 0}, {0, 3}}) == 6);
    CHECK_THROWS(staircase_count({{1, 1}}));
}

TEST_CASE("verify_colength") {
    for (long n : {3, 4, 6}) {
        SemigroupContext ctx = build_context(n);
        CheckResult c = verify_colength(ctx, build_all(ctx));
        CHECK(c.passed);
        CHECK(c.detail.find("colength " + std::to_string(ctx.a + 2)) != std::string::npos);
    }
    SemigroupContext six = build_context(6);
    GeneratorSet broken = build_all(six);
    broken.generators[3].f = broken.generators[2].f;
    CHECK_FALSE(verify_colength(six, broken).passed);
}

TEST_CASE("brute_kernel_search examples") {
    SemigroupContext three = build_context(3);
    auto found = brute_kernel_search(three, 8, 30);
    REQUIRE(found.size() == 1);
    CHECK(same_leading_span(three, 8, leading_of(three, found), {Poly::parse("x*z - y^2")}));

    SemigroupContext six = build_context(6);
    CHECK(brute_kernel_search(six, 47, 120).empty());
    auto at77 = brute_kernel_search(six, 77, 135);
    REQUIRE(at77.size() == 1);
    CHECK(same_leading_span(six, 77, leading_of(six, at77), {Poly::parse("x^4*z - x^3*y^2")}));
    for (const Poly& p : at77) CHECK(rho_apply(six, p).is_zero());

    CHECK_THROWS_AS(brute_kernel_search(six, 77, 76), BoundTooSmall);
    CHECK_THROWS_AS(brute_kernel_search(six, 1, 100), NotInSemigroup);
}

TEST_CASE("brute search leading forms satisfy the good-set filter") {
    for (long n : {5, 6, 7}) {
        SemigroupContext ctx = build_context(n);
        for (long r = ctx.s0 - 3; r < ctx.s0 + n; ++r) {
            if (!in_semigroup(ctx, r)) continue;
            IndexSet G = good_set(ctx, r).elements;
            ExactMatrix m = restriction_matrix(ctx, r, G).matrix;
            for (const Poly& p : brute_kernel_search(ctx, r, ctx.la - 1))
                for (const Rational& v : m * wr_coordinates(ctx, r, sigma_split(ctx, p).leading)) CHECK(sgn(v) == 0);
        }
    }
}

TEST_CASE("raising the bound never shrinks the leading span") {
    SemigroupContext ctx = build_context(5);
    for (long r = ctx.s0; r < ctx.s0 + 5; ++r) {
        long previous = 0;
        for (long bound = r; bound <= r + 40; bound += 5) {
            auto leading = leading_of(ctx, brute_kernel_search(ctx, r, bound));
            long current = leading_rank(ctx, r, leading);
            CHECK(current >= previous);
            previous = current;
        }
    }
}

TEST_CASE("even n: the shared (1,0) point carries a two-dimensional span") {
    for (long n : {6, 8}) {
        SemigroupContext ctx = build_context(n);
        GeneratorSet gs = build_all(ctx);
        const long r = ctx.s0 + n - 3;
        long deepest = 0;
        for (const auto& g : {gs.generators[n - 3], gs.generators[n - 2]})
            for (const auto& [e, c] : g.f.terms()) deepest = std::max(deepest, ctx.weight(e));
        auto leading = leading_of(ctx, brute_kernel_search(ctx, r, deepest));
        CHECK(leading_rank(ctx, r, leading) == 2);
        CHECK(same_leading_span(ctx, r, leading, {gs.generators[n - 3].g, gs.generators[n - 2].g}));
    }
}

TEST_CASE("full_report") {
    VerificationReport six = full_report(build_context(6));
    CHECK(six.overall);
    bool saw_colength = false;
    for (const CheckResult& c : six.checks) {
        CHECK(c.passed);
        if (c.name == "colength") {
            saw_colength = true;
            CHECK(c.detail.find("colength 17") != std::string::npos);
        }
    }
    CHECK(saw_colength);

    VerificationReport big = full_report(build_context(25));
    CHECK(big.overall);
    CHECK_FALSE(big.notes.empty());

    ReportOptions wide;
    wide.order_bound = 39;
    CHECK(full_report(build_context(4), wide).overall);
}

TEST_CASE("full_report keeps the default bound la-1 and reports n=4 honestly") {
    VerificationReport four = full_report(build_context(4));
    CHECK_FALSE(four.overall);
    for (const CheckResult& c : four.checks) CHECK(c.passed == (c.name != "brute_search"));
}

TEST_CASE("overall is the conjunction of the checks") {
    for (long n = 3; n <= 9; ++n) {
        VerificationReport r = full_report(build_context(n));
        bool all = true;
        for (const CheckResult& c : r.checks) all = all && c.passed;
        CHECK(r.overall == all);
    }
}
