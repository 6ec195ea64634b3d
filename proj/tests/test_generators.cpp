#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <thread>

#include "kerrho/binomial.hpp"
#include "kerrho/generators.hpp"
#include "kerrho/linalg.hpp"
#include "kerrho/restriction.hpp"
#include "oracles.hpp"

using namespace kerrho;

namespace {

void check_golden(const oracles::Golden& golden) {
    SemigroupContext ctx = build_context(golden.n);
    GeneratorSet gs = build_all(ctx);
    REQUIRE(gs.generators.size() == golden.f.size());
    for (std::size_t k = 0; k < golden.f.size(); ++k) {
        CAPTURE(golden.n);
        CAPTURE(k + 1);
        CHECK(gs.generators[k].k == static_cast<long>(k) + 1);
        CHECK(gs.generators[k].f == Poly::parse(golden.f[k]));
        CHECK(gs.generators[k].g == Poly::parse(golden.g[k]));
        CHECK(gs.generators[k].sigma_order == golden.sigma_orders[k]);
    }
}

RationalVector as_rationals(const std::vector<long>& v) {
    RationalVector out;
    for (long x : v) out.push_back(x);
    return out;
}

}  // namespace

TEST_CASE("small-n tables") {
    check_golden(oracles::kN3);
    check_golden(oracles::kN4);
    check_golden(oracles::kN5);
    CHECK(build_small(build_context(4)).generators[3].f == Poly::parse("x^4 - z^3 - 4*x^2*y*z + 2*y^2*z^2 - x*y^2*z^2 + y*z^4"));
    CHECK_THROWS_AS(build_small(build_context(6)), std::out_of_range);
}

TEST_CASE("n=6 generators") { check_golden(oracles::kN6); }

TEST_CASE("n=6, k=1 tail trace") {
    TailTrace t = build_tail_trace(build_context(6), 1);
    REQUIRE(t.pieces.size() == 4);
    CHECK(t.pieces[0].lambdas == as_rationals(oracles::kN6Lambda1));
    CHECK(t.pieces[1].lambdas == as_rationals(oracles::kN6Lambda2));
    CHECK(t.pieces[2].lambdas == as_rationals(oracles::kN6Lambda3));
    CHECK(t.pieces[3].lambdas == as_rationals(oracles::kN6Lambda4));
    for (std::size_t i = 0; i < 4; ++i) CHECK(t.pieces[i].s == oracles::kN6TailSigmas[i]);
}

TEST_CASE("build_leading examples") {
    CHECK(build_leading(build_context(6), 3) == Poly::parse("x^3*z^2 - 3*x^2*y^2*z + 2*x*y^4"));
    CHECK(build_leading(build_context(7), 5) == Poly::parse("x^3*z^3 - 3*x^2*y^2*z^2 + 3*x*y^4*z - y^6"));
    CHECK(build_leading(build_context(6), 4) == Poly::parse("x*y^3*z - y^5"));
    CHECK_THROWS_AS(build_leading(build_context(6), 7), std::out_of_range);
    CHECK_THROWS_AS(build_leading(build_context(6), 0), std::out_of_range);
    CHECK_THROWS_AS(build_leading(build_context(5), 1), std::out_of_range);
}

TEST_CASE("build_tail examples") {
    CHECK(build_tail(build_context(6), 1) ==
          Poly::parse("-3*x*y*z^3 + 2*y^3*z^2 - 3*x^4*y^2 + 12*x^2*y*z^3 - 6*x*y^3*z^2 + 5*y^5*z + 3*y^7"));
    for (long n : {7, 9, 11, 21}) {
        SemigroupContext ctx = build_context(n);
        CHECK(build_tail(ctx, n - 2) == Poly::monomial({1, n - 1, 0}, -1) + Poly::monomial({0, 1, n - 1}));
    }
    for (long n : {6, 8, 10, 20}) {
        SemigroupContext ctx = build_context(n);
        CHECK(build_tail(ctx, n - 2) == Poly::monomial({0, 0, n - 1}, -1));
        CHECK(build_all(ctx).generators[n - 3].f ==
              Poly::monomial({1, n - 3, 1}) - Poly::monomial({0, n - 1, 0}) - Poly::monomial({0, 0, n - 1}));
    }
}

TEST_CASE("window_case and slots") {
    SemigroupContext six = build_context(6);
    CHECK(window_case(six, 1).kind == CaseKind::NegI);
    CHECK(window_case(six, 2).kind == CaseKind::NegIPlus1);
    CHECK(window_case(six, 3).kind == CaseKind::OneNeg1);
    CHECK(window_case(six, 4).kind == CaseKind::OneZero);
    CHECK(window_case(six, 5).kind == CaseKind::OneOne);
    CHECK(window_case(six, 6).kind == CaseKind::ThreeTwo);
    auto slots = generator_slots(six);
    REQUIRE(slots.size() == 6);
    CHECK(slots[3].r == 80);
    CHECK(slots[4].r == 80);
    CHECK(slots[4].variant == 1);
    CHECK(slots[5].r == 81);
    CHECK(slots[5].kind == CaseKind::OneOne);
    SemigroupContext seven = build_context(7);
    CHECK(window_case(seven, 5).kind == CaseKind::ZeroZero);
    CHECK(window_case(seven, 6).kind == CaseKind::TwoOne);
    CHECK(window_case(seven, 7).kind == CaseKind::TwoTwo);
}

TEST_CASE("leading forms span the good kernel at their window point") {
    for (long n = 6; n <= 24; ++n) {
        SemigroupContext ctx = build_context(n);
        std::map<long, std::vector<Poly>> by_r;
        for (const GeneratorSlot& slot : generator_slots(ctx)) by_r[slot.r].push_back(build_leading(ctx, slot.k));
        for (const auto& [r, forms] : by_r) {
            CAPTURE(n);
            CAPTURE(r);
            std::vector<Poly> basis = good_kernel_basis(ctx, r);
            REQUIRE(basis.size() == forms.size());
            IndexSet G = good_set(ctx, r).elements;
            ExactMatrix m = restriction_matrix(ctx, r, G).matrix;
            ExactMatrix coords(forms.size(), profile(ctx, r).delta);
            for (std::size_t i = 0; i < forms.size(); ++i) {
                RationalVector v = wr_coordinates(ctx, r, forms[i]);
                for (const Rational& x : m * v) CHECK(sgn(x) == 0);
                for (std::size_t j = 0; j < v.size(); ++j) coords(i, j) = v[j];
            }
            CHECK(rank(coords) == static_cast<long>(forms.size()));
            if (forms.size() == 1) CHECK(forms[0] == basis[0]);
        }
    }
}

TEST_CASE("tails agree with one global exact solve") {
    for (long n = 6; n <= 16; ++n) {
        SemigroupContext ctx = build_context(n);
        for (long k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            TailTrace trace = build_tail_trace(ctx, k);
            Poly base = build_leading(ctx, k);
            std::vector<Exponent> unknowns;
            RationalVector cascade;
            for (const TailPiece& piece : trace.pieces) {
                if (!piece.solved) {
                    for (std::size_t j = 0; j < piece.monomials.size(); ++j)
                        base.add_term(piece.monomials[j], piece.lambdas[j]);
                    continue;
                }
                for (std::size_t j = 0; j < piece.monomials.size(); ++j) {
                    unknowns.push_back(piece.monomials[j]);
                    cascade.push_back(piece.lambdas[j]);
                }
            }
            if (unknowns.empty()) {
                CHECK(rho_apply(ctx, base).is_zero());
                continue;
            }
            UniPoly rhs = rho_apply(ctx, base);
            std::map<long, std::size_t> rows;
            for (const auto& [e, c] : rhs.terms()) rows.emplace(e, 0);
            for (const Exponent& e : unknowns)
                for (long t = 0; t <= e.x; ++t) rows.emplace(ctx.weight(e) + t * ctx.q, 0);
            std::size_t idx = 0;
            for (auto& [e, i] : rows) i = idx++;
            ExactMatrix aug(rows.size(), unknowns.size() + 1);
            for (std::size_t j = 0; j < unknowns.size(); ++j)
                for (long t = 0; t <= unknowns[j].x; ++t)
                    aug(rows[ctx.weight(unknowns[j]) + t * ctx.q], j) = binom(unknowns[j].x, t);
            for (const auto& [e, c] : rhs.terms()) aug(rows[e], unknowns.size()) = c;
            auto kernel = kernel_basis_matrix(aug);
            REQUIRE(kernel.size() == 1);
            const Rational scale = kernel[0].back();
            REQUIRE(sgn(scale) != 0);
            for (std::size_t j = 0; j < unknowns.size(); ++j) CHECK(kernel[0][j] / scale == cascade[j]);
        }
    }
}

TEST_CASE("expected sigma layouts") {
    CHECK(expected_sigma_layout(build_context(3)) == std::vector<long>{8, 9, 10});
    CHECK(expected_sigma_layout(build_context(4)) == std::vector<long>{20, 21, 22, 24});
    CHECK(expected_sigma_layout(build_context(6)) == std::vector<long>{77, 78, 79, 80, 80, 81});
    CHECK(expected_sigma_layout(build_context(7)) == std::vector<long>{128, 129, 130, 131, 132, 133, 134});
}

TEST_CASE("n=7 pipeline") {
    SemigroupContext ctx = build_context(7);
    GeneratorSet gs = build_all(ctx);
    REQUIRE(gs.generators.size() == 7);
    for (long k = 1; k <= 7; ++k) {
        CHECK(rho_apply(ctx, gs.generators[k - 1].f).is_zero());
        CHECK(gs.generators[k - 1].sigma_order == 127 + k);
    }
}

TEST_CASE("per-k builds are independent across threads") {
    SemigroupContext ctx = build_context(14);
    GeneratorSet serial = build_all(ctx);
    std::vector<Poly> tails(14);
    std::vector<std::thread> workers;
    for (long k = 1; k <= 14; ++k) workers.emplace_back([&, k] { tails[k - 1] = build_tail(ctx, k); });
    for (auto& w : workers) w.join();
    for (long k = 1; k <= 14; ++k) CHECK(serial.generators[k - 1].f == serial.generators[k - 1].g + tails[k - 1]);
}
