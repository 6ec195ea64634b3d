#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kerrho/linalg.hpp"
#include "kerrho/restriction.hpp"
#include "oracles.hpp"

using namespace kerrho;

namespace {

IndexSet random_subset(std::mt19937& rng, const IndexSet& from) {
    std::vector<long> out;
    for (long v : from)
        if (rng() % 2) out.push_back(v);
    if (out.empty()) out.push_back(from[rng() % from.size()]);
    return IndexSet(out);
}

}  // namespace

TEST_CASE("restriction_matrix examples") {
    SemigroupContext nine = build_context(9);
    RestrictionMatrix m = restriction_matrix(nine, 295, IndexSet::interval(0, 4));
    CHECK(m.matrix == ExactMatrix::from_rows(oracles::kN9R295Rotated));
    RestrictionMatrix zero_row = restriction_matrix(nine, 295, {0});
    CHECK(zero_row.matrix == ExactMatrix::from_rows({{1, 1, 1, 1}}));
    CHECK(restriction_matrix(build_context(6), 77, {0}).matrix == ExactMatrix::from_rows({{1, 1}}));
}

TEST_CASE("restriction_matrix errors") {
    SemigroupContext six = build_context(6);
    CHECK_THROWS_AS(restriction_matrix(six, 1, {0}), NotInSemigroup);
    CHECK_THROWS_AS(restriction_matrix(six, 77, {9}), IndexOutOfRange);
    CHECK_THROWS_AS(restriction_matrix(six, 77, {}), IndexOutOfRange);
}

TEST_CASE("restriction_matrix gives the coefficients of rho") {
    std::mt19937 rng(29);
    for (long n : {5, 6, 7, 9}) {
        SemigroupContext ctx = build_context(n);
        for (long r = 1; r < ctx.la; r += 3) {
            if (!in_semigroup(ctx, r)) continue;
            ElementProfile prof = profile(ctx, r);
            RationalVector coords(prof.delta);
            Poly g;
            auto basis = wr_basis(ctx, r);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                coords[j] = static_cast<long>(rng() % 9) - 4;
                g.add_term(basis[j], coords[j]);
            }
            RestrictionMatrix m = restriction_matrix(ctx, r, prof.h_set);
            RationalVector image = m.matrix * coords;
            UniPoly rho = rho_apply(ctx, g);
            for (std::size_t i = 0; i < prof.h_set.size(); ++i)
                CHECK(image[i] == rho.coeff(r + prof.h_set[i] * ctx.q));
        }
    }
}

TEST_CASE("good_set examples") {
    SemigroupContext six = build_context(6);
    CHECK(good_set(six, 77).elements == IndexSet{0});
    CHECK(good_set(six, 80).elements == IndexSet{0});
    CHECK(good_set(build_context(9), 292).elements == IndexSet{0, 3});
    CHECK_THROWS_AS(good_set(six, 1), NotInSemigroup);
}

TEST_CASE("kernel_dim examples") {
    SemigroupContext six = build_context(6);
    CHECK(kernel_dim(six, 77, good_set(six, 77).elements) == 1);
    CHECK(kernel_dim(six, 80, good_set(six, 80).elements) == 2);
    for (long r : {77L, 79L, 80L, 100L}) CHECK(kernel_dim(six, r, profile(six, r).h_set) == 0);
}

TEST_CASE("kernel_poly examples") {
    SemigroupContext six = build_context(6);
    CHECK(kernel_poly(six, 77, {0}) == Poly::parse("x^4*z - x^3*y^2"));
    CHECK(kernel_poly(six, 79, {0, 2}) == Poly::parse("x^3*z^2 - 3*x^2*y^2*z + 2*x*y^4"));
    SemigroupContext three = build_context(3);
    CHECK(kernel_poly(three, 3, {}) == Poly::parse("x"));
    CHECK_THROWS_AS(kernel_poly(six, 77, {0, 1}), WrongCardinality);
}

TEST_CASE("good_kernel_basis examples") {
    SemigroupContext six = build_context(6);
    auto b80 = good_kernel_basis(six, 80);
    REQUIRE(b80.size() == 2);
    CHECK(b80[0] == Poly::parse("x*y^3*z - y^5"));
    CHECK(b80[1] == Poly::parse("x^2*y*z^2 - 2*x*y^3*z + y^5"));
    auto b81 = good_kernel_basis(six, 81);
    REQUIRE(b81.size() == 1);
    CHECK(b81[0] == Poly::parse("x^2*z^3 - 2*x*y^2*z^2 + y^4*z"));
    CHECK(good_kernel_basis(six, 47).empty());
}

TEST_CASE("rank of random restrictions is min(|L|, delta)") {
    std::mt19937 rng(31);
    for (long n : {3, 5, 6, 8, 9}) {
        SemigroupContext ctx = build_context(n);
        for (long r = 1; r < ctx.la; ++r) {
            if (!in_semigroup(ctx, r)) continue;
            ElementProfile prof = profile(ctx, r);
            for (int t = 0; t < 20; ++t) {
                IndexSet L = random_subset(rng, prof.h_set);
                CHECK(rank(restriction_matrix(ctx, r, L).matrix) ==
                      std::min<long>(static_cast<long>(L.size()), prof.delta));
            }
        }
    }
}

TEST_CASE("kernel_poly lies in the kernel and its image skips L") {
    std::mt19937 rng(37);
    for (long n : {5, 6, 7, 10}) {
        SemigroupContext ctx = build_context(n);
        for (long r = 1; r < ctx.la; ++r) {
            if (!in_semigroup(ctx, r)) continue;
            ElementProfile prof = profile(ctx, r);
            if (prof.delta < 2) continue;
            std::vector<long> pool(prof.h_set.begin(), prof.h_set.end());
            std::shuffle(pool.begin(), pool.end(), rng);
            pool.resize(prof.delta - 1);
            IndexSet L(pool);
            Poly g = kernel_poly(ctx, r, L);
            RationalVector image = restriction_matrix(ctx, r, L).matrix * wr_coordinates(ctx, r, g);
            for (const Rational& v : image) CHECK(sgn(v) == 0);
            UniPoly rho = rho_apply(ctx, g);
            for (long k : L) CHECK(sgn(rho.coeff(r + k * ctx.q)) == 0);
        }
    }
}

TEST_CASE("good sets contain 0 and stay inside [0, phi_1]") {
    for (long n : {3, 4, 6, 7, 12}) {
        SemigroupContext ctx = build_context(n);
        for (long r = 1; r < ctx.la; ++r) {
            if (!in_semigroup(ctx, r)) continue;
            IndexSet G = good_set(ctx, r).elements;
            CHECK(G.contains(0));
            CHECK(G.subset_of(profile(ctx, r).h_set));
        }
    }
}

TEST_CASE("closed-form window good sets equal the definition") {
    for (long n = 6; n <= 20; ++n) {
        SemigroupContext ctx = build_context(n);
        for (long k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(good_set(ctx, ctx.s0 + k - 1).elements == window_good_set_closed_form(ctx, k));
        }
    }
}

TEST_CASE("window good-set sizes") {
    for (long n = 6; n <= 30; ++n) {
        SemigroupContext ctx = build_context(n);
        for (const WindowPoint& w : classify_window(ctx)) {
            CAPTURE(n);
            CAPTURE(w.k);
            long size = static_cast<long>(good_set(ctx, w.r).elements.size());
            long delta = profile(ctx, w.r).delta;
            if (w.iota == 1 && w.c == 0)
                CHECK(size == delta - 2);
            else if (w.iota == 3 && w.c == 2)
                CHECK(size == delta);
            else
                CHECK(size == delta - 1);
        }
    }
}

TEST_CASE("good kernels vanish below s0") {
    for (long n = 3; n <= 12; ++n) {
        SemigroupContext ctx = build_context(n);
        for (long r = 1; r < ctx.s0; ++r)
            if (in_semigroup(ctx, r)) CHECK(good_kernel_basis(ctx, r).empty());
    }
}
