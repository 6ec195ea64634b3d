#include "kerrho/restriction.hpp"

#include <algorithm>

#include "kerrho/binomial.hpp"
#include "kerrho/linalg.hpp"

namespace kerrho {

namespace {

ElementProfile checked_profile(const SemigroupContext& ctx, long r) {
    if (r <= 0 || !in_semigroup(ctx, r)) throw NotInSemigroup(std::to_string(r) + " is not a positive element of S");
    if (r >= ctx.la) throw OutOfValidatedRange(std::to_string(r) + " is not below L_a");
    return profile(ctx, r);
}

Poly from_coordinates(const SemigroupContext& ctx, long r, const RationalVector& coords) {
    std::vector<Exponent> basis = block_monomials(ctx, r, 0, static_cast<long>(coords.size()) - 1);
    Poly p;
    for (std::size_t j = 0; j < coords.size(); ++j) p.add_term(basis[j], coords[j]);
    return p;
}

Poly normalized(const SemigroupContext& ctx, long r, const Poly& p) {
    RationalVector v = wr_coordinates(ctx, r, p);
    for (const Rational& c : v)
        if (sgn(c) != 0) return p * Rational(1 / c);
    return p;
}

}  // namespace

RestrictionMatrix restriction_matrix(const SemigroupContext& ctx, long r, const IndexSet& L) {
    ElementProfile prof = checked_profile(ctx, r);
    if (L.empty()) throw IndexOutOfRange("restriction_matrix: empty index set");
    if (!L.subset_of(prof.h_set)) throw IndexOutOfRange("restriction_matrix: L is not inside H_r = " + prof.h_set.to_string());
    return {r, L, rotated_matrix(prof.i_set, L)};
}

GoodSet good_set(const SemigroupContext& ctx, long r) {
    ElementProfile prof = checked_profile(ctx, r);
    std::vector<long> good;
    for (long k = 0; k <= prof.phi.x; ++k) {
        bool excluded = false;
        for (long kp = 1; kp <= k && !excluded; ++kp) {
            long u = r + kp * ctx.q;
            if (in_semigroup(ctx, u) && k - kp <= profile(ctx, u).phi.x) excluded = true;
        }
        if (!excluded) good.push_back(k);
    }
    return {r, IndexSet(std::move(good))};
}

long kernel_dim(const SemigroupContext& ctx, long r, const IndexSet& L) {
    ElementProfile prof = checked_profile(ctx, r);
    long formula = prof.delta - std::min<long>(static_cast<long>(L.size()), prof.delta);
    if (L.empty()) return formula;
    long measured = prof.delta - rank(restriction_matrix(ctx, r, L).matrix);
    if (measured != formula)
        throw std::logic_error("kernel_dim: rank formula disagrees with elimination at r=" + std::to_string(r));
    return formula;
}

Poly kernel_poly(const SemigroupContext& ctx, long r, const IndexSet& L) {
    ElementProfile prof = checked_profile(ctx, r);
    if (static_cast<long>(L.size()) != prof.delta - 1)
        throw WrongCardinality("kernel_poly: |L| must equal delta_r - 1 = " + std::to_string(prof.delta - 1));
    RationalVector coords(prof.delta);
    for (long j = 0; j <= prof.kappa; ++j) {
        Integer d = bin_det(prof.i_set.without(prof.phi.x - j), L);
        coords[j] = (j % 2 == 0) ? Rational(d) : Rational(-d);
    }
    if (!L.empty()) {
        RationalVector image = restriction_matrix(ctx, r, L).matrix * coords;
        for (const Rational& v : image)
            if (sgn(v) != 0) throw std::logic_error("kernel_poly: result is not in the kernel");
    }
    return from_coordinates(ctx, r, coords);
}

std::vector<Poly> good_kernel_basis(const SemigroupContext& ctx, long r) {
    ElementProfile prof = checked_profile(ctx, r);
    IndexSet G = good_set(ctx, r).elements;
    long dim = kernel_dim(ctx, r, G);
    if (dim == 0) return {};
    if (static_cast<long>(G.size()) == prof.delta - 1) return {kernel_poly(ctx, r, G)};
    if (dim == 2 && prof.iota == 1 && prof.c == 0 && prof.phi.x >= 2) {
        IndexSet L1 = IndexSet{0}.unite(IndexSet::interval(2, prof.phi.x));
        IndexSet L2 = IndexSet::interval(0, prof.phi.x - 1);
        if (L1.intersect(L2) == G && static_cast<long>(L1.size()) == prof.delta - 1)
            return {normalized(ctx, r, kernel_poly(ctx, r, L1)), normalized(ctx, r, kernel_poly(ctx, r, L2))};
    }
    std::vector<Poly> out;
    for (const RationalVector& v : kernel_basis_matrix(restriction_matrix(ctx, r, G).matrix))
        out.push_back(from_coordinates(ctx, r, v));
    return out;
}

RationalVector wr_coordinates(const SemigroupContext& ctx, long r, const Poly& p) {
    ElementProfile prof = profile(ctx, r);
    RationalVector v(std::max(0L, prof.delta));
    for (const auto& [e, c] : p.terms()) {
        long j = prof.phi.x - e.x;
        if (ctx.weight(e) != r || j < 0 || j > prof.kappa || shift(prof.phi, j) != e)
            throw std::invalid_argument("wr_coordinates: " + monomial_to_string(e) + " is not in W_" + std::to_string(r));
        v[j] = c;
    }
    return v;
}

IndexSet window_good_set_closed_form(const SemigroupContext& ctx, long k) {
    const long n = ctx.n;
    if (n < 6 || k < 1 || k > n) throw IndexOutOfRange("window_good_set_closed_form: needs n >= 6 and 1 <= k <= n");
    WindowPoint w = classify_window(ctx)[k - 1];
    auto pair_is = [&w](long i, long c) { return w.iota == i && w.c == c; };
    if (pair_is(0, 0)) return IndexSet::interval(0, (n - 3) / 2);
    if (pair_is(2, 1) || pair_is(2, 2)) return IndexSet::interval(0, (n - 5) / 2);
    if (pair_is(1, -1)) return IndexSet{0}.unite(IndexSet::interval(2, (n - 2) / 2));
    if (pair_is(1, 0)) return IndexSet{0}.unite(IndexSet::interval(2, (n - 4) / 2));
    if (pair_is(1, 1) || pair_is(3, 2)) return IndexSet::interval(0, (n - 4) / 2);
    if (w.c == -w.iota || w.c == -w.iota + 1) return IndexSet{0}.unite(IndexSet::interval((w.iota + 3) / 2, (n - 2) / 2));
    throw std::logic_error("window_good_set_closed_form: unclassified window point");
}

}  // namespace kerrho
