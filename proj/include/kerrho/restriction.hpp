#pragma once

#include <stdexcept>
#include <vector>

#include "kerrho/index_set.hpp"
#include "kerrho/matrix.hpp"
#include "kerrho/polynomial.hpp"
#include "kerrho/semigroup.hpp"

namespace kerrho {

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class WrongCardinality : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RestrictionMatrix {
    long r = 0;
    IndexSet l_set;
    ExactMatrix matrix;  // |L| x delta_r
};

struct GoodSet {
    long r = 0;
    IndexSet elements;
};

RestrictionMatrix restriction_matrix(const SemigroupContext& ctx, long r, const IndexSet& L);

GoodSet good_set(const SemigroupContext& ctx, long r);

long kernel_dim(const SemigroupContext& ctx, long r, const IndexSet& L);

// sum_j (-1)^j b_L^{I_r \ {phi_1 - j}} m^{phi_r + j omega}; requires |L| = delta_r - 1.
Poly kernel_poly(const SemigroupContext& ctx, long r, const IndexSet& L);

// A basis of ker(rho_r^{G_r}) written as polynomials in W_r.
std::vector<Poly> good_kernel_basis(const SemigroupContext& ctx, long r);

// Coordinates of p in the ordered basis of W_r; throws if p leaves W_r.
RationalVector wr_coordinates(const SemigroupContext& ctx, long r, const Poly& p);

// Closed-form good set at the window point r_k (n >= 6), as stated per (iota, c) case.
IndexSet window_good_set_closed_form(const SemigroupContext& ctx, long k);

}  // namespace kerrho
