#pragma once

#include "kerrho/index_set.hpp"
#include "kerrho/matrix.hpp"

namespace kerrho {

// C(i, j) from a shared Pascal table grown on demand; zero when j < 0 or j > i.
Integer binom(long i, long j);

ExactMatrix pascal(long m);

// Rows indexed by I, columns by J, entry C(i, j).
ExactMatrix binom_submatrix(const IndexSet& I, const IndexSet& J);

// (B^I_J)^T times the |I| x |I| exchange matrix; shape |J| x |I|.
ExactMatrix rotated_matrix(const IndexSet& I, const IndexSet& J);

// det(B^I_J); the empty determinant is 1.
Integer bin_det(const IndexSet& I, const IndexSet& J);

}  // namespace kerrho
