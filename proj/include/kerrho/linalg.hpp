#pragma once

#include <stdexcept>
#include <vector>

#include "kerrho/matrix.hpp"

namespace kerrho {

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fraction-free row echelon form of an integer matrix.
struct IntegerEchelon {
    std::vector<std::vector<Integer>> rows;
    std::vector<std::size_t> pivot_cols;
};

// Eliminates with pivots searched only in columns [0, pivot_limit).
IntegerEchelon fraction_free_echelon(std::vector<std::vector<Integer>> rows, std::size_t pivot_limit);

std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& a);

Integer integer_determinant(std::vector<std::vector<Integer>> square);

Rational determinant(const ExactMatrix& a);

long rank(const ExactMatrix& a);

std::vector<RationalVector> kernel_basis_matrix(const ExactMatrix& a);

RationalVector solve_unique(const ExactMatrix& a, const RationalVector& b);

}  // namespace kerrho
