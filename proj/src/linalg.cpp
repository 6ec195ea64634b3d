#include "kerrho/linalg.hpp"

#include <utility>

namespace kerrho {

namespace {

Integer exact_quotient(const Integer& num, const Integer& den) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

std::vector<Integer> scaled_row(const ExactMatrix& a, std::size_t i, const Rational* extra) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    if (extra) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra->get_den_mpz_t());
    std::vector<Integer> row(a.cols() + (extra ? 1 : 0));
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j).get_num() * (l / a(i, j).get_den());
    if (extra) row.back() = extra->get_num() * (l / extra->get_den());
    return row;
}

RationalVector back_substitute(const IntegerEchelon& e, std::size_t unknowns, const std::vector<Rational>& fixed) {
    // fixed holds preset values for non-pivot unknowns; the last column (if present beyond unknowns) is the rhs.
    RationalVector x = fixed;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        const auto& row = e.rows[k];
        std::size_t p = e.pivot_cols[k];
        Rational acc = row.size() > unknowns ? Rational(row[unknowns]) : Rational(0);
        for (std::size_t j = p + 1; j < unknowns; ++j)
            if (sgn(row[j]) != 0) acc -= Rational(row[j]) * x[j];
        x[p] = acc / Rational(row[p]);
    }
    return x;
}

}  // namespace

std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& a) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(scaled_row(a, i, nullptr));
    return rows;
}

IntegerEchelon fraction_free_echelon(std::vector<std::vector<Integer>> rows, std::size_t pivot_limit) {
    IntegerEchelon e;
    const std::size_t m = rows.size();
    const std::size_t cols = m ? rows.front().size() : 0;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < m; ++c) {
        std::size_t p = r;
        while (p < m && sgn(rows[p][c]) == 0) ++p;
        if (p == m) continue;
        std::swap(rows[p], rows[r]);
        const Integer piv = rows[r][c];
        for (std::size_t i = r + 1; i < m; ++i) {
            const Integer lead = rows[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = piv * rows[i][j] - lead * rows[r][j];
                rows[i][j] = exact_quotient(v, prev);
            }
            rows[i][c] = 0;
        }
        prev = piv;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rows = std::move(rows);
    return e;
}

Integer integer_determinant(std::vector<std::vector<Integer>> square) {
    const std::size_t n = square.size();
    for (const auto& row : square)
        if (row.size() != n) throw DimensionMismatch("determinant: matrix is not square");
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(square[p][k]) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(square[p], square[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = square[k][k] * square[i][j] - square[i][k] * square[k][j];
                square[i][j] = exact_quotient(v, prev);
            }
            square[i][k] = 0;
        }
        prev = square[k][k];
    }
    return sign * square[n - 1][n - 1];
}

Rational determinant(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant: matrix is not square");
    Rational scale = 1;
    std::vector<std::vector<Integer>> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        scale /= Rational(l);
        rows[i].resize(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
    return Rational(integer_determinant(std::move(rows))) * scale;
}

long rank(const ExactMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return static_cast<long>(fraction_free_echelon(integer_rows(a), a.cols()).pivot_cols.size());
}

std::vector<RationalVector> kernel_basis_matrix(const ExactMatrix& a) {
    const std::size_t n = a.cols();
    std::vector<RationalVector> basis;
    if (n == 0) return basis;
    IntegerEchelon e;
    if (a.rows() > 0) e = fraction_free_echelon(integer_rows(a), n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RationalVector fixed(n);
        fixed[f] = 1;
        basis.push_back(back_substitute(e, n, fixed));
    }
    return basis;
}

RationalVector solve_unique(const ExactMatrix& a, const RationalVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("solve_unique: matrix is not square");
    if (b.size() != n) throw DimensionMismatch("solve_unique: right-hand side has wrong length");
    if (n == 0) return {};
    std::vector<std::vector<Integer>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(scaled_row(a, i, &b[i]));
    IntegerEchelon e = fraction_free_echelon(std::move(rows), n);
    if (e.pivot_cols.size() < n) throw SingularMatrix("solve_unique: singular system");
    RationalVector x = back_substitute(e, n, RationalVector(n));
    if (a * x != b) throw std::logic_error("solve_unique: residual check failed");
    return x;
}

}  // namespace kerrho
