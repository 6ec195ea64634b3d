#include "kerrho/binomial.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "kerrho/linalg.hpp"

namespace kerrho {

namespace {

std::shared_mutex g_pascal_mutex;
std::vector<std::vector<Integer>> g_pascal{{Integer(1)}};

void grow_pascal(long i) {
    std::unique_lock lock(g_pascal_mutex);
    while (static_cast<long>(g_pascal.size()) <= i) {
        const auto& prev = g_pascal.back();
        std::vector<Integer> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
        g_pascal.push_back(std::move(row));
    }
}

}  // namespace

Integer binom(long i, long j) {
    if (i < 0) throw std::invalid_argument("binom: negative upper index");
    if (j < 0 || j > i) return 0;
    {
        std::shared_lock lock(g_pascal_mutex);
        if (static_cast<long>(g_pascal.size()) > i) return g_pascal[i][j];
    }
    grow_pascal(i);
    std::shared_lock lock(g_pascal_mutex);
    return g_pascal[i][j];
}

ExactMatrix pascal(long m) {
    if (m <= 0) throw std::invalid_argument("pascal: size must be positive");
    ExactMatrix p(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= i; ++j) p(i, j) = binom(i, j);
    return p;
}

ExactMatrix binom_submatrix(const IndexSet& I, const IndexSet& J) {
    if (I.empty() || J.empty()) throw std::invalid_argument("binom_submatrix: empty index set");
    ExactMatrix b(I.size(), J.size());
    for (std::size_t s = 0; s < I.size(); ++s)
        for (std::size_t t = 0; t < J.size(); ++t) b(s, t) = binom(I[s], J[t]);
    return b;
}

ExactMatrix rotated_matrix(const IndexSet& I, const IndexSet& J) {
    return binom_submatrix(I, J).transpose() * ExactMatrix::exchange(I.size());
}

Integer bin_det(const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) throw DimensionMismatch("bin_det: |I| != |J|");
    if (I.empty()) return 1;
    std::vector<std::vector<Integer>> m(I.size(), std::vector<Integer>(J.size()));
    for (std::size_t s = 0; s < I.size(); ++s)
        for (std::size_t t = 0; t < J.size(); ++t) m[s][t] = binom(I[s], J[t]);
    return integer_determinant(std::move(m));
}

}  // namespace kerrho
