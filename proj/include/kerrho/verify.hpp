#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kerrho/generators.hpp"
#include "kerrho/polynomial.hpp"
#include "kerrho/semigroup.hpp"

namespace kerrho {

class BoundTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    long n = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    bool overall = false;
};

CheckResult verify_kernel(const SemigroupContext& ctx, const GeneratorSet& gs);

CheckResult verify_below_s0(const SemigroupContext& ctx);

// x^i y^j exponents of the minimal generators of (x^n, x^{n-1}y, x^{n-1-j}y^j : 2 <= j <= n-1).
std::vector<std::pair<long, long>> expected_mod_z_monomials(long n);

// Number of monomials x^i y^j outside the monomial ideal generated by the given exponents.
long staircase_count(const std::vector<std::pair<long, long>>& generators);

struct ColengthData {
    std::vector<std::pair<long, long>> monomials;
    bool terms_in_ideal = false;
    long rank_on_generators = 0;
    long staircase = 0;
};

// Certificate that the f_k(x, y, 0) generate the monomial ideal M of expected_mod_z_monomials:
// every term lies in M, and the coefficient matrix on the minimal generators of M is invertible.
ColengthData colength_data(const SemigroupContext& ctx, const GeneratorSet& gs);

CheckResult verify_colength(const SemigroupContext& ctx, const GeneratorSet& gs);

// Kernel elements of rho supported in sigma-orders [r, order_bound] with nonzero W_r component,
// one per basis vector of the reachable leading space.
std::vector<Poly> brute_kernel_search(const SemigroupContext& ctx, long r, long order_bound);

// Rank of a family of W_r elements.
long leading_rank(const SemigroupContext& ctx, long r, const std::vector<Poly>& forms);

// True when both families span the same subspace of W_r.
bool same_leading_span(const SemigroupContext& ctx, long r, const std::vector<Poly>& lhs, const std::vector<Poly>& rhs);

// Window points together with the sigma-orders of the generators.
std::vector<long> search_points(const SemigroupContext& ctx, const GeneratorSet& gs);

// Leading forms g_k with sigma-order r.
std::vector<Poly> leading_forms_at(const GeneratorSet& gs, long r);

struct ReportOptions {
    std::optional<long> order_bound;
    long brute_search_max_n = 8;
};

VerificationReport full_report(const SemigroupContext& ctx, const ReportOptions& options = {});

}  // namespace kerrho
