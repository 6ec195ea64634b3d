#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kerrho/index_set.hpp"
#include "kerrho/polynomial.hpp"
#include "kerrho/semigroup.hpp"

namespace kerrho {

class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CaseKind { NegI, NegIPlus1, ZeroZero, TwoOne, TwoTwo, OneNeg1, OneZero, OneOne, ThreeTwo };

std::string case_name(CaseKind kind);

struct CaseTag {
    CaseKind kind = CaseKind::NegI;
    long k = 0;
};

// Where generator k lives: its window point r, the case at r, and which of the
// two (1,0) generators it is (variant 1 is the second one).
struct GeneratorSlot {
    long k = 0;
    long r = 0;
    CaseKind kind = CaseKind::NegI;
    long iota = 0;
    long c = 0;
    int variant = 0;
};

struct TailPiece {
    std::string label;
    long s = 0;
    bool solved = false;
    std::vector<Exponent> monomials;
    IndexSet rows;
    RationalVector lambdas;
};

struct TailTrace {
    std::vector<TailPiece> pieces;
};

struct GeneratorRecord {
    long k = 0;
    Poly f;
    Poly g;
    long sigma_order = 0;
};

struct GeneratorSet {
    long n = 0;
    std::vector<GeneratorRecord> generators;
};

CaseTag window_case(const SemigroupContext& ctx, long k);

std::vector<GeneratorSlot> generator_slots(const SemigroupContext& ctx);

Poly build_leading(const SemigroupContext& ctx, long k);

TailTrace build_tail_trace(const SemigroupContext& ctx, long k);

Poly build_tail(const SemigroupContext& ctx, long k);

GeneratorSet build_small(const SemigroupContext& ctx);

GeneratorSet build_all(const SemigroupContext& ctx);

// Expected sigma-orders of f_1..f_n in order.
std::vector<long> expected_sigma_layout(const SemigroupContext& ctx);

}  // namespace kerrho
