#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kerrho/index_set.hpp"

namespace kerrho {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Exponent {
    long x = 0;
    long y = 0;
    long z = 0;

    long total() const { return x + y + z; }
    bool nonnegative() const { return x >= 0 && y >= 0 && z >= 0; }
    Exponent operator+(const Exponent& o) const { return {x + o.x, y + o.y, z + o.z}; }
    auto operator<=>(const Exponent&) const = default;
};

// The offset (-1, 2, -1) walking a block of equal sigma-order.
inline constexpr Exponent kOmega{-1, 2, -1};

Exponent shift(const Exponent& phi, long j);

struct SemigroupContext {
    long n = 0;
    long a = 0;
    long q = 0;
    long s0 = 0;
    long frobenius = 0;
    long la = 0;

    long weight(const Exponent& e) const { return e.x * a + e.y * (a + 1) + e.z * (a + 2); }
};

struct ElementProfile {
    long r = 0;
    bool member = false;
    long ell = 0;
    long eps = 0;
    Exponent phi;
    long kappa = 0;
    long iota = 0;
    long c = 0;
    long delta = 0;
    IndexSet i_set;
    IndexSet h_set;
};

struct WindowPoint {
    long k = 0;
    long r = 0;
    long iota = 0;
    long c = 0;
};

SemigroupContext build_context(long n);

ElementProfile profile(const SemigroupContext& ctx, long r);

bool in_semigroup(const SemigroupContext& ctx, long r);

std::vector<Exponent> factorizations(const SemigroupContext& ctx, long r);

std::vector<WindowPoint> classify_window(const SemigroupContext& ctx);

}  // namespace kerrho
