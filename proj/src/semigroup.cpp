#include "kerrho/semigroup.hpp"

#include <algorithm>
#include <cstdlib>

namespace kerrho {

namespace {

constexpr long kMaxN = 20000;

long floor_div(long p, long d) {
    long q = p / d;
    if ((p % d != 0) && ((p < 0) != (d < 0))) --q;
    return q;
}

}  // namespace

Exponent shift(const Exponent& phi, long j) {
    return {phi.x + j * kOmega.x, phi.y + j * kOmega.y, phi.z + j * kOmega.z};
}

SemigroupContext build_context(long n) {
    if (n < 3) throw InvalidArgument("n must be at least 3, got " + std::to_string(n));
    if (n > kMaxN) throw InvalidArgument("n must be at most " + std::to_string(kMaxN));
    SemigroupContext ctx;
    ctx.n = n;
    ctx.a = n * (n - 1) / 2;
    ctx.q = 2 * ((n + 1) / 2) - 1;
    ctx.s0 = ctx.a * (n - 1) + 2;
    ctx.frobenius = (ctx.a / 2) * ctx.a - 1;
    ctx.la = (ctx.a % 2 == 0) ? (ctx.a / 2) * (ctx.a + 2) : (ctx.a / 2 + 2) * ctx.a;
    return ctx;
}

bool in_semigroup(const SemigroupContext& ctx, long r) {
    if (r < 0) return false;
    long ell = r / ctx.a;
    return r - ctx.a * ell <= 2 * ell;
}

ElementProfile profile(const SemigroupContext& ctx, long r) {
    if (r < 0) throw InvalidArgument("profile: r must be non-negative");
    ElementProfile p;
    p.r = r;
    p.ell = r / ctx.a;
    p.eps = r - ctx.a * p.ell;
    p.member = p.eps <= 2 * p.ell;
    p.phi = {p.ell - floor_div(p.eps + 1, 2), p.eps % 2, p.eps / 2};
    p.kappa = std::min(p.phi.x, p.phi.z);
    p.iota = p.phi.y + std::labs(p.phi.x - p.phi.z);
    p.c = p.phi.z - p.phi.x;
    p.delta = p.kappa + 1;
    p.i_set = IndexSet::interval(std::max(0L, p.phi.x - p.kappa), p.phi.x);
    p.h_set = IndexSet::interval(0, p.phi.x);
    return p;
}

std::vector<Exponent> factorizations(const SemigroupContext& ctx, long r) {
    std::vector<Exponent> out;
    if (r < 0) return out;
    for (long x = 0; x * ctx.a <= r; ++x) {
        for (long y = 0; x * ctx.a + y * (ctx.a + 1) <= r; ++y) {
            long rest = r - x * ctx.a - y * (ctx.a + 1);
            if (rest % (ctx.a + 2) == 0) out.push_back({x, y, rest / (ctx.a + 2)});
        }
    }
    return out;
}

std::vector<WindowPoint> classify_window(const SemigroupContext& ctx) {
    const long n = ctx.n;
    std::vector<WindowPoint> out;
    for (long k = 1; k <= n; ++k) {
        WindowPoint w{k, ctx.s0 + k - 1, 0, 0};
        if (n < 6) {
            ElementProfile p = profile(ctx, w.r);
            w.iota = p.iota;
            w.c = p.c;
        } else if (n % 2 == 1) {
            if (k == n - 2) {
                w.iota = 0, w.c = 0;
            } else if (k == n - 1) {
                w.iota = 2, w.c = 1;
            } else if (k == n) {
                w.iota = 2, w.c = 2;
            } else if (k % 2 == 1) {
                w.iota = n - k - 2, w.c = -w.iota;
            } else {
                w.iota = n - k - 1, w.c = -w.iota + 1;
            }
        } else {
            if (k == n - 3) {
                w.iota = 1, w.c = -1;
            } else if (k == n - 2) {
                w.iota = 1, w.c = 0;
            } else if (k == n - 1) {
                w.iota = 1, w.c = 1;
            } else if (k == n) {
                w.iota = 3, w.c = 2;
            } else if (k % 2 == 1) {
                w.iota = n - k - 2, w.c = -w.iota;
            } else {
                w.iota = n - k - 1, w.c = -w.iota + 1;
            }
        }
        out.push_back(w);
    }
    return out;
}

}  // namespace kerrho
