#include "kerrho/generators.hpp"

#include "kerrho/binomial.hpp"
#include "kerrho/linalg.hpp"
#include "kerrho/restriction.hpp"

namespace kerrho {

namespace {

struct PlannedPiece {
    std::string label;
    long s = 0;
    bool solved = false;
    std::vector<Exponent> monomials;
    IndexSet rows;
    Poly fixed;
};

CaseKind kind_of(long iota, long c) {
    if (iota == 0 && c == 0) return CaseKind::ZeroZero;
    if (iota == 2 && c == 1) return CaseKind::TwoOne;
    if (iota == 2 && c == 2) return CaseKind::TwoTwo;
    if (iota == 1 && c == -1) return CaseKind::OneNeg1;
    if (iota == 1 && c == 0) return CaseKind::OneZero;
    if (iota == 1 && c == 1) return CaseKind::OneOne;
    if (iota == 3 && c == 2) return CaseKind::ThreeTwo;
    if (c == -iota) return CaseKind::NegI;
    if (c == -iota + 1) return CaseKind::NegIPlus1;
    throw std::logic_error("unclassified pair (" + std::to_string(iota) + "," + std::to_string(c) + ")");
}

void require_large(const SemigroupContext& ctx) {
    if (ctx.n < 6) throw std::out_of_range("the window construction needs n >= 6; use build_small");
}

GeneratorSlot slot_for(const std::vector<GeneratorSlot>& slots, long k) {
    if (k < 1 || k > static_cast<long>(slots.size()))
        throw std::out_of_range("generator index k=" + std::to_string(k) + " out of range");
    return slots[k - 1];
}

Poly binomial_line(long m, long x0, long y0, long z0, long dy) {
    // sum_j (-1)^j C(m, m-j) x^{x0-j} y^{y0+dy*j} z^{z0-j}, 0 <= j <= m
    Poly g;
    for (long j = 0; j <= m; ++j) {
        Integer b = binom(m, m - j);
        g.add_term({x0 - j, y0 + dy * j, z0 - j}, (j % 2 == 0) ? Rational(b) : Rational(-b));
    }
    return g;
}

Poly determinant_line(const IndexSet& I, const IndexSet& G, long top, long jmax, long y0, long z0) {
    // sum_j (-1)^j b_G^{I \ {top-j}} x^{top-j} y^{y0+2j} z^{z0-j}
    Poly g;
    for (long j = 0; j <= jmax; ++j) {
        Integer d = bin_det(I.without(top - j), G);
        g.add_term({top - j, y0 + 2 * j, z0 - j}, (j % 2 == 0) ? Rational(d) : Rational(-d));
    }
    return g;
}

PlannedPiece solved(const SemigroupContext& ctx, std::string label, long s, long j_lo, long j_hi, IndexSet rows) {
    return {std::move(label), s, true, block_monomials(ctx, s, j_lo, j_hi), std::move(rows), {}};
}

PlannedPiece solved_single(const SemigroupContext& ctx, std::string label, long s, const Exponent& e) {
    if (ctx.weight(e) != s) throw std::logic_error("tail plan: " + monomial_to_string(e) + " is not in W_" + std::to_string(s));
    return {std::move(label), s, true, {e}, IndexSet{0}, {}};
}

PlannedPiece fixed(const SemigroupContext& ctx, std::string label, const Poly& p) {
    return {std::move(label), sigma_order(ctx, p), false, {}, {}, p};
}

Poly mono(long x, long y, long z, long c = 1) { return Poly::monomial({x, y, z}, c); }

std::vector<PlannedPiece> tail_plan(const SemigroupContext& ctx, const GeneratorSlot& slot) {
    const long n = ctx.n, q = ctx.q, r = slot.r, i = slot.iota, half = n / 2;
    std::vector<PlannedPiece> plan;
    switch (slot.kind) {
        case CaseKind::NegI:
        case CaseKind::NegIPlus1: {
            long s1 = r + q, s2 = r + half * q, s3 = s2 + q, s4 = s3 + half * q;
            plan.push_back(solved(ctx, "h1", s1, 0, (i - 1) / 2, IndexSet::interval(0, (i - 1) / 2)));
            plan.push_back(solved(ctx, "h2", s2, 1, (n - 1 - i) / 2,
                                  IndexSet{0}.unite(IndexSet::interval((i + 5) / 2, half))));
            plan.push_back(solved(ctx, "h3", s3, 0, (i + 1) / 2, IndexSet::interval(0, (i + 1) / 2)));
            long top = (i + 3) / 2;
            long width = slot.kind == CaseKind::NegI ? (i - 2) / 2 : (i - 4) / 2;
            if (slot.kind == CaseKind::NegI || i >= 4)
                plan.push_back(solved(ctx, "h4", s4, top - width, top, IndexSet::interval(0, width)));
            break;
        }
        case CaseKind::ZeroZero:
            plan.push_back(fixed(ctx, "h1", mono(1, n - 1, 0, -1)));
            plan.push_back(fixed(ctx, "h2", mono(0, 1, n - 1)));
            break;
        case CaseKind::TwoOne: {
            long s1 = r + ((n - 3) / 2) * q, s2 = s1 + q, s3 = s1 + ((n + 1) / 2) * q, s4 = s3 + q;
            plan.push_back(fixed(ctx, "h1", mono(n, 0, 0, -1)));
            plan.push_back(solved(ctx, "h2", s2, 1, (n - 1) / 2, IndexSet::interval(0, (n - 3) / 2)));
            plan.push_back(solved(ctx, "h3", s3, 1, (n - 1) / 2, IndexSet{0}.unite(IndexSet::interval(2, (n - 1) / 2))));
            plan.push_back(solved_single(ctx, "h4", s4, {0, 2, n - 1}));
            break;
        }
        case CaseKind::TwoTwo: {
            long s1 = r + ((n - 3) / 2) * q, s2 = s1 + q, s3 = s1 + ((n + 1) / 2) * q;
            plan.push_back(fixed(ctx, "h1", mono(n - 1, 1, 0, -1)));
            plan.push_back(solved(ctx, "h2", s2, 1, (n - 1) / 2, IndexSet::interval(0, (n - 3) / 2)));
            plan.push_back(solved(ctx, "h3", s3, 2, (n + 1) / 2, IndexSet::interval(0, (n - 3) / 2)));
            break;
        }
        case CaseKind::OneNeg1: {
            plan.push_back(solved_single(ctx, "h1", r + q, {0, 1, n - 2}));
            plan.push_back(fixed(ctx, "h2", mono(2, n - 2, 0, -1)));
            plan.push_back(fixed(ctx, "h3", mono(1, 1, n - 2) + mono(0, 3, n - 3)));
            break;
        }
        case CaseKind::OneZero: {
            if (slot.variant == 0) {
                plan.push_back(fixed(ctx, "h1", mono(0, 0, n - 1, -1)));
                break;
            }
            long s2 = r + ((n - 2) / 2) * q, s3 = s2 + q, s4 = s2 + ((n + 2) / 2) * q, s5 = s4 + q;
            plan.push_back(fixed(ctx, "h2", mono(n, 0, 0, -1)));
            plan.push_back(solved(ctx, "h3", s3, 0, (n - 2) / 2, IndexSet::interval(0, (n - 2) / 2)));
            plan.push_back(solved(ctx, "h4", s4, 2, (n - 2) / 2, IndexSet{0}.unite(IndexSet::interval(3, (n - 2) / 2))));
            plan.push_back(solved(ctx, "h5", s5, 1, 2, IndexSet::interval(0, 1)));
            break;
        }
        case CaseKind::OneOne: {
            long s1 = r + ((n - 2) / 2) * q, s2 = s1 + q, s3 = s1 + ((n + 2) / 2) * q, s4 = s3 + q;
            plan.push_back(fixed(ctx, "h1", mono(n - 1, 1, 0, -1)));
            plan.push_back(solved(ctx, "h2", s2, 1, n / 2, IndexSet::interval(0, (n - 2) / 2)));
            plan.push_back(solved(ctx, "h3", s3, 3, n / 2, IndexSet{0}.unite(IndexSet::interval(2, (n - 4) / 2))));
            plan.push_back(solved_single(ctx, "h4", s4, {0, 3, n - 2}));
            break;
        }
        case CaseKind::ThreeTwo:
            throw std::logic_error("no generator is attached to a (3,2) point");
    }
    return plan;
}

TailTrace run_cascade(const SemigroupContext& ctx, const GeneratorSlot& slot, const Poly& g, Poly& f) {
    TailTrace trace;
    f = g;
    for (const PlannedPiece& piece : tail_plan(ctx, slot)) {
        TailPiece out{piece.label, piece.s, piece.solved, piece.monomials, piece.rows, {}};
        if (!piece.solved) {
            for (const auto& [e, c] : piece.fixed.canonical_terms()) {
                out.monomials.push_back(e);
                out.lambdas.push_back(c);
            }
            f += piece.fixed;
            trace.pieces.push_back(std::move(out));
            continue;
        }
        if (piece.rows.size() != piece.monomials.size())
            throw ConstructionError("tail piece " + piece.label + " of k=" + std::to_string(slot.k) + " is not square");
        UniPoly residual = rho_apply(ctx, f);
        ExactMatrix a(piece.rows.size(), piece.monomials.size());
        RationalVector b(piece.rows.size());
        for (std::size_t row = 0; row < piece.rows.size(); ++row) {
            for (std::size_t col = 0; col < piece.monomials.size(); ++col)
                a(row, col) = binom(piece.monomials[col].x, piece.rows[row]);
            b[row] = -residual.coeff(piece.s + piece.rows[row] * ctx.q);
        }
        try {
            out.lambdas = solve_unique(a, b);
        } catch (const SingularMatrix&) {
            throw SingularSystem("singular tail system " + piece.label + " for k=" + std::to_string(slot.k) +
                                 ", n=" + std::to_string(ctx.n));
        }
        for (std::size_t col = 0; col < piece.monomials.size(); ++col) f.add_term(piece.monomials[col], out.lambdas[col]);
        trace.pieces.push_back(std::move(out));
    }
    if (!rho_apply(ctx, f).is_zero())
        throw ConstructionError("assembled f_" + std::to_string(slot.k) + " is not in the kernel for n=" + std::to_string(ctx.n));
    return trace;
}

Poly leading_for(const SemigroupContext& ctx, const GeneratorSlot& slot) {
    const long n = ctx.n, i = slot.iota;
    switch (slot.kind) {
        case CaseKind::NegI: {
            long top = (n - 1 + i) / 2;
            IndexSet I = IndexSet::interval(i, top);
            IndexSet G = window_good_set_closed_form(ctx, slot.k);
            return determinant_line(I, G, top, (n - 1 - i) / 2, 0, (n - 1 - i) / 2);
        }
        case CaseKind::NegIPlus1: {
            long top = (n + i - 3) / 2;
            IndexSet I = IndexSet::interval(i - 1, top);
            IndexSet G = window_good_set_closed_form(ctx, slot.k);
            return determinant_line(I, G, top, (n - 1 - i) / 2, 1, (n - 1 - i) / 2);
        }
        case CaseKind::ZeroZero: {
            long m = (n - 1) / 2;
            return binomial_line(m, m, 0, m, 2);
        }
        case CaseKind::TwoOne: {
            long m = (n - 3) / 2;
            return binomial_line(m, m, 1, (n - 1) / 2, 2);
        }
        case CaseKind::TwoTwo: {
            long m = (n - 3) / 2;
            return binomial_line(m, m, 0, (n + 1) / 2, 2);
        }
        case CaseKind::OneNeg1: {
            IndexSet I = IndexSet::interval(1, n / 2);
            IndexSet G = IndexSet{0}.unite(IndexSet::interval(2, (n - 2) / 2));
            return determinant_line(I, G, n / 2, (n - 2) / 2, 0, (n - 2) / 2);
        }
        case CaseKind::OneZero: {
            if (slot.variant == 0) return mono(1, n - 3, 1) - mono(0, n - 1, 0);
            long m = (n - 2) / 2;
            return binomial_line(m, m, 1, m, 2);
        }
        case CaseKind::OneOne: {
            long m = (n - 2) / 2;
            return binomial_line(m, m, 0, n / 2, 2);
        }
        case CaseKind::ThreeTwo:
            break;
    }
    throw std::logic_error("no generator is attached to a (3,2) point");
}

const char* kSmallBlocks[3][5][2] = {
    {{"x*z - y^2 - x*y^2 + y*z^2", "x*z - y^2"},
     {"x^3 - y*z - 3*x*y*z + z^3 - x^2*y*z + x*z^3", "x^3 - y*z"},
     {"x^2*y - z^2 - y^2*z - x*z^2", "x^2*y - z^2"},
     {nullptr, nullptr},
     {nullptr, nullptr}},
    {{"x*y^2 - x^2*z + y*z^2 + x^2*y^2 - 2*x*y*z^2 + z^4", "x*y^2 - x^2*z"},
     {"x*y*z - y^3 - z^3", "x*y*z - y^3"},
     {"x*z^2 - y^2*z - x^3*y + x^2*z^2 + x*y^2*z + y^4", "x*z^2 - y^2*z"},
     {"x^4 - z^3 - 4*x^2*y*z + 2*y^2*z^2 - x*y^2*z^2 + y*z^4", "x^4 - z^3"},
     {nullptr, nullptr}},
    {{"x^3*z - x^2*y^2 - y*z^3 - 2*x^3*y^2 + 6*x*y*z^3 - y^3*z^2 + 2*y^5*z", "x^3*z - x^2*y^2"},
     {"x^2*y*z - x*y^3 - z^4 - x^2*y^3 + x*z^4 + y^2*z^3", "x^2*y*z - x*y^3"},
     {"x^2*z^2 - 2*x*y^2*z + y^4 - x*y^4 + y*z^4", "x^2*z^2 - 2*x*y^2*z + y^4"},
     {"x*y*z^2 - y^3*z - x^5 + 10*x*y^3*z - 5*y^5 + x^2*y^3*z + 9*x*y^5 - 6*y^2*z^4", "x*y*z^2 - y^3*z"},
     {"x*z^3 - y^2*z^2 - x^4*y + 6*x*y^2*z^2 - 2*y^4*z + x*y^4*z + 3*y^6", "x*z^3 - y^2*z^2"}},
};

}  // namespace

std::string case_name(CaseKind kind) {
    switch (kind) {
        case CaseKind::NegI: return "c=-iota";
        case CaseKind::NegIPlus1: return "c=-iota+1";
        case CaseKind::ZeroZero: return "(0,0)";
        case CaseKind::TwoOne: return "(2,1)";
        case CaseKind::TwoTwo: return "(2,2)";
        case CaseKind::OneNeg1: return "(1,-1)";
        case CaseKind::OneZero: return "(1,0)";
        case CaseKind::OneOne: return "(1,1)";
        case CaseKind::ThreeTwo: return "(3,2)";
    }
    return "?";
}

CaseTag window_case(const SemigroupContext& ctx, long k) {
    require_large(ctx);
    if (k < 1 || k > ctx.n) throw std::out_of_range("window index out of range");
    WindowPoint w = classify_window(ctx)[k - 1];
    return {kind_of(w.iota, w.c), k};
}

std::vector<GeneratorSlot> generator_slots(const SemigroupContext& ctx) {
    require_large(ctx);
    const long n = ctx.n;
    std::vector<WindowPoint> window = classify_window(ctx);
    std::vector<GeneratorSlot> slots;
    for (long k = 1; k <= n; ++k) {
        long point = k;
        int variant = 0;
        if (n % 2 == 0 && k == n - 1) point = n - 2, variant = 1;
        if (n % 2 == 0 && k == n) point = n - 1;
        const WindowPoint& w = window[point - 1];
        slots.push_back({k, w.r, kind_of(w.iota, w.c), w.iota, w.c, variant});
    }
    return slots;
}

Poly build_leading(const SemigroupContext& ctx, long k) {
    require_large(ctx);
    return leading_for(ctx, slot_for(generator_slots(ctx), k));
}

TailTrace build_tail_trace(const SemigroupContext& ctx, long k) {
    require_large(ctx);
    const GeneratorSlot slot = slot_for(generator_slots(ctx), k);
    Poly f;
    return run_cascade(ctx, slot, leading_for(ctx, slot), f);
}

Poly build_tail(const SemigroupContext& ctx, long k) {
    require_large(ctx);
    const GeneratorSlot slot = slot_for(generator_slots(ctx), k);
    Poly g = leading_for(ctx, slot);
    Poly f;
    run_cascade(ctx, slot, g, f);
    return f - g;
}

GeneratorSet build_small(const SemigroupContext& ctx) {
    if (ctx.n < 3 || ctx.n > 5) throw std::out_of_range("build_small covers n in {3,4,5}");
    GeneratorSet set{ctx.n, {}};
    for (long k = 1; k <= ctx.n; ++k) {
        const auto& entry = kSmallBlocks[ctx.n - 3][k - 1];
        Poly f = Poly::parse(entry[0]);
        set.generators.push_back({k, f, Poly::parse(entry[1]), sigma_order(ctx, f)});
    }
    return set;
}

GeneratorSet build_all(const SemigroupContext& ctx) {
    if (ctx.n <= 5) return build_small(ctx);
    GeneratorSet set{ctx.n, {}};
    for (const GeneratorSlot& slot : generator_slots(ctx)) {
        Poly g = leading_for(ctx, slot);
        Poly f;
        run_cascade(ctx, slot, g, f);
        set.generators.push_back({slot.k, f, g, sigma_order(ctx, f)});
    }
    return set;
}

std::vector<long> expected_sigma_layout(const SemigroupContext& ctx) {
    const long n = ctx.n, s0 = ctx.s0;
    std::vector<long> out;
    if (n == 4) return {s0, s0 + 1, s0 + 2, s0 + 4};
    for (long k = 1; k <= n; ++k) {
        if (n % 2 == 1 || n < 6 || k <= n - 3) out.push_back(s0 + k - 1);
        else if (k <= n - 1) out.push_back(s0 + n - 3);
        else out.push_back(s0 + n - 2);
    }
    return out;
}

}  // namespace kerrho
