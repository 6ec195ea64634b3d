#include "kerrho/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kerrho/binomial.hpp"
#include "kerrho/linalg.hpp"
#include "kerrho/restriction.hpp"

namespace kerrho {

namespace {

bool divides(const std::pair<long, long>& g, long i, long j) { return g.first <= i && g.second <= j; }

bool in_monomial_ideal(const std::vector<std::pair<long, long>>& gens, long i, long j) {
    return std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return divides(g, i, j); });
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

// Coordinates on all monomials of sigma-order r, which covers r >= la as well.
RationalVector block_coordinates(const SemigroupContext& ctx, long r, const Poly& p) {
    const std::vector<Exponent> basis = factorizations(ctx, r);
    RationalVector v(basis.size());
    for (const auto& [e, c] : p.terms()) {
        auto it = std::find(basis.begin(), basis.end(), e);
        if (it == basis.end())
            throw InvalidArgument("leading form has the term " + monomial_to_string(e) + " outside sigma-order " +
                                  std::to_string(r));
        v[it - basis.begin()] = c;
    }
    return v;
}

}  // namespace

CheckResult verify_kernel(const SemigroupContext& ctx, const GeneratorSet& gs) {
    CheckResult out{"kernel_membership", true, ""};
    std::vector<std::string> failures;
    for (const GeneratorRecord& g : gs.generators) {
        UniPoly image = rho_apply(ctx, g.f);
        if (image.is_zero()) continue;
        out.passed = false;
        std::string exps;
        std::size_t shown = 0;
        for (const auto& [e, c] : image.terms()) {
            if (shown++ == 6) {
                exps += ", ...";
                break;
            }
            exps += (exps.empty() ? "t^" : ", t^") + std::to_string(e);
        }
        failures.push_back("f_" + std::to_string(g.k) + " residual at " + exps);
    }
    out.detail = out.passed ? "rho(f_k) = 0 for all " + std::to_string(gs.generators.size()) + " generators"
                            : join(failures);
    return out;
}

CheckResult verify_below_s0(const SemigroupContext& ctx) {
    CheckResult out{"below_s0_vanishing", true, ""};
    long scanned = 0;
    std::vector<std::string> failures;
    for (long r = 1; r < ctx.s0; ++r) {
        if (!in_semigroup(ctx, r)) continue;
        ++scanned;
        long dim = kernel_dim(ctx, r, good_set(ctx, r).elements);
        if (dim != 0) {
            out.passed = false;
            failures.push_back("r=" + std::to_string(r) + " has dimension " + std::to_string(dim));
        }
    }
    out.detail = out.passed ? "dim ker = 0 at all " + std::to_string(scanned) + " elements of S in (0, " +
                                  std::to_string(ctx.s0) + ")"
                            : join(failures);
    return out;
}

std::vector<std::pair<long, long>> expected_mod_z_monomials(long n) {
    std::vector<std::pair<long, long>> out{{n, 0}, {n - 1, 1}};
    for (long j = 2; j <= n - 1; ++j) out.push_back({n - 1 - j, j});
    return out;
}

long staircase_count(const std::vector<std::pair<long, long>>& generators) {
    long max_x = -1, max_y = -1;
    for (const auto& [i, j] : generators) {
        if (j == 0) max_x = max_x < 0 ? i : std::min(max_x, i);
        if (i == 0) max_y = max_y < 0 ? j : std::min(max_y, j);
    }
    if (max_x < 0 || max_y < 0) throw InvalidArgument("staircase_count: the ideal has infinite colength");
    long count = 0;
    for (long i = 0; i < max_x; ++i)
        for (long j = 0; j < max_y; ++j)
            if (!in_monomial_ideal(generators, i, j)) ++count;
    return count;
}

ColengthData colength_data(const SemigroupContext& ctx, const GeneratorSet& gs) {
    ColengthData out;
    out.monomials = expected_mod_z_monomials(ctx.n);
    out.staircase = staircase_count(out.monomials);
    out.terms_in_ideal = true;
    ExactMatrix m(gs.generators.size(), out.monomials.size());
    for (std::size_t row = 0; row < gs.generators.size(); ++row) {
        for (const auto& [e, c] : gs.generators[row].f.terms()) {
            if (e.z != 0) continue;
            if (!in_monomial_ideal(out.monomials, e.x, e.y)) out.terms_in_ideal = false;
            for (std::size_t col = 0; col < out.monomials.size(); ++col)
                if (out.monomials[col] == std::pair<long, long>{e.x, e.y}) m(row, col) = c;
        }
    }
    out.rank_on_generators = rank(m);
    return out;
}

CheckResult verify_colength(const SemigroupContext& ctx, const GeneratorSet& gs) {
    ColengthData d = colength_data(ctx, gs);
    const long want = static_cast<long>(d.monomials.size());
    CheckResult out{"colength", d.terms_in_ideal && d.rank_on_generators == want && d.staircase == ctx.a + 2, ""};
    std::ostringstream s;
    s << "mod-z ideal (";
    for (std::size_t i = 0; i < d.monomials.size(); ++i)
        s << (i ? "," : "") << monomial_to_string({d.monomials[i].first, d.monomials[i].second, 0});
    s << "); terms in ideal: " << (d.terms_in_ideal ? "yes" : "no") << "; rank on generators " << d.rank_on_generators
      << "/" << want << "; colength " << d.staircase << " (a+2 = " << ctx.a + 2 << ")";
    out.detail = s.str();
    return out;
}

std::vector<Poly> brute_kernel_search(const SemigroupContext& ctx, long r, long order_bound) {
    if (!in_semigroup(ctx, r)) throw NotInSemigroup("brute_kernel_search: r=" + std::to_string(r) + " is not in S");
    if (order_bound < r)
        throw BoundTooSmall("brute_kernel_search: order bound " + std::to_string(order_bound) + " is below r=" +
                            std::to_string(r));
    // rho maps sigma-order s into t^{s + kq}, so the residue class of r modulo q decouples.
    std::vector<Exponent> columns;
    for (long s = r + ctx.q; s <= order_bound; s += ctx.q)
        for (const Exponent& e : factorizations(ctx, s)) columns.push_back(e);
    const std::size_t others = columns.size();
    std::vector<Exponent> block = factorizations(ctx, r);
    std::sort(block.begin(), block.end(), [](const Exponent& u, const Exponent& v) { return u.x > v.x; });
    for (const Exponent& e : block) columns.push_back(e);

    std::map<long, std::size_t> row_of;
    for (const Exponent& e : columns)
        for (long k = 0; k <= e.x; ++k) row_of.emplace(ctx.weight(e) + k * ctx.q, 0);
    std::size_t next = 0;
    for (auto& [t, idx] : row_of) idx = next++;
    std::vector<std::vector<Integer>> rows(row_of.size(), std::vector<Integer>(columns.size()));
    for (std::size_t col = 0; col < columns.size(); ++col) {
        const Exponent& e = columns[col];
        for (long k = 0; k <= e.x; ++k) rows[row_of[ctx.weight(e) + k * ctx.q]][col] = binom(e.x, k);
    }

    IntegerEchelon ech = fraction_free_echelon(std::move(rows), others);
    const std::size_t pivots = ech.pivot_cols.size();
    ExactMatrix constraints(ech.rows.size() - pivots, block.size());
    for (std::size_t i = pivots; i < ech.rows.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j) constraints(i - pivots, j) = ech.rows[i][others + j];
    std::vector<RationalVector> leading;
    if (constraints.rows() == 0) {
        for (std::size_t j = 0; j < block.size(); ++j) {
            RationalVector v(block.size());
            v[j] = 1;
            leading.push_back(v);
        }
    } else {
        leading = kernel_basis_matrix(constraints);
    }

    std::vector<Poly> out;
    for (const RationalVector& v : leading) {
        std::vector<Rational> x(columns.size());
        for (std::size_t j = 0; j < block.size(); ++j) x[others + j] = v[j];
        for (std::size_t k = pivots; k-- > 0;) {
            const auto& row = ech.rows[k];
            const std::size_t p = ech.pivot_cols[k];
            Rational acc = 0;
            for (std::size_t j = p + 1; j < columns.size(); ++j)
                if (sgn(row[j]) != 0) acc -= Rational(row[j]) * x[j];
            x[p] = acc / Rational(row[p]);
        }
        Poly p;
        for (std::size_t j = 0; j < columns.size(); ++j) p.add_term(columns[j], x[j]);
        if (!rho_apply(ctx, p).is_zero()) throw std::logic_error("brute_kernel_search: back-substitution left a residual");
        out.push_back(p);
    }
    return out;
}

long leading_rank(const SemigroupContext& ctx, long r, const std::vector<Poly>& forms) {
    if (forms.empty()) return 0;
    std::vector<RationalVector> coords;
    for (const Poly& f : forms) coords.push_back(block_coordinates(ctx, r, f));
    ExactMatrix m(coords.size(), coords.front().size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < coords[i].size(); ++j) m(i, j) = coords[i][j];
    return rank(m);
}

bool same_leading_span(const SemigroupContext& ctx, long r, const std::vector<Poly>& lhs, const std::vector<Poly>& rhs) {
    std::vector<Poly> both = lhs;
    both.insert(both.end(), rhs.begin(), rhs.end());
    const long joint = leading_rank(ctx, r, both);
    return joint == leading_rank(ctx, r, lhs) && joint == leading_rank(ctx, r, rhs);
}

std::vector<long> search_points(const SemigroupContext& ctx, const GeneratorSet& gs) {
    std::vector<long> points;
    for (long r = ctx.s0; r < ctx.s0 + ctx.n; ++r) points.push_back(r);
    for (const GeneratorRecord& g : gs.generators) points.push_back(g.sigma_order);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::vector<Poly> leading_forms_at(const GeneratorSet& gs, long r) {
    std::vector<Poly> out;
    for (const GeneratorRecord& g : gs.generators)
        if (g.sigma_order == r) out.push_back(g.g);
    return out;
}

VerificationReport full_report(const SemigroupContext& ctx, const ReportOptions& options) {
    VerificationReport report;
    report.n = ctx.n;
    GeneratorSet gs;
    try {
        gs = build_all(ctx);
    } catch (const std::exception& e) {
        report.checks.push_back({"construction", false, e.what()});
        return report;
    }
    {
        bool ok = gs.n == ctx.n && static_cast<long>(gs.generators.size()) == ctx.n;
        for (std::size_t i = 0; ok && i < gs.generators.size(); ++i) ok = gs.generators[i].k == static_cast<long>(i) + 1;
        report.checks.push_back({"generator_count", ok, std::to_string(gs.generators.size()) + " generators"});
    }
    report.checks.push_back(verify_kernel(ctx, gs));
    {
        const std::vector<long> layout = expected_sigma_layout(ctx);
        CheckResult c{"sigma_structure", true, ""};
        std::vector<std::string> failures;
        for (const GeneratorRecord& g : gs.generators) {
            SigmaSplit split = sigma_split(ctx, g.f);
            if (!(split.leading == g.g)) failures.push_back("f_" + std::to_string(g.k) + " leading form differs from g");
            if (g.sigma_order != sigma_order(ctx, g.f) || g.sigma_order != layout[g.k - 1])
                failures.push_back("f_" + std::to_string(g.k) + " has sigma-order " + std::to_string(g.sigma_order) +
                                   ", expected " + std::to_string(layout[g.k - 1]));
        }
        c.passed = failures.empty();
        c.detail = c.passed ? "leading forms and sigma-order layout match" : join(failures);
        report.checks.push_back(c);
    }
    {
        CheckResult c{"leading_independence", true, ""};
        std::vector<std::string> failures;
        std::vector<long> orders;
        for (const GeneratorRecord& g : gs.generators) orders.push_back(g.sigma_order);
        std::sort(orders.begin(), orders.end());
        orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
        for (long r : orders) {
            std::vector<Poly> forms = leading_forms_at(gs, r);
            if (leading_rank(ctx, r, forms) != static_cast<long>(forms.size()))
                failures.push_back("dependent leading forms at r=" + std::to_string(r));
        }
        c.passed = failures.empty();
        c.detail = c.passed ? "leading forms independent in every W_r" : join(failures);
        report.checks.push_back(c);
    }
    report.checks.push_back(verify_below_s0(ctx));
    report.checks.push_back(verify_colength(ctx, gs));

    if (ctx.n <= options.brute_search_max_n) {
        const long bound = options.order_bound.value_or(ctx.la - 1);
        CheckResult c{"brute_search", true, ""};
        std::vector<std::string> lines;
        for (long r : search_points(ctx, gs)) {
            std::vector<Poly> expected = leading_forms_at(gs, r);
            if (r > bound) {
                c.passed = false;
                lines.push_back("r=" + std::to_string(r) + " exceeds bound " + std::to_string(bound));
                continue;
            }
            std::vector<Poly> leading;
            for (const Poly& p : brute_kernel_search(ctx, r, bound)) leading.push_back(sigma_split(ctx, p).leading);
            const bool match = same_leading_span(ctx, r, leading, expected);
            if (!match) c.passed = false;
            lines.push_back("r=" + std::to_string(r) + " found " + std::to_string(leading_rank(ctx, r, leading)) +
                            " expected " + std::to_string(expected.size()) + (match ? "" : " MISMATCH"));
        }
        c.detail = "bound " + std::to_string(bound) + ": " + join(lines);
        report.checks.push_back(c);
    } else {
        report.notes.push_back("brute_search skipped for n > " + std::to_string(options.brute_search_max_n));
    }

    report.overall = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.passed; });
    return report;
}

}  // namespace kerrho
