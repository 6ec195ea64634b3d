#include "kerrho/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kerrho/binomial.hpp"

namespace kerrho {

namespace {

class TermParser {
public:
    explicit TermParser(const std::string& text) : s_(text) {}

    Poly parse() {
        Poly p;
        skip();
        if (at_end()) throw ParseError("empty polynomial text");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (get() == '-') ? -1 : 1;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [e, c] = term();
            p.add_term(e, c * sign);
            first = false;
            skip();
        }
        return p;
    }

private:
    std::pair<Exponent, Rational> term() {
        Rational c = 1;
        Exponent e;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            have_factor = true;
            skip();
            if (peek() == '*') {
                get();
                skip();
            } else {
                return {e, c};
            }
        }
        while (true) {
            char v = peek();
            if (v != 'x' && v != 'y' && v != 'z') {
                if (!have_factor) fail("expected coefficient or variable");
                fail("expected variable after '*'");
            }
            get();
            long power = 1;
            skip();
            if (peek() == '^') {
                get();
                skip();
                power = digits();
            }
            (v == 'x' ? e.x : v == 'y' ? e.y : e.z) += power;
            have_factor = true;
            skip();
            if (peek() != '*') break;
            get();
            skip();
        }
        return {e, c};
    }

    Rational number() {
        std::string num = digit_string();
        std::string den = "1";
        if (peek() == '/') {
            get();
            den = digit_string();
        }
        Rational q{Integer(num), Integer(den)};
        if (sgn(q.get_den()) == 0) fail("zero denominator");
        q.canonicalize();
        return q;
    }

    long digits() {
        std::string d = digit_string();
        if (d.size() > 9) fail("exponent too large");
        return std::stol(d);
    }

    std::string digit_string() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
        if (d.empty()) fail("expected digits");
        return d;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::monomial(const Exponent& e, const Rational& c) {
    Poly p;
    p.add_term(e, c);
    return p;
}

Poly Poly::parse(const std::string& text) { return TermParser(text).parse(); }

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (!e.nonnegative()) throw std::invalid_argument("Poly: negative exponent");
    if (sgn(c) == 0) return;
    Rational value = c;
    value.canonicalize();
    auto [it, inserted] = terms_.try_emplace(e, value);
    if (!inserted) {
        it->second += value;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational Poly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::operator*(const Rational& c) const {
    Poly r;
    if (sgn(c) == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

std::vector<std::pair<Exponent, Rational>> Poly::canonical_terms() const {
    std::vector<std::pair<Exponent, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        if (l.first.total() != r.first.total()) return l.first.total() > r.first.total();
        return l.first > r.first;
    });
    return out;
}

std::string monomial_to_string(const Exponent& e) {
    std::string out;
    auto put = [&out](char v, long p) {
        if (p == 0) return;
        if (!out.empty()) out += '*';
        out += v;
        if (p != 1) out += '^' + std::to_string(p);
    };
    put('x', e.x);
    put('y', e.y);
    put('z', e.z);
    return out.empty() ? "1" : out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : canonical_terms()) {
        bool negative = sgn(c) < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        bool constant = e.total() == 0;
        if (constant) {
            out += rational_to_string(mag);
        } else if (mag == 1) {
            out += monomial_to_string(e);
        } else {
            out += rational_to_string(mag) + "*" + monomial_to_string(e);
        }
    }
    return out;
}

void UniPoly::add_term(long e, const Rational& c) {
    if (e < 0) throw std::invalid_argument("UniPoly: negative exponent");
    if (sgn(c) == 0) return;
    Rational value = c;
    value.canonicalize();
    auto [it, inserted] = terms_.try_emplace(e, value);
    if (!inserted) {
        it->second += value;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational UniPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

long UniPoly::lowest() const {
    if (terms_.empty()) throw ZeroPolynomial("UniPoly::lowest of zero");
    return terms_.begin()->first;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

std::string UniPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = sgn(c) < 0;
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        Rational mag = negative ? Rational(-c) : c;
        if (e == 0) {
            out << rational_to_string(mag);
            continue;
        }
        if (mag != 1) out << rational_to_string(mag) << '*';
        out << "t^" << e;
    }
    return out.str();
}

UniPoly rho_apply(const SemigroupContext& ctx, const Poly& p) {
    UniPoly out;
    for (const auto& [e, c] : p.terms()) {
        long w = ctx.weight(e);
        for (long k = 0; k <= e.x; ++k) out.add_term(w + k * ctx.q, c * Rational(binom(e.x, k)));
    }
    return out;
}

long sigma_order(const SemigroupContext& ctx, const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("sigma_order of the zero polynomial");
    long best = -1;
    for (const auto& [e, c] : p.terms()) {
        long w = ctx.weight(e);
        if (best < 0 || w < best) best = w;
    }
    return best;
}

SigmaSplit sigma_split(const SemigroupContext& ctx, const Poly& p) {
    long ord = sigma_order(ctx, p);
    SigmaSplit s;
    for (const auto& [e, c] : p.terms()) (ctx.weight(e) == ord ? s.leading : s.tail).add_term(e, c);
    return s;
}

std::vector<Exponent> block_monomials(const SemigroupContext& ctx, long s, long j_lo, long j_hi) {
    ElementProfile prof = profile(ctx, s);
    std::vector<Exponent> out;
    for (long j = j_lo; j <= j_hi; ++j) {
        Exponent e = shift(prof.phi, j);
        if (!e.nonnegative() || ctx.weight(e) != s)
            throw std::logic_error("block_monomials: j=" + std::to_string(j) + " leaves the block of " +
                                   std::to_string(s));
        out.push_back(e);
    }
    return out;
}

std::vector<Exponent> wr_basis(const SemigroupContext& ctx, long r) {
    if (r <= 0 || !in_semigroup(ctx, r)) throw NotInSemigroup(std::to_string(r) + " is not a positive element of S");
    if (r >= ctx.la) throw OutOfValidatedRange("wr_basis: r >= L_a");
    ElementProfile prof = profile(ctx, r);
    return block_monomials(ctx, r, 0, prof.kappa);
}

}  // namespace kerrho
