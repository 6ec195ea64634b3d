#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kerrho/matrix.hpp"
#include "kerrho/semigroup.hpp"

namespace kerrho {

class ZeroPolynomial : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInSemigroup : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OutOfValidatedRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sparse polynomial in x, y, z over the rationals; zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Exponent, Rational>;

    Poly() = default;
    static Poly monomial(const Exponent& e, const Rational& c = 1);
    static Poly parse(const std::string& text);

    void add_term(const Exponent& e, const Rational& c);
    Rational coeff(const Exponent& e) const;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Descending total degree, then lexicographic with x > y > z.
    std::vector<std::pair<Exponent, Rational>> canonical_terms() const;
    std::string to_string() const;

private:
    Terms terms_;
};

// Sparse polynomial in t over the rationals.
class UniPoly {
public:
    void add_term(long e, const Rational& c);
    Rational coeff(long e) const;
    const std::map<long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long lowest() const;
    bool operator==(const UniPoly& o) const { return terms_ == o.terms_; }
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator+(const UniPoly& o) const;
    std::string to_string() const;

private:
    std::map<long, Rational> terms_;
};

struct SigmaSplit {
    Poly leading;
    Poly tail;
};

UniPoly rho_apply(const SemigroupContext& ctx, const Poly& p);

long sigma_order(const SemigroupContext& ctx, const Poly& p);

SigmaSplit sigma_split(const SemigroupContext& ctx, const Poly& p);

// phi_r + j*omega for 0 <= j <= kappa_r.
std::vector<Exponent> wr_basis(const SemigroupContext& ctx, long r);

// phi_s + j*omega for j in [j_lo, j_hi], without the range guard of wr_basis.
std::vector<Exponent> block_monomials(const SemigroupContext& ctx, long s, long j_lo, long j_hi);

std::string monomial_to_string(const Exponent& e);

}  // namespace kerrho
