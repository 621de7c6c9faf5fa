#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lacalc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector of a monomial; its length is the number of ring variables.
using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest first: total degree, then the
/// exponent of the first variable, then the second, and so on.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint64_t totalDegree(const Exponents& e);

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept in descending grlex order with no zero coefficients, so
/// two polynomials are equal exactly when their term maps are equal.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t index);
    static Poly monomial(const Exponents& e, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    bool isOne() const;
    /// Constant term value; only meaningful when isConstant().
    Rational constantValue() const;

    const Exponents& leadingExponents() const { return terms_.begin()->first; }
    const Rational& leadingCoefficient() const { return terms_.begin()->second; }

    std::uint64_t totalDegree() const;
    std::uint32_t degreeIn(std::size_t var) const;
    /// Highest-index variable occurring in the polynomial, or -1 for constants.
    int highestVariable() const;

    /// Adds c·x^e, dropping the term if the coefficient cancels.
    void addTerm(const Exponents& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;
    Poly derivative(std::size_t var) const;

    /// Exact division; throws lacalc::Error when `d` does not divide *this.
    Poly divExact(const Poly& d) const;
    /// Returns {q, r} with *this = q·d + r and no term of r divisible by lt(d).
    std::pair<Poly, Poly> divMod(const Poly& d) const;

    /// Coefficients of *this viewed as a univariate polynomial in `var`.
    std::map<std::uint32_t, Poly> coefficientsIn(std::size_t var) const;

    /// Divides by the leading coefficient; zero stays zero.
    Poly monic() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

/// Monic greatest common divisor (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace lacalc
