#pragma once

#include <string>
#include <vector>

#include "lacalc/poly.hpp"

namespace lacalc {

/// Element of the coefficient ring: a reduced fraction num/den of polynomials.
///
/// The denominator is monic under grlex and coprime to the numerator, so the
/// representation is canonical and equality (and the zero test) is syntactic.
/// A denominator of 1 is the polynomial case; arithmetic on two polynomial
/// values never computes a gcd.
class Coeff {
public:
    explicit Coeff(std::size_t nvars = 0) : num_(nvars), den_(Poly::constant(nvars, 1)) {}
    explicit Coeff(Poly p);
    Coeff(Poly num, Poly den);

    static Coeff constant(std::size_t nvars, const Rational& c);
    static Coeff variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isPolynomial() const { return den_.isOne(); }
    bool isConstant() const { return num_.isConstant() && den_.isOne(); }
    /// Constant value; throws unless isConstant().
    Rational constantValue() const;

    Coeff operator-() const;
    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);
    Coeff& operator/=(const Coeff& o);
    Coeff& operator*=(const Rational& c);
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
    friend Coeff operator*(Coeff a, const Rational& c) { return a *= c; }
    friend Coeff operator*(const Rational& c, Coeff a) { return a *= c; }
    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    Coeff pow(unsigned e) const;
    Coeff inverse() const;
    /// Formal partial derivative in variable `var` (quotient rule for fractions).
    Coeff partial(std::size_t var) const;

    /// Canonical text: the numerator alone when the denominator is 1,
    /// otherwise `(num)/(den)`.
    std::string str(const std::vector<std::string>& names) const;
    /// Like str(), but parenthesized whenever the text would not bind as a
    /// single factor of a product.
    std::string factorStr(const std::vector<std::string>& names) const;
    /// True when the value prints as a single signed product (no top-level sum).
    bool isSingleTerm() const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Binary ring operation in canonical form; Div by zero throws DivisionByZero.
Coeff arith(const Coeff& x, const Coeff& y, ArithOp op);

}  // namespace lacalc
