#include "lacalc/coeff.hpp"

#include "lacalc/errors.hpp"

namespace lacalc {

Coeff::Coeff(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.nvars(), 1)) {}

Coeff::Coeff(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw DivisionByZero();
    if (num_.nvars() != den_.nvars()) throw Error("polynomial rings differ");
    normalize();
}

Coeff Coeff::constant(std::size_t nvars, const Rational& c) { return Coeff(Poly::constant(nvars, c)); }

Coeff Coeff::variable(std::size_t nvars, std::size_t index) {
    return Coeff(Poly::variable(nvars, index));
}

Rational Coeff::constantValue() const {
    if (!isConstant()) throw Error("coefficient is not constant");
    return num_.constantValue();
}

void Coeff::normalize() {
    if (num_.isZero()) {
        den_ = Poly::constant(num_.nvars(), 1);
        return;
    }
    if (den_.isConstant()) {
        num_ *= 1 / den_.leadingCoefficient();
        den_ = Poly::constant(num_.nvars(), 1);
        return;
    }
    const Poly g = gcd(num_, den_);
    if (!g.isOne()) {
        num_ = num_.divExact(g);
        den_ = den_.divExact(g);
    }
    const Rational lc = den_.leadingCoefficient();
    if (lc != 1) {
        num_ *= 1 / lc;
        den_ *= 1 / lc;
    }
}

Coeff Coeff::operator-() const {
    Coeff r = *this;
    r.num_ = -r.num_;
    return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    if (isPolynomial() && o.isPolynomial()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
    if (isPolynomial() && o.isPolynomial()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Coeff& Coeff::operator*=(const Rational& c) {
    num_ *= c;
    if (num_.isZero()) den_ = Poly::constant(num_.nvars(), 1);
    return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) { return *this *= o.inverse(); }

Coeff Coeff::inverse() const {
    if (isZero()) throw DivisionByZero();
    return Coeff(den_, num_);
}

Coeff Coeff::pow(unsigned e) const {
    Coeff r = *this;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

Coeff Coeff::partial(std::size_t var) const {
    if (var >= nvars()) throw Error("partial derivative index out of range");
    if (isPolynomial()) return Coeff(num_.derivative(var));
    return Coeff(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

bool Coeff::isSingleTerm() const { return isPolynomial() && num_.terms().size() <= 1; }

std::string Coeff::str(const std::vector<std::string>& names) const {
    if (isPolynomial()) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

std::string Coeff::factorStr(const std::vector<std::string>& names) const {
    if (isSingleTerm() || !isPolynomial()) return str(names);
    return "(" + str(names) + ")";
}

Coeff arith(const Coeff& x, const Coeff& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div:
            if (y.isZero()) throw DivisionByZero();
            return x / y;
    }
    throw Error("unknown arithmetic operation");
}

}  // namespace lacalc
