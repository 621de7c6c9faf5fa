#include "lacalc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lacalc/errors.hpp"

namespace lacalc {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = lacalc::totalDegree(a);
    const auto db = lacalc::totalDegree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::uint64_t totalDegree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.addTerm(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& e, const Rational& c) {
    Poly p(e.size());
    p.addTerm(e, c);
    return p;
}

bool Poly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && lacalc::totalDegree(terms_.begin()->first) == 0);
}

bool Poly::isOne() const { return isConstant() && !isZero() && leadingCoefficient() == 1; }

Rational Poly::constantValue() const { return isZero() ? Rational(0) : leadingCoefficient(); }

std::uint64_t Poly::totalDegree() const {
    return isZero() ? 0 : lacalc::totalDegree(leadingExponents());
}

std::uint32_t Poly::degreeIn(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int Poly::highestVariable() const {
    int h = -1;
    for (const auto& [e, c] : terms_)
        for (int v = static_cast<int>(nvars_) - 1; v > h; --v)
            if (e[v] != 0) {
                h = v;
                break;
            }
    return h;
}

void Poly::addTerm(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw Error("monomial arity does not match polynomial ring");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.nvars_ != nvars_) throw Error("polynomial rings differ");
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.nvars_ != nvars_) throw Error("polynomial rings differ");
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw Error("polynomial rings differ");
    Poly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            r.addTerm(e, ca * cb);
        }
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(nvars_, 1);
    Poly base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.addTerm(d, c * e[var]);
    }
    return r;
}

namespace {

bool divides(const Exponents& d, const Exponents& e) {
    for (std::size_t v = 0; v < e.size(); ++v)
        if (d[v] > e[v]) return false;
    return true;
}

Exponents quotient(const Exponents& e, const Exponents& d) {
    Exponents q(e.size());
    for (std::size_t v = 0; v < e.size(); ++v) q[v] = e[v] - d[v];
    return q;
}

}  // namespace

std::pair<Poly, Poly> Poly::divMod(const Poly& d) const {
    if (d.isZero()) throw DivisionByZero();
    Poly q(nvars_), r(nvars_), rest = *this;
    const auto& ld = d.leadingExponents();
    const auto& lc = d.leadingCoefficient();
    while (!rest.isZero()) {
        const auto le = rest.leadingExponents();
        const auto lcoef = rest.leadingCoefficient();
        if (divides(ld, le)) {
            Poly t = monomial(quotient(le, ld), lcoef / lc);
            q += t;
            rest -= t * d;
        } else {
            r.addTerm(le, lcoef);
            rest.terms_.erase(rest.terms_.begin());
        }
    }
    return {std::move(q), std::move(r)};
}

Poly Poly::divExact(const Poly& d) const {
    if (d.isZero()) throw DivisionByZero();
    if (d.isConstant()) return *this * (1 / d.leadingCoefficient());
    auto [q, r] = divMod(d);
    if (!r.isZero()) throw Error("inexact polynomial division");
    return q;
}

std::map<std::uint32_t, Poly> Poly::coefficientsIn(std::size_t var) const {
    std::map<std::uint32_t, Poly> out;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[var] = 0;
        out.try_emplace(e[var], nvars_).first->second.addTerm(rest, c);
    }
    return out;
}

Poly Poly::monic() const {
    if (isZero()) return *this;
    return *this * (1 / leadingCoefficient());
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unitMonomial = lacalc::totalDegree(e) == 0;
        bool needStar = false;
        if (mag != 1 || unitMonomial) {
            os << mag.get_str();
            needStar = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (needStar) os << '*';
            os << names.at(v);
            if (e[v] > 1) os << '^' << e[v];
            needStar = true;
        }
    }
    return os.str();
}

namespace {

/// Pseudo-remainder of a by b as univariate polynomials in `var`.
Poly pseudoRemainder(Poly a, const Poly& b, std::size_t var) {
    const auto db = b.degreeIn(var);
    auto bc = b.coefficientsIn(var);
    const Poly lb = bc.rbegin()->second;
    while (!a.isZero()) {
        const auto da = a.degreeIn(var);
        if (da < db) break;
        auto ac = a.coefficientsIn(var);
        const Poly la = ac.rbegin()->second;
        Exponents shift(a.nvars(), 0);
        shift[var] = da - db;
        a = lb * a - la * Poly::monomial(shift, 1) * b;
    }
    return a;
}

Poly contentIn(const Poly& p, std::size_t var) {
    Poly g(p.nvars());
    for (const auto& [deg, coeff] : p.coefficientsIn(var)) {
        g = gcd(g, coeff);
        if (g.isOne()) break;
    }
    return g;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) throw Error("polynomial rings differ");
    if (a.isZero()) return b.monic();
    if (b.isZero()) return a.monic();
    const int va = a.highestVariable();
    const int vb = b.highestVariable();
    if (va < 0 || vb < 0) return Poly::constant(a.nvars(), 1);
    const auto var = static_cast<std::size_t>(std::max(va, vb));

    // Content/primitive-part split with respect to the main variable.
    const Poly ca = contentIn(a, var);
    const Poly cb = contentIn(b, var);
    const Poly content = gcd(ca, cb);
    Poly p = a.divExact(ca);
    Poly q = b.divExact(cb);
    if (p.degreeIn(var) < q.degreeIn(var)) std::swap(p, q);
    while (!q.isZero()) {
        Poly r = pseudoRemainder(p, q, var);
        p = std::move(q);
        if (r.isZero()) break;
        q = r.divExact(contentIn(r, var));
    }
    Poly g = p.degreeIn(var) == 0 ? Poly::constant(a.nvars(), 1) : p.divExact(contentIn(p, var));
    return (content * g).monic();
}

}  // namespace lacalc
