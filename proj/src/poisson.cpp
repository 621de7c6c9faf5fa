#include "lacalc/poisson.hpp"

#include "lacalc/errors.hpp"
#include "lacalc/modular.hpp"

namespace lacalc {

PoissonBivector::PoissonBivector(std::vector<std::string> coordNames)
    : coords_(std::move(coordNames)), p_(coords_.size(), std::vector<Coeff>(coords_.size(), Coeff(coords_.size()))) {}

Coeff PoissonBivector::entry(std::size_t a, std::size_t b) const { return p_.at(a).at(b); }

void PoissonBivector::set(std::size_t a, std::size_t b, const Coeff& value) {
    if (a == b) throw Error("diagonal bivector entries are zero");
    if (value.nvars() != m()) throw Error("bivector entry over the wrong ring");
    p_.at(a).at(b) = value;
    p_.at(b).at(a) = -value;
}

Multivector PoissonBivector::asMultivector() const {
    Multivector out(m(), m());
    for (std::size_t a = 0; a < m(); ++a)
        for (std::size_t b = a + 1; b < m(); ++b) out.addTerm(bit(static_cast<int>(a)) | bit(static_cast<int>(b)), p_[a][b]);
    return out;
}

LieAlgebroid cotangentAlgebroid(const PoissonBivector& p) {
    std::vector<std::string> frame, coframe;
    for (const auto& c : p.coordNames()) {
        frame.push_back("d" + c);
        coframe.push_back("p" + c);
    }
    LieAlgebroid e(p.coordNames(), frame, coframe);
    const std::size_t m = p.m();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) e.setAnchor(a, b, p.entry(a, b));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Section s = e.zeroSection();
            for (std::size_t c = 0; c < m; ++c) s[c] = p.entry(a, b).partial(c);
            e.setBracket(a, b, s);
        }
    return e;
}

Multivector jacobiResidual(const PoissonBivector& p) {
    const LieAlgebroid tm = tangentAlgebroid(p.coordNames());
    const Multivector pm = p.asMultivector();
    return Rational(1, 2) * schouten(tm, pm, pm);
}

Form poissonModularForm(const PoissonBivector& p) {
    const LieAlgebroid e = cotangentAlgebroid(p);
    if (!validateAlgebroid(e).passes()) throw JacobiViolation("bivector does not satisfy the Jacobi identity");
    return modularRepresentative(e);
}

}  // namespace lacalc
