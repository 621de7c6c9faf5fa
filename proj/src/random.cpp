#include "lacalc/random.hpp"

namespace lacalc {

int RandomSource::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational RandomSource::rational(int range) {
    Rational r(integer(-range, range), integer(1, range));
    r.canonicalize();
    return r;
}

Coeff RandomSource::coeff(std::size_t nvars, unsigned maxDegree, unsigned terms) {
    Poly p(nvars);
    if (nvars == 0) return Coeff(Poly::constant(0, rational()));
    const unsigned count = static_cast<unsigned>(integer(1, static_cast<int>(terms)));
    for (unsigned t = 0; t < count; ++t) {
        Exponents e(nvars, 0);
        const int deg = integer(0, static_cast<int>(maxDegree));
        for (int d = 0; d < deg; ++d) ++e[static_cast<std::size_t>(integer(0, static_cast<int>(nvars) - 1))];
        p.addTerm(e, rational());
    }
    return Coeff(p);
}

template <class Kind>
Graded<Kind> RandomSource::graded(const LieAlgebroid& e, int degree, unsigned maxDegree) {
    Graded<Kind> out(e.n(), e.m());
    if (degree < 0 || static_cast<std::size_t>(degree) > e.n()) return out;
    for (Mask m : basisOfDegree(e.n(), static_cast<std::size_t>(degree)))
        if (integer(0, 3) != 0) out.addTerm(m, coeff(e.m(), maxDegree));
    return out;
}

Multivector RandomSource::multivector(const LieAlgebroid& e, int degree, unsigned maxDegree) {
    return graded<VectorKind>(e, degree, maxDegree);
}

Form RandomSource::form(const LieAlgebroid& e, int degree, unsigned maxDegree) {
    return graded<CovectorKind>(e, degree, maxDegree);
}

Section RandomSource::section(const LieAlgebroid& e, unsigned maxDegree) {
    Section s = e.zeroSection();
    for (auto& c : s)
        if (integer(0, 3) != 0) c = coeff(e.m(), maxDegree);
    return s;
}

}  // namespace lacalc
