#include "lacalc/homology.hpp"

#include "lacalc/errors.hpp"

namespace lacalc {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void requireFinite(const LieAlgebroid& e) {
    if (e.m() != 0) throw NotFiniteDimensional("homology is only computed for Lie algebras (m = 0)");
}

void requireClosed(const LieAlgebroid& e, const std::optional<Form>& phi) {
    if (!phi) return;
    if (phi->rank() != e.n() || !phi->isHomogeneous() || phi->degree(1) != 1)
        throw Error("deformation must be a 1-form");
    if (!deRham(e, *phi).isZero()) throw NotClosed("deformation 1-form is not closed");
}

Rational constantOf(const Coeff& c) { return c.isZero() ? Rational(0) : c.constantValue(); }

/// Matrix of a linear operator from degree k to degree target in the lex basis.
template <class Elem, class Op>
RationalMatrix matrixOf(std::size_t n, std::size_t k, long target, Op op) {
    if (target < 0 || static_cast<std::size_t>(target) > n) return RationalMatrix(0, binomial(n, k));
    const auto rows = basisOfDegree(n, static_cast<std::size_t>(target));
    const auto cols = basisOfDegree(n, k);
    RationalMatrix mat(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Elem image = op(Elem::basis(n, 0, cols[c]));
        for (std::size_t r = 0; r < rows.size(); ++r) mat.at(r, c) = constantOf(image.coefficient(rows[r]));
    }
    return mat;
}

}  // namespace

bool ChainComplex::compositionZero() const {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        const RationalMatrix product = direction == Direction::Raising ? maps[k + 1] * maps[k] : maps[k] * maps[k + 1];
        if (!product.isZero()) return false;
    }
    return true;
}

ChainComplex buildCochain(const LieAlgebroid& e, const std::optional<Form>& phi) {
    requireFinite(e);
    requireClosed(e, phi);
    ChainComplex c{Direction::Raising, e.n(), {}};
    for (std::size_t k = 0; k <= e.n(); ++k)
        c.maps.push_back(matrixOf<Form>(e.n(), k, static_cast<long>(k) + 1, [&](const Form& w) {
            return phi ? wittenDifferential(e, *phi, w) : deRham(e, w);
        }));
    return c;
}

ChainComplex buildChain(const LieAlgebroid& e, const OddVolume& mu, const std::optional<Form>& phi) {
    requireFinite(e);
    requireClosed(e, phi);
    ChainComplex c{Direction::Lowering, e.n(), {}};
    for (std::size_t k = 0; k <= e.n(); ++k)
        c.maps.push_back(matrixOf<Multivector>(e.n(), k, static_cast<long>(k) - 1, [&](const Multivector& a) {
            return phi ? deformedGenerating(e, mu, *phi, a) : generatingFromOddVolume(e, mu, a);
        }));
    return c;
}

std::vector<std::size_t> betti(const ChainComplex& c) {
    std::vector<std::size_t> ranks;
    for (const auto& m : c.maps) ranks.push_back(rank(m));
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= c.n; ++k) {
        const std::size_t kernel = binomial(c.n, k) - ranks[k];
        std::size_t image = 0;
        if (c.direction == Direction::Raising && k > 0) image = ranks[k - 1];
        if (c.direction == Direction::Lowering && k < c.n) image = ranks[k + 1];
        dims.push_back(kernel - image);
    }
    return dims;
}

DualityReport dualityCheck(const LieAlgebroid& e, const OddVolume& mu, const std::optional<Form>& phi) {
    DualityReport report;
    report.cohomology = betti(buildCochain(e, phi));
    report.homology = betti(buildChain(e, mu, phi));
    report.duality = true;
    const std::size_t n = e.n();
    for (std::size_t k = 0; k <= n; ++k)
        if (report.cohomology[k] != report.homology[n - k]) report.duality = false;
    return report;
}

IndependenceReport homologyIndependence(const LieAlgebroid& e, const OddVolume& mu1, const OddVolume& mu2) {
    const ChainComplex c1 = buildChain(e, mu1), c2 = buildChain(e, mu2);
    IndependenceReport report;
    report.first = betti(c1);
    report.second = betti(c2);
    report.sameMatrices = c1.maps == c2.maps;
    return report;
}

}  // namespace lacalc
