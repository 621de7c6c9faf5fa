#include "doctest.h"

#include "../common/fixtures.hpp"
#include "lacalc/modular.hpp"
#include "lacalc/poisson.hpp"

using namespace lacalc;

namespace {

Form form(const LieAlgebroid& e, const std::string& src) { return parseForm(src, e.coordNames(), e.coframeNames()); }

}  // namespace

TEST_CASE("morphism validation") {
    for (const auto& [name, e] : fixtures::corpus()) {
        CAPTURE(name);
        CHECK(validateMorphism(identityMorphism(e)).passes());
        CHECK(validateMorphism(anchorMorphism(e)).passes());
    }
    auto aff = fixtures::aff1();
    CHECK(validateMorphism(zeroMorphism(aff, aff)).passes());
    // A shear κ(X1) = X1 + X2 is an automorphism; exchanging X1 and X2 is not.
    Morphism shear{aff, aff, identityMatrix(2, 0)};
    shear.matrix[1][0] = Coeff::constant(0, 1);
    CHECK(validateMorphism(shear).passes());
    Morphism exchange{aff, aff, identityMatrix(2, 0)};
    std::swap(exchange.matrix[0], exchange.matrix[1]);
    auto report = validateMorphism(exchange);
    REQUIRE(report.bracket.size() == 2);
    CHECK(std::get<3>(report.bracket[0]) == Coeff::constant(0, 1));  // κ[X1,X2] − [X2,X1] = X1 + X2
    CHECK_THROWS_AS(validateMorphism(Morphism{aff, fixtures::tangent2(), CoeffMatrix(2, std::vector<Coeff>(2, Coeff(0)))}),
                    ChartMismatch);
    // A morphism whose anchors disagree.
    auto tm = fixtures::tangent2();
    Morphism swap{tm, tm, identityMatrix(2, 2)};
    std::swap(swap.matrix[0], swap.matrix[1]);
    CHECK_FALSE(validateMorphism(swap).anchor.empty());
}

TEST_CASE("pullback of divergences") {
    auto tm = fixtures::tangent2();
    auto div = divergenceFromOddVolume(tm, OddVolume(parseExpr("1+x^2", tm.coordNames())));
    auto pulled = pullbackDivergence(anchorMorphism(tm), div);
    CHECK(pulled.values == div.values);
    CHECK(pullbackDivergence(identityMorphism(tm), div).values == div.values);
    auto aff = fixtures::aff1();
    auto p = pullbackDivergence(anchorMorphism(aff), divergenceFromOddVolume(tangentAlgebroid({}), OddVolume::coordinate(0)));
    CHECK(p.values == zeroDivergence(aff).values);
}

TEST_CASE("modular forms of the anchor") {
    auto aff = fixtures::aff1();
    auto coord = OddVolume::coordinate(0);
    CHECK(modularOfMorphism(identityMorphism(aff), divergenceFromOddVolume(aff, coord), divergenceFromOddVolume(aff, coord))
              .isZero());
    CHECK(modularFromVolumes(aff, coord, coord) == form(aff, "a1"));
    CHECK(modularRepresentative(aff) == form(aff, "a1"));
    CHECK(modularRepresentative(fixtures::sl2()).isZero());
    CHECK(modularRepresentative(fixtures::tangent2()).isZero());
    auto tm = fixtures::tangent2();
    CHECK(modularFromVolumes(tm, OddVolume::coordinate(2), OddVolume::coordinate(2)).isZero());
}

TEST_CASE("route equality and closedness on the corpus") {
    for (const auto& [name, e] : fixtures::corpus()) {
        CAPTURE(name);
        auto routes = modularRoutes(e);
        CHECK(routes.agree());
        CHECK(deRham(e, routes.fromStructure).isZero());
    }
}

TEST_CASE("Lie-derivative and divergence routes agree for weighted volumes") {
    auto e = fixtures::aff1Line();
    auto f = parseExpr("1+x^2", e.coordNames());
    auto g = parseExpr("2+x", e.coordNames());
    CHECK(modularFromVolumes(e, OddVolume(f), OddVolume(g)) == modularFromLieDerivatives(e, OddVolume(f), OddVolume(g)));
}

TEST_CASE("volume rescaling shifts the representative by d log") {
    for (auto e : {fixtures::tangent2(), fixtures::poissonXdxdy(), fixtures::aff1Line()}) {
        const auto coord = OddVolume::coordinate(e.m());
        const auto f = parseExpr("1+x^2", e.coordNames());
        const auto base = modularFromVolumes(e, coord, coord);
        // Rescaling μ_E by F subtracts d log F; rescaling μ_M by F adds ρ*(d log F).
        CHECK(modularFromVolumes(e, OddVolume(f), coord) == base - dlog(e, f));
        CHECK(modularFromVolumes(e, coord, OddVolume(f)) == base + dlog(e, f));
        CHECK(deRham(e, dlog(e, f)).isZero());
    }
}

TEST_CASE("composition identity") {
    auto aff = fixtures::aff1();
    auto c0 = OddVolume::coordinate(0);
    for (const auto& k : {identityMorphism(aff), anchorMorphism(aff), zeroMorphism(aff, aff)}) {
        auto r = compositionCheck(k, c0, OddVolume(Coeff::constant(0, 3)), c0);
        CHECK(r.holds());
    }
    auto anchor = anchorMorphism(aff);
    auto ra = compositionCheck(anchor, c0, OddVolume::coordinate(0), c0);
    CHECK(ra.etaKappa == ra.eta1);
    auto zr = compositionCheck(zeroMorphism(aff, aff), c0, c0, c0);
    CHECK(zr.eta1 == form(aff, "a1"));
    CHECK(zr.etaKappa == form(aff, "a1"));
    CHECK(zr.pulledEta2.isZero());

    for (auto e : {fixtures::tangent2(), fixtures::aff1Line(), fixtures::poissonXdxdy()}) {
        const auto f = OddVolume(parseExpr("1+x^2", e.coordNames()));
        const auto g = OddVolume(parseExpr(e.m() > 1 ? "3+x^2+y^2" : "3+x^2", e.coordNames()));
        for (const auto& k : {identityMorphism(e), anchorMorphism(e)}) {
            auto r = compositionCheck(k, f, g, OddVolume::coordinate(e.m()));
            CHECK(r.holds());
        }
    }
}

TEST_CASE("class triviality") {
    auto aff = fixtures::aff1();
    CHECK(classTriviality(aff, form(aff, "a1"), 3).status == ClassStatus::NonTrivial);
    CHECK(classTriviality(fixtures::sl2(), modularRepresentative(fixtures::sl2()), 3).status == ClassStatus::Trivial);
    auto tm = fixtures::tangent2();
    auto exact = deRham(tm, Form::scalar(2, parseExpr("x^2*y - 3*y", tm.coordNames())));
    auto r = classTriviality(tm, exact, 3);
    REQUIRE(r.status == ClassStatus::Trivial);
    CHECK(deRham(tm, Form::scalar(2, *r.primitive)) == exact);
    CHECK(classTriviality(tm, exact, 2).status == ClassStatus::Undecided);
    // d log(1+x²) has no polynomial primitive.
    CHECK(classTriviality(tm, dlog(tm, parseExpr("1+x^2", tm.coordNames())), 4).status == ClassStatus::Undecided);
    auto line = fixtures::aff1Line();
    auto lr = classTriviality(line, modularRepresentative(line), 3);
    CHECK(lr.status != ClassStatus::NonTrivial);
}

TEST_CASE("cotangent algebroid conventions") {
    PoissonBivector p({"x", "y"});
    p.set(0, 1, parseExpr("x", p.coordNames()));
    auto e = cotangentAlgebroid(p);
    CHECK(e == fixtures::poissonXdxdy());
    CHECK(validateAlgebroid(e).passes());
    CHECK(anchorApply(e, e.frameSection(0), parseExpr("y", p.coordNames())) == parseExpr("x", p.coordNames()));
    CHECK(poissonModularForm(p) == form(e, "-2*py"));
    CHECK(jacobiResidual(p).isZero());
    auto routes = modularRoutes(e);
    CHECK(routes.agree());

    PoissonBivector sym({"x", "y"});
    sym.set(0, 1, Coeff::constant(2, 1));
    CHECK(cotangentAlgebroid(sym) == fixtures::poissonSymplectic2());
    CHECK(poissonModularForm(sym).isZero());
}

TEST_CASE("non-Jacobi bivector") {
    PoissonBivector p({"x", "y", "z"});
    p.set(0, 1, parseExpr("y", p.coordNames()));
    p.set(1, 2, parseExpr("x", p.coordNames()));
    auto e = cotangentAlgebroid(p);
    CHECK_FALSE(validateAlgebroid(e).passes());
    auto residual = jacobiResidual(p);
    CHECK(residual == -Multivector::basis(3, 3, 7) * parseExpr("x", p.coordNames()));
    CHECK_THROWS_AS(poissonModularForm(p), JacobiViolation);
}

TEST_CASE("symplectic constancy in dimension four") {
    PoissonBivector p({"a", "b", "c", "d"});
    p.set(0, 1, Coeff::constant(4, 1));
    p.set(2, 3, Coeff::constant(4, 2));
    p.set(0, 3, Coeff::constant(4, -1));
    CHECK(jacobiResidual(p).isZero());
    CHECK(poissonModularForm(p).isZero());
}
