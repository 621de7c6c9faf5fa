#include "doctest.h"

#include "../common/fixtures.hpp"
#include "../common/oracles.hpp"
#include "lacalc/homology.hpp"

using namespace lacalc;
using namespace oracles;

namespace {

Form toForm(const LieAlgebroid& e, const std::vector<Rational>& v) {
    Form f(e.n(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) f.addTerm(bit(int(i)), Coeff::constant(0, v[i]));
    return f;
}

long euler(const std::vector<std::size_t>& d) {
    long s = 0;
    for (std::size_t k = 0; k < d.size(); ++k) s += (k % 2 ? -1 : 1) * long(d[k]);
    return s;
}

std::vector<LieAlgebroid> lieAlgebras() {
    std::vector<LieAlgebroid> out = {fixtures::aff1(), fixtures::heisenberg3(), fixtures::sl2(),
                                     fixtures::r3("2"), fixtures::r3("-1"), fixtures::r3("1/3"), fixtures::r3("0")};
    for (std::size_t k = 1; k <= 6; ++k) out.push_back(fixtures::abelian(k));
    return out;
}

}  // namespace

TEST_CASE("aff(1) complexes") {
    auto e = fixtures::aff1();
    auto coch = buildCochain(e);
    // d α^1 = 0, d α^2 = −α^{12}
    CHECK(coch.maps[1].rows() == 1);
    CHECK(coch.maps[1].at(0, 0) == 0);
    CHECK(coch.maps[1].at(0, 1) == -1);
    auto ch = buildChain(e, OddVolume::coordinate(0));
    CHECK(ch.maps[1].at(0, 0) == 1);
    CHECK(ch.maps[1].at(0, 1) == 0);
    CHECK(ch.maps[2].isZero());
    CHECK(betti(coch) == std::vector<std::size_t>{1, 1, 0});
    CHECK(betti(ch) == std::vector<std::size_t>{0, 1, 1});
    CHECK(ch.maps == buildChain(e, OddVolume::coordinate(0).negated()).maps);
}

TEST_CASE("sl2 Betti numbers") {
    auto r = dualityCheck(fixtures::sl2(), OddVolume::coordinate(0));
    CHECK(r.cohomology == std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(r.homology == std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(r.duality);
}

TEST_CASE("abelian Betti numbers are binomial") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto e = fixtures::abelian(n);
        auto b = betti(buildCochain(e));
        for (std::size_t k = 0; k <= n; ++k) CHECK(b[k] == basisOfDegree(n, k).size());
        for (const auto& m : buildCochain(e).maps) CHECK(m.isZero());
        for (const auto& m : buildChain(e, OddVolume::coordinate(0)).maps) CHECK(m.isZero());
    }
}

TEST_CASE("duality and oracle agreement on Lie algebras") {
    for (const auto& e : lieAlgebras()) {
        CAPTURE(e.n());
        const auto tr = traceForm(e);
        for (bool deformed : {false, true}) {
            std::optional<Form> phi;
            std::vector<Rational> phiv(e.n());
            if (deformed) {
                phi = toForm(e, tr);
                phiv = tr;
            }
            auto coch = buildCochain(e, phi);
            auto ch = buildChain(e, OddVolume::coordinate(0), phi);
            CHECK(coch.compositionZero());
            CHECK(ch.compositionZero());
            auto report = dualityCheck(e, OddVolume::coordinate(0), phi);
            CHECK(report.duality);
            CHECK(report.cohomology == oracleCohomology(e, phiv));
            // ∂ − i_φ is the Chevalley-Eilenberg boundary twisted by tr∘ad − φ
            std::vector<Rational> chi(e.n());
            for (std::size_t i = 0; i < e.n(); ++i) chi[i] = tr[i] - phiv[i];
            CHECK(report.homology == oracleHomology(e, chi));
            if (e.n() > 0) {
                CHECK(euler(report.cohomology) == 0);
                CHECK(euler(report.homology) == 0);
            }
        }
    }
}

TEST_CASE("Heisenberg Betti numbers") {
    auto r = dualityCheck(fixtures::heisenberg3(), OddVolume::coordinate(0));
    CHECK(r.cohomology == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(r.duality);
}

TEST_CASE("volume independence") {
    auto e = fixtures::aff1();
    auto mu = OddVolume::coordinate(0);
    auto r1 = homologyIndependence(e, mu, OddVolume(Coeff::constant(0, 5)));
    CHECK(r1.sameMatrices);
    CHECK(r1.sameHomology());
    auto r2 = homologyIndependence(e, mu, mu.negated());
    CHECK(r2.sameMatrices);

    // sl2 in a new frame: Betti tables agree with the original.
    auto sl2 = fixtures::sl2();
    CoeffMatrix a(3, std::vector<Coeff>(3, Coeff(0)));
    const int entries[3][3] = {{1, 2, 0}, {0, 1, 1}, {1, 0, 3}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = Coeff::constant(0, entries[i][j]);
    auto other = reframe(sl2, a);
    CHECK(validateAlgebroid(other).passes());
    CHECK(betti(buildChain(other, OddVolume(Coeff::constant(0, 7)))) == betti(buildChain(sl2, mu)));
    CHECK(betti(buildCochain(other)) == betti(buildCochain(sl2)));

    // Reordering the basis (a permutation frame change) leaves every table unchanged.
    auto r3 = fixtures::r3("2");
    CoeffMatrix perm(3, std::vector<Coeff>(3, Coeff(0)));
    perm[2][0] = perm[0][1] = perm[1][2] = Coeff::constant(0, 1);
    auto permuted = reframe(r3, perm);
    CHECK(betti(buildCochain(permuted)) == betti(buildCochain(r3)));
    CHECK(betti(buildChain(permuted, mu)) == betti(buildChain(r3, mu)));
}

TEST_CASE("homology errors") {
    CHECK_THROWS_AS(buildCochain(fixtures::tangent2()), NotFiniteDimensional);
    auto e = fixtures::aff1();
    auto phi = parseForm("a2", {}, e.coframeNames());
    CHECK_THROWS_AS(buildCochain(e, phi), NotClosed);
    CHECK_THROWS_AS(buildChain(e, OddVolume::coordinate(0), phi), NotClosed);
}
