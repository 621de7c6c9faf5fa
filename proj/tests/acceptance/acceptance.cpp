// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "../common/fixtures.hpp"
#include "../common/oracles.hpp"
#include "lacalc/calculus.hpp"
#include "lacalc/homology.hpp"
#include "lacalc/io.hpp"
#include "lacalc/metric.hpp"
#include "lacalc/modular.hpp"
#include "lacalc/poisson.hpp"
#include "lacalc/random.hpp"

using namespace lacalc;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240917;

/// Collects the reasons a criterion failed.
class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        ok_ = ok_ && ok;
    }
    bool ok() const { return ok_; }
    std::string detail() const {
        std::string s;
        for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
        return s;
    }

private:
    bool ok_ = true;
    std::vector<std::string> failures_;
};

int sign(int k) { return k % 2 == 0 ? 1 : -1; }

std::string corpusPath(const std::string& name) { return std::string(LACALC_SOURCE_DIR) + "/corpus/" + name + ".json"; }

const std::vector<std::string> kPassing{"aff1",     "heisenberg3",         "sl2",           "r3",       "abelian4",
                                        "tangent2", "poisson-symplectic2", "poisson-xdxdy", "aff1-line"};

LieAlgebroid loadAny(const std::string& name) {
    const std::string text = readFile(corpusPath(name));
    if (isBivectorText(text)) return cotangentAlgebroid(parseBivector(text));
    return parseAlgebroid(text).algebroid;
}

std::vector<std::pair<std::string, LieAlgebroid>> corpus() {
    std::vector<std::pair<std::string, LieAlgebroid>> out;
    for (const auto& name : kPassing) out.emplace_back(name, loadAny(name));
    return out;
}

Form rationalForm(const LieAlgebroid& e, const std::vector<Rational>& v) {
    Form f(e.n(), e.m());
    for (std::size_t i = 0; i < v.size(); ++i) f.addTerm(bit(int(i)), Coeff::constant(e.m(), v[i]));
    return f;
}

// Axiom suite.
void criterion1(Check& c) {
    for (const auto& [name, e] : corpus()) {
        c.require(validateAlgebroid(e).passes(), name + " fails validation");
        RandomSource rnd(kSeed);
        for (int t = 0; t < 100; ++t) {
            const Form w = rnd.form(e, rnd.integer(0, static_cast<int>(e.n())));
            c.require(deRham(e, deRham(e, w)).isZero(), name + ": d^2 != 0");
        }
    }
    for (const auto& name : {"broken", "poisson-broken3"}) {
        const ValidationReport r = validateAlgebroid(loadAny(name));
        bool nonzero = !r.passes();
        for (const auto& x : r.jacobi) nonzero = nonzero && !x.value.isZero();
        for (const auto& x : r.anchor) nonzero = nonzero && !x.value.isZero();
        c.require(nonzero, std::string(name) + " is not rejected");
    }
}

// Generating property of the Schouten bracket and agreement of the two constructions.
void criterion2(Check& c) {
    for (const auto& [name, e] : corpus()) {
        RandomSource rnd(kSeed + 2);
        const int n = static_cast<int>(e.n());
        const OddVolume mu = OddVolume::coordinate(e.m());
        const Divergence div = divergenceFromOddVolume(e, mu);
        auto viaDivergence = [&](const Multivector& x) { return generatingFromDivergence(e, div, x); };
        auto viaVolume = [&](const Multivector& x) { return generatingFromOddVolume(e, mu, x); };
        for (int t = 0; t < 100; ++t) {
            const int ka = rnd.integer(0, n), kb = rnd.integer(0, n - ka);
            const Multivector a = rnd.multivector(e, ka), b = rnd.multivector(e, kb);
            const Multivector ab = wedge(a, b);
            Multivector rhs = viaVolume(ab) - wedge(viaVolume(a), b) - sign(ka) * e.one() * wedge(a, viaVolume(b));
            if (ka % 2 != 0) rhs = -rhs;
            c.require(schouten(e, a, b) == rhs, name + ": generating property");
            c.require(viaVolume(a) == viaDivergence(a) && viaVolume(b) == viaDivergence(b) &&
                          viaVolume(ab) == viaDivergence(ab),
                      name + ": constructions differ");
        }
    }
}

// Divergence of the Levi-Civita connection equals the metric-volume divergence.
void criterion3(Check& c) {
    for (const auto& name : {"aff1", "heisenberg3", "sl2", "tangent2"}) {
        const AlgebroidFile f = loadAlgebroid(corpusPath(name));
        if (!f.metric) {
            c.require(false, std::string(name) + " has no metric");
            continue;
        }
        const LieAlgebroid& e = f.algebroid;
        const Connection nabla = leviCivita(e, *f.metric);
        c.require(torsionResidual(e, nabla).empty(), std::string(name) + ": torsion");
        c.require(metricityResidual(e, nabla, *f.metric).empty(), std::string(name) + ": metricity");
        c.require(divergenceFromConnection(e, nabla).values == divergenceFromMetricVolume(e, *f.metric).values,
                  std::string(name) + ": divergences differ");
    }
    const AlgebroidFile tm = loadAlgebroid(corpusPath("tangent2"));
    c.require(tm.metric && tm.metric->g[1][1] == parseExpr("1 + x^2", tm.algebroid.coordNames()),
              "tangent2 metric is not diag(1, 1+x^2)");
}

Connection symmetricConnection(const LieAlgebroid& e, const std::vector<std::tuple<int, int, int, std::string>>& entries) {
    Connection nabla(e.n(), e.m());
    for (const auto& [k, i, j, src] : entries) {
        nabla.setGamma(k, i, j, parseExpr(src, e.coordNames()));
        nabla.setGamma(k, j, i, parseExpr(src, e.coordNames()));
    }
    return nabla;
}

// Curvature lemma: operator identity iff Ricci symmetry and Bianchi.
void criterion4(Check& c) {
    for (const auto& name : {"aff1", "heisenberg3", "sl2", "tangent2"}) {
        const AlgebroidFile f = loadAlgebroid(corpusPath(name));
        const Connection nabla = leviCivita(f.algebroid, *f.metric);
        const CurvatureIdentityReport r = curvatureIdentityCheck(f.algebroid, nabla);
        c.require(r.operatorIdentity && r.ricciSymmetric && r.bianchi, std::string(name) + ": a condition is false");
        c.require(r.operatorIdentity == oracles::operatorIdentityOracle(f.algebroid, nabla),
                  std::string(name) + ": operator identity disagrees with oracle");
    }
    // Torsion-free connections on the tangent algebroid of R^3 whose Ricci tensor is not symmetric.
    const LieAlgebroid r3 = tangentAlgebroid({"x", "y", "z"});
    const std::vector<std::vector<std::tuple<int, int, int, std::string>>> adversarial{
        {{0, 0, 0, "y"}},
        {{2, 0, 1, "x"}, {1, 1, 2, "x"}, {0, 2, 2, "1"}},
    };
    for (const auto& entries : adversarial) {
        const Connection nabla = symmetricConnection(r3, entries);
        const CurvatureIdentityReport r = curvatureIdentityCheck(r3, nabla);
        c.require(r.torsionFree, "adversarial connection has torsion");
        c.require(!r.operatorIdentity && !r.ricciSymmetric, "adversarial connection satisfies the identity");
        c.require(r.equivalence(), "equivalence fails on an adversarial connection");
        c.require(r.operatorIdentity == oracles::operatorIdentityOracle(r3, nabla),
                  "adversarial operator identity disagrees with oracle");
    }
}

// Poincaré duality, plain and deformed by the modular representative.
void criterion5(Check& c) {
    std::vector<std::pair<std::string, LieAlgebroid>> algebras{{"aff1", fixtures::aff1()},
                                                               {"sl2", fixtures::sl2()},
                                                               {"h3", fixtures::heisenberg3()},
                                                               {"r3(2)", fixtures::r3("2")},
                                                               {"r3(-1)", fixtures::r3("-1")},
                                                               {"r3(1/3)", fixtures::r3("1/3")}};
    for (std::size_t k = 1; k <= 6; ++k) algebras.emplace_back("abelian" + std::to_string(k), fixtures::abelian(k));
    for (const auto& [name, e] : algebras) {
        const auto trace = oracles::traceForm(e);
        const std::vector<Rational> zero(e.n());
        const Form phi = modularRepresentative(e);
        c.require(phi == rationalForm(e, trace), name + ": modular representative is not the trace form");

        const DualityReport plain = dualityCheck(e, OddVolume::coordinate(0));
        c.require(plain.duality, name + ": duality fails");
        c.require(plain.cohomology == oracles::oracleCohomology(e, zero), name + ": cohomology differs from oracle");
        c.require(plain.homology == oracles::oracleHomology(e, trace), name + ": homology differs from oracle");

        const DualityReport deformed = dualityCheck(e, OddVolume::coordinate(0), phi);
        c.require(deformed.duality, name + ": deformed duality fails");
        c.require(deformed.cohomology == oracles::oracleCohomology(e, trace), name + ": deformed cohomology differs");
        c.require(deformed.homology == oracles::oracleHomology(e, zero), name + ": deformed homology differs");
    }
    const DualityReport aff = dualityCheck(fixtures::aff1(), OddVolume::coordinate(0));
    c.require(aff.cohomology == std::vector<std::size_t>{1, 1, 0} && aff.homology == std::vector<std::size_t>{0, 1, 1},
              "aff1 Betti numbers");
    const DualityReport sl = dualityCheck(fixtures::sl2(), OddVolume::coordinate(0));
    c.require(sl.cohomology == std::vector<std::size_t>{1, 0, 0, 1} && sl.homology == std::vector<std::size_t>{1, 0, 0, 1},
              "sl2 Betti numbers");
}

// Modular class routes, triviality for TM, the trace form of aff(1), composition.
void criterion6(Check& c) {
    for (const auto& [name, e] : corpus()) {
        c.require(modularRoutes(e).agree(), name + ": routes disagree");
        const OddVolume mu = OddVolume::coordinate(e.m());
        std::vector<Morphism> morphisms{identityMorphism(e), anchorMorphism(e)};
        if (e.m() == 0) morphisms.push_back(zeroMorphism(e, e));
        for (const auto& k : morphisms) {
            c.require(validateMorphism(k).passes(), name + ": morphism invalid");
            c.require(compositionCheck(k, mu, OddVolume::coordinate(k.target.m()), mu).holds(),
                      name + ": composition identity fails");
        }
    }
    for (const auto& coords : std::vector<std::vector<std::string>>{{"x"}, {"x", "y"}, {"x", "y", "z"}})
        c.require(modularRepresentative(tangentAlgebroid(coords)).isZero(), "Mod(TM) is not zero");
    const LieAlgebroid aff = loadAny("aff1");
    c.require(modularRepresentative(aff) == Form::generator(2, 0, 0), "aff(1) representative is not a1");
}

// Closedness and the effect of rescaling volumes.
void criterion7(Check& c) {
    for (const auto& [name, e] : corpus()) {
        RandomSource rnd(kSeed + 7);
        c.require(deRham(e, modularRepresentative(e)).isZero(), name + ": representative not closed");
        for (int t = 0; t < 5; ++t) {
            // 1 + Σ u_a^2 + r is nowhere zero for r > 0; constants for Lie algebras.
            Coeff s = Coeff::constant(e.m(), rnd.integer(1, 9));
            for (std::size_t a = 0; a < e.m(); ++a) s += Coeff::variable(e.m(), a).pow(2) * Rational(rnd.integer(1, 3));
            const Divergence d1 = divergenceFromOddVolume(e, OddVolume::coordinate(e.m()));
            const Divergence d2 = divergenceFromOddVolume(e, OddVolume(s));
            c.require(deRham(e, divergenceDifference(e, d1, d2)).isZero(), name + ": divergence difference not closed");
        }
    }
    for (const auto& coords : std::vector<std::vector<std::string>>{{"x", "y"}, {"x", "y", "z"}}) {
        const LieAlgebroid tm = tangentAlgebroid(coords);
        const Coeff f = parseExpr("1 + x^2", coords);
        const OddVolume unit = OddVolume::coordinate(tm.m());
        const Form base = modularFromVolumes(tm, unit, unit);
        const Form dlogF = dlog(tm, f);
        // rescaling the base volume adds d log F, rescaling the fiber volume subtracts it
        c.require(modularFromVolumes(tm, unit, OddVolume(f)) - base == dlogF, "base rescaling shift");
        c.require(modularFromVolumes(tm, OddVolume(f), unit) - base == -dlogF, "fiber rescaling shift");
        c.require(deRham(tm, dlogF).isZero(), "d log F not closed");
    }
}

/// φ_a = 2 Σ_b ∂_b P^{ab}, read directly off the bivector.
Form poissonOracle(const PoissonBivector& p, const LieAlgebroid& e) {
    Form out(e.n(), e.m());
    for (std::size_t a = 0; a < p.m(); ++a) {
        Coeff v = e.zero();
        for (std::size_t b = 0; b < p.m(); ++b) v += p.entry(a, b).partial(b);
        out.addTerm(bit(int(a)), v * Rational(2));
    }
    return out;
}

// Poisson bivectors.
void criterion8(Check& c) {
    RandomSource rnd(kSeed + 8);
    const std::vector<std::vector<std::string>> charts{{"x", "y"}, {"x", "y", "z"}};
    std::size_t poisson = 0, nonPoisson = 0;
    for (int t = 0; t < 50; ++t) {
        const auto& coords = charts[t % 2];
        PoissonBivector p(coords);
        const std::size_t m = coords.size();
        if (m == 3 && t % 4 == 1) {
            // f·u∧v with constant u, v: always Poisson
            const Coeff f = rnd.coeff(3, 2, 3);
            std::vector<Rational> u(3), v(3);
            for (std::size_t a = 0; a < 3; ++a) u[a] = rnd.integer(-2, 2), v[a] = rnd.integer(-2, 2);
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = a + 1; b < 3; ++b) p.set(a, b, f * Rational(u[a] * v[b] - u[b] * v[a]));
        } else {
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b) p.set(a, b, rnd.coeff(m, 2, 3));
        }
        const bool bySchouten = jacobiResidual(p).isZero();
        const LieAlgebroid e = cotangentAlgebroid(p);
        const bool byAxioms = validateAlgebroid(e).passes();
        c.require(bySchouten == byAxioms, "Jacobi routes disagree");
        if (bySchouten) {
            ++poisson;
            const RouteReport routes = modularRoutes(e);
            c.require(routes.agree(), "modular routes disagree on a Poisson bivector");
            c.require(poissonModularForm(p) == poissonOracle(p, e), "modular form differs from oracle");
        } else {
            ++nonPoisson;
        }
    }
    c.require(poisson > 0 && nonPoisson > 0, "random sample did not exercise both outcomes");

    const PoissonBivector sym = parseBivector(readFile(corpusPath("poisson-symplectic2")));
    c.require(poissonModularForm(sym).isZero(), "symplectic modular form is not zero");
    const PoissonBivector xp = parseBivector(readFile(corpusPath("poisson-xdxdy")));
    const LieAlgebroid xe = cotangentAlgebroid(xp);
    const RouteReport routes = modularRoutes(xe);
    const Form expected = poissonOracle(xp, xe);
    c.require(routes.agree() && routes.fromLieDerivatives == expected && routes.fromStructure == expected,
              "x d1^d2 representative");
    c.require(expected.str(xe.coframeNames(), xe.coordNames()) == "-2*py", "x d1^d2 representative is not -2*py");
}

LieAlgebroid eightDimensional() {
    // sl2 + sl2 + aff(1)
    std::vector<std::string> frame;
    for (int i = 1; i <= 8; ++i) frame.push_back("e" + std::to_string(i));
    return fixtures::build({}, frame, {},
                           {{{0, 1}, "2*e2"}, {{0, 2}, "-2*e3"}, {{1, 2}, "e1"},
                            {{3, 4}, "2*e5"}, {{3, 5}, "-2*e6"}, {{4, 5}, "e4"},
                            {{6, 7}, "e8"}});
}

// Rank computations on the largest complexes stay within budget.
void criterion9(Check& c, Clock::time_point suiteStart) {
    const LieAlgebroid e = eightDimensional();
    c.require(validateAlgebroid(e).passes(), "eight-dimensional algebra is invalid");
    for (const auto& complex : {buildCochain(e), buildChain(e, OddVolume::coordinate(0))}) {
        for (const auto& m : complex.maps) {
            c.require(m.rows() <= 70 && m.cols() <= 70, "matrix larger than 70x70");
            const auto start = Clock::now();
            const std::size_t r = rank(m);
            const double secs = std::chrono::duration<double>(Clock::now() - start).count();
            std::ostringstream what;
            what << m.rows() << "x" << m.cols() << " rank took " << secs << " s";
            c.require(secs < 1.0, what.str());
            c.require(r <= std::min(m.rows(), m.cols()), "rank out of range");
        }
    }
    const DualityReport r = dualityCheck(e, OddVolume::coordinate(0));
    c.require(r.duality, "duality on the eight-dimensional algebra");
    c.require(r.cohomology == oracles::oracleCohomology(e, std::vector<Rational>(8)),
              "eight-dimensional cohomology differs from oracle");
    c.require(r.homology == oracles::oracleHomology(e, oracles::traceForm(e)),
              "eight-dimensional homology differs from oracle");
    const double total = std::chrono::duration<double>(Clock::now() - suiteStart).count();
    c.require(total < 60.0, "acceptance suite took " + std::to_string(total) + " s");
}

}  // namespace

int main() {
    const auto start = Clock::now();
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"axioms: corpus validates, perturbed inputs rejected, d^2 = 0", criterion1},
        {"generating property of the Schouten bracket, both constructions agree", criterion2},
        {"Levi-Civita divergence equals metric-volume divergence", criterion3},
        {"curvature lemma biconditional, including adversarial connections", criterion4},
        {"Poincare duality, plain and deformed", criterion5},
        {"modular class routes, Mod(TM) = 0, trace form, composition", criterion6},
        {"closedness and volume rescaling", criterion7},
        {"Poisson Jacobi routes and modular forms", criterion8},
        {"runtime budget", [&](Check& c) { criterion9(c, start); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        all = all && c.ok();
        std::cout << (c.ok() ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
        if (!c.ok()) std::cout << " (" << c.detail() << ")";
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
