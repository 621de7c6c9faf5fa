#include "doctest.h"

#include "../common/fixtures.hpp"
#include "lacalc/exterior.hpp"
#include "lacalc/random.hpp"

using namespace lacalc;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> frame{"X1", "X2", "X3"};
const std::vector<std::string> coframe{"a1", "a2", "a3"};

Form f(const std::string& src) { return parseForm(src, xy, coframe); }
Multivector v(const std::string& src) { return parseMultivector(src, xy, frame); }
Coeff c(const std::string& src) { return parseExpr(src, xy); }

int sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("wedge products") {
    CHECK(wedge(f("a1"), f("a2")) == f("a1/\\a2"));
    CHECK(wedge(f("a1"), f("a1")).isZero());
    CHECK(wedge(f("x*a1"), f("y*a2 + a1")) == f("x*y*a1/\\a2"));
    CHECK(wedge(f("a2"), f("a1")) == -f("a1/\\a2"));
    CHECK(wedge(v("X3"), v("X1/\\X2")) == v("X1/\\X2/\\X3"));
    CHECK(wedge(v("X2"), v("X1/\\X3")) == -v("X1/\\X2/\\X3"));
}

TEST_CASE("graded commutativity and associativity") {
    auto e = fixtures::build(xy, frame, {{"0", "0"}, {"0", "0"}, {"0", "0"}}, {}, coframe);
    RandomSource rnd(3);
    for (int t = 0; t < 100; ++t) {
        const int p = rnd.integer(0, 3), q = rnd.integer(0, 3);
        const Form a = rnd.form(e, p), b = rnd.form(e, q), w = rnd.form(e, rnd.integer(0, 3));
        CHECK(wedge(a, b) == sign(p * q) * Coeff::constant(2, 1) * wedge(b, a));
        CHECK(wedge(wedge(a, b), w) == wedge(a, wedge(b, w)));
    }
}

TEST_CASE("duality pairing") {
    CHECK(pair(f("a1/\\a2"), v("X1/\\X2")) == c("1"));
    CHECK(pair(f("a1"), v("X2")).isZero());
    CHECK(pair(f("x*a1/\\a2"), v("y*X1/\\X2")) == c("x*y"));
    CHECK(pair(f("a1"), v("X1/\\X2")).isZero());
}

TEST_CASE("contraction of forms") {
    CHECK(contractForm(v("X1"), f("a1/\\a2")) == f("a2"));
    CHECK(contractForm(v("X2"), f("a1/\\a2")) == -f("a1"));
    CHECK(contractForm(v("X2"), f("a1")).isZero());
    CHECK(contractForm(v("X1/\\X2"), f("a1/\\a2")) == f("1"));
    // i_{a∧b} = i_b ∘ i_a
    CHECK(contractForm(v("X1/\\X2"), f("a1/\\a2/\\a3")) ==
          contractForm(v("X2"), contractForm(v("X1"), f("a1/\\a2/\\a3"))));
    CHECK(contractForm(v("X1/\\X3"), f("a1/\\a2/\\a3")) == -f("a2"));
}

TEST_CASE("contraction of multivectors by a 1-form") {
    CHECK(contractMulti(f("a1"), v("X1")) == v("1"));
    CHECK(contractMulti(f("a1"), v("X1/\\X2")) == v("X2"));
    CHECK(contractMulti(f("a2"), v("X1/\\X2")) == -v("X1"));
    CHECK(contractMulti(f("a3"), v("X1/\\X2")).isZero());
    CHECK_THROWS_AS(contractMulti(f("a1/\\a2"), v("X1")), Error);
}

TEST_CASE("contraction by a 1-form is a derivation squaring to zero") {
    auto e = fixtures::build(xy, frame, {{"0", "0"}, {"0", "0"}, {"0", "0"}}, {}, coframe);
    RandomSource rnd(5);
    for (int t = 0; t < 100; ++t) {
        const Form phi = rnd.form(e, 1, 2);
        const int p = rnd.integer(0, 3);
        const Multivector a = rnd.multivector(e, p), b = rnd.multivector(e, rnd.integer(0, 3));
        CHECK(contractMulti(phi, contractMulti(phi, a)).isZero());
        CHECK(contractMulti(phi, wedge(a, b)) ==
              wedge(contractMulti(phi, a), b) + sign(p) * Coeff::constant(2, 1) * wedge(a, contractMulti(phi, b)));
    }
}

TEST_CASE("star map of an odd volume") {
    const OddVolume mu(c("x^2 + 1"));
    const Form top = mu.representative(3);
    CHECK(starMu(mu, 3, v("1")) == top);
    CHECK(starMu(mu, 3, v("X1/\\X2/\\X3")) == Form::scalar(3, c("x^2 + 1")));
    CHECK(starMu(mu, 3, v("X2")) == -c("x^2 + 1") * f("a1/\\a3"));
    auto e = fixtures::build(xy, frame, {{"0", "0"}, {"0", "0"}, {"0", "0"}}, {}, coframe);
    RandomSource rnd(9);
    for (int t = 0; t < 50; ++t) {
        const Multivector a = rnd.multivector(e, rnd.integer(0, 3), 2);
        CHECK(starMuInv(mu, 3, starMu(mu, 3, a)) == a);
        CHECK(starMu(mu.negated(), 3, a) == -starMu(mu, 3, a));
        CHECK(starMuInv(mu.negated(), 3, starMu(mu.negated(), 3, a)) == a);
    }
    CHECK_THROWS_AS(OddVolume(c("0")), NonInvertibleVolume);
}

TEST_CASE("printing and rank checks") {
    CHECK(v("X1/\\X2 - 3/2*x*X3").str(frame, xy) == "-3/2*x*X3 + X1/\\X2");
    CHECK(f("0").str(coframe, xy) == "0");
    CHECK(v("X2/\\X1") == -v("X1/\\X2"));
    CHECK(v("X1/\\X1").isZero());
    CHECK_THROWS_AS(wedge(Form(2, 2), Form(3, 2)), RankMismatch);
    CHECK_THROWS_AS(Form(kMaxRank + 1, 0), RankMismatch);
}
