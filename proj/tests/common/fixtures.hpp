#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lacalc/algebroid.hpp"
#include "lacalc/parser.hpp"

namespace fixtures {

using lacalc::LieAlgebroid;

/// Builds an algebroid from expression strings. `anchor[i][a]` is ρ^a_i and
/// `brackets[{i,j}]` the expression of [X_i, X_j] over the frame (0-based).
inline LieAlgebroid build(const std::vector<std::string>& coords, const std::vector<std::string>& frame,
                          const std::vector<std::vector<std::string>>& anchor,
                          const std::map<std::pair<int, int>, std::string>& brackets,
                          const std::vector<std::string>& coframe = {}) {
    LieAlgebroid e(coords, frame, coframe);
    for (std::size_t i = 0; i < anchor.size(); ++i)
        for (std::size_t a = 0; a < anchor[i].size(); ++a) e.setAnchor(i, a, lacalc::parseExpr(anchor[i][a], coords));
    for (const auto& [ij, src] : brackets) {
        const auto mv = lacalc::parseMultivector(src, coords, frame);
        e.setBracket(static_cast<std::size_t>(ij.first), static_cast<std::size_t>(ij.second), e.toSection(mv));
    }
    return e;
}

inline LieAlgebroid aff1() { return build({}, {"e1", "e2"}, {}, {{{0, 1}, "e2"}}); }
inline LieAlgebroid heisenberg3() { return build({}, {"e1", "e2", "e3"}, {}, {{{0, 1}, "e3"}}); }
inline LieAlgebroid sl2() {
    return build({}, {"h", "e", "f"}, {}, {{{0, 1}, "2*e"}, {{0, 2}, "-2*f"}, {{1, 2}, "h"}});
}
inline LieAlgebroid r3(const std::string& lambda) {
    return build({}, {"e1", "e2", "e3"}, {}, {{{0, 1}, "e2"}, {{0, 2}, lambda + "*e3"}});
}
inline LieAlgebroid abelian(std::size_t n) {
    std::vector<std::string> frame;
    for (std::size_t i = 0; i < n; ++i) frame.push_back("e" + std::to_string(i + 1));
    return build({}, frame, {}, {});
}
inline LieAlgebroid tangent2() { return build({"x", "y"}, {"X", "Y"}, {{"1", "0"}, {"0", "1"}}, {}); }
/// Action algebroid of aff(1) on the line: ρ(X1) = −x∂x, ρ(X2) = ∂x.
inline LieAlgebroid aff1Line() { return build({"x"}, {"X1", "X2"}, {{"-x"}, {"1"}}, {{{0, 1}, "X2"}}); }
/// Cotangent algebroid of P = x ∂x∧∂y, written out by hand.
inline LieAlgebroid poissonXdxdy() {
    return build({"x", "y"}, {"dx", "dy"}, {{"0", "x"}, {"-x", "0"}}, {{{0, 1}, "dx"}}, {"px", "py"});
}
/// Cotangent algebroid of a constant symplectic P on R^2.
inline LieAlgebroid poissonSymplectic2() {
    return build({"x", "y"}, {"dx", "dy"}, {{"0", "1"}, {"-1", "0"}}, {}, {"px", "py"});
}

inline std::vector<std::pair<std::string, LieAlgebroid>> corpus() {
    return {{"aff1", aff1()},
            {"heisenberg3", heisenberg3()},
            {"sl2", sl2()},
            {"r3", r3("2")},
            {"abelian4", abelian(4)},
            {"tangent2", tangent2()},
            {"poisson-symplectic2", poissonSymplectic2()},
            {"poisson-xdxdy", poissonXdxdy()},
            {"aff1-line", aff1Line()}};
}

}  // namespace fixtures
