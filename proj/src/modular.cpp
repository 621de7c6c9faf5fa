#include "lacalc/modular.hpp"

#include "lacalc/errors.hpp"

namespace lacalc {

Section Morphism::apply(const Section& x) const {
    Section out = target.zeroSection();
    for (std::size_t i = 0; i < source.n(); ++i) {
        if (x.at(i).isZero()) continue;
        for (std::size_t j = 0; j < target.n(); ++j)
            if (!matrix[j][i].isZero()) out[j] += x[i] * matrix[j][i];
    }
    return out;
}

Morphism identityMorphism(const LieAlgebroid& e) { return Morphism{e, e, identityMatrix(e.n(), e.m())}; }

Morphism anchorMorphism(const LieAlgebroid& e) {
    LieAlgebroid tm = tangentAlgebroid(e.coordNames());
    CoeffMatrix m(e.m(), std::vector<Coeff>(e.n(), e.zero()));
    for (std::size_t a = 0; a < e.m(); ++a)
        for (std::size_t i = 0; i < e.n(); ++i) m[a][i] = e.anchor(i, a);
    return Morphism{e, std::move(tm), std::move(m)};
}

Morphism zeroMorphism(const LieAlgebroid& source, const LieAlgebroid& target) {
    return Morphism{source, target, CoeffMatrix(target.n(), std::vector<Coeff>(source.n(), source.zero()))};
}

MorphismReport validateMorphism(const Morphism& k) {
    const auto& e1 = k.source;
    const auto& e2 = k.target;
    if (e1.coordNames() != e2.coordNames()) throw ChartMismatch("source and target use different coordinates");
    if (k.matrix.size() != e2.n()) throw ChartMismatch("morphism matrix has the wrong number of rows");
    for (const auto& row : k.matrix)
        if (row.size() != e1.n()) throw ChartMismatch("morphism matrix has the wrong number of columns");

    MorphismReport report;
    for (std::size_t i = 0; i < e1.n(); ++i)
        for (std::size_t a = 0; a < e1.m(); ++a) {
            Coeff v = e1.anchor(i, a);
            for (std::size_t j = 0; j < e2.n(); ++j) v -= k.matrix[j][i] * e2.anchor(j, a);
            if (!v.isZero()) report.anchor.emplace_back(i, a, std::move(v));
        }
    for (std::size_t i = 0; i < e1.n(); ++i)
        for (std::size_t j = i + 1; j < e1.n(); ++j) {
            const Section lhs = k.apply(e1.frameBracket(i, j));
            const Section rhs = bracketSections(e2, k.apply(e1.frameSection(i)), k.apply(e1.frameSection(j)));
            for (std::size_t t = 0; t < e2.n(); ++t) {
                Coeff v = lhs[t] - rhs[t];
                if (!v.isZero()) report.bracket.emplace_back(i, j, t, std::move(v));
            }
        }
    return report;
}

Divergence pullbackDivergence(const Morphism& k, const Divergence& div2) {
    Divergence out;
    for (std::size_t i = 0; i < k.source.n(); ++i) out.values.push_back(div2.apply(k.target, k.apply(k.source.frameSection(i))));
    out.cocycleVerified = checkCocycle(k.source, out).passes();
    return out;
}

Form pullbackForm(const Morphism& k, const Form& omega) {
    const std::size_t n1 = k.source.n(), m = k.source.m();
    std::vector<Form> images;
    for (std::size_t j = 0; j < k.target.n(); ++j) {
        Form img(n1, m);
        for (std::size_t i = 0; i < n1; ++i) img.addTerm(bit(static_cast<int>(i)), k.matrix[j][i]);
        images.push_back(std::move(img));
    }
    Form out(n1, m);
    for (const auto& [mask, c] : omega.terms()) {
        Form term = Form::scalar(n1, c);
        for (int j : indicesOf(mask)) term = wedge(term, images[static_cast<std::size_t>(j)]);
        out += term;
    }
    return out;
}

Form modularOfMorphism(const Morphism& k, const Divergence& div1, const Divergence& div2) {
    return divergenceDifference(k.source, pullbackDivergence(k, div2), div1);
}

Form modularRepresentative(const LieAlgebroid& e) {
    std::vector<Coeff> c;
    for (std::size_t i = 0; i < e.n(); ++i) {
        Coeff v = e.zero();
        for (std::size_t k = 0; k < e.n(); ++k) v += e.structure(k, i, k);
        for (std::size_t a = 0; a < e.m(); ++a) v += e.anchor(i, a).partial(a);
        c.push_back(std::move(v));
    }
    return oneForm(e, c);
}

Form modularFromVolumes(const LieAlgebroid& e, const OddVolume& muE, const OddVolume& muM) {
    const Morphism rho = anchorMorphism(e);
    return modularOfMorphism(rho, divergenceFromOddVolume(e, muE), divergenceFromOddVolume(rho.target, muM));
}

Form modularFromLieDerivatives(const LieAlgebroid& e, const OddVolume& muE, const OddVolume& muM) {
    if (muE.halfDetFactor || muM.halfDetFactor) throw Error("top-degree route needs volumes without a root factor");
    const std::size_t n = e.n(), m = e.m();
    const Mask top = fullMask(n);
    Multivector a(n, m);
    a.addTerm(top, muE.s.inverse());
    const Coeff& t = muM.s;
    const Coeff tInv = t.inverse();
    std::vector<Coeff> c;
    for (std::size_t i = 0; i < n; ++i) {
        // 𝓛_{X_i} a = λ a
        const Multivector la = schouten(e, e.toMultivector(e.frameSection(i)), a);
        Coeff lambda = la.coefficient(top) * muE.s;
        // 𝓛_{ρ(X_i)}(t du) = (ρ_i(t) + t Σ_a ∂_a ρ^a_i) du
        Coeff div = e.anchorFrame(i, t);
        for (std::size_t b = 0; b < m; ++b) div += t * e.anchor(i, b).partial(b);
        c.push_back(lambda + div * tInv);
    }
    return oneForm(e, c);
}

RouteReport modularRoutes(const LieAlgebroid& e) {
    const OddVolume muE = OddVolume::coordinate(e.m()), muM = OddVolume::coordinate(e.m());
    return RouteReport{modularFromVolumes(e, muE, muM), modularFromLieDerivatives(e, muE, muM), modularRepresentative(e)};
}

CompositionReport compositionCheck(const Morphism& k, const OddVolume& mu1, const OddVolume& mu2, const OddVolume& muM) {
    const Divergence div1 = divergenceFromOddVolume(k.source, mu1);
    const Divergence div2 = divergenceFromOddVolume(k.target, mu2);
    return CompositionReport{modularFromVolumes(k.source, mu1, muM), modularOfMorphism(k, div1, div2),
                             pullbackForm(k, modularFromVolumes(k.target, mu2, muM))};
}

ClassReport classTriviality(const LieAlgebroid& e, const Form& phi, unsigned degreeBound) {
    ClassReport report;
    if (phi.isZero()) {
        report.status = ClassStatus::Trivial;
        report.primitive = e.zero();
        return report;
    }
    if (e.m() == 0) {
        report.status = ClassStatus::NonTrivial;
        return report;
    }
    const std::vector<Coeff> target = components(e, phi);
    for (const auto& c : target)
        if (!c.isPolynomial()) return report;

    // Unknowns: coefficients of the monomials of f with total degree 1..bound.
    const std::size_t m = e.m();
    std::vector<Exponents> monomials;
    Exponents cur(m, 0);
    auto enumerate = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var == m) {
            unsigned total = 0;
            for (auto v : cur) total += v;
            if (total > 0) monomials.push_back(cur);
            return;
        }
        for (unsigned d = 0; d <= remaining; ++d) {
            cur[var] = d;
            self(self, var + 1, remaining - d);
        }
        cur[var] = 0;
    };
    enumerate(enumerate, 0, degreeBound);

    // Equations: every monomial coefficient of ρ(X_i)(f) − φ_i vanishes.
    std::vector<std::vector<Poly>> images;  // images[u][i] = numerator of ρ(X_i)(monomial u)
    std::map<std::pair<std::size_t, Exponents>, std::size_t> rowIndex;
    auto row = [&](std::size_t i, const Exponents& ex) {
        auto [it, inserted] = rowIndex.try_emplace({i, ex}, rowIndex.size());
        return it->second;
    };
    for (const auto& mono : monomials) {
        std::vector<Poly> per;
        const Coeff f(Poly::monomial(mono, 1));
        for (std::size_t i = 0; i < e.n(); ++i) {
            const Coeff img = e.anchorFrame(i, f);
            if (!img.isPolynomial()) return report;
            per.push_back(img.num());
            for (const auto& [ex, v] : img.num().terms()) row(i, ex);
        }
        images.push_back(std::move(per));
    }
    for (std::size_t i = 0; i < e.n(); ++i)
        for (const auto& [ex, v] : target[i].num().terms()) row(i, ex);

    RationalMatrix a(rowIndex.size(), monomials.size());
    std::vector<Rational> b(rowIndex.size());
    for (std::size_t u = 0; u < monomials.size(); ++u)
        for (std::size_t i = 0; i < e.n(); ++i)
            for (const auto& [ex, v] : images[u][i].terms()) a.at(rowIndex.at({i, ex}), u) += v;
    for (std::size_t i = 0; i < e.n(); ++i)
        for (const auto& [ex, v] : target[i].num().terms()) b[rowIndex.at({i, ex})] = v;

    const auto solution = solve(a, b);
    if (!solution) return report;
    Poly f(m);
    for (std::size_t u = 0; u < monomials.size(); ++u)
        if ((*solution)[u] != 0) f.addTerm(monomials[u], (*solution)[u]);
    report.status = ClassStatus::Trivial;
    report.primitive = Coeff(f);
    return report;
}

std::string statusName(ClassStatus s) {
    switch (s) {
        case ClassStatus::Trivial: return "trivial";
        case ClassStatus::NonTrivial: return "nontrivial";
        case ClassStatus::Undecided: return "undecided at degree bound";
    }
    return "";
}

}  // namespace lacalc
