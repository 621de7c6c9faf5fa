#include "lacalc/calculus.hpp"

#include "lacalc/errors.hpp"

namespace lacalc {

Coeff Divergence::apply(const LieAlgebroid& e, const Section& x) const {
    if (x.size() != e.n() || values.size() != e.n()) throw RankMismatch("divergence and section ranks differ");
    Coeff out = e.zero();
    for (std::size_t i = 0; i < e.n(); ++i) {
        if (x[i].isZero()) continue;
        out += x[i] * values[i] + e.anchorFrame(i, x[i]);
    }
    return out;
}

Divergence zeroDivergence(const LieAlgebroid& e) { return Divergence{std::vector<Coeff>(e.n(), e.zero()), false}; }

Form oneForm(const LieAlgebroid& e, const std::vector<Coeff>& components) {
    Form out(e.n(), e.m());
    for (std::size_t i = 0; i < e.n(); ++i) out.addTerm(bit(static_cast<int>(i)), components.at(i));
    return out;
}

std::vector<Coeff> components(const LieAlgebroid& e, const Form& phi) {
    std::vector<Coeff> out(e.n(), e.zero());
    for (const auto& [mask, c] : phi.terms())
        if (degreeOf(mask) == 1) out[std::countr_zero(mask)] = c;
    return out;
}

Form dlog(const LieAlgebroid& e, const Coeff& f) {
    const Coeff inv = f.inverse();
    Form out(e.n(), e.m());
    for (std::size_t i = 0; i < e.n(); ++i) out.addTerm(bit(static_cast<int>(i)), e.anchorFrame(i, f) * inv);
    return out;
}

Form deRham(const LieAlgebroid& e, const Form& omega) {
    if (omega.rank() != e.n()) throw RankMismatch("form rank differs from the fiber rank");
    const std::size_t n = e.n();
    Form out(n, e.m());
    // ω(X_r, X_K) for increasing K.
    auto evalWithFront = [&](int r, Mask k) -> Coeff {
        const int s = wedgeSign(bit(r), k);
        if (s == 0) return e.zero();
        Coeff v = omega.coefficient(k | bit(r));
        return s < 0 ? -v : v;
    };
    for (int deg : omega.degrees()) {
        if (static_cast<std::size_t>(deg) >= n) continue;
        for (Mask j : basisOfDegree(n, static_cast<std::size_t>(deg) + 1)) {
            const auto idx = indicesOf(j);
            Coeff value = e.zero();
            if (e.m() > 0)
                for (std::size_t i = 0; i < idx.size(); ++i) {
                    Coeff t = e.anchorFrame(static_cast<std::size_t>(idx[i]), omega.coefficient(j & ~bit(idx[i])));
                    value += (i % 2 == 0) ? t : -t;
                }
            for (std::size_t p = 0; p < idx.size(); ++p)
                for (std::size_t q = p + 1; q < idx.size(); ++q) {
                    const Mask rest = j & ~bit(idx[p]) & ~bit(idx[q]);
                    Coeff t = e.zero();
                    for (std::size_t r = 0; r < n; ++r) {
                        const Coeff c = e.structure(r, static_cast<std::size_t>(idx[p]), static_cast<std::size_t>(idx[q]));
                        if (!c.isZero()) t += c * evalWithFront(static_cast<int>(r), rest);
                    }
                    value += ((p + q) % 2 == 0) ? t : -t;
                }
            out.addTerm(j, value);
        }
    }
    return out;
}

Form lieDerivativeForm(const LieAlgebroid& e, const Multivector& a, const Form& omega) {
    Form out(e.n(), e.m());
    const Form dOmega = deRham(e, omega);
    for (int k : a.degrees()) {
        const Multivector ak = a.homogeneous(k);
        Form term = contractForm(ak, dOmega);
        const Form d = deRham(e, contractForm(ak, omega));
        if (k % 2 == 0) term -= d;
        else term += d;
        out += term;
    }
    return out;
}

Multivector lieDerivativeMulti(const LieAlgebroid& e, const Section& x, const Multivector& a) {
    return schouten(e, e.toMultivector(x), a);
}

Divergence divergenceFromOddVolume(const LieAlgebroid& e, const OddVolume& mu) {
    if (mu.s.nvars() != e.m()) throw Error("volume over the wrong coefficient ring");
    const Form rep = mu.representative(e.n());
    const Mask top = fullMask(e.n());
    const Coeff invS = mu.s.inverse();
    std::optional<Coeff> invD;
    if (mu.halfDetFactor) invD = mu.halfDetFactor->inverse();
    Divergence div;
    for (std::size_t i = 0; i < e.n(); ++i) {
        const Form lie = lieDerivativeForm(e, e.toMultivector(e.frameSection(i)), rep);
        Coeff v = lie.coefficient(top) * invS;
        if (invD) v += Rational(1, 2) * e.anchorFrame(i, *mu.halfDetFactor) * *invD;
        div.values.push_back(std::move(v));
    }
    div.cocycleVerified = checkCocycle(e, div).passes();
    return div;
}

CocycleReport checkCocycle(const LieAlgebroid& e, const Divergence& div) {
    CocycleReport report;
    for (std::size_t i = 0; i < e.n(); ++i)
        for (std::size_t j = i + 1; j < e.n(); ++j) {
            Coeff v = div.apply(e, e.frameBracket(i, j));
            v -= e.anchorFrame(i, div.values[j]);
            v += e.anchorFrame(j, div.values[i]);
            if (!v.isZero()) report.residuals.push_back({i, j, std::move(v)});
        }
    return report;
}

namespace {

/// Generating operator of one monomial f X_{i_1}∧…∧X_{i_k}, with Y_1 = f X_{i_1}.
Multivector generatingMonomial(const LieAlgebroid& e, const Divergence& div, const Coeff& f, Mask mask) {
    const std::size_t n = e.n(), m = e.m();
    Multivector out(n, m);
    const auto idx = indicesOf(mask);
    const std::size_t k = idx.size();
    if (k == 0) return out;
    std::vector<Section> ys;
    for (std::size_t t = 0; t < k; ++t) {
        Section y = e.frameSection(static_cast<std::size_t>(idx[t]));
        if (t == 0) y[static_cast<std::size_t>(idx[0])] = f;
        ys.push_back(std::move(y));
    }
    // Wedge of the Y's, skipping up to two positions.
    auto wedgeExcept = [&](std::size_t skip1, std::size_t skip2) {
        Multivector w = Multivector::scalar(n, e.one());
        for (std::size_t t = 0; t < k; ++t)
            if (t != skip1 && t != skip2) w = wedge(w, e.toMultivector(ys[t]));
        return w;
    };
    for (std::size_t t = 0; t < k; ++t) {
        Coeff d = -div.apply(e, ys[t]);
        if (d.isZero()) continue;
        Multivector term = wedgeExcept(t, t) * d;
        if (t % 2 != 0) term = -term;  // (−1)^{t+1} with 1-based t
        out += term;
    }
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = p + 1; q < k; ++q) {
            const Multivector br = e.toMultivector(bracketSections(e, ys[p], ys[q]));
            if (br.isZero()) continue;
            Multivector term = wedge(br, wedgeExcept(p, q));
            if ((p + q) % 2 != 0) term = -term;
            out += term;
        }
    return out;
}

}  // namespace

Multivector generatingFromDivergence(const LieAlgebroid& e, const Divergence& div, const Multivector& a) {
    if (a.rank() != e.n()) throw RankMismatch("multivector rank differs from the fiber rank");
    Multivector out(e.n(), e.m());
    for (const auto& [mask, c] : a.terms()) out += generatingMonomial(e, div, c, mask);
    return out;
}

Multivector generatingFromOddVolume(const LieAlgebroid& e, const OddVolume& mu, const Multivector& a) {
    if (a.rank() != e.n()) throw RankMismatch("multivector rank differs from the fiber rank");
    Multivector out(e.n(), e.m());
    std::optional<Form> halfDlogD;
    if (mu.halfDetFactor) halfDlogD = Rational(1, 2) * dlog(e, *mu.halfDetFactor);
    for (int k : a.degrees()) {
        const Form star = starMu(mu, e.n(), a.homogeneous(k));
        Form image = deRham(e, star);
        if (halfDlogD) image += wedge(*halfDlogD, star);
        Multivector term = starMuInv(mu, e.n(), image);
        if (k % 2 != 0) term = -term;
        out += term;
    }
    return out;
}

Form divergenceDifference(const LieAlgebroid& e, const Divergence& div1, const Divergence& div2) {
    std::vector<Coeff> c;
    for (std::size_t i = 0; i < e.n(); ++i) c.push_back(div1.values.at(i) - div2.values.at(i));
    return oneForm(e, c);
}

Form wittenDifferential(const LieAlgebroid& e, const Form& phi, const Form& omega) {
    return deRham(e, omega) + wedge(phi, omega);
}

Multivector deformedGenerating(const LieAlgebroid& e, const OddVolume& mu, const Form& phi, const Multivector& a) {
    return generatingFromOddVolume(e, mu, a) - contractMulti(phi, a);
}

}  // namespace lacalc
