#include "lacalc/algebroid.hpp"

#include "lacalc/errors.hpp"
#include "lacalc/parser.hpp"

namespace lacalc {

LieAlgebroid::LieAlgebroid(std::vector<std::string> coordNames, std::vector<std::string> frameNames,
                           std::vector<std::string> coframeNames)
    : coords_(std::move(coordNames)), frame_(std::move(frameNames)), coframe_(std::move(coframeNames)) {
    if (frame_.size() > kMaxRank) throw RankMismatch("fiber rank exceeds " + std::to_string(kMaxRank));
    if (coframe_.empty())
        for (std::size_t i = 0; i < frame_.size(); ++i) coframe_.push_back("a" + std::to_string(i + 1));
    if (coframe_.size() != frame_.size()) throw Error("coframe and frame sizes differ");
    checkNames({coords_, frame_, coframe_});
    anchor_.assign(n(), std::vector<Coeff>(m(), zero()));
    structure_.assign(n() * n(), zeroSection());
}

void LieAlgebroid::setAnchor(std::size_t i, std::size_t a, Coeff value) {
    if (value.nvars() != m()) throw Error("anchor coefficient over the wrong ring");
    anchor_.at(i).at(a) = std::move(value);
}

Coeff LieAlgebroid::structure(std::size_t k, std::size_t i, std::size_t j) const {
    if (i == j) return zero();
    if (i < j) return structure_[pairIndex(i, j)][k];
    return -structure_[pairIndex(j, i)][k];
}

void LieAlgebroid::setBracket(std::size_t i, std::size_t j, const Section& value) {
    if (i == j) throw Error("[X_i, X_i] is zero by antisymmetry");
    if (i >= n() || j >= n() || value.size() != n()) throw RankMismatch("bracket outside the frame");
    if (i < j) {
        structure_[pairIndex(i, j)] = value;
    } else {
        Section neg;
        for (const auto& c : value) neg.push_back(-c);
        structure_[pairIndex(j, i)] = std::move(neg);
    }
}

Section LieAlgebroid::frameBracket(std::size_t i, std::size_t j) const {
    Section out;
    out.reserve(n());
    for (std::size_t k = 0; k < n(); ++k) out.push_back(structure(k, i, j));
    return out;
}

Section LieAlgebroid::frameSection(std::size_t i) const {
    Section s = zeroSection();
    s.at(i) = one();
    return s;
}

Multivector LieAlgebroid::toMultivector(const Section& x) const {
    if (x.size() != n()) throw RankMismatch("section length differs from the fiber rank");
    Multivector out(n(), m());
    for (std::size_t i = 0; i < n(); ++i) out.addTerm(bit(static_cast<int>(i)), x[i]);
    return out;
}

Section LieAlgebroid::toSection(const Multivector& a) const {
    Section out = zeroSection();
    for (const auto& [mask, c] : a.terms())
        if (degreeOf(mask) == 1) out[std::countr_zero(mask)] = c;
    return out;
}

Coeff LieAlgebroid::anchorFrame(std::size_t i, const Coeff& f) const {
    Coeff out = zero();
    if (f.isConstant()) return out;
    for (std::size_t a = 0; a < m(); ++a)
        if (!anchor_[i][a].isZero()) out += anchor_[i][a] * f.partial(a);
    return out;
}

bool operator==(const LieAlgebroid& a, const LieAlgebroid& b) {
    return a.coords_ == b.coords_ && a.frame_ == b.frame_ && a.coframe_ == b.coframe_ && a.anchor_ == b.anchor_ &&
           a.structure_ == b.structure_;
}

LieAlgebroid tangentAlgebroid(const std::vector<std::string>& coordNames) {
    std::vector<std::string> frame, coframe;
    for (const auto& c : coordNames) {
        frame.push_back("d_" + c);
        coframe.push_back("d" + c);
    }
    LieAlgebroid tm(coordNames, frame, coframe);
    for (std::size_t a = 0; a < tm.m(); ++a) tm.setAnchor(a, a, tm.one());
    return tm;
}

ValidationReport validateAlgebroid(const LieAlgebroid& e) {
    ValidationReport report;
    const std::size_t n = e.n(), m = e.m();
    // [X_i, [X_j, X_k]] in components.
    auto nested = [&](std::size_t i, std::size_t j, std::size_t k) {
        Section out = e.zeroSection();
        for (std::size_t l = 0; l < n; ++l) {
            const Coeff cl = e.structure(l, j, k);
            if (cl.isZero()) continue;
            for (std::size_t t = 0; t < n; ++t) out[t] += cl * e.structure(t, i, l);
        }
        for (std::size_t t = 0; t < n; ++t) out[t] += e.anchorFrame(i, e.structure(t, j, k));
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                ++report.triplesChecked;
                Section r = nested(i, j, k);
                Section r2 = nested(j, k, i);
                Section r3 = nested(k, i, j);
                for (std::size_t t = 0; t < n; ++t) {
                    Coeff v = r[t] + r2[t] + r3[t];
                    if (!v.isZero()) report.jacobi.push_back({i, j, k, t, std::move(v)});
                }
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ++report.pairsChecked;
            for (std::size_t a = 0; a < m; ++a) {
                Coeff v = e.zero();
                for (std::size_t k = 0; k < n; ++k) v += e.structure(k, i, j) * e.anchor(k, a);
                v -= e.anchorFrame(i, e.anchor(j, a));
                v += e.anchorFrame(j, e.anchor(i, a));
                if (!v.isZero()) report.anchor.push_back({i, j, a, std::move(v)});
            }
        }
    return report;
}

Coeff anchorApply(const LieAlgebroid& e, const Section& x, const Coeff& f) {
    if (x.size() != e.n()) throw RankMismatch("section length differs from the fiber rank");
    Coeff out = e.zero();
    for (std::size_t i = 0; i < e.n(); ++i)
        if (!x[i].isZero()) out += x[i] * e.anchorFrame(i, f);
    return out;
}

Section bracketSections(const LieAlgebroid& e, const Section& x, const Section& y) {
    if (x.size() != e.n() || y.size() != e.n()) throw RankMismatch("section length differs from the fiber rank");
    Section out = e.zeroSection();
    for (std::size_t i = 0; i < e.n(); ++i) {
        if (x[i].isZero()) continue;
        for (std::size_t j = 0; j < e.n(); ++j) {
            if (y[j].isZero()) continue;
            const Coeff fg = x[i] * y[j];
            if (i != j)
                for (std::size_t k = 0; k < e.n(); ++k) out[k] += fg * e.structure(k, i, j);
            out[j] += x[i] * e.anchorFrame(i, y[j]);
            out[i] -= y[j] * e.anchorFrame(j, x[i]);
        }
    }
    return out;
}

namespace {

Mask below(Mask set, int index) { return set & (bit(index) - 1); }
Mask above(Mask set, int index) { return set & ~((bit(index) << 1) - 1); }

/// [X_j, f X_I].
Multivector frameWithMonomial(const LieAlgebroid& e, std::size_t j, const Coeff& f, Mask mask) {
    Multivector out(e.n(), e.m());
    out.addTerm(mask, e.anchorFrame(j, f));
    int position = 0;
    for (int it : indicesOf(mask)) {
        const Mask rest = mask & ~bit(it);
        for (std::size_t k = 0; k < e.n(); ++k) {
            const Coeff c = e.structure(k, j, static_cast<std::size_t>(it));
            if (c.isZero()) continue;
            // X_{<t} ∧ X_k ∧ X_{>t} = (−1)^{t−1} X_k ∧ X_{I∖i_t}.
            const int s = wedgeSign(bit(static_cast<int>(k)), rest);
            if (s == 0) continue;
            Coeff v = f * c;
            if ((s < 0) != (position % 2 != 0)) v = -v;
            out.addTerm(rest | bit(static_cast<int>(k)), v);
        }
        ++position;
    }
    return out;
}

/// [f X_I, g] = (−1)^{|I|−1} f Σ_t (−1)^{t−1} ρ(X_{i_t})(g) X_{I∖i_t}.
Multivector monomialWithFunction(const LieAlgebroid& e, const Coeff& f, Mask mask, const Coeff& g) {
    Multivector out(e.n(), e.m());
    if (g.isConstant()) return out;
    const bool outerNegative = (degreeOf(mask) - 1) % 2 != 0;
    int position = 0;
    for (int it : indicesOf(mask)) {
        Coeff v = f * e.anchorFrame(static_cast<std::size_t>(it), g);
        if (outerNegative != (position % 2 != 0)) v = -v;
        out.addTerm(mask & ~bit(it), v);
        ++position;
    }
    return out;
}

Multivector monomialBracket(const LieAlgebroid& e, const Coeff& f, Mask ma, const Coeff& g, Mask mb) {
    const std::size_t n = e.n(), m = e.m();
    const int degA = degreeOf(ma);
    // Leibniz in the second argument over b = g ∧ X_{j_1} ∧ … ∧ X_{j_l}.
    Multivector out = wedge(monomialWithFunction(e, f, ma, g), Multivector::basis(n, m, mb));
    if (degA == 0 && f.isConstant()) return out;
    int position = 0;
    for (int jq : indicesOf(mb)) {
        // [a, X_j] = −[X_j, a].
        Multivector inner = -frameWithMonomial(e, static_cast<std::size_t>(jq), f, ma);
        if (!inner.isZero()) {
            Multivector term =
                wedge(wedge(Multivector::basis(n, m, below(mb, jq)), inner), Multivector::basis(n, m, above(mb, jq)));
            term *= g;
            if ((degA - 1) * position % 2 != 0) term = -term;
            out += term;
        }
        ++position;
    }
    return out;
}

}  // namespace

Multivector schouten(const LieAlgebroid& e, const Multivector& a, const Multivector& b) {
    if (a.rank() != e.n() || b.rank() != e.n()) throw RankMismatch("multivector rank differs from the fiber rank");
    Multivector out(e.n(), e.m());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out += monomialBracket(e, ca, ma, cb, mb);
    return out;
}

LieAlgebroid reframe(const LieAlgebroid& e, const CoeffMatrix& a) {
    const std::size_t n = e.n();
    if (a.size() != n) throw RankMismatch("frame change has the wrong size");
    auto inv = inverse(a);
    if (!inv) throw Error("frame change is not invertible");
    LieAlgebroid out(e.coordNames(), e.frameNames(), e.coframeNames());
    auto newFrame = [&](std::size_t i) {
        Section s = e.zeroSection();
        for (std::size_t j = 0; j < n; ++j) s[j] = a[j][i];
        return s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < e.m(); ++c) out.setAnchor(i, c, anchorApply(e, newFrame(i), Coeff::variable(e.m(), c)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Section br = bracketSections(e, newFrame(i), newFrame(j));
            Section inNew = e.zeroSection();
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t k = 0; k < n; ++k) inNew[l] += (*inv)[l][k] * br[k];
            out.setBracket(i, j, inNew);
        }
    return out;
}

}  // namespace lacalc
