#include "lacalc/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace lacalc {

std::vector<int> indicesOf(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

int wedgeSign(Mask a, Mask b) {
    if ((a & b) != 0) return 0;
    // Each generator of b must move past the generators of a above it.
    int swaps = 0;
    for (Mask rest = b; rest != 0; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        swaps += std::popcount(a >> (j + 1));
    }
    return (swaps % 2) == 0 ? 1 : -1;
}

std::vector<Mask> basisOfDegree(std::size_t n, std::size_t k) {
    std::vector<Mask> out;
    if (k > n) return out;
    for (Mask m = 0; m <= fullMask(n); ++m) {
        if (static_cast<std::size_t>(degreeOf(m)) == k) out.push_back(m);
        if (m == fullMask(n)) break;
    }
    std::sort(out.begin(), out.end(), MaskOrder{});
    return out;
}

std::string formatGraded(const std::map<Mask, Coeff, MaskOrder>& terms,
                         const std::vector<std::string>& generatorNames,
                         const std::vector<std::string>& coordNames) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        // Pull a leading minus out of single-term coefficients.
        bool negative = false;
        Coeff shown = c;
        if (c.isSingleTerm() && c.num().leadingCoefficient() < 0) {
            negative = true;
            shown = -c;
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m == 0) {
            os << shown.str(coordNames);
            continue;
        }
        if (!shown.isOne()) os << shown.factorStr(coordNames) << '*';
        bool firstGen = true;
        for (int i : indicesOf(m)) {
            if (!firstGen) os << "/\\";
            os << generatorNames.at(i);
            firstGen = false;
        }
    }
    return os.str();
}

Coeff pair(const Form& omega, const Multivector& a) {
    if (omega.rank() != a.rank()) throw RankMismatch("pairing across different ranks");
    Coeff out(omega.nvars());
    for (const auto& [m, c] : omega.terms()) {
        auto it = a.terms().find(m);
        if (it != a.terms().end()) out += c * it->second;
    }
    return out;
}

Form contractForm(const Multivector& a, const Form& omega) {
    if (omega.rank() != a.rank()) throw RankMismatch("contraction across different ranks");
    Form out(omega.rank(), omega.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mw, cw] : omega.terms()) {
            if ((ma & mw) != ma) continue;
            const Mask rest = mw & ~ma;
            Coeff c = ca * cw;
            if (wedgeSign(ma, rest) < 0) c = -c;
            out.addTerm(rest, c);
        }
    return out;
}

Multivector contractMulti(const Form& phi, const Multivector& a) {
    if (phi.rank() != a.rank()) throw RankMismatch("contraction across different ranks");
    Multivector out(a.rank(), a.nvars());
    for (const auto& [mp, cp] : phi.terms()) {
        if (degreeOf(mp) != 1) throw Error("contractMulti needs a 1-form");
        for (const auto& [ma, ca] : a.terms()) {
            if ((ma & mp) == 0) continue;
            // Moving X_i to the front passes the generators below it.
            const int below = std::popcount(ma & (mp - 1));
            Coeff c = cp * ca;
            if (below % 2 != 0) c = -c;
            out.addTerm(ma & ~mp, c);
        }
    }
    return out;
}

OddVolume::OddVolume(Coeff scale, std::optional<Coeff> d) : s(std::move(scale)), halfDetFactor(std::move(d)) {
    if (s.isZero()) throw NonInvertibleVolume("odd volume with zero coefficient");
    if (halfDetFactor && halfDetFactor->isZero()) throw NonInvertibleVolume("odd volume with zero determinant factor");
}

Form OddVolume::representative(std::size_t rank) const {
    Form f(rank, s.nvars());
    f.addTerm(fullMask(rank), s);
    return f;
}

Form starMu(const OddVolume& mu, std::size_t rank, const Multivector& a) {
    if (a.rank() != rank) throw RankMismatch("star map across different ranks");
    return contractForm(a, mu.representative(rank));
}

Multivector starMuInv(const OddVolume& mu, std::size_t rank, const Form& omega) {
    if (omega.rank() != rank) throw RankMismatch("star map across different ranks");
    const Coeff inv = mu.s.inverse();
    const Mask top = fullMask(rank);
    Multivector out(rank, omega.nvars());
    for (const auto& [m, c] : omega.terms()) {
        const Mask comp = top & ~m;
        Coeff v = c * inv;
        if (wedgeSign(comp, m) < 0) v = -v;
        out.addTerm(comp, v);
    }
    return out;
}

}  // namespace lacalc
