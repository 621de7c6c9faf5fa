#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lacalc/coeff.hpp"
#include "lacalc/errors.hpp"

namespace lacalc {

/// Strictly increasing index tuple I ⊆ {0..n-1}, stored as a bit set.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxRank = 16;

inline int degreeOf(Mask m) { return std::popcount(m); }
std::vector<int> indicesOf(Mask m);
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask fullMask(std::size_t n) { return n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1); }

/// Sign s with e_a ∧ e_b = s·e_{a∪b}; zero when a and b overlap.
int wedgeSign(Mask a, Mask b);

/// Degree first, then lexicographic on the increasing index tuples.
struct MaskOrder {
    bool operator()(Mask a, Mask b) const {
        const int da = degreeOf(a), db = degreeOf(b);
        if (da != db) return da < db;
        const Mask diff = a ^ b;
        return diff != 0 && (a & (diff & (~diff + 1))) != 0;
    }
};

/// All index tuples of size k in lexicographic order.
std::vector<Mask> basisOfDegree(std::size_t n, std::size_t k);

struct VectorKind {};
struct CovectorKind {};

/// Sparse element of the exterior algebra over the coefficient ring:
/// a map from index tuples to nonzero coefficients.
///
/// `Graded<VectorKind>` is a multivector in Λ(E) (frame X_1..X_n),
/// `Graded<CovectorKind>` a form in Λ(E*) (dual frame α^1..α^n).
template <class Kind>
class Graded {
public:
    using TermMap = std::map<Mask, Coeff, MaskOrder>;

    Graded(std::size_t rank, std::size_t nvars) : rank_(rank), nvars_(nvars) {
        if (rank > kMaxRank) throw RankMismatch("fiber rank exceeds " + std::to_string(kMaxRank));
    }

    static Graded scalar(std::size_t rank, const Coeff& c) {
        Graded g(rank, c.nvars());
        g.addTerm(0, c);
        return g;
    }
    static Graded basis(std::size_t rank, std::size_t nvars, Mask m) {
        Graded g(rank, nvars);
        g.addTerm(m, Coeff::constant(nvars, 1));
        return g;
    }
    static Graded generator(std::size_t rank, std::size_t nvars, int index) {
        return basis(rank, nvars, bit(index));
    }

    std::size_t rank() const { return rank_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    Coeff coefficient(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(nvars_) : it->second;
    }

    void addTerm(Mask m, const Coeff& c) {
        if ((m & ~fullMask(rank_)) != 0) throw RankMismatch("index outside the fiber rank");
        if (c.nvars() != nvars_) throw Error("coefficient ring differs from element ring");
        if (c.isZero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    /// Component of degree k.
    Graded homogeneous(int k) const {
        Graded g(rank_, nvars_);
        for (const auto& [m, c] : terms_)
            if (degreeOf(m) == k) g.terms_.emplace(m, c);
        return g;
    }

    /// Degrees with nonzero components, ascending.
    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& [m, c] : terms_)
            if (out.empty() || out.back() != degreeOf(m)) out.push_back(degreeOf(m));
        return out;
    }

    bool isHomogeneous() const { return degrees().size() <= 1; }

    /// Degree of a nonzero homogeneous element; `fallback` for zero.
    int degree(int fallback = 0) const {
        auto ds = degrees();
        if (ds.empty()) return fallback;
        if (ds.size() != 1) throw Error("element is not homogeneous");
        return ds.front();
    }

    Graded mapCoefficients(const std::function<Coeff(const Coeff&)>& f) const {
        Graded g(rank_, nvars_);
        for (const auto& [m, c] : terms_) g.addTerm(m, f(c));
        return g;
    }

    Graded operator-() const {
        Graded g = *this;
        for (auto& [m, c] : g.terms_) c = -c;
        return g;
    }
    Graded& operator+=(const Graded& o) {
        checkCompatible(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, c);
        return *this;
    }
    Graded& operator-=(const Graded& o) {
        checkCompatible(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, -c);
        return *this;
    }
    Graded& operator*=(const Coeff& f) {
        if (f.isZero()) {
            terms_.clear();
            return *this;
        }
        TermMap next;
        for (const auto& [m, c] : terms_) {
            Coeff p = c * f;
            if (!p.isZero()) next.emplace(m, std::move(p));
        }
        terms_ = std::move(next);
        return *this;
    }
    Graded& operator*=(const Rational& r) { return *this *= Coeff::constant(nvars_, r); }

    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator*(const Coeff& f, Graded a) { return a *= f; }
    friend Graded operator*(Graded a, const Coeff& f) { return a *= f; }
    friend Graded operator*(const Rational& r, Graded a) { return a *= r; }
    friend bool operator==(const Graded& a, const Graded& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Graded& a, const Graded& b) { return !(a == b); }

    /// Canonical text, e.g. `(x + 1)*e1/\e2 - 3/2*e3`; `0` for zero.
    std::string str(const std::vector<std::string>& generatorNames,
                    const std::vector<std::string>& coordNames) const;

    void checkCompatible(const Graded& o) const {
        if (o.rank_ != rank_) throw RankMismatch("exterior elements have different ranks");
        if (o.nvars_ != nvars_) throw Error("exterior elements over different coefficient rings");
    }

private:
    std::size_t rank_;
    std::size_t nvars_;
    TermMap terms_;
};

using Multivector = Graded<VectorKind>;
using Form = Graded<CovectorKind>;

std::string formatGraded(const std::map<Mask, Coeff, MaskOrder>& terms,
                         const std::vector<std::string>& generatorNames,
                         const std::vector<std::string>& coordNames);

template <class Kind>
std::string Graded<Kind>::str(const std::vector<std::string>& generatorNames,
                              const std::vector<std::string>& coordNames) const {
    return formatGraded(terms_, generatorNames, coordNames);
}

/// Graded-commutative product: a∧b = (−1)^{|a||b|} b∧a on homogeneous elements.
template <class Kind>
Graded<Kind> wedge(const Graded<Kind>& a, const Graded<Kind>& b) {
    a.checkCompatible(b);
    Graded<Kind> out(a.rank(), a.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const int s = wedgeSign(ma, mb);
            if (s == 0) continue;
            Coeff c = ca * cb;
            if (s < 0) c = -c;
            out.addTerm(ma | mb, c);
        }
    return out;
}

/// Duality pairing ⟨α^I, X_J⟩ = δ_{IJ}; components of different degree pair to 0.
Coeff pair(const Form& omega, const Multivector& a);

/// Interior product i_a ω. A section inserts into the first argument slot and
/// i_{a∧b} = i_b ∘ i_a, so i_{X_I} α^K = ε(I, K∖I) α^{K∖I} and i_a ω = ⟨ω, a⟩
/// when the degrees agree.
Form contractForm(const Multivector& a, const Form& omega);

/// i_φ on Λ(E) for a 1-form φ: the degree −1 derivation with i_φ X = ⟨φ, X⟩.
Multivector contractMulti(const Form& phi, const Multivector& a);

/// Nonvanishing top form up to sign, μ = √D · s · α^1∧…∧α^n.
///
/// D (`halfDetFactor`) enters consumers only through ½·∂D/D, which keeps
/// everything rational; it is how metric volumes √det g are carried.
struct OddVolume {
    Coeff s;
    std::optional<Coeff> halfDetFactor;

    explicit OddVolume(Coeff scale, std::optional<Coeff> d = std::nullopt);
    static OddVolume coordinate(std::size_t nvars) { return OddVolume(Coeff::constant(nvars, 1)); }

    OddVolume negated() const { return OddVolume(-s, halfDetFactor); }
    /// The representative form s·α^{1..n} (without the √D factor).
    Form representative(std::size_t rank) const;

    friend bool operator==(const OddVolume& a, const OddVolume& b) {
        return (a.s == b.s || a.s == -b.s) && a.halfDetFactor == b.halfDetFactor;
    }
};

/// *_μ(a) = i_a μ for the representative s·α^{1..n}.
Form starMu(const OddVolume& mu, std::size_t rank, const Multivector& a);
/// Inverse of starMu; needs 1/s in the coefficient ring.
Multivector starMuInv(const OddVolume& mu, std::size_t rank, const Form& omega);

}  // namespace lacalc
