#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lacalc/algebroid.hpp"
#include "lacalc/calculus.hpp"

namespace lacalc {

/// Base-preserving morphism κ: E1 → E2 over one chart, κ(X^1_i) = Σ_j κ^j_i X^2_j.
/// `matrix[j][i]` holds κ^j_i (n2 rows, n1 columns).
struct Morphism {
    LieAlgebroid source;
    LieAlgebroid target;
    CoeffMatrix matrix;

    /// κ(X) for a section of the source.
    Section apply(const Section& x) const;
};

Morphism identityMorphism(const LieAlgebroid& e);
/// ρ: E → TM over the same coordinates.
Morphism anchorMorphism(const LieAlgebroid& e);
Morphism zeroMorphism(const LieAlgebroid& source, const LieAlgebroid& target);

struct MorphismReport {
    /// ρ1^a_i − Σ_j κ^j_i ρ2^a_j, nonzero entries as (i, a, value).
    std::vector<std::tuple<std::size_t, std::size_t, Coeff>> anchor;
    /// κ[X_i,X_j]_1 − [κX_i, κX_j]_2, nonzero entries as (i, j, component, value).
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Coeff>> bracket;
    bool passes() const { return anchor.empty() && bracket.empty(); }
};

/// Throws ChartMismatch when the charts or the matrix shape disagree.
MorphismReport validateMorphism(const Morphism& k);

/// κ*(div2)(X_i) = div2(κ X_i), with div2 extended to sections as usual.
Divergence pullbackDivergence(const Morphism& k, const Divergence& div2);
/// Pullback of forms, the algebra map with κ*(α^j) = Σ_i κ^j_i α^i.
Form pullbackForm(const Morphism& k, const Form& omega);

/// φ with i_φ = κ*(div2) − div1.
Form modularOfMorphism(const Morphism& k, const Divergence& div1, const Divergence& div2);

/// φ = Σ_i (Σ_k c^k_{ik} + Σ_a ∂ρ^a_i/∂u^a) α^i.
Form modularRepresentative(const LieAlgebroid& e);

/// Modular form of the anchor for volumes μ_E on E and μ_M on TM:
/// ρ*(div_{μ_M}) − div_{μ_E}.
Form modularFromVolumes(const LieAlgebroid& e, const OddVolume& muE, const OddVolume& muM);

/// φ read off from 𝓛_X(a)⊗μ + a⊗𝓛_{ρ(X)}μ = ⟨X,φ⟩ a⊗μ with a = X_1∧…∧X_n / s
/// dual to μ_E = s·α^{1..n} and μ = μ_M = t·du^{1..m}.
Form modularFromLieDerivatives(const LieAlgebroid& e, const OddVolume& muE, const OddVolume& muM);

struct RouteReport {
    Form fromDivergences;      // pullback minus source divergence
    Form fromLieDerivatives;   // top-degree Lie derivatives
    Form fromStructure;        // structure functions and anchor
    bool agree() const { return fromDivergences == fromLieDerivatives && fromLieDerivatives == fromStructure; }
};

/// All three representatives for coordinate volumes.
RouteReport modularRoutes(const LieAlgebroid& e);

struct CompositionReport {
    Form eta1;         // Mod(E1) representative
    Form etaKappa;     // Mod(κ) representative
    Form pulledEta2;   // κ*(Mod(E2) representative)
    bool holds() const { return eta1 == etaKappa + pulledEta2; }
};

/// Representative-level check of Mod(κ) = Mod(E1) − κ*Mod(E2) for the given volumes.
CompositionReport compositionCheck(const Morphism& k, const OddVolume& mu1, const OddVolume& mu2,
                                   const OddVolume& muM);

enum class ClassStatus { Trivial, NonTrivial, Undecided };

struct ClassReport {
    ClassStatus status = ClassStatus::Undecided;
    /// A primitive f with df = φ when trivial.
    std::optional<Coeff> primitive;
};

/// Decides whether a closed 1-form is exact: for m = 0 exactly when it is zero,
/// otherwise by a polynomial ansatz of total degree ≤ degreeBound.
ClassReport classTriviality(const LieAlgebroid& e, const Form& phi, unsigned degreeBound);

std::string statusName(ClassStatus s);

}  // namespace lacalc
