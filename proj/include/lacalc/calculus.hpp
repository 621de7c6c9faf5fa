#pragma once

#include <vector>

#include "lacalc/algebroid.hpp"
#include "lacalc/exterior.hpp"

namespace lacalc {

/// A divergence, stored by its frame values d_i = div(X_i). It extends to
/// every section by div(fX) = f·div(X) + ρ(X)(f).
struct Divergence {
    std::vector<Coeff> values;
    bool cocycleVerified = false;

    /// div(X) for an arbitrary section.
    Coeff apply(const LieAlgebroid& e, const Section& x) const;
};

Divergence zeroDivergence(const LieAlgebroid& e);

/// de Rham differential, evaluated on frame tuples as
///
///   dω(X_0..X_k) = Σ_i (−1)^i ρ(X_i) ω(..X̂_i..) + Σ_{p<q} (−1)^{p+q} ω([X_p,X_q], ..X̂_p..X̂_q..).
Form deRham(const LieAlgebroid& e, const Form& omega);

/// 𝓛_a = i_a d − (−1)^{|a|} d i_a, applied degree by degree in a.
Form lieDerivativeForm(const LieAlgebroid& e, const Multivector& a, const Form& omega);

/// 𝓛_X a = [X, a].
Multivector lieDerivativeMulti(const LieAlgebroid& e, const Section& x, const Multivector& a);

/// d_i = (𝓛_{X_i} μ)/μ for the representative μ = s·α^{1..n}, plus
/// ½·ρ(X_i)(D)/D when μ carries the factor √D. Independent of the sign of μ.
Divergence divergenceFromOddVolume(const LieAlgebroid& e, const OddVolume& mu);

struct CocycleEntry {
    std::size_t i, j;
    Coeff value;
};

/// Residuals div([X_i,X_j]) − ρ(X_i)(d_j) + ρ(X_j)(d_i). Expanding
/// div([X,Y]) = [div X, Y] + [X, div Y] with [f, Y] = −ρ(Y)(f) gives this form.
struct CocycleReport {
    std::vector<CocycleEntry> residuals;  // nonzero entries only
    bool passes() const { return residuals.empty(); }
};

CocycleReport checkCocycle(const LieAlgebroid& e, const Divergence& div);

/// Generating operator of a divergence:
///
///   ∂(Y_1∧…∧Y_k) = Σ_t (−1)^{t+1} ∂(Y_t) Y_1∧..Ŷ_t..∧Y_k
///                 + Σ_{p<q} (−1)^{p+q} [Y_p, Y_q] ∧ Y_1∧..Ŷ_p..Ŷ_q..∧Y_k
///
/// with ∂(Y) = −div(Y) on sections and ∂(f) = 0.
Multivector generatingFromDivergence(const LieAlgebroid& e, const Divergence& div, const Multivector& a);

/// ∂_{|μ|}(a) = (−1)^{|a|} *_μ^{-1} d *_μ(a). A √D factor contributes the
/// conjugation term (−1)^{|a|} *_μ^{-1}(½ d log D ∧ *_μ a).
Multivector generatingFromOddVolume(const LieAlgebroid& e, const OddVolume& mu, const Multivector& a);

/// The 1-form φ with ⟨φ, X_i⟩ = div1(X_i) − div2(X_i).
Form divergenceDifference(const LieAlgebroid& e, const Divergence& div1, const Divergence& div2);

/// d^φ ω = dω + φ∧ω. Squares to e_{dφ}; closedness of φ is not required.
Form wittenDifferential(const LieAlgebroid& e, const Form& phi, const Form& omega);

/// (∂_{|μ|} − i_φ)(a).
Multivector deformedGenerating(const LieAlgebroid& e, const OddVolume& mu, const Form& phi, const Multivector& a);

/// d log F as a 1-form: Σ_i ρ(X_i)(F)/F α^i.
Form dlog(const LieAlgebroid& e, const Coeff& f);

/// The 1-form Σ_i c_i α^i.
Form oneForm(const LieAlgebroid& e, const std::vector<Coeff>& components);
/// Components ⟨φ, X_i⟩ of a form's degree-1 part.
std::vector<Coeff> components(const LieAlgebroid& e, const Form& phi);

}  // namespace lacalc
