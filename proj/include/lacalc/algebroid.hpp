#pragma once

#include <string>
#include <vector>

#include "lacalc/coeff.hpp"
#include "lacalc/exterior.hpp"
#include "lacalc/matrix.hpp"

namespace lacalc {

/// Section X = Σ_i f^i X_i of E, one coefficient per frame element.
using Section = std::vector<Coeff>;

/// Chart-level Lie algebroid: base coordinates u^1..u^m, frame X_1..X_n,
/// anchor ρ(X_i) = Σ_a ρ^a_i ∂/∂u^a and brackets [X_i, X_j] = Σ_k c^k_{ij} X_k.
///
/// Structure functions are stored for i < j only; c^k_{ji} = −c^k_{ij} and
/// c^k_{ii} = 0 follow from the storage. Either m or n may be zero.
class LieAlgebroid {
public:
    LieAlgebroid(std::vector<std::string> coordNames, std::vector<std::string> frameNames,
                 std::vector<std::string> coframeNames = {});

    std::size_t m() const { return coords_.size(); }
    std::size_t n() const { return frame_.size(); }
    const std::vector<std::string>& coordNames() const { return coords_; }
    const std::vector<std::string>& frameNames() const { return frame_; }
    const std::vector<std::string>& coframeNames() const { return coframe_; }

    /// ρ^a_i.
    const Coeff& anchor(std::size_t i, std::size_t a) const { return anchor_[i][a]; }
    void setAnchor(std::size_t i, std::size_t a, Coeff value);

    /// c^k_{ij} for any i, j (antisymmetry applied).
    Coeff structure(std::size_t k, std::size_t i, std::size_t j) const;
    /// Sets [X_i, X_j] = Σ_k value[k] X_k for i ≠ j (and [X_j, X_i] implicitly).
    void setBracket(std::size_t i, std::size_t j, const Section& value);
    /// [X_i, X_j] as a section.
    Section frameBracket(std::size_t i, std::size_t j) const;

    Coeff zero() const { return Coeff(m()); }
    Coeff one() const { return Coeff::constant(m(), 1); }
    Section zeroSection() const { return Section(n(), zero()); }
    Section frameSection(std::size_t i) const;

    Multivector toMultivector(const Section& x) const;
    /// Degree-1 part of a multivector as a section.
    Section toSection(const Multivector& a) const;
    Multivector multivector(const Coeff& f) const { return Multivector::scalar(n(), f); }
    Form form(const Coeff& f) const { return Form::scalar(n(), f); }

    /// ρ(X_i)(f) = Σ_a ρ^a_i ∂f/∂u^a.
    Coeff anchorFrame(std::size_t i, const Coeff& f) const;

    friend bool operator==(const LieAlgebroid& a, const LieAlgebroid& b);

private:
    std::vector<std::string> coords_;
    std::vector<std::string> frame_;
    std::vector<std::string> coframe_;
    std::vector<std::vector<Coeff>> anchor_;
    // structure_[pairIndex(i,j)][k] for i < j.
    std::vector<Section> structure_;

    std::size_t pairIndex(std::size_t i, std::size_t j) const { return i * n() + j; }
};

/// Tangent algebroid TM over the given coordinates: frame ∂_a, ρ = id, c = 0.
LieAlgebroid tangentAlgebroid(const std::vector<std::string>& coordNames);

struct JacobiResidual {
    std::size_t i, j, k;  // frame triple, i < j < k
    std::size_t target;   // component X_target
    Coeff value;
};

struct AnchorResidual {
    std::size_t i, j;  // frame pair, i < j
    std::size_t coord;  // component ∂/∂u^coord
    Coeff value;
};

/// Frame-level axiom check. The Jacobi residual of (i,j,k) is the cyclic sum
///
///   Σ_cycl [X_i, [X_j, X_k]] = Σ_cycl Σ_m ( Σ_l c^l_{jk} c^m_{il} + ρ(X_i)(c^m_{jk}) ) X_m
///
/// and the anchor residual of (i,j) is ρ([X_i,X_j]) − [ρ(X_i), ρ(X_j)], i.e.
///
///   Σ_k c^k_{ij} ρ^a_k − ρ(X_i)(ρ^a_j) + ρ(X_j)(ρ^a_i)   for each coordinate a.
///
/// Only the nonzero residuals are stored.
struct ValidationReport {
    std::vector<JacobiResidual> jacobi;
    std::vector<AnchorResidual> anchor;
    std::size_t triplesChecked = 0;
    std::size_t pairsChecked = 0;

    bool jacobiOk() const { return jacobi.empty(); }
    bool anchorOk() const { return anchor.empty(); }
    bool passes() const { return jacobiOk() && anchorOk(); }
};

ValidationReport validateAlgebroid(const LieAlgebroid& e);

/// ρ(X)(f) for a section X.
Coeff anchorApply(const LieAlgebroid& e, const Section& x, const Coeff& f);

/// [X, Y] with the Leibniz rule [X, fY] = f[X,Y] + ρ(X)(f) Y.
Section bracketSections(const LieAlgebroid& e, const Section& x, const Section& y);

/// Schouten bracket on Λ(E): degree |a|+|b|−1, computed monomial by monomial
/// from graded antisymmetry and the graded Leibniz rule, starting from
/// [X_i, X_j], [X, f] = ρ(X)(f) and [f, g] = 0.
Multivector schouten(const LieAlgebroid& e, const Multivector& a, const Multivector& b);

/// The algebroid in a new frame Y_i = Σ_j A[j][i] X_j; A must be invertible.
LieAlgebroid reframe(const LieAlgebroid& e, const CoeffMatrix& a);

}  // namespace lacalc
