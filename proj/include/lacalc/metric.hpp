#pragma once

#include <vector>

#include "lacalc/algebroid.hpp"
#include "lacalc/calculus.hpp"

namespace lacalc {

/// g_{ij} = g(X_i, X_j): symmetric with det g ≠ 0 as a ring element.
struct FiberMetric {
    CoeffMatrix g;

    explicit FiberMetric(CoeffMatrix values);
    std::size_t rank() const { return g.size(); }
    Coeff determinant() const;
};

/// Christoffel data ∇_{X_i} X_j = Σ_k Γ^k_{ij} X_k.
class Connection {
public:
    Connection(std::size_t n, std::size_t nvars);

    std::size_t n() const { return n_; }
    std::size_t nvars() const { return nvars_; }
    const Coeff& gamma(std::size_t k, std::size_t i, std::size_t j) const { return gamma_[index(k, i, j)]; }
    void setGamma(std::size_t k, std::size_t i, std::size_t j, Coeff value) { gamma_[index(k, i, j)] = std::move(value); }

    /// ∇_X Y for arbitrary sections.
    Section covariant(const LieAlgebroid& e, const Section& x, const Section& y) const;
    /// ∇_{X_k} a, extended to multivectors as a derivation.
    Multivector covariant(const LieAlgebroid& e, std::size_t k, const Multivector& a) const;

    friend bool operator==(const Connection&, const Connection&) = default;

private:
    std::size_t index(std::size_t k, std::size_t i, std::size_t j) const { return (k * n_ + i) * n_ + j; }

    std::size_t n_, nvars_;
    std::vector<Coeff> gamma_;
};

/// R(X_i, X_j) X_k = Σ_l R^l_{kij} X_l.
class Curvature {
public:
    Curvature(std::size_t n, std::size_t nvars);

    std::size_t n() const { return n_; }
    const Coeff& at(std::size_t l, std::size_t k, std::size_t i, std::size_t j) const { return r_[index(l, k, i, j)]; }
    Coeff& at(std::size_t l, std::size_t k, std::size_t i, std::size_t j) { return r_[index(l, k, i, j)]; }
    bool isZero() const;

private:
    std::size_t index(std::size_t l, std::size_t k, std::size_t i, std::size_t j) const {
        return ((l * n_ + k) * n_ + i) * n_ + j;
    }

    std::size_t n_;
    std::vector<Coeff> r_;
};

/// Levi-Civita connection from the Koszul formula
///
///   2g(∇_X Y, Z) = ρ(X)g(Y,Z) + ρ(Y)g(X,Z) − ρ(Z)g(X,Y) + g([X,Y],Z) − g([X,Z],Y) − g([Y,Z],X).
///
/// Throws SingularMetric when det g = 0.
Connection leviCivita(const LieAlgebroid& e, const FiberMetric& g);

/// Nonzero entries of ∇_{X_i}X_j − ∇_{X_j}X_i − [X_i,X_j], indexed (k, i, j) with i < j.
std::vector<Coeff> torsionResidual(const LieAlgebroid& e, const Connection& nabla);
/// Nonzero entries of ρ(X_i)g_{jk} − g(∇_{X_i}X_j, X_k) − g(X_j, ∇_{X_i}X_k).
std::vector<Coeff> metricityResidual(const LieAlgebroid& e, const Connection& nabla, const FiberMetric& g);

/// R^p_{kij} = ρ_i(Γ^p_{jk}) − ρ_j(Γ^p_{ik}) + Σ_l (Γ^l_{jk}Γ^p_{il} − Γ^l_{ik}Γ^p_{jl} − c^l_{ij}Γ^p_{lk}).
Curvature curvature(const LieAlgebroid& e, const Connection& nabla);

/// The three conditions of the curvature lemma.
///
/// (A) Σ_{j,k} R(X_j,X_k)^*(α^k∧α^j∧ω) = 0 for every basis form ω, with
///     R(X_j,X_k)^* acting on forms as the derivation dual to R(X_j,X_k).
/// (B) Ricci symmetry: Σ_k R^k_{jks} is symmetric in (j,s).
/// (C) First Bianchi: Σ_{cycl(j,k,s)} R^i_{jks} = 0.
///
/// Here R^i_{jks} is the α^i component of R(X_j,X_k) X_s.
struct CurvatureIdentityReport {
    bool operatorIdentity = false;  // (A)
    bool ricciSymmetric = false;    // (B)
    bool bianchi = false;           // (C)
    bool torsionFree = false;

    bool equivalence() const { return operatorIdentity == (ricciSymmetric && bianchi); }
    /// The biconditional holds, and for a torsion-free connection with (A) all three hold.
    bool passes() const { return equivalence(); }
};

CurvatureIdentityReport curvatureIdentityCheck(const LieAlgebroid& e, const Connection& nabla);

/// div_∇(X_i) = Σ_k Γ^k_{ki}, i.e. div = −∂_∇ on sections with ∂_∇(a) = −Σ_k i(α^k)∇_{X_k}a.
Divergence divergenceFromConnection(const LieAlgebroid& e, const Connection& nabla);

/// ∂_∇(a) = −Σ_k i(α^k) ∇_{X_k} a.
Multivector generatingFromConnection(const LieAlgebroid& e, const Connection& nabla, const Multivector& a);

/// Divergence of the metric volume √det g·α^{1..n}.
Divergence divergenceFromMetricVolume(const LieAlgebroid& e, const FiberMetric& g);

}  // namespace lacalc
