#pragma once

#include <string>
#include <vector>

#include "lacalc/algebroid.hpp"

namespace lacalc {

/// Bivector P = Σ_{a<b} P^{ab} ∂_a∧∂_b with {u^a, u^b} = P^{ab}.
class PoissonBivector {
public:
    explicit PoissonBivector(std::vector<std::string> coordNames);

    std::size_t m() const { return coords_.size(); }
    const std::vector<std::string>& coordNames() const { return coords_; }
    /// P^{ab} for any a, b (antisymmetry applied).
    Coeff entry(std::size_t a, std::size_t b) const;
    /// Sets P^{ab} = value and P^{ba} = −value; a ≠ b.
    void set(std::size_t a, std::size_t b, const Coeff& value);

    /// P as a bivector of the tangent algebroid.
    Multivector asMultivector() const;

private:
    std::vector<std::string> coords_;
    CoeffMatrix p_;
};

/// T*M with frame du^a ("d" + name), anchor ρ(du^a) = Σ_b P^{ab} ∂_b and
/// [du^a, du^b] = d(P^{ab}), i.e. c^c_{ab} = ∂P^{ab}/∂u^c. The coframe is
/// named "p" + coordinate name.
LieAlgebroid cotangentAlgebroid(const PoissonBivector& p);

/// [P, P]/2 via the Schouten bracket of the tangent algebroid.
Multivector jacobiResidual(const PoissonBivector& p);

/// Modular representative of the cotangent algebroid for coordinate volumes.
/// Throws JacobiViolation when the algebroid does not validate.
Form poissonModularForm(const PoissonBivector& p);

}  // namespace lacalc
