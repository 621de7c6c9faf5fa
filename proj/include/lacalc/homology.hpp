#pragma once

#include <optional>
#include <vector>

#include "lacalc/algebroid.hpp"
#include "lacalc/calculus.hpp"
#include "lacalc/matrix.hpp"

namespace lacalc {

enum class Direction { Raising, Lowering };

/// Differential matrices in the lexicographic wedge-monomial basis.
///
/// maps[k] is the matrix of the differential on degree k, with
/// binomial(n, k±1) rows and binomial(n, k) columns (0 rows past the ends).
struct ChainComplex {
    Direction direction = Direction::Raising;
    std::size_t n = 0;
    std::vector<RationalMatrix> maps;

    /// Every consecutive composition is the zero matrix.
    bool compositionZero() const;
};

/// Matrices of d, or of d^φ = d + φ∧ when φ is given. Needs m = 0 and a closed φ.
ChainComplex buildCochain(const LieAlgebroid& e, const std::optional<Form>& phi = std::nullopt);

/// Matrices of ∂_{|μ|}, or of ∂_{|μ|} − i_φ when φ is given.
ChainComplex buildChain(const LieAlgebroid& e, const OddVolume& mu, const std::optional<Form>& phi = std::nullopt);

/// dims[k] = dim ker − dim im at degree k, for k = 0..n.
std::vector<std::size_t> betti(const ChainComplex& c);

struct DualityReport {
    std::vector<std::size_t> cohomology;
    std::vector<std::size_t> homology;
    /// dim H^k = dim H_{n−k} for every k.
    bool duality = false;
};

DualityReport dualityCheck(const LieAlgebroid& e, const OddVolume& mu, const std::optional<Form>& phi = std::nullopt);

struct IndependenceReport {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    bool sameMatrices = false;
    bool sameHomology() const { return first == second; }
};

IndependenceReport homologyIndependence(const LieAlgebroid& e, const OddVolume& mu1, const OddVolume& mu2);

}  // namespace lacalc
