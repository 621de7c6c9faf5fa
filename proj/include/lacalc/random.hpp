#pragma once

#include <cstdint>
#include <random>

#include "lacalc/algebroid.hpp"

namespace lacalc {

/// Seeded source of random test data. Coefficients are polynomials with
/// small integer coefficients; the same seed always gives the same sequence.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi);
    Rational rational(int range = 3);
    /// Polynomial of total degree ≤ maxDegree with at most `terms` monomials.
    Coeff coeff(std::size_t nvars, unsigned maxDegree = 2, unsigned terms = 3);
    Multivector multivector(const LieAlgebroid& e, int degree, unsigned maxDegree = 1);
    Form form(const LieAlgebroid& e, int degree, unsigned maxDegree = 1);
    Section section(const LieAlgebroid& e, unsigned maxDegree = 1);

    std::mt19937_64& engine() { return rng_; }

private:
    template <class Kind>
    Graded<Kind> graded(const LieAlgebroid& e, int degree, unsigned maxDegree);

    std::mt19937_64 rng_;
};

}  // namespace lacalc
