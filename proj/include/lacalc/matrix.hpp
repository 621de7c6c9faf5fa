#pragma once

#include <optional>
#include <vector>

#include "lacalc/coeff.hpp"

namespace lacalc {

/// Coefficient matrix, row-major as nested vectors.
using CoeffMatrix = std::vector<std::vector<Coeff>>;

CoeffMatrix identityMatrix(std::size_t n, std::size_t nvars);
Coeff determinant(const CoeffMatrix& a);
/// Inverse by Gauss–Jordan over the fraction field; nullopt when singular.
std::optional<CoeffMatrix> inverse(const CoeffMatrix& a);

/// Dense matrix over Q.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows = 0, std::size_t cols = 0) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool isZero() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination on the row-scaled integer
/// matrix; the pivot is the first nonzero entry in column order.
std::size_t rank(const RationalMatrix& a);

/// One solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace lacalc
