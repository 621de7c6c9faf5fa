#include "lacalc/matrix.hpp"

#include "lacalc/errors.hpp"

namespace lacalc {

CoeffMatrix identityMatrix(std::size_t n, std::size_t nvars) {
    CoeffMatrix m(n, std::vector<Coeff>(n, Coeff(nvars)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Coeff::constant(nvars, 1);
    return m;
}

Coeff determinant(const CoeffMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return Coeff::constant(0, 1);
    const std::size_t nv = a[0][0].nvars();
    CoeffMatrix m = a;
    Coeff det = Coeff::constant(nv, 1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].isZero()) ++piv;
        if (piv == n) return Coeff(nv);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Coeff inv = m[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].isZero()) continue;
            const Coeff f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<CoeffMatrix> inverse(const CoeffMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return CoeffMatrix{};
    const std::size_t nv = a[0][0].nvars();
    CoeffMatrix m = a;
    CoeffMatrix inv = identityMatrix(n, nv);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].isZero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Coeff p = m[col][col].inverse();
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] *= p;
            inv[col][c] *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].isZero()) continue;
            const Coeff f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

bool RationalMatrix::isZero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shapes do not compose");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::size_t rank(const RationalMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    // Clear denominators row by row.
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = a.at(r, c).get_num() * (l / a.at(r, c).get_den());
    }
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const Integer& p = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                Integer v = p * m[r][c] - m[r][col] * m[rank][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = std::move(v);
            }
            m[r][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw Error("right-hand side has the wrong length");
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = a.at(r, c);
        m[r][cols] = b[r];
    }
    std::vector<std::size_t> pivotCols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        const Rational p = m[row][col];
        for (std::size_t c = col; c <= cols; ++c) m[row][c] /= p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivotCols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < pivotCols.size(); ++r) x[pivotCols[r]] = m[r][cols];
    return x;
}

}  // namespace lacalc
