#include "bialg/linalg.hpp"

#include <algorithm>
#include <utility>

namespace bialg {

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Scale every row by the lcm of its denominators. scale[i] is that lcm.
IntRows clear_denominators(const Matrix& a, std::vector<mpz_class>& scale) {
    IntRows m(a.rows(), std::vector<mpz_class>(a.cols()));
    scale.assign(a.rows(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        scale[i] = l;
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
    return m;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Bareiss forward elimination in place. Returns the pivot columns; sign
// tracks row swaps.
std::vector<std::size_t> bareiss_echelon(IntRows& m, std::size_t cols, int& sign) {
    std::vector<std::size_t> pivots;
    sign = 1;
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        if (p != row) {
            std::swap(m[p], m[row]);
            sign = -sign;
        }
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = exact_div(m[row][col] * m[i][j] - m[i][col] * m[row][j], prev);
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Scalar determinant(const Matrix& a) {
    if (!a.square()) throw ShapeError("determinant of a non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<mpz_class> scale;
    IntRows m = clear_denominators(a, scale);
    int sign = 1;
    auto piv = bareiss_echelon(m, n, sign);
    if (piv.size() < n) return 0;
    mpz_class denom = 1;
    for (const auto& s : scale) denom *= s;
    Scalar d(mpz_class(sign * m[n - 1][n - 1]), denom);
    d.canonicalize();
    return d;
}

std::size_t rank(const Matrix& a) {
    std::vector<mpz_class> scale;
    IntRows m = clear_denominators(a, scale);
    int sign = 1;
    return bareiss_echelon(m, a.cols(), sign).size();
}

std::optional<Vec> kernel_vector(const Matrix& a) {
    // rational reduced row echelon form; plenty fast at these sizes
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<Vec> m(rows, Vec(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && is_zero(m[p][col])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Scalar inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || is_zero(m[i][col])) continue;
            Scalar f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() == cols) return std::nullopt;
    std::size_t free = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) ++free;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    return v;
}

Matrix inverse(const Matrix& a) {
    if (!a.square()) throw ShapeError("inverse of a non-square matrix");
    std::size_t n = a.rows();
    std::vector<mpz_class> scale;
    IntRows m = clear_denominators(a, scale);
    for (std::size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n);
        m[i][n + i] = 1;
    }
    // fraction-free Gauss-Jordan: every diagonal entry ends up equal to ±det
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) {
            Vec w = kernel_vector(a).value();
            throw DegenerateError("singular matrix", std::move(w));
        }
        std::swap(m[p], m[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    // A' = diag(scale)·A, so A⁻¹ = A'⁻¹·diag(scale)
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar x(m[i][n + j] * scale[j], m[i][i]);
            x.canonicalize();
            inv(i, j) = x;
        }
    return inv;
}

LinMap dual_basis(const BilinForm& w) {
    if (!w.m.square()) throw ShapeError("bilinear form must be square");
    try {
        return inverse(w.m);
    } catch (const DegenerateError& e) {
        throw DegenerateError("degenerate form", e.witness());
    }
}

}  // namespace bialg
