#pragma once

#include "bialg/scalar.hpp"

#include <cstddef>
#include <vector>

namespace bialg {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
// a += s*b, the workhorse of every contraction loop
void axpy(Vec& a, const Scalar& s, const Vec& b);

// Dense rational matrix; also the type of linear maps (rows = codomain).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec apply(const Vec& v) const;
    Vec column(std::size_t j) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& b);
    bool operator==(const Matrix& b) const = default;

    const std::vector<Scalar>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

using LinMap = Matrix;

// Kronecker product, row-major: (a⊗b)(i*rb+k, j*cb+l) = a(i,j) b(k,l)
Matrix kron(const Matrix& a, const Matrix& b);

// Element of V⊗W; coefficient (i,j) is that of v_i⊗w_j.
class Tensor2 {
public:
    Tensor2() = default;
    Tensor2(std::size_t left, std::size_t right) : m_(left, right) {}
    explicit Tensor2(Matrix coeffs) : m_(std::move(coeffs)) {}

    std::size_t dim_left() const { return m_.rows(); }
    std::size_t dim_right() const { return m_.cols(); }
    Scalar& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& coeffs() const { return m_; }
    bool is_zero() const { return m_.is_zero(); }

    friend Tensor2 operator+(const Tensor2& a, const Tensor2& b) { return Tensor2(a.m_ + b.m_); }
    friend Tensor2 operator-(const Tensor2& a, const Tensor2& b) { return Tensor2(a.m_ - b.m_); }
    friend Tensor2 operator*(const Scalar& s, const Tensor2& a) { return Tensor2(s * a.m_); }
    Tensor2 operator-() const { return Tensor2(-m_); }
    Tensor2& operator+=(const Tensor2& b) { m_ += b.m_; return *this; }
    bool operator==(const Tensor2& b) const = default;

private:
    Matrix m_;
};

using RMatrix = Tensor2;

// Rank-3 array. Used for structure cubes (left, right, out), coproducts
// (in, left, right) and YBE residuals (slot1, slot2, slot3).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d1, std::size_t d2, std::size_t d3);
    static Tensor3 cube(std::size_t n) { return Tensor3(n, n, n); }

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    std::size_t d3() const { return d3_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d2_ + j) * d3_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * d2_ + j) * d3_ + k];
    }

    bool is_zero() const;
    const std::vector<Scalar>& data() const { return data_; }

    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
    friend Tensor3 operator-(const Tensor3& a, const Tensor3& b);
    friend Tensor3 operator*(const Scalar& s, const Tensor3& a);
    Tensor3& operator+=(const Tensor3& b);
    bool operator==(const Tensor3& b) const = default;

private:
    std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<Scalar> data_;
};

struct BilinForm {
    Matrix m;  // m(i,j) = ω(b_i, b_j)

    std::size_t dim() const { return m.rows(); }
    bool operator==(const BilinForm&) const = default;
    Scalar operator()(const Vec& u, const Vec& v) const;
};

// τ on V⊗V
Tensor2 flip(const Tensor2& r);
// r♯ : V* → V, ⟨ξ₂, r♯(ξ₁)⟩ = ⟨ξ₁⊗ξ₂, r⟩. As a matrix this is rᵀ.
LinMap sharp(const Tensor2& r);
Tensor2 tensor_product_elem(const Vec& u, const Vec& v);
// (a₁⊗a₂)•(b₁⊗b₂) = (a₁⊗b₁)⊗(a₂⊗b₂), flattened row-major with the A slot first
Tensor2 bullet(const Tensor2& a, const Tensor2& b);

}  // namespace bialg
