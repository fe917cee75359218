#include "bialg/tensor.hpp"

namespace bialg {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector sizes differ");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector sizes differ");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector sizes differ");
    if (is_zero(s)) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(b[i])) a[i] += s * b[i];
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw ShapeError("matrix/vector shape mismatch");
    Vec r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (bialg::is_zero(v[j])) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!bialg::is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    }
    return r;
}

Vec Matrix::column(std::size_t j) const {
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!bialg::is_zero(x)) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    c += b;
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix shapes differ");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
}

Matrix Matrix::operator-() const { return Scalar(-1) * *this; }

Matrix& Matrix::operator+=(const Matrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeError("matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
    return *this;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return c;
}

Tensor3::Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
    : d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3) {}

bool Tensor3::is_zero() const {
    for (const auto& x : data_)
        if (!bialg::is_zero(x)) return false;
    return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& b) {
    if (d1_ != b.d1_ || d2_ != b.d2_ || d3_ != b.d3_) throw ShapeError("tensor shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
    return *this;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    Tensor3 c = a;
    c += b;
    return c;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    Tensor3 c = Scalar(-1) * b;
    c += a;
    return c;
}

Tensor3 operator*(const Scalar& s, const Tensor3& a) {
    Tensor3 c(a.d1_, a.d2_, a.d3_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
}

Scalar BilinForm::operator()(const Vec& u, const Vec& v) const {
    Vec mv = m.apply(v);
    Scalar s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * mv[i];
    return s;
}

Tensor2 flip(const Tensor2& r) {
    if (r.dim_left() != r.dim_right()) throw ShapeError("flip needs a square tensor");
    return Tensor2(r.coeffs().transpose());
}

LinMap sharp(const Tensor2& r) {
    if (r.dim_left() != r.dim_right()) throw ShapeError("sharp needs a square tensor");
    return r.coeffs().transpose();
}

Tensor2 tensor_product_elem(const Vec& u, const Vec& v) {
    Tensor2 t(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) t(i, j) = u[i] * v[j];
    return t;
}

Tensor2 bullet(const Tensor2& a, const Tensor2& b) {
    // (a_p⊗a_q)•(b_s⊗b_t) = (a_p⊗b_s)⊗(a_q⊗b_t): exactly the Kronecker product
    // of the coefficient matrices under row-major flattening
    return Tensor2(kron(a.coeffs(), b.coeffs()));
}

}  // namespace bialg
