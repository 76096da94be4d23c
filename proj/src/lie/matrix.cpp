#include "gsym/lie/matrix.hpp"

#include <stdexcept>

namespace gsym::lie {

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = Rational(1);
    return v;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vec operator*(const Rational& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational Matrix::trace() const {
    Rational s(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = m(r, c).inverse();
        for (std::size_t j = 0; j < cols_; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Rational Matrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of a non-square matrix");
    Matrix m = *this;
    Rational d(1);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m(p, c).is_zero()) ++p;
        if (p == rows_) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

std::vector<Vec> Matrix::nullspace() const {
    std::vector<std::size_t> piv;
    const Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v = unit_vec(cols_, free);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    std::vector<std::size_t> piv;
    const Matrix r = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    Vec x = zero_vec(cols_);
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, cols_);
    return x;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
    Vec out = zero_vec(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.data_) x *= c;
    return out;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    std::vector<std::size_t> piv;
    const Matrix r = Matrix::from_rows(vectors, ambient).rref(&piv);
    for (std::size_t k = 0; k < piv.size(); ++k) s.basis_.push_back(r.row(k));
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < ambient; ++i) v.push_back(unit_vec(ambient, i));
    return span(v, ambient);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (basis_.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return Matrix::from_columns(basis_, ambient_).solve(v);
}

std::string Subspace::str(const std::vector<std::string>& labels) const {
    if (basis_.empty()) return "{0}";
    std::string s = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + combination(basis_[i], labels);
    return s + "}";
}

Subspace sum(const Subspace& a, const Subspace& b) {
    std::vector<Vec> v = a.basis();
    v.insert(v.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(v, a.ambient());
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    // x = A y = B z  <=>  [A | -B] (y, z) = 0
    const std::size_t n = a.ambient();
    std::vector<Vec> cols = a.basis();
    for (const auto& v : b.basis()) cols.push_back(Rational(-1) * v);
    if (cols.empty()) return Subspace(n);
    std::vector<Vec> out;
    for (const auto& yz : Matrix::from_columns(cols, n).nullspace()) {
        Vec x = zero_vec(n);
        for (std::size_t k = 0; k < a.dim(); ++k) x = x + yz[k] * a.basis()[k];
        out.push_back(std::move(x));
    }
    return Subspace::span(out, n);
}

std::string combination(const Vec& v, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Rational& c = v[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational a = c.abs();
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (!a.is_one()) s += a.str() + "*";
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

}  // namespace gsym::lie
