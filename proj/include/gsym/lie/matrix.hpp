#pragma once

#include "gsym/expr/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsym::lie {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
bool is_zero(const Vec& v);
std::string str(const Vec& v);

/// Dense matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    /// Reduced row echelon form; pivot columns are returned through the pointer.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    Rational det() const;
    /// Basis of {v : M v = 0}.
    std::vector<Vec> nullspace() const;
    /// Some solution of M v = b, if any.
    std::optional<Vec> solve(const Vec& b) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Subspace of Q^n kept as a reduced echelon basis with unit pivots.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in basis(), if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;
    std::string str(const std::vector<std::string>& labels) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Linear combination as text, e.g. "X2 + 1/2*X3".
std::string combination(const Vec& v, const std::vector<std::string>& labels);

}  // namespace gsym::lie
