#pragma once

#include "gsym/expr/expression.hpp"
#include "gsym/lie/algebra.hpp"

#include <string>
#include <vector>

namespace gsym::lie {

class NotExponentiable : public Error {
public:
    using Error::Error;
};

/// ad(v) as a matrix on coefficient vectors.
Matrix ad_matrix(const Vec& v, const LieAlgebra& L);

using NumVec = std::vector<double>;
using NumMatrix = std::vector<std::vector<double>>;

/// Ad(exp(eps e_i)) = exp(-eps ad e_i), so that
/// Ad(exp(eps Y)) Z = Z - eps [Y, Z] + eps^2/2 [Y, [Y, Z]] - ...
class AdjointMap {
public:
    enum class Kind { Identity, Nilpotent, Diagonal };

    /// Throws NotExponentiable unless ad(e_i) is nilpotent or diagonal.
    AdjointMap(const LieAlgebra& L, std::size_t generator);

    Kind kind() const { return kind_; }
    std::size_t generator() const { return generator_; }
    std::size_t dim() const { return ad_.rows(); }

    /// Exact matrix; Diagonal maps are exact only at eps = 0.
    Matrix at(const Rational& eps) const;
    NumMatrix at(double eps) const;
    bool exact_for(const Rational& eps) const { return kind_ != Kind::Diagonal || eps.is_zero(); }

    Vec apply(const Rational& eps, const Vec& v) const { return at(eps) * v; }
    NumVec apply(double eps, const NumVec& v) const;

    /// Entry (k, j) in closed form, as an expression in eps.
    Expr entry(std::size_t k, std::size_t j) const;
    /// Coefficient of e_k in the image of v as a polynomial in eps (index =
    /// power). Nilpotent and identity maps only.
    std::vector<Rational> coefficient_polynomial(const Vec& v, std::size_t k) const;
    /// Diagonal maps: exp(-eps * diagonal(k)) scales e_k.
    const Rational& diagonal(std::size_t k) const { return ad_(k, k); }

private:
    Kind kind_;
    std::size_t generator_;
    Matrix ad_;
    std::vector<Matrix> powers_;  // (-ad)^k / k!, k = 0..index-1
};

AdjointMap adjoint_exp(std::size_t generator, const LieAlgebra& L);

/// Ad(exp(eps e_i)) e_j in closed form: coefficient expressions in eps per
/// basis element.
struct AdjointEntry {
    std::size_t row;
    std::size_t col;
    std::vector<Expr> coeffs;

    std::string str(const std::vector<std::string>& labels) const;
};

std::vector<std::vector<AdjointEntry>> adjoint_table(const LieAlgebra& L);

/// Transcribed entry of a printed adjoint table.
struct PrintedEntry {
    std::size_t row;
    std::size_t col;
    std::string printed;
    std::vector<Expr> coeffs;
};

struct AdjointDiff {
    std::size_t row;
    std::size_t col;
    std::string printed;
    std::string computed;
    /// The printed entry equals the computed one after eps -> -eps.
    bool matches_after_sign_flip;
};

/// Entries whose coefficients differ from the computed table.
std::vector<AdjointDiff> diff_adjoint_table(const LieAlgebra& L, const std::vector<PrintedEntry>& printed);

/// Combination text with expression coefficients.
std::string combination(const std::vector<Expr>& coeffs, const std::vector<std::string>& labels);

}  // namespace gsym::lie
