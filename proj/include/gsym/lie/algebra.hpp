#pragma once

#include "gsym/expr/errors.hpp"
#include "gsym/jets/jets.hpp"
#include "gsym/lie/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gsym::lie {

class InvalidAlgebra : public Error {
public:
    using Error::Error;
};

class NotClosed : public Error {
public:
    NotClosed(std::size_t i, std::size_t j, const std::string& remainder)
        : Error("bracket of generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                " leaves the span: " + remainder),
          pair_(i, j),
          remainder_(remainder) {}
    std::pair<std::size_t, std::size_t> pair() const { return pair_; }
    const std::string& remainder() const { return remainder_; }

private:
    std::pair<std::size_t, std::size_t> pair_;
    std::string remainder_;
};

/// Structure constants c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k.
using StructureConstants = std::vector<std::vector<Vec>>;

class LieAlgebra {
public:
    /// Throws InvalidAlgebra if antisymmetry or the Jacobi identity fails.
    LieAlgebra(std::vector<std::string> labels, StructureConstants c);

    static LieAlgebra abelian(std::size_t n);
    /// Brackets [e_i, e_j] = v for i < j; the rest is filled by antisymmetry.
    static LieAlgebra from_brackets(std::vector<std::string> labels,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& brackets);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& c(std::size_t i, std::size_t j) const { return c_[i][j]; }
    const StructureConstants& constants() const { return c_; }

    Vec bracket(const Vec& a, const Vec& b) const;
    /// Matrix of ad(v) acting on coefficient vectors.
    Matrix ad(const Vec& v) const;
    Vec basis(std::size_t i) const { return unit_vec(dim(), i); }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

private:
    std::vector<std::string> labels_;
    StructureConstants c_;
};

/// Exact structure constants of the span of the fields. The fields must be
/// linearly independent over Q with closed brackets (NotClosed otherwise).
LieAlgebra from_vector_fields(const std::vector<jets::VectorField>& fields);

/// Span of [a, b] over bases of the two subspaces.
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

Subspace center(const LieAlgebra& L);

/// g, [g,g], ... up to stabilization (or 0).
std::vector<Subspace> derived_series(const LieAlgebra& L);

bool is_subalgebra(const LieAlgebra& L, const Subspace& s);
bool is_ideal(const LieAlgebra& L, const Subspace& s);
bool is_solvable(const LieAlgebra& L, const Subspace& s);

/// Structure constants of a subalgebra in the given basis order.
LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<Vec>& basis, std::vector<std::string> labels);

/// K(e_i, e_j) = trace(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& L);
/// Gram matrix of the ambient Killing form on the given vectors.
Matrix killing_gram(const LieAlgebra& L, const std::vector<Vec>& vectors);

/// Killing-orthogonal complement of [g, g], which is the radical.
Subspace radical(const LieAlgebra& L);

struct LeviReport {
    bool direct_sum = false;
    bool r_ideal = false;
    bool r_solvable = false;
    bool s_subalgebra = false;
    bool s_nondegenerate = false;
    bool r_maximal = false;
    Rational s_killing_det;

    bool passed() const {
        return direct_sum && r_ideal && r_solvable && s_subalgebra && s_nondegenerate && r_maximal;
    }
    std::string str() const;
};

LeviReport verify_levi(const LieAlgebra& L, const Subspace& r, const Subspace& s);

struct Quotient {
    LieAlgebra algebra;
    /// Indices of the basis elements whose images form the quotient basis.
    std::vector<std::size_t> representatives;
    /// Maps coefficient vectors of L to coefficient vectors of the quotient.
    Matrix projection;
};

/// Quotient by the center, with a basis of images of basis elements of L
/// chosen greedily in index order.
Quotient quotient_by_center(const LieAlgebra& L);

}  // namespace gsym::lie
