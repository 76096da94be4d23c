#include "gsym/lie/algebra.hpp"

#include "gsym/expr/io.hpp"
#include "gsym/expr/normal_form.hpp"

#include <map>
#include <tuple>

namespace gsym::lie {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, StructureConstants c)
    : labels_(std::move(labels)), c_(std::move(c)) {
    const std::size_t n = labels_.size();
    if (c_.size() != n) throw InvalidAlgebra("structure constant tensor has the wrong shape");
    for (const auto& row : c_) {
        if (row.size() != n) throw InvalidAlgebra("structure constant tensor has the wrong shape");
        for (const auto& v : row)
            if (v.size() != n) throw InvalidAlgebra("structure constant tensor has the wrong shape");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(c_[i][j] + c_[j][i]))
                throw InvalidAlgebra("antisymmetry fails for (" + labels_[i] + ", " + labels_[j] + ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec ei = basis(i), ej = basis(j), ek = basis(k);
                const Vec jac = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) + bracket(bracket(ek, ei), ej);
                if (!is_zero(jac))
                    throw InvalidAlgebra("Jacobi identity fails for (" + labels_[i] + ", " + labels_[j] + ", " +
                                         labels_[k] + ")");
            }
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(std::move(labels), StructureConstants(n, std::vector<Vec>(n, zero_vec(n))));
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels,
                                     const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& brackets) {
    const std::size_t n = labels.size();
    StructureConstants c(n, std::vector<Vec>(n, zero_vec(n)));
    for (const auto& [i, j, v] : brackets) {
        c[i][j] = v;
        c[j][i] = Rational(-1) * v;
    }
    return LieAlgebra(std::move(labels), std::move(c));
}

Vec LieAlgebra::bracket(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            const Rational f = a[i] * b[j];
            for (std::size_t k = 0; k < dim(); ++k) out[k] += f * c_[i][j][k];
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vec& v) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(v, basis(j)));
    return Matrix::from_columns(cols, dim());
}

namespace {

// Linear functional coordinates of a field: coefficients of its normalized
// components, one row per (component, monomial).
using Key = std::pair<int, std::string>;

std::map<Key, Rational> expand(const jets::VectorField& v) {
    std::map<Key, Rational> out;
    const Expr* comps[] = {&v.xi1, &v.xi2, &v.phi};
    for (int c = 0; c < 3; ++c) {
        const nf::RatFunc r = nf::to_ratfunc(*comps[c]);
        if (!r.den_is_one()) throw InvalidAlgebra("vector field component is not a Laurent polynomial in atoms");
        for (const auto& [m, coef] : r.num()) {
            nf::Poly single;
            single.emplace(m, Rational(1));
            out[{c, print(nf::poly_to_expr(single))}] += coef;
        }
    }
    return out;
}

}  // namespace

LieAlgebra from_vector_fields(const std::vector<jets::VectorField>& fields) {
    const std::size_t n = fields.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(fields[i].label.empty() ? "X" + std::to_string(i + 1) : fields[i].label);

    std::vector<std::map<Key, Rational>> basis;
    for (const auto& f : fields) basis.push_back(expand(f));

    // Row index per monomial key, over everything the basis and brackets touch.
    std::map<Key, std::size_t> rows;
    const auto index = [&](const std::map<Key, Rational>& e) {
        for (const auto& [k, v] : e) rows.try_emplace(k, rows.size());
    };
    for (const auto& b : basis) index(b);

    StructureConstants c(n, std::vector<Vec>(n, zero_vec(n)));
    std::vector<std::tuple<std::size_t, std::size_t, std::map<Key, Rational>, jets::VectorField>> brackets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            jets::VectorField b = jets::lie_bracket(fields[i], fields[j]);
            auto e = expand(b);
            index(e);
            brackets.emplace_back(i, j, std::move(e), std::move(b));
        }

    const auto column = [&](const std::map<Key, Rational>& e) {
        Vec v = zero_vec(rows.size());
        for (const auto& [k, val] : e) v[rows.at(k)] = val;
        return v;
    };
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(column(b));
    const Matrix A = Matrix::from_columns(cols, rows.size());
    if (A.rank() != n) throw InvalidAlgebra("vector fields are linearly dependent over Q");

    for (const auto& [i, j, e, field] : brackets) {
        auto sol = A.solve(column(e));
        if (!sol) throw NotClosed(i, j, jets::describe(field));
        c[i][j] = *sol;
        c[j][i] = Rational(-1) * *sol;
    }
    return LieAlgebra(std::move(labels), std::move(c));
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
    std::vector<Vec> v;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) v.push_back(L.bracket(x, y));
    return Subspace::span(v, L.dim());
}

Subspace center(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    // v central iff [v, e_j] = 0 for all j: stack the maps v -> [v, e_j].
    Matrix M(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) M(j * n + k, i) = L.c(i, j)[k];
    return Subspace::span(M.nullspace(), n);
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
    std::vector<Subspace> out{Subspace::whole(L.dim())};
    while (true) {
        const Subspace& last = out.back();
        Subspace next = bracket_span(L, last, last);
        const bool stable = next.dim() == last.dim();
        out.push_back(std::move(next));
        if (stable || out.back().dim() == 0) break;
    }
    return out;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) { return s.contains(bracket_span(L, s, s)); }

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
    return s.contains(bracket_span(L, Subspace::whole(L.dim()), s));
}

bool is_solvable(const LieAlgebra& L, const Subspace& s) {
    Subspace cur = s;
    while (cur.dim() > 0) {
        Subspace next = bracket_span(L, cur, cur);
        if (next.dim() == cur.dim()) return false;
        cur = std::move(next);
    }
    return true;
}

LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<Vec>& basis, std::vector<std::string> labels) {
    const std::size_t m = basis.size();
    const Matrix B = Matrix::from_columns(basis, L.dim());
    if (B.rank() != m) throw InvalidAlgebra("subalgebra basis is linearly dependent");
    StructureConstants c(m, std::vector<Vec>(m, zero_vec(m)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto sol = B.solve(L.bracket(basis[i], basis[j]));
            if (!sol) throw InvalidAlgebra("subspace is not closed under the bracket");
            c[i][j] = *sol;
        }
    return LieAlgebra(std::move(labels), std::move(c));
}

Matrix killing_gram(const LieAlgebra& L, const std::vector<Vec>& vectors) {
    std::vector<Matrix> ads;
    for (const auto& v : vectors) ads.push_back(L.ad(v));
    Matrix K(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors.size(); ++j) K(i, j) = (ads[i] * ads[j]).trace();
    return K;
}

Matrix killing_form(const LieAlgebra& L) {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < L.dim(); ++i) b.push_back(L.basis(i));
    return killing_gram(L, b);
}

Subspace radical(const LieAlgebra& L) {
    const Matrix K = killing_form(L);
    const Subspace d = bracket_span(L, Subspace::whole(L.dim()), Subspace::whole(L.dim()));
    // v with K(v, w) = 0 for every w in [g, g]
    std::vector<Vec> rows;
    for (const auto& w : d.basis()) rows.push_back(K * w);
    if (rows.empty()) return Subspace::whole(L.dim());
    return Subspace::span(Matrix::from_rows(rows, L.dim()).nullspace(), L.dim());
}

std::string LeviReport::str() const {
    const auto flag = [](bool b) { return b ? "yes" : "no"; };
    return std::string("direct sum: ") + flag(direct_sum) + ", r ideal: " + flag(r_ideal) +
           ", r solvable: " + flag(r_solvable) + ", s subalgebra: " + flag(s_subalgebra) +
           ", s Killing nondegenerate: " + flag(s_nondegenerate) + " (det " + s_killing_det.str() + ")" +
           ", r maximal: " + flag(r_maximal);
}

LeviReport verify_levi(const LieAlgebra& L, const Subspace& r, const Subspace& s) {
    LeviReport rep;
    rep.direct_sum = r.dim() + s.dim() == L.dim() && sum(r, s).dim() == L.dim();
    rep.r_ideal = is_ideal(L, r);
    rep.r_solvable = rep.r_ideal && is_solvable(L, r);
    rep.s_subalgebra = is_subalgebra(L, s);
    if (rep.s_subalgebra && s.dim() > 0) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < s.dim(); ++i) labels.push_back("s" + std::to_string(i + 1));
        rep.s_killing_det = killing_form(subalgebra(L, s.basis(), labels)).det();
        rep.s_nondegenerate = !rep.s_killing_det.is_zero();
    } else if (s.dim() == 0) {
        rep.s_killing_det = Rational(1);
        rep.s_nondegenerate = true;
    }
    rep.r_maximal = r == radical(L);
    return rep;
}

Quotient quotient_by_center(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    const Subspace z = center(L);
    std::vector<Vec> basis = z.basis();  // center first, then representatives
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vec> trial = basis;
        trial.push_back(L.basis(i));
        if (Matrix::from_columns(trial, n).rank() == trial.size()) {
            basis = std::move(trial);
            reps.push_back(i);
        }
    }
    const std::size_t zd = z.dim();
    const std::size_t m = reps.size();
    const Matrix B = Matrix::from_columns(basis, n);

    // coordinates in (center, representatives) order; drop the center part
    Matrix P(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec coords = *B.solve(L.basis(j));
        for (std::size_t k = 0; k < m; ++k) P(k, j) = coords[zd + k];
    }
    StructureConstants c(m, std::vector<Vec>(m, zero_vec(m)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i][j] = P * L.bracket(L.basis(reps[i]), L.basis(reps[j]));
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < m; ++k) labels.push_back("Y" + std::to_string(k + 1));
    return {LieAlgebra(std::move(labels), std::move(c)), std::move(reps), std::move(P)};
}

}  // namespace gsym::lie
