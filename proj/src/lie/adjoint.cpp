#include "gsym/lie/adjoint.hpp"

#include "gsym/expr/io.hpp"
#include "gsym/expr/normal_form.hpp"

#include <cmath>

namespace gsym::lie {

Matrix ad_matrix(const Vec& v, const LieAlgebra& L) { return L.ad(v); }

namespace {

bool is_diagonal(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) return false;
    return true;
}

Expr eps_power(int k) { return k == 0 ? Expr(1) : pow(Expr(Symbol::eps), Rational(k)); }

}  // namespace

AdjointMap::AdjointMap(const LieAlgebra& L, std::size_t generator)
    : generator_(generator), ad_(L.ad(L.basis(generator))) {
    const std::size_t n = L.dim();
    if (ad_.is_zero()) {
        kind_ = Kind::Identity;
        powers_ = {Matrix::identity(n)};
        return;
    }
    Matrix term = Matrix::identity(n);
    std::vector<Matrix> powers{term};
    for (std::size_t k = 1; k <= n; ++k) {
        term = Rational(-1, static_cast<long>(k)) * (ad_ * term);
        if (term.is_zero()) {
            kind_ = Kind::Nilpotent;
            powers_ = std::move(powers);
            return;
        }
        powers.push_back(term);
    }
    if (is_diagonal(ad_)) {
        kind_ = Kind::Diagonal;
        return;
    }
    throw NotExponentiable("ad(" + L.labels()[generator] + ") is neither nilpotent nor diagonal");
}

AdjointMap adjoint_exp(std::size_t generator, const LieAlgebra& L) { return AdjointMap(L, generator); }

Matrix AdjointMap::at(const Rational& eps) const {
    const std::size_t n = dim();
    if (kind_ == Kind::Diagonal) {
        if (!eps.is_zero()) throw NotExponentiable("diagonal adjoint map is not rational at nonzero eps");
        return Matrix::identity(n);
    }
    Matrix m(n, n);
    Rational p(1);
    for (const auto& term : powers_) {
        m = m + p * term;
        p *= eps;
    }
    return m;
}

NumMatrix AdjointMap::at(double eps) const {
    const std::size_t n = dim();
    NumMatrix m(n, NumVec(n, 0.0));
    if (kind_ == Kind::Diagonal) {
        for (std::size_t k = 0; k < n; ++k) m[k][k] = std::exp(-eps * ad_(k, k).to_double());
        return m;
    }
    double p = 1;
    for (const auto& term : powers_) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] += p * term(i, j).to_double();
        p *= eps;
    }
    return m;
}

NumVec AdjointMap::apply(double eps, const NumVec& v) const {
    const NumMatrix m = at(eps);
    NumVec out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

Expr AdjointMap::entry(std::size_t k, std::size_t j) const {
    if (kind_ == Kind::Diagonal) {
        if (k != j) return Expr(0);
        const Rational& d = ad_(k, k);
        return d.is_zero() ? Expr(1) : apply_exp(Expr(-d) * Expr(Symbol::eps));
    }
    std::vector<Expr> terms;
    for (std::size_t p = 0; p < powers_.size(); ++p)
        if (!powers_[p](k, j).is_zero()) terms.push_back(Expr(powers_[p](k, j)) * eps_power(static_cast<int>(p)));
    return normalize(add_all(terms));
}

std::vector<Rational> AdjointMap::coefficient_polynomial(const Vec& v, std::size_t k) const {
    if (kind_ == Kind::Diagonal) throw NotExponentiable("coefficient polynomial of a diagonal adjoint map");
    std::vector<Rational> out;
    for (const auto& term : powers_) out.push_back((term * v)[k]);
    return out;
}

std::string combination(const std::vector<Expr>& coeffs, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Expr c = normalize(coeffs[i]);
        if (c.is_zero()) continue;
        std::string text = print(c);
        bool negative = false;
        if (c.kind() == Expr::Kind::Sum) {
            text = "(" + text + ")";
        } else if (text.front() == '-') {
            negative = true;
            text.erase(0, 1);
        }
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        s += text == "1" ? labels[i] : text + "*" + labels[i];
    }
    return s.empty() ? "0" : s;
}

std::string AdjointEntry::str(const std::vector<std::string>& labels) const { return combination(coeffs, labels); }

std::vector<std::vector<AdjointEntry>> adjoint_table(const LieAlgebra& L) {
    std::vector<std::vector<AdjointEntry>> table;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        const AdjointMap map(L, i);
        std::vector<AdjointEntry> row;
        for (std::size_t j = 0; j < L.dim(); ++j) {
            AdjointEntry e{i, j, {}};
            for (std::size_t k = 0; k < L.dim(); ++k) e.coeffs.push_back(map.entry(k, j));
            row.push_back(std::move(e));
        }
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<AdjointDiff> diff_adjoint_table(const LieAlgebra& L, const std::vector<PrintedEntry>& printed) {
    const auto table = adjoint_table(L);
    const auto same = [](const std::vector<Expr>& a, const std::vector<Expr>& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!is_zero_symbolic(a[k] - b[k])) return false;
        return true;
    };
    std::vector<AdjointDiff> out;
    for (const auto& p : printed) {
        const AdjointEntry& c = table.at(p.row).at(p.col);
        if (same(c.coeffs, p.coeffs)) continue;
        std::vector<Expr> flipped;
        for (const auto& e : c.coeffs) flipped.push_back(substitute(e, Symbol::eps, -Expr(Symbol::eps)));
        out.push_back({p.row, p.col, p.printed, c.str(L.labels()), same(flipped, p.coeffs)});
    }
    return out;
}

}  // namespace gsym::lie
