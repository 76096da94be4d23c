#include "gsym/lie/optimal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gsym::lie {

double to_double(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return r->to_double();
    return std::get<double>(s);
}

std::string str(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return r->str();
    std::ostringstream os;
    os.precision(17);
    os << std::get<double>(s);
    return os.str();
}

bool Witness::exact() const {
    for (const auto& s : steps) {
        const Scalar& v = std::visit([](const auto& st) -> const Scalar& {
            if constexpr (std::is_same_v<std::decay_t<decltype(st)>, Conjugate>)
                return st.eps;
            else
                return st.lambda;
        }, s);
        if (!std::holds_alternative<Rational>(v)) return false;
    }
    return true;
}

std::string Witness::str(const std::vector<std::string>& labels) const {
    if (steps.empty()) return "[]";
    std::string s = "[";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) s += ", ";
        if (const auto* c = std::get_if<Conjugate>(&steps[i]))
            s += "Conjugate(" + labels[c->generator] + ", " + lie::str(c->eps) + ")";
        else
            s += "Scale(" + lie::str(std::get<Scale>(steps[i]).lambda) + ")";
    }
    return s + "]";
}

std::string class_name(ClassId id) {
    switch (id) {
        case ClassId::X1: return "X1";
        case ClassId::X2: return "X2";
        case ClassId::X3: return "X3";
        case ClassId::X3_minus_X1: return "X3-X1";
        case ClassId::X3_plus_X1: return "X3+X1";
        case ClassId::aX2_plus_X3: return "aX2+X3";
        case ClassId::aX1_plus_bX2_plus_X4: return "aX1+bX2+X4";
    }
    return "?";
}

std::string Classification::str() const {
    std::string s = class_name(id);
    if (id == ClassId::aX2_plus_X3) s += " (a = " + a.str() + ")";
    if (id == ClassId::aX1_plus_bX2_plus_X4) s += " (a = " + a.str() + ", b = " + b.str() + ")";
    return s;
}

NumVec to_numeric(const Vec& v) {
    NumVec out;
    for (const auto& x : v) out.push_back(x.to_double());
    return out;
}

namespace {

constexpr std::size_t k1 = 0, k2 = 1, k3 = 2, k4 = 3;

// eps with coefficient k of Ad(exp(eps e_gen)) v equal to zero, when that
// coefficient is affine in eps.
Rational solve_linear(const AdjointMap& map, const Vec& v, std::size_t k) {
    const auto poly = map.coefficient_polynomial(v, k);
    for (std::size_t p = 2; p < poly.size(); ++p)
        if (!poly[p].is_zero()) throw std::logic_error("conjugation parameter is not determined linearly");
    if (poly.size() < 2 || poly[1].is_zero()) {
        if (poly[0].is_zero()) return Rational(0);
        throw std::logic_error("conjugation cannot remove the coefficient");
    }
    return -poly[0] / poly[1];
}

struct Builder {
    const LieAlgebra& L;
    Witness w;
    Vec v;

    void scale(const Rational& lambda) {
        if (lambda.is_one()) return;
        w.steps.push_back(Scale{lambda});
        v = lambda * v;
    }

    void conjugate(std::size_t gen, const Rational& eps) {
        if (eps.is_zero()) return;
        w.steps.push_back(Conjugate{gen, eps});
        v = AdjointMap(L, gen).apply(eps, v);
    }
};

}  // namespace

namespace {

Classification finish(Classification c) {
    if (c.numeric_representative.empty()) c.numeric_representative = to_numeric(c.representative);
    c.b_numeric = c.numeric_representative[1];
    return c;
}

Classification classify_impl(const Vec& v, const LieAlgebra& L, const ClassifyOptions& options);

}  // namespace

Classification classify(const Vec& v, const LieAlgebra& L, const ClassifyOptions& options) {
    Classification c = classify_impl(v, L, options);
    if (!c.numeric_representative.empty()) return c;
    return finish(std::move(c));
}

namespace {

Classification classify_impl(const Vec& v, const LieAlgebra& L, const ClassifyOptions& options) {
    if (L.dim() != 4) throw std::invalid_argument("classify expects the four-dimensional algebra");
    if (is_zero(v)) throw ZeroElement();
    const AdjointMap ad1(L, k1);
    const AdjointMap ad2(L, k2);
    if (ad1.kind() != AdjointMap::Kind::Nilpotent || ad2.kind() != AdjointMap::Kind::Diagonal)
        throw std::invalid_argument("classify expects ad(e1) nilpotent and ad(e2) diagonal");

    Builder b{L, {}, v};
    Classification out{ClassId::X1, Rational(0), Rational(0), {}, {}};

    if (!v[k4].is_zero()) {
        b.scale(v[k4].inverse());
        b.conjugate(k1, solve_linear(ad1, b.v, k3));
        out.id = ClassId::aX1_plus_bX2_plus_X4;
        out.a = b.v[k1];
        out.b = b.v[k2];
        if (options.normalize_case1 && !out.a.is_zero()) {
            // The X2 flow scales e1 by exp(-eps d1) and e4 by exp(-eps d4);
            // rescaling e4 back to 1 leaves a * exp(-eps (d1 - d4)) on e1.
            const double d1 = ad2.diagonal(k1).to_double();
            const double d4 = ad2.diagonal(k4).to_double();
            const double eps = std::log(std::fabs(out.a.to_double())) / (d1 - d4);
            b.w.steps.push_back(Conjugate{k2, eps});
            b.w.steps.push_back(Scale{std::exp(eps * d4)});
            out.a = Rational(out.a.sign());
            out.witness = b.w;
            out.numeric_representative = apply_witness_numeric(out.witness, to_numeric(v), L);
            out.b_numeric = out.numeric_representative[k2];
            out.representative = {out.a, Rational(0), Rational(0), Rational(1)};
            return out;
        }
        out.representative = b.v;
        out.witness = b.w;
        return out;
    }
    if (!v[k3].is_zero()) {
        b.scale(v[k3].inverse());
        if (!b.v[k2].is_zero()) {
            b.conjugate(k1, solve_linear(ad1, b.v, k1));
            out.id = ClassId::aX2_plus_X3;
            out.a = b.v[k2];
            out.representative = b.v;
            out.witness = b.w;
            return out;
        }
        if (b.v[k1].is_zero()) {
            out.id = ClassId::X3;
            out.representative = b.v;
            out.witness = b.w;
            return out;
        }
        const Rational a1 = b.v[k1];
        const double eps = std::log(std::fabs(a1.to_double())) / ad2.diagonal(k1).to_double();
        if (eps != 0.0) b.w.steps.push_back(Conjugate{k2, eps});
        out.id = a1.sign() > 0 ? ClassId::X3_plus_X1 : ClassId::X3_minus_X1;
        out.representative = {Rational(a1.sign()), Rational(0), Rational(1), Rational(0)};
        out.witness = b.w;
        return out;
    }
    if (!v[k2].is_zero()) {
        b.conjugate(k1, solve_linear(ad1, b.v, k1));
        b.scale(b.v[k2].inverse());
        out.id = ClassId::X2;
    } else {
        b.scale(v[k1].inverse());
        out.id = ClassId::X1;
    }
    out.representative = b.v;
    out.witness = b.w;
    return out;
}

}  // namespace

Vec apply_witness(const Witness& w, const Vec& v, const LieAlgebra& L) {
    Vec out = v;
    for (const auto& step : w.steps) {
        if (const auto* c = std::get_if<Conjugate>(&step)) {
            const auto* eps = std::get_if<Rational>(&c->eps);
            if (!eps) throw NotExponentiable("witness step has a real parameter");
            out = AdjointMap(L, c->generator).apply(*eps, out);
        } else {
            const auto* lambda = std::get_if<Rational>(&std::get<Scale>(step).lambda);
            if (!lambda) throw NotExponentiable("witness step has a real parameter");
            out = *lambda * out;
        }
    }
    return out;
}

NumVec apply_witness_numeric(const Witness& w, const NumVec& v, const LieAlgebra& L) {
    NumVec out = v;
    for (const auto& step : w.steps) {
        if (const auto* c = std::get_if<Conjugate>(&step)) {
            out = AdjointMap(L, c->generator).apply(to_double(c->eps), out);
        } else {
            const double lambda = to_double(std::get<Scale>(step).lambda);
            for (auto& x : out) x *= lambda;
        }
    }
    return out;
}

}  // namespace gsym::lie
