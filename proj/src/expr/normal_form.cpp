#include "gsym/expr/normal_form.hpp"

#include "gsym/expr/errors.hpp"
#include "gsym/expr/io.hpp"
#include "gsym/expr/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace gsym::nf {

// Atoms ----------------------------------------------------------------------

Atom Atom::var(Symbol s) {
    AtomData d;
    d.kind = AtomKind::Var;
    d.symbol = s;
    d.key = std::string(symbol_name(s));
    return Atom(std::make_shared<const AtomData>(std::move(d)));
}

Atom Atom::named(NamedConstant c) {
    AtomData d;
    d.kind = AtomKind::NamedConst;
    d.named = c;
    d.key = std::string(named_constant_name(c));
    return Atom(std::make_shared<const AtomData>(std::move(d)));
}

Atom Atom::funcsym(const FuncSymNode& f) {
    AtomData d;
    d.kind = AtomKind::FuncSym;
    d.funcsym = f;
    d.key = print(Expr::funcsym(f.name, f.args, f.orders));
    return Atom(std::make_shared<const AtomData>(std::move(d)));
}

Atom Atom::apply(Function fn, std::vector<Expr> normalized_args) {
    AtomData d;
    d.kind = AtomKind::Apply;
    d.fn = fn;
    d.key = print(Expr::apply(fn, normalized_args));
    d.args = std::move(normalized_args);
    return Atom(std::make_shared<const AtomData>(std::move(d)));
}

Atom Atom::exp(const RatFunc& argument) {
    AtomData d;
    d.kind = AtomKind::Exp;
    d.fn = Function::exp;
    d.key = print(argument.to_expr());
    d.inner = std::make_shared<const RatFunc>(argument);
    return Atom(std::make_shared<const AtomData>(std::move(d)));
}

Atom Atom::radical(const RatFunc& base) {
    AtomData d;
    d.kind = AtomKind::Radical;
    d.key = print(base.to_expr());
    d.inner = std::make_shared<const RatFunc>(base);
    return Atom(std::make_shared<const AtomData>(std::move(d)));
}

Expr Atom::to_expr(const Rational& exponent) const {
    Expr base;
    switch (d_->kind) {
        case AtomKind::Var: base = Expr::var(d_->symbol); break;
        case AtomKind::NamedConst: base = Expr::named(d_->named); break;
        case AtomKind::FuncSym:
            base = Expr::funcsym(d_->funcsym->name, d_->funcsym->args, d_->funcsym->orders);
            break;
        case AtomKind::Apply: base = Expr::apply(d_->fn, d_->args); break;
        case AtomKind::Exp: base = Expr::apply(Function::exp, d_->inner->to_expr()); break;
        case AtomKind::Radical: return Expr::power(d_->inner->to_expr(), exponent);
    }
    return exponent.is_one() ? base : Expr::power(base, exponent);
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (a.d_ == b.d_) return std::strong_ordering::equal;
    const AtomData& x = *a.d_;
    const AtomData& y = *b.d_;
    if (auto c = static_cast<int>(x.kind) <=> static_cast<int>(y.kind); c != 0) return c;
    switch (x.kind) {
        case AtomKind::Var: return static_cast<int>(x.symbol) <=> static_cast<int>(y.symbol);
        case AtomKind::NamedConst: return static_cast<int>(x.named) <=> static_cast<int>(y.named);
        case AtomKind::FuncSym: {
            const auto& f = *x.funcsym;
            const auto& g = *y.funcsym;
            if (auto c = static_cast<int>(f.name) <=> static_cast<int>(g.name); c != 0) return c;
            if (auto c = f.total_order() <=> g.total_order(); c != 0) return c;
            if (auto c = f.args <=> g.args; c != 0) return c;
            return g.orders <=> f.orders;
        }
        case AtomKind::Apply:
            if (auto c = static_cast<int>(x.fn) <=> static_cast<int>(y.fn); c != 0) return c;
            return x.key <=> y.key;
        case AtomKind::Exp:
        case AtomKind::Radical:
            return x.key <=> y.key;
    }
    return std::strong_ordering::equal;
}

// Monomials and polynomials --------------------------------------------------

Rational monomial_degree(const Monomial& m) {
    Rational d(0);
    for (const auto& [a, e] : m) d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const Rational da = monomial_degree(a);
    const Rational db = monomial_degree(b);
    if (da != db) return da > db;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return a[i].second.sign() > 0;
        if (i == a.size() || b[j].first < a[i].first) return b[j].second.sign() < 0;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return false;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Rational e = a[i].second + b[j].second;
            if (!e.is_zero()) out.emplace_back(a[i].first, std::move(e));
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

Monomial invert(const Monomial& m) {
    Monomial out = m;
    for (auto& [a, e] : out) e = -e;
    return out;
}

void accumulate(Poly& p, const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Poly one_poly() {
    Poly p;
    p.emplace(Monomial{}, Rational(1));
    return p;
}

Poly padd(const Poly& a, const Poly& b, const Rational& sb = Rational(1)) {
    Poly out = a;
    for (const auto& [m, c] : b) accumulate(out, m, c * sb);
    return out;
}

Poly pmul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) accumulate(out, monomial_mul(ma, mb), ca * cb);
    return out;
}

Poly pmul_monomial(const Poly& a, const Monomial& m, const Rational& c) {
    Poly out;
    for (const auto& [ma, ca] : a) accumulate(out, monomial_mul(ma, m), ca * c);
    return out;
}

bool is_one(const Poly& p) { return p.size() == 1 && p.begin()->first.empty() && p.begin()->second.is_one(); }

bool monomial_needs_reduction(const Monomial& m) {
    int exps = 0;
    for (const auto& [a, e] : m) {
        if (a.kind() == AtomKind::Exp) {
            ++exps;
            if (!e.is_one()) return true;
        } else if (a.kind() == AtomKind::Radical) {
            if (e.sign() < 0 || e >= Rational(1)) return true;
        }
    }
    return exps > 1;
}

bool needs_reduction(const Poly& p) {
    return std::any_of(p.begin(), p.end(), [](const auto& t) { return monomial_needs_reduction(t.first); });
}

/// Componentwise minimum exponent over all terms, absent atoms counting as 0.
Monomial min_monomial(const Poly& p) {
    std::map<Atom, Rational> mins;
    for (const auto& [m, c] : p)
        for (const auto& [a, e] : m) mins.try_emplace(a, Rational(0));
    for (auto& [a, mn] : mins) {
        bool first = true;
        for (const auto& [m, c] : p) {
            Rational e(0);
            for (const auto& [b, eb] : m)
                if (b == a) e = eb;
            if (first || e < mn) mn = e;
            first = false;
        }
    }
    Monomial out;
    for (auto& [a, e] : mins)
        if (!e.is_zero()) out.emplace_back(a, e);
    return out;
}

}  // namespace

struct Canon {
    static RatFunc raw(Poly num, Poly den) {
        RatFunc r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    static RatFunc make_exp(const RatFunc& arg) {
        if (arg.is_zero()) return RatFunc(1);
        Poly p;
        p.emplace(Monomial{{Atom::exp(arg), Rational(1)}}, Rational(1));
        return raw(std::move(p), one_poly());
    }

    // Rewrites exponential and radical factors into canonical shape.
    static RatFunc reduce(const Poly& p) {
        RatFunc acc;
        for (const auto& [m, c] : p) {
            if (!monomial_needs_reduction(m)) {
                Poly t;
                t.emplace(m, c);
                acc = acc + raw(std::move(t), one_poly());
                continue;
            }
            Monomial rest;
            RatFunc exp_arg;
            bool any_exp = false;
            std::vector<std::pair<Atom, Rational>> radicals;
            for (const auto& [a, e] : m) {
                if (a.kind() == AtomKind::Exp) {
                    exp_arg = exp_arg + *a.data().inner * RatFunc(e);
                    any_exp = true;
                } else if (a.kind() == AtomKind::Radical && (e.sign() < 0 || e >= Rational(1))) {
                    radicals.emplace_back(a, e);
                } else {
                    rest.emplace_back(a, e);
                }
            }
            Poly t;
            t.emplace(std::move(rest), c);
            RatFunc term = raw(std::move(t), one_poly());
            if (any_exp) term = term * make_exp(exp_arg);
            for (const auto& [a, e] : radicals) {
                const Rational whole = e.floor();
                const Rational frac = e - whole;
                term = term * a.data().inner->pow(*whole.to_long());
                if (!frac.is_zero()) {
                    Poly r;
                    r.emplace(Monomial{{a, frac}}, Rational(1));
                    term = term * raw(std::move(r), one_poly());
                }
            }
            acc = acc + term;
        }
        return acc;
    }

    static void cancel_gcd(Poly& num, Poly& den) {
        std::map<Atom, std::pair<Rational, mpz_class>> info;  // min exponent, exponent denominator lcm
        for (const Poly* p : {&num, &den})
            for (const auto& [m, c] : *p)
                for (const auto& [a, e] : m) info.try_emplace(a, Rational(0), mpz_class(1));
        if (info.empty()) return;
        std::vector<Atom> atoms;
        for (auto& [a, data] : info) {
            atoms.push_back(a);
            for (const Poly* p : {&num, &den}) {
                for (const auto& [m, c] : *p) {
                    Rational e(0);
                    for (const auto& [b, eb] : m)
                        if (b == a) e = eb;
                    if (e < data.first) data.first = e;
                    data.second = lcm(data.second, e.denominator());
                }
            }
        }
        const std::size_t n = atoms.size();
        const auto to_dense = [&](const Poly& p) {
            poly::MPoly out;
            for (const auto& [m, c] : p) {
                poly::Exps v(n);
                std::size_t k = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    Rational e(0);
                    if (k < m.size() && m[k].first == atoms[i]) e = m[k++].second;
                    const auto& [mn, L] = info.at(atoms[i]);
                    v[i] = static_cast<int>(*((e - mn) * Rational(L, 1)).to_long());
                }
                out.emplace(std::move(v), c);
            }
            return out;
        };
        const auto from_dense = [&](const poly::MPoly& p) {
            Poly out;
            for (const auto& [v, c] : p) {
                Monomial m;
                for (std::size_t i = 0; i < n; ++i) {
                    const auto& [mn, L] = info.at(atoms[i]);
                    Rational e = Rational(mpz_class(v[i]), L) + mn;
                    if (!e.is_zero()) m.emplace_back(atoms[i], std::move(e));
                }
                accumulate(out, m, c);
            }
            return out;
        };
        const poly::MPoly dn = to_dense(num);
        const poly::MPoly dd = to_dense(den);
        const poly::MPoly g = poly::gcd(dn, dd);
        if (poly::is_constant(g)) return;
        num = from_dense(*poly::divide_exact(dn, g));
        den = from_dense(*poly::divide_exact(dd, g));
    }

    static RatFunc run(Poly num, Poly den, int depth = 0) {
        if (depth > 64) throw Error("normal form: reduction did not terminate");
        if (den.empty()) throw DivisionByZeroSymbolic();
        if (num.empty()) return RatFunc();
        if (needs_reduction(num) || needs_reduction(den)) {
            RatFunc n = reduce(num);
            RatFunc d = reduce(den);
            if (d.is_zero()) throw DivisionByZeroSymbolic();
            return run(pmul(n.num_, d.den_), pmul(n.den_, d.num_), depth + 1);
        }
        if (den.size() == 1) {
            const auto& [m, c] = *den.begin();
            Poly out = pmul_monomial(num, invert(m), c.inverse());
            if (needs_reduction(out)) return run(std::move(out), one_poly(), depth + 1);
            return raw(std::move(out), one_poly());
        }
        cancel_gcd(num, den);
        const Monomial content = min_monomial(den);
        if (!content.empty()) {
            const Monomial inv = invert(content);
            num = pmul_monomial(num, inv, Rational(1));
            den = pmul_monomial(den, inv, Rational(1));
        }
        const Rational lc = den.begin()->second;
        if (!lc.is_one()) {
            num = pmul_monomial(num, {}, lc.inverse());
            den = pmul_monomial(den, {}, lc.inverse());
        }
        if (needs_reduction(num) || needs_reduction(den) || den.size() == 1)
            return run(std::move(num), std::move(den), depth + 1);
        return raw(std::move(num), std::move(den));
    }
};

// RatFunc --------------------------------------------------------------------

RatFunc::RatFunc() : den_(one_poly()) {}

RatFunc::RatFunc(const Rational& c) : den_(one_poly()) {
    if (!c.is_zero()) num_.emplace(Monomial{}, c);
}

RatFunc RatFunc::atom(const Atom& a, const Rational& exponent) {
    Poly p;
    if (exponent.is_zero())
        p.emplace(Monomial{}, Rational(1));
    else
        p.emplace(Monomial{{a, exponent}}, Rational(1));
    return Canon::run(std::move(p), one_poly());
}

RatFunc RatFunc::from_poly(Poly num) { return Canon::run(std::move(num), one_poly()); }

RatFunc RatFunc::fraction(Poly num, Poly den) { return Canon::run(std::move(num), std::move(den)); }

bool RatFunc::den_is_one() const { return is_one(den_); }

std::optional<Rational> RatFunc::constant() const {
    if (!den_is_one()) return std::nullopt;
    if (num_.empty()) return Rational(0);
    if (num_.size() == 1 && num_.begin()->first.empty()) return num_.begin()->second;
    return std::nullopt;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        Poly n = padd(a.num_, b.num_);
        if (a.den_is_one()) return Canon::raw(std::move(n), one_poly());
        return Canon::run(std::move(n), a.den_);
    }
    return Canon::run(padd(pmul(a.num_, b.den_), pmul(b.num_, a.den_)), pmul(a.den_, b.den_));
}

RatFunc operator-(const RatFunc& a) {
    Poly n;
    for (const auto& [m, c] : a.num_) n.emplace(m, -c);
    return Canon::raw(std::move(n), a.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return Canon::run(pmul(a.num_, b.num_), pmul(a.den_, b.den_));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZeroSymbolic();
    if (a.is_zero()) return RatFunc();
    return Canon::run(pmul(a.num_, b.den_), pmul(a.den_, b.num_));
}

RatFunc RatFunc::pow(long exponent) const {
    if (exponent < 0) return RatFunc(1) / pow(-exponent);
    RatFunc result(1);
    RatFunc base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

Expr poly_to_expr(const Poly& p) {
    if (p.empty()) return Expr();
    std::vector<Expr> terms;
    for (const auto& [m, c] : p) {
        std::vector<Expr> fs;
        if (!c.is_one() || m.empty()) fs.push_back(Expr::constant(c));
        for (const auto& [a, e] : m) fs.push_back(a.to_expr(e));
        terms.push_back(fs.size() == 1 ? fs.front() : Expr::product(std::move(fs)));
    }
    return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
}

Expr RatFunc::to_expr() const {
    Expr n = poly_to_expr(num_);
    if (den_is_one()) return n;
    Expr d = Expr::power(poly_to_expr(den_), Rational(-1));
    if (n.is_one()) return d;
    return Expr::product({n, d});
}

// Conversion -----------------------------------------------------------------

namespace {

std::optional<Rational> value_at_zero(Function f) {
    switch (f) {
        case Function::sin:
        case Function::sinh:
        case Function::besselj1:
        case Function::besseli1:
        case Function::shi:
            return Rational(0);
        case Function::cos:
        case Function::cosh:
        case Function::besselj0:
        case Function::besseli0:
            return Rational(1);
        default:
            return std::nullopt;
    }
}

RatFunc power_rf(const RatFunc& b, const Rational& r) {
    if (r.is_integer()) {
        auto n = r.to_long();
        if (!n) throw Error("normal form: exponent too large");
        return b.pow(*n);
    }
    if (b.is_zero()) {
        if (r.sign() > 0) return RatFunc();
        throw DivisionByZeroSymbolic();
    }
    if (b.den_is_one() && b.num().size() == 1) {
        const auto& [m, c] = *b.num().begin();
        if (c.sign() > 0) {
            RatFunc coeff;
            if (auto exact = c.exact_pow(r))
                coeff = RatFunc(*exact);
            else
                coeff = RatFunc::atom(Atom::radical(RatFunc(c)), r);
            Monomial scaled = m;
            for (auto& [a, e] : scaled) e *= r;
            Poly p;
            p.emplace(std::move(scaled), Rational(1));
            return coeff * RatFunc::from_poly(std::move(p));
        }
    }
    return RatFunc::atom(Atom::radical(b), r);
}

class Converter {
public:
    RatFunc operator()(const Expr& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
        RatFunc r = std::visit([&](const auto& n) { return convert(n); }, e.node().v);
        memo_.emplace(e.id(), r);
        return r;
    }

private:
    RatFunc convert(const ConstNode& n) { return RatFunc(n.value); }
    RatFunc convert(const NamedConstNode& n) { return RatFunc::atom(Atom::named(n.which)); }
    RatFunc convert(const VarNode& n) { return RatFunc::atom(Atom::var(n.symbol)); }
    RatFunc convert(const FuncSymNode& n) { return RatFunc::atom(Atom::funcsym(n)); }

    RatFunc convert(const SumNode& n) {
        RatFunc acc;
        for (const auto& t : n.terms) acc = acc + (*this)(t);
        return acc;
    }

    RatFunc convert(const ProductNode& n) {
        RatFunc acc(1);
        for (const auto& f : n.factors) {
            acc = acc * (*this)(f);
            if (acc.is_zero()) break;
        }
        return acc;
    }

    RatFunc convert(const PowerNode& n) { return power_rf((*this)(n.base), n.exponent); }

    RatFunc convert(const ApplyNode& n) {
        RatFunc arg = (*this)(n.args.front());
        switch (n.fn) {
            case Function::sqrt: return power_rf(arg, Rational(1, 2));
            case Function::exp: return Canon::make_exp(arg);
            case Function::ln:
                if (auto c = arg.constant(); c && c->is_one()) return RatFunc();
                break;
            default:
                if (auto c = arg.constant(); c && c->is_zero())
                    if (auto v = value_at_zero(n.fn)) return RatFunc(*v);
                break;
        }
        return RatFunc::atom(Atom::apply(n.fn, {arg.to_expr()}));
    }

    std::unordered_map<const void*, RatFunc> memo_;
};

}  // namespace

RatFunc to_ratfunc(const Expr& e) { return Converter()(e); }

}  // namespace gsym::nf

namespace gsym {

Expr normalize(const Expr& e) { return nf::to_ratfunc(e).to_expr(); }

bool is_zero_symbolic(const Expr& e) { return nf::to_ratfunc(e).is_zero(); }

}  // namespace gsym
