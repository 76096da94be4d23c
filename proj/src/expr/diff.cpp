#include "gsym/expr/diff.hpp"

#include <unordered_map>

namespace gsym {
namespace {

Expr fn(Function f, const Expr& arg) { return Expr::apply(f, arg); }

// d/dg f(g) for the unary function library.
Expr outer_derivative(Function f, const Expr& g) {
    switch (f) {
        case Function::exp: return fn(Function::exp, g);
        case Function::ln: return pow(g, Rational(-1));
        case Function::sqrt: return Expr(Rational(1, 2)) * pow(fn(Function::sqrt, g), Rational(-1));
        case Function::sin: return fn(Function::cos, g);
        case Function::cos: return -fn(Function::sin, g);
        case Function::sinh: return fn(Function::cosh, g);
        case Function::cosh: return fn(Function::sinh, g);
        case Function::besselj0: return -fn(Function::besselj1, g);
        case Function::besselj1: return fn(Function::besselj0, g) - fn(Function::besselj1, g) / g;
        case Function::bessely0: return -fn(Function::bessely1, g);
        case Function::bessely1: return fn(Function::bessely0, g) - fn(Function::bessely1, g) / g;
        case Function::besseli0: return fn(Function::besseli1, g);
        case Function::besseli1: return fn(Function::besseli0, g) - fn(Function::besseli1, g) / g;
        case Function::besselk0: return -fn(Function::besselk1, g);
        case Function::besselk1: return -fn(Function::besselk0, g) - fn(Function::besselk1, g) / g;
        case Function::shi: return fn(Function::sinh, g) / g;
        case Function::chi: return fn(Function::cosh, g) / g;
    }
    return Expr();
}

class Differentiator {
public:
    explicit Differentiator(Symbol v) : v_(v) {}

    Expr operator()(const Expr& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
        Expr d = std::visit([&](const auto& n) { return rule(n); }, e.node().v);
        memo_.emplace(e.id(), d);
        return d;
    }

private:
    Expr rule(const ConstNode&) { return Expr(); }
    Expr rule(const NamedConstNode&) { return Expr(); }
    Expr rule(const VarNode& n) { return n.symbol == v_ ? Expr(1) : Expr(); }

    Expr rule(const SumNode& n) {
        std::vector<Expr> terms;
        terms.reserve(n.terms.size());
        for (const auto& t : n.terms) terms.push_back((*this)(t));
        return add_all(terms);
    }

    Expr rule(const ProductNode& n) {
        std::vector<Expr> terms;
        for (std::size_t i = 0; i < n.factors.size(); ++i) {
            Expr di = (*this)(n.factors[i]);
            if (di.is_zero()) continue;
            std::vector<Expr> fs = n.factors;
            fs[i] = di;
            terms.push_back(mul_all(fs));
        }
        return add_all(terms);
    }

    Expr rule(const PowerNode& n) {
        Expr db = (*this)(n.base);
        if (db.is_zero()) return Expr();
        return Expr(n.exponent) * pow(n.base, n.exponent - Rational(1)) * db;
    }

    Expr rule(const ApplyNode& n) {
        const Expr& g = n.args.front();
        Expr dg = (*this)(g);
        if (dg.is_zero()) return Expr();
        return outer_derivative(n.fn, g) * dg;
    }

    Expr rule(const FuncSymNode& n) {
        for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (n.args[i] != v_) continue;
            auto orders = n.orders;
            ++orders[i];
            return Expr::funcsym(n.name, n.args, std::move(orders));
        }
        return Expr();
    }

    Symbol v_;
    std::unordered_map<const void*, Expr> memo_;
};

}  // namespace

Expr diff(const Expr& e, Symbol v) { return Differentiator(v)(e); }

}  // namespace gsym
