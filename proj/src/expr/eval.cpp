#include "gsym/expr/eval.hpp"

#include "gsym/expr/diff.hpp"
#include "gsym/expr/errors.hpp"
#include "gsym/specfun/specfun.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

namespace gsym {
namespace {

double apply_fn(Function fn, double a) {
    switch (fn) {
        case Function::exp: return std::exp(a);
        case Function::ln:
            if (!(a > 0)) throw DomainError("ln requires a positive argument");
            return std::log(a);
        case Function::sqrt:
            if (a < 0) throw DomainError("sqrt of a negative number");
            return std::sqrt(a);
        case Function::sin: return std::sin(a);
        case Function::cos: return std::cos(a);
        case Function::sinh: return std::sinh(a);
        case Function::cosh: return std::cosh(a);
        case Function::besselj0: return specfun::besselj0(a);
        case Function::besselj1: return specfun::besselj1(a);
        case Function::bessely0: return specfun::bessely0(a);
        case Function::bessely1: return specfun::bessely1(a);
        case Function::besseli0: return specfun::besseli0(a);
        case Function::besseli1: return specfun::besseli1(a);
        case Function::besselk0: return specfun::besselk0(a);
        case Function::besselk1: return specfun::besselk1(a);
        case Function::shi: return specfun::shi(a);
        case Function::chi: return specfun::chi(a);
    }
    return 0.0;
}

double power(double b, const Rational& r) {
    if (r.is_integer()) {
        if (b == 0.0 && r.sign() < 0) throw DomainError("division by zero");
        return std::pow(b, r.to_double());
    }
    if (b < 0) throw DomainError("fractional power of a negative number");
    if (b == 0.0) {
        if (r.sign() < 0) throw DomainError("division by zero");
        return 0.0;
    }
    if (r == Rational(1, 2)) return std::sqrt(b);
    if (r == Rational(-1, 2)) return 1.0 / std::sqrt(b);
    return std::pow(b, r.to_double());
}

class Evaluator {
public:
    Evaluator(const Bindings& b, const FuncSymTable* c) : bindings_(b), callbacks_(c) {}

    double operator()(const Expr& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
        const double v = std::visit([&](const auto& n) { return eval(n); }, e.node().v);
        if (!std::isfinite(v)) throw DomainError("non-finite value");
        memo_.emplace(e.id(), v);
        return v;
    }

private:
    double eval(const ConstNode& n) { return n.value.to_double(); }
    double eval(const NamedConstNode& n) { return named_constant_value(n.which); }

    double eval(const VarNode& n) {
        auto it = bindings_.find(n.symbol);
        if (it == bindings_.end()) throw UnboundSymbol(std::string(symbol_name(n.symbol)));
        return it->second;
    }

    double eval(const SumNode& n) {
        double s = 0;
        for (const auto& t : n.terms) s += (*this)(t);
        return s;
    }

    double eval(const ProductNode& n) {
        double p = 1;
        for (const auto& f : n.factors) p *= (*this)(f);
        return p;
    }

    double eval(const PowerNode& n) { return power((*this)(n.base), n.exponent); }
    double eval(const ApplyNode& n) { return apply_fn(n.fn, (*this)(n.args.front())); }

    double eval(const FuncSymNode& n) {
        if (callbacks_) {
            if (auto it = callbacks_->find(n.name); it != callbacks_->end()) return it->second(n, bindings_);
        }
        throw UnresolvedFuncSym(std::string(funcsym_name(n.name)));
    }

    const Bindings& bindings_;
    const FuncSymTable* callbacks_;
    std::unordered_map<const void*, double> memo_;
};

}  // namespace

double eval_num(const Expr& e, const Bindings& bindings, const FuncSymTable* callbacks) {
    return Evaluator(bindings, callbacks)(e);
}

FuncSymTable funcsym_table(const std::map<FuncSymbol, Expr>& realizations) {
    FuncSymTable table;
    for (const auto& [name, expr] : realizations) {
        table[name] = [expr](const FuncSymNode& n, const Bindings& b) {
            Expr d = expr;
            for (std::size_t i = 0; i < n.args.size(); ++i)
                for (int k = 0; k < n.orders[i]; ++k) d = diff(d, n.args[i]);
            return eval_num(d, b);
        };
    }
    return table;
}

}  // namespace gsym
