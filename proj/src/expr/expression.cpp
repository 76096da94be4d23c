#include "gsym/expr/expression.hpp"

#include "gsym/expr/diff.hpp"
#include "gsym/expr/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace gsym {
namespace {

std::shared_ptr<const Node> make(Node n) { return std::make_shared<const Node>(std::move(n)); }

const std::shared_ptr<const Node>& zero_node() {
    static const auto z = make(Node{ConstNode{Rational(0)}});
    return z;
}

}  // namespace

Expr::Expr() : node_(zero_node()) {}
Expr::Expr(int value) : Expr(constant(Rational(value))) {}
Expr::Expr(const Rational& value) : Expr(constant(value)) {}
Expr::Expr(Symbol symbol) : Expr(var(symbol)) {}

Expr Expr::constant(const Rational& value) { return Expr(make(Node{ConstNode{value}})); }
Expr Expr::named(NamedConstant c) { return Expr(make(Node{NamedConstNode{c}})); }
Expr Expr::var(Symbol s) { return Expr(make(Node{VarNode{s}})); }

Expr Expr::sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    flat.reserve(terms.size());
    for (auto& t : terms) {
        if (const auto* s = t.as<SumNode>())
            flat.insert(flat.end(), s->terms.begin(), s->terms.end());
        else
            flat.push_back(std::move(t));
    }
    return Expr(make(Node{SumNode{std::move(flat)}}));
}

Expr Expr::product(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    flat.reserve(factors.size());
    for (auto& f : factors) {
        if (const auto* p = f.as<ProductNode>())
            flat.insert(flat.end(), p->factors.begin(), p->factors.end());
        else
            flat.push_back(std::move(f));
    }
    return Expr(make(Node{ProductNode{std::move(flat)}}));
}

Expr Expr::power(const Expr& base, const Rational& exponent) {
    return Expr(make(Node{PowerNode{base, exponent}}));
}

Expr Expr::apply(Function f, std::vector<Expr> args) {
    return Expr(make(Node{ApplyNode{f, std::move(args)}}));
}

Expr Expr::funcsym(FuncSymbol name, std::vector<Symbol> args, std::vector<int> orders) {
    if (orders.empty()) orders.assign(args.size(), 0);
    if (orders.size() != args.size()) throw Error("funcsym: multi-index length mismatch");
    return Expr(make(Node{FuncSymNode{name, std::move(args), std::move(orders)}}));
}

Expr::Kind Expr::kind() const { return static_cast<Kind>(node_->v.index()); }

bool Expr::is_zero() const {
    const auto* c = as<ConstNode>();
    return c && c->value.is_zero();
}

bool Expr::is_one() const {
    const auto* c = as<ConstNode>();
    return c && c->value.is_one();
}

const Rational* Expr::const_value() const {
    const auto* c = as<ConstNode>();
    return c ? &c->value : nullptr;
}

int FuncSymNode::total_order() const {
    int n = 0;
    for (int o : orders) n += o;
    return n;
}

int FuncSymNode::order_in(Symbol s) const {
    for (std::size_t i = 0; i < args.size(); ++i)
        if (args[i] == s) return orders[i];
    return 0;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->v.index() != b.node_->v.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node_->v);
            if constexpr (std::is_same_v<T, ConstNode>) return na.value == nb.value;
            else if constexpr (std::is_same_v<T, NamedConstNode>) return na.which == nb.which;
            else if constexpr (std::is_same_v<T, VarNode>) return na.symbol == nb.symbol;
            else if constexpr (std::is_same_v<T, SumNode>) return na.terms == nb.terms;
            else if constexpr (std::is_same_v<T, ProductNode>) return na.factors == nb.factors;
            else if constexpr (std::is_same_v<T, PowerNode>)
                return na.exponent == nb.exponent && na.base == nb.base;
            else if constexpr (std::is_same_v<T, ApplyNode>) return na.fn == nb.fn && na.args == nb.args;
            else return na == nb;
        },
        a.node_->v);
}

// Simplifying arithmetic -----------------------------------------------------

Expr add_all(const std::vector<Expr>& terms) {
    Rational constant(0);
    std::vector<Expr> rest;
    for (const auto& t : terms) {
        const auto visit_one = [&](const Expr& e) {
            if (const auto* c = e.const_value())
                constant += *c;
            else
                rest.push_back(e);
        };
        if (const auto* s = t.as<SumNode>())
            for (const auto& inner : s->terms) visit_one(inner);
        else
            visit_one(t);
    }
    if (!constant.is_zero()) rest.push_back(Expr::constant(constant));
    if (rest.empty()) return Expr();
    if (rest.size() == 1) return rest.front();
    return Expr::sum(std::move(rest));
}

Expr mul_all(const std::vector<Expr>& factors) {
    Rational constant(1);
    std::vector<Expr> rest;
    for (const auto& f : factors) {
        const auto visit_one = [&](const Expr& e) {
            if (const auto* c = e.const_value())
                constant *= *c;
            else
                rest.push_back(e);
        };
        if (const auto* p = f.as<ProductNode>())
            for (const auto& inner : p->factors) visit_one(inner);
        else
            visit_one(f);
    }
    if (constant.is_zero()) return Expr();
    if (rest.empty()) return Expr::constant(constant);
    if (!constant.is_one()) rest.insert(rest.begin(), Expr::constant(constant));
    if (rest.size() == 1) return rest.front();
    return Expr::product(std::move(rest));
}

Expr operator+(const Expr& a, const Expr& b) { return add_all({a, b}); }
Expr operator-(const Expr& a) { return mul_all({Expr::constant(Rational(-1)), a}); }
Expr operator-(const Expr& a, const Expr& b) { return add_all({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return mul_all({a, b}); }

Expr operator/(const Expr& a, const Expr& b) {
    if (const auto* c = b.const_value()) {
        if (c->is_zero()) throw DivisionByZeroSymbolic();
        return a * Expr::constant(c->inverse());
    }
    return a * pow(b, Rational(-1));
}

Expr pow(const Expr& base, const Rational& exponent) {
    if (exponent.is_zero()) return Expr(1);
    if (exponent.is_one()) return base;
    if (const auto* c = base.const_value()) {
        if (auto r = c->exact_pow(exponent)) return Expr::constant(*r);
    }
    if (const auto* p = base.as<PowerNode>(); p && exponent.is_integer())
        return pow(p->base, p->exponent * exponent);
    return Expr::power(base, exponent);
}

Expr apply_exp(const Expr& e) { return e.is_zero() ? Expr(1) : Expr::apply(Function::exp, e); }
Expr apply_ln(const Expr& e) { return e.is_one() ? Expr() : Expr::apply(Function::ln, e); }
Expr apply_sqrt(const Expr& e) { return Expr::apply(Function::sqrt, e); }

// Queries --------------------------------------------------------------------

namespace {

template <typename Fn>
void walk(const Expr& e, Fn&& fn) {
    fn(e);
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SumNode>)
                for (const auto& c : n.terms) walk(c, fn);
            else if constexpr (std::is_same_v<T, ProductNode>)
                for (const auto& c : n.factors) walk(c, fn);
            else if constexpr (std::is_same_v<T, PowerNode>)
                walk(n.base, fn);
            else if constexpr (std::is_same_v<T, ApplyNode>)
                for (const auto& c : n.args) walk(c, fn);
        },
        e.node().v);
}

template <typename Leaf>
Expr rebuild(const Expr& e, Leaf&& leaf, std::unordered_map<const void*, Expr>& memo) {
    if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
    Expr out = std::visit(
        [&](const auto& n) -> Expr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SumNode>) {
                std::vector<Expr> terms;
                for (const auto& c : n.terms) terms.push_back(rebuild(c, leaf, memo));
                return add_all(terms);
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                std::vector<Expr> fs;
                for (const auto& c : n.factors) fs.push_back(rebuild(c, leaf, memo));
                return mul_all(fs);
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                return pow(rebuild(n.base, leaf, memo), n.exponent);
            } else if constexpr (std::is_same_v<T, ApplyNode>) {
                std::vector<Expr> args;
                for (const auto& c : n.args) args.push_back(rebuild(c, leaf, memo));
                return Expr::apply(n.fn, std::move(args));
            } else {
                return leaf(e);
            }
        },
        e.node().v);
    memo.emplace(e.id(), out);
    return out;
}

}  // namespace

std::set<Symbol> free_symbols(const Expr& e) {
    std::set<Symbol> out;
    walk(e, [&](const Expr& n) {
        if (const auto* v = n.as<VarNode>()) out.insert(v->symbol);
        if (const auto* f = n.as<FuncSymNode>()) out.insert(f->args.begin(), f->args.end());
    });
    return out;
}

std::set<FuncSymbol> funcsyms(const Expr& e) {
    std::set<FuncSymbol> out;
    walk(e, [&](const Expr& n) {
        if (const auto* f = n.as<FuncSymNode>()) out.insert(f->name);
    });
    return out;
}

bool contains_symbol(const Expr& e, Symbol s) { return free_symbols(e).count(s) > 0; }

bool contains_funcsym(const Expr& e) { return !funcsyms(e).empty(); }

Expr substitute(const Expr& e, Symbol s, const Expr& replacement) {
    std::unordered_map<const void*, Expr> memo;
    return rebuild(
        e,
        [&](const Expr& leaf) -> Expr {
            if (const auto* v = leaf.as<VarNode>(); v && v->symbol == s) return replacement;
            if (const auto* f = leaf.as<FuncSymNode>()) {
                if (std::find(f->args.begin(), f->args.end(), s) != f->args.end())
                    throw Error("substitute: '" + std::string(symbol_name(s)) +
                                "' is an argument of function symbol '" +
                                std::string(funcsym_name(f->name)) + "'");
            }
            return leaf;
        },
        memo);
}

Expr substitute_funcsym(const Expr& e, FuncSymbol name, const Expr& replacement) {
    std::unordered_map<const void*, Expr> memo;
    return rebuild(
        e,
        [&](const Expr& leaf) -> Expr {
            const auto* f = leaf.as<FuncSymNode>();
            if (!f || f->name != name) return leaf;
            Expr out = replacement;
            for (std::size_t i = 0; i < f->args.size(); ++i)
                for (int k = 0; k < f->orders[i]; ++k) out = diff(out, f->args[i]);
            return out;
        },
        memo);
}

}  // namespace gsym
