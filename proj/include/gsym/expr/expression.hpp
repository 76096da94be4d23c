#pragma once

#include "gsym/expr/rational.hpp"
#include "gsym/expr/symbols.hpp"

#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace gsym {

class Expr;
struct Node;

/// Immutable expression handle. Copies share the underlying node.
///
/// The raw factories (sum, product, power, ...) build exactly the node that
/// is asked for, only flattening directly nested sums/products. The
/// arithmetic operators additionally fold constants and drop neutral
/// elements; they are what the differentiation rules use.
class Expr {
public:
    enum class Kind { Const, NamedConst, Var, Sum, Product, Power, Apply, FuncSym };

    Expr();  // Const(0)
    Expr(int value);  // NOLINT(google-explicit-constructor)
    Expr(const Rational& value);  // NOLINT(google-explicit-constructor)
    Expr(Symbol symbol);  // NOLINT(google-explicit-constructor)

    static Expr constant(const Rational& value);
    static Expr named(NamedConstant c);
    static Expr var(Symbol s);
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr power(const Expr& base, const Rational& exponent);
    static Expr apply(Function f, std::vector<Expr> args);
    static Expr apply(Function f, const Expr& arg) { return apply(f, std::vector<Expr>{arg}); }
    /// orders[i] counts derivatives taken with respect to args[i].
    static Expr funcsym(FuncSymbol name, std::vector<Symbol> args, std::vector<int> orders = {});

    Kind kind() const;
    const Node& node() const { return *node_; }
    const void* id() const { return node_.get(); }

    template <typename T>
    const T* as() const;

    bool is_const() const { return kind() == Kind::Const; }
    bool is_zero() const;
    bool is_one() const;
    /// Constant value if this node is a Const.
    const Rational* const_value() const;

    friend bool operator==(const Expr& a, const Expr& b);  // structural
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct ConstNode { Rational value; };
struct NamedConstNode { NamedConstant which; };
struct VarNode { Symbol symbol; };
struct SumNode { std::vector<Expr> terms; };
struct ProductNode { std::vector<Expr> factors; };
struct PowerNode {
    Expr base;
    Rational exponent;
};
struct ApplyNode {
    Function fn;
    std::vector<Expr> args;
};
struct FuncSymNode {
    FuncSymbol name;
    std::vector<Symbol> args;
    std::vector<int> orders;

    int total_order() const;
    int order_in(Symbol s) const;
    friend bool operator==(const FuncSymNode&, const FuncSymNode&) = default;
};

struct Node {
    std::variant<ConstNode, NamedConstNode, VarNode, SumNode, ProductNode, PowerNode, ApplyNode, FuncSymNode> v;
};

template <typename T>
const T* Expr::as() const {
    return std::get_if<T>(&node_->v);
}

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, const Rational& exponent);
Expr add_all(const std::vector<Expr>& terms);
Expr mul_all(const std::vector<Expr>& factors);

Expr apply_exp(const Expr& e);
Expr apply_ln(const Expr& e);
Expr apply_sqrt(const Expr& e);

/// Variables occurring anywhere in e (FuncSym arguments included).
std::set<Symbol> free_symbols(const Expr& e);
/// Distinct function symbols occurring in e.
std::set<FuncSymbol> funcsyms(const Expr& e);
bool contains_symbol(const Expr& e, Symbol s);
bool contains_funcsym(const Expr& e);

/// Replaces every Var s by the replacement. FuncSym arguments are left alone;
/// substituting a variable that is a FuncSym argument throws.
Expr substitute(const Expr& e, Symbol s, const Expr& replacement);

/// Replaces each occurrence of the function symbol (with any derivative
/// multi-index) by the corresponding partial derivative of `replacement`.
Expr substitute_funcsym(const Expr& e, FuncSymbol name, const Expr& replacement);

}  // namespace gsym
