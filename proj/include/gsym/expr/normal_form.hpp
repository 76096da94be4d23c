#pragma once

#include "gsym/expr/expression.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

/// Canonical form: a reduced fraction of Laurent-Puiseux polynomials over Q
/// in "atoms".
///
/// Atoms are variables, named constants, function-symbol instances,
/// function applications keyed by their normalized argument, exponentials
/// (at most one per monomial, with exp(a)*exp(b) merged into exp(a+b)) and
/// radicals of non-monomial bases. A radical atom stands for its base, so
/// its exponent is kept in [0, 1) and integer parts are multiplied out.
/// Plain atoms carry arbitrary rational exponents, which is how x^(1/2),
/// x^(5/2) and 1/x^2 stay polynomial.
namespace gsym::nf {

class RatFunc;

enum class AtomKind { Var, NamedConst, FuncSym, Apply, Exp, Radical };

struct AtomData {
    AtomKind kind = AtomKind::Var;
    Symbol symbol = Symbol::x;
    NamedConstant named = NamedConstant::pi;
    std::optional<FuncSymNode> funcsym;
    Function fn = Function::exp;
    std::vector<Expr> args;                 // Apply: normalized arguments
    std::shared_ptr<const RatFunc> inner;   // Exp: argument, Radical: base
    std::string key;
};

class Atom {
public:
    static Atom var(Symbol s);
    static Atom named(NamedConstant c);
    static Atom funcsym(const FuncSymNode& f);
    static Atom apply(Function fn, std::vector<Expr> normalized_args);
    static Atom exp(const RatFunc& argument);
    static Atom radical(const RatFunc& base);

    const AtomData& data() const { return *d_; }
    AtomKind kind() const { return d_->kind; }
    const std::string& key() const { return d_->key; }

    /// Expression for atom^exponent.
    Expr to_expr(const Rational& exponent) const;

    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
    friend bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }

private:
    explicit Atom(std::shared_ptr<const AtomData> d) : d_(std::move(d)) {}
    std::shared_ptr<const AtomData> d_;
};

/// Sorted by atom; exponents are nonzero.
using Monomial = std::vector<std::pair<Atom, Rational>>;

/// Graded order, higher total degree first. Used for both storage and
/// printing, so it defines the canonical term order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using Poly = std::map<Monomial, Rational, MonomialOrder>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
Rational monomial_degree(const Monomial& m);

/// Canonical num/den pair: gcd(num, den) = 1, den has no monomial factor and
/// its first coefficient is 1. Zero is 0/1.
class RatFunc {
public:
    RatFunc();
    RatFunc(const Rational& c);  // NOLINT(google-explicit-constructor)
    static RatFunc atom(const Atom& a, const Rational& exponent = Rational(1));
    static RatFunc from_poly(Poly num);
    static RatFunc fraction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    bool den_is_one() const;
    std::optional<Rational> constant() const;

    RatFunc pow(long exponent) const;
    Expr to_expr() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    friend struct Canon;
    Poly num_;
    Poly den_;
};

/// Exact conversion to canonical form. Throws DivisionByZeroSymbolic.
RatFunc to_ratfunc(const Expr& e);

Expr poly_to_expr(const Poly& p);

}  // namespace gsym::nf

namespace gsym {

/// Canonical expression; normalize(e) is literally 0 iff e is zero in the
/// canonical form.
Expr normalize(const Expr& e);

/// normalize(e) is the literal 0.
bool is_zero_symbolic(const Expr& e);

}  // namespace gsym
