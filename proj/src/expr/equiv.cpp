#include "gsym/expr/equiv.hpp"

#include "gsym/expr/errors.hpp"
#include "gsym/expr/normal_form.hpp"

#include <cmath>
#include <exception>
#include <random>
#include <sstream>

namespace gsym {

bool accepted(const EquivVerdict& v) { return !std::holds_alternative<NonZero>(v); }

std::string verdict_name(const EquivVerdict& v) {
    if (std::holds_alternative<ProvenZero>(v)) return "ProvenZero";
    if (std::holds_alternative<NumericallyZero>(v)) return "NumericallyZero";
    return "NonZero";
}

std::string describe(const EquivVerdict& v) {
    std::ostringstream os;
    os.precision(6);
    if (const auto* n = std::get_if<NumericallyZero>(&v)) {
        os << "NumericallyZero(max " << n->max_abs_residual << ")";
    } else if (const auto* z = std::get_if<NonZero>(&v)) {
        os << "NonZero(value " << z->value << " at";
        for (const auto& [s, val] : z->witness) os << ' ' << symbol_name(s) << '=' << val;
        os << ')';
    } else {
        os << "ProvenZero";
    }
    return os.str();
}

Interval SamplingDomain::range_for(Symbol s) const {
    if (auto it = overrides.find(s); it != overrides.end()) return it->second;
    return s == Symbol::x ? x_range : other_range;
}

EquivVerdict equiv_numeric(const Expr& e1, const Expr& e2, const EquivOptions& options) {
    std::set<Symbol> symbols = free_symbols(e1);
    for (Symbol s : free_symbols(e2)) symbols.insert(s);

    std::mt19937_64 rng(options.seed);
    double max_abs = 0.0;
    int evaluated = 0;
    std::exception_ptr last_error;
    for (int i = 0; i < options.samples; ++i) {
        Bindings b;
        for (Symbol s : symbols) {
            const auto [lo, hi] = options.domain.range_for(s);
            b[s] = std::uniform_real_distribution<double>(lo, hi)(rng);
        }
        double v1 = 0;
        double v2 = 0;
        try {
            v1 = eval_num(e1, b, options.callbacks);
            v2 = eval_num(e2, b, options.callbacks);
        } catch (const DomainError&) {
            last_error = std::current_exception();
            continue;
        }
        ++evaluated;
        const double diff = std::fabs(v1 - v2);
        const double scale = 1.0 + std::max(std::fabs(v1), std::fabs(v2));
        if (!(diff < options.tol * scale)) return NonZero{b, v1 - v2};
        max_abs = std::max(max_abs, diff);
    }
    if (evaluated == 0 && last_error) std::rethrow_exception(last_error);
    return NumericallyZero{max_abs};
}

EquivVerdict equiv(const Expr& e1, const Expr& e2, const EquivOptions& options) {
    if (is_zero_symbolic(e1 - e2)) return ProvenZero{};
    return equiv_numeric(e1, e2, options);
}

}  // namespace gsym
