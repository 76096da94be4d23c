#pragma once

#include "gsym/expr/eval.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

namespace gsym {

struct ProvenZero {};

struct NumericallyZero {
    double max_abs_residual = 0.0;
};

struct NonZero {
    Bindings witness;
    double value = 0.0;
};

using EquivVerdict = std::variant<ProvenZero, NumericallyZero, NonZero>;

/// ProvenZero and NumericallyZero count as equal.
bool accepted(const EquivVerdict& v);
std::string verdict_name(const EquivVerdict& v);
std::string describe(const EquivVerdict& v);

using Interval = std::pair<double, double>;

/// Sampling ranges: x from x_range, every other free symbol from
/// other_range unless overridden.
struct SamplingDomain {
    Interval x_range{0.5, 3.0};
    Interval other_range{-2.0, 2.0};
    std::map<Symbol, Interval> overrides;

    Interval range_for(Symbol s) const;
};

struct EquivOptions {
    std::uint64_t seed = 1;
    int samples = 200;
    double tol = 1e-9;
    SamplingDomain domain{};
    const FuncSymTable* callbacks = nullptr;
};

/// ProvenZero if e1 - e2 normalizes to 0; otherwise samples the difference
/// and compares |e1 - e2| with tol * (1 + max(|e1|, |e2|)). Points that fail
/// to evaluate are skipped; if all fail, the last error is rethrown.
EquivVerdict equiv(const Expr& e1, const Expr& e2, const EquivOptions& options = {});

/// Sampling only, without the symbolic attempt.
EquivVerdict equiv_numeric(const Expr& e1, const Expr& e2, const EquivOptions& options = {});

}  // namespace gsym
