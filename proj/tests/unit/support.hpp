#pragma once

#include "gsym/expr/eval.hpp"
#include "gsym/expr/expression.hpp"
#include "gsym/expr/io.hpp"
#include "gsym/expr/normal_form.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

inline bool same(const gsym::Expr& a, const gsym::Expr& b) { return gsym::is_zero_symbolic(a - b); }

inline gsym::Expr P(const std::string& s) { return gsym::parse(s); }

/// Random expression over x, t, u built from small integers, sums,
/// products, integer powers and a few smooth functions.
class ExprGen {
public:
    explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

    gsym::Expr operator()(int depth = 3) {
        std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
        switch (pick(rng_)) {
            case 0: return gsym::Expr::var(vars_[std::uniform_int_distribution<int>(0, 2)(rng_)]);
            case 1: return gsym::Expr(gsym::Rational(std::uniform_int_distribution<int>(-4, 4)(rng_),
                                                     std::uniform_int_distribution<int>(1, 3)(rng_)));
            case 2:
            case 3: return (*this)(depth - 1) + (*this)(depth - 1);
            case 4:
            case 5: return (*this)(depth - 1) * (*this)(depth - 1);
            case 6: return gsym::pow((*this)(depth - 1), gsym::Rational(std::uniform_int_distribution<int>(2, 3)(rng_)));
            default: {
                const gsym::Function fs[] = {gsym::Function::exp, gsym::Function::sin, gsym::Function::cos,
                                             gsym::Function::sinh};
                return gsym::Expr::apply(fs[std::uniform_int_distribution<int>(0, 3)(rng_)], (*this)(depth - 2));
            }
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    const gsym::Symbol vars_[3] = {gsym::Symbol::x, gsym::Symbol::t, gsym::Symbol::u};
};

inline gsym::Bindings point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> xs(0.5, 1.5), others(-1.0, 1.0);
    return {{gsym::Symbol::x, xs(rng)}, {gsym::Symbol::t, others(rng)}, {gsym::Symbol::u, others(rng)}};
}

}  // namespace testing
