#include "gsym/expr/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsym::poly {
namespace {

void accumulate(MPoly& p, const Exps& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

std::size_t nvars_of(const MPoly& p) { return p.empty() ? 0 : p.begin()->first.size(); }

std::optional<std::size_t> main_variable(const MPoly& a, const MPoly& b) {
    const std::size_t n = std::max(nvars_of(a), nvars_of(b));
    for (std::size_t k = n; k-- > 0;)
        if (degree(a, k) > 0 || degree(b, k) > 0) return k;
    return std::nullopt;
}

MPoly content(const MPoly& p, std::size_t var) {
    MPoly g;
    for (int d = degree(p, var); d >= 0; --d) {
        MPoly c = coefficient(p, var, d);
        if (c.empty()) continue;
        g = gcd(g, c);
        if (is_constant(g)) break;
    }
    return g;
}

MPoly primitive_part(const MPoly& p, std::size_t var) {
    if (p.empty()) return p;
    auto q = divide_exact(p, content(p, var));
    if (!q) throw std::logic_error("primitive_part: content does not divide");
    return *q;
}

}  // namespace

MPoly constant(const Rational& c, std::size_t nvars) {
    MPoly p;
    if (!c.is_zero()) p.emplace(Exps(nvars, 0), c);
    return p;
}

bool is_constant(const MPoly& p) {
    if (p.empty()) return true;
    if (p.size() > 1) return false;
    const auto& e = p.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

MPoly add(const MPoly& a, const MPoly& b) {
    MPoly out = a;
    for (const auto& [e, c] : b) accumulate(out, e, c);
    return out;
}

MPoly sub(const MPoly& a, const MPoly& b) {
    MPoly out = a;
    for (const auto& [e, c] : b) accumulate(out, e, -c);
    return out;
}

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly out;
    Exps e;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            e.resize(ea.size());
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
            accumulate(out, e, ca * cb);
        }
    }
    return out;
}

MPoly scale(const MPoly& a, const Rational& c) {
    if (c.is_zero()) return {};
    MPoly out;
    for (const auto& [e, v] : a) out.emplace_hint(out.end(), e, v * c);
    return out;
}

int degree(const MPoly& p, std::size_t var) {
    int d = 0;
    for (const auto& [e, c] : p) d = std::max(d, e[var]);
    return d;
}

MPoly coefficient(const MPoly& p, std::size_t var, int d) {
    MPoly out;
    for (const auto& [e, c] : p) {
        if (e[var] != d) continue;
        Exps f = e;
        f[var] = 0;
        out.emplace(std::move(f), c);
    }
    return out;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
    if (b.empty()) throw std::domain_error("divide_exact: division by zero polynomial");
    MPoly q;
    MPoly r = a;
    const auto& [lb_e, lb_c] = *b.rbegin();
    while (!r.empty()) {
        const auto [lr_e, lr_c] = *r.rbegin();
        Exps t(lr_e.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            t[i] = lr_e[i] - lb_e[i];
            if (t[i] < 0) return std::nullopt;
        }
        const Rational c = lr_c / lb_c;
        accumulate(q, t, c);
        MPoly term;
        term.emplace(t, c);
        r = sub(r, mul(term, b));
    }
    return q;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
    const int db = degree(b, var);
    const MPoly lcb = coefficient(b, var, db);
    MPoly r = a;
    while (!r.empty() && degree(r, var) >= db) {
        const int dr = degree(r, var);
        MPoly lcr = coefficient(r, var, dr);
        MPoly shift;
        for (const auto& [e, c] : lcr) {
            Exps f = e;
            f[var] = dr - db;
            shift.emplace(std::move(f), c);
        }
        r = sub(mul(lcb, r), mul(shift, b));
    }
    return r;
}

MPoly monic(const MPoly& p) {
    if (p.empty()) return p;
    return scale(p, p.rbegin()->second.inverse());
}

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.empty()) return monic(b);
    if (b.empty()) return monic(a);
    if (is_constant(a) || is_constant(b)) return constant(Rational(1), nvars_of(a));
    const auto k = main_variable(a, b);
    if (!k) return constant(Rational(1), nvars_of(a));
    const std::size_t var = *k;
    if (degree(a, var) == 0) return gcd(a, content(b, var));
    if (degree(b, var) == 0) return gcd(content(a, var), b);

    const MPoly ca = content(a, var);
    const MPoly cb = content(b, var);
    MPoly p = *divide_exact(a, ca);
    MPoly q = *divide_exact(b, cb);
    const MPoly c = gcd(ca, cb);
    if (degree(p, var) < degree(q, var)) std::swap(p, q);
    while (!q.empty()) {
        MPoly r = pseudo_remainder(p, q, var);
        p = std::move(q);
        q = r.empty() ? r : primitive_part(r, var);
    }
    return monic(mul(c, primitive_part(p, var)));
}

}  // namespace gsym::poly
