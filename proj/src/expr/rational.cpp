#include "gsym/expr/rational.hpp"

#include <stdexcept>

namespace gsym {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        return Rational(q);
    }
    // Decimal literal: place value, exact.
    bool negative = false;
    std::size_t start = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        start = 1;
    }
    std::string int_part = s.substr(start, dot - start);
    std::string frac_part = s.substr(dot + 1);
    if (int_part.empty()) int_part = "0";
    if (frac_part.empty()) frac_part = "0";
    for (char c : int_part + frac_part)
        if (c < '0' || c > '9') throw std::invalid_argument("Rational: bad literal '" + s + "'");
    mpz_class num(int_part + frac_part, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    return Rational(num, den);
}

std::optional<long> Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
    return q_.get_num().get_si();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(q_.get_den(), q_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(f, 1);
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

std::optional<Rational> Rational::exact_pow(const Rational& exponent) const {
    if (exponent.is_integer()) {
        auto e = exponent.to_long();
        if (!e) return std::nullopt;
        if (is_zero() && *e < 0) return std::nullopt;
        return pow(*e);
    }
    if (is_zero()) return exponent.sign() > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    if (sign() < 0) return std::nullopt;
    const mpz_class& root_den = exponent.raw().get_den();
    if (!root_den.fits_ulong_p()) return std::nullopt;
    const unsigned long k = root_den.get_ui();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), q_.get_num_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), q_.get_den_mpz_t(), k) == 0) return std::nullopt;
    auto e = Rational(exponent.raw().get_num(), 1).to_long();
    if (!e) return std::nullopt;
    return Rational(rn, rd).pow(*e);
}

std::size_t Rational::hash() const {
    std::size_t h = std::hash<std::string>{}(q_.get_num().get_str(16));
    h ^= std::hash<std::string>{}(q_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Rational gcd(const Rational& a, const Rational& b) {
    mpz_class n;
    mpz_gcd(n.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
    if (n == 0) return Rational(0);
    return Rational(n, lcm(a.raw().get_den(), b.raw().get_den()));
}

}  // namespace gsym
