#include "fockcas/rational.hpp"

#include <cctype>
#include <ostream>

namespace fockcas {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) {
        throw Error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    // Accepts optional sign, digits, optional /digits. mpq_class's own parser
    // is more permissive than we want (hex, whitespace), so validate first.
    std::size_t i = 0;
    auto fail = [&]() -> Rational { throw ParseError("bad rational: '" + s + "'"); };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (digits == 0) return fail();
    if (i < s.size()) {
        if (s[i] != '/') return fail();
        ++i;
        std::size_t den_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++den_digits; }
        if (den_digits == 0 || i != s.size()) return fail();
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) return fail();
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(const Rational& a, long k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long t = 0; t < k; ++t) {
        num *= a - Rational(t);
        if (num.is_zero()) return num;
    }
    BigInt kfact;
    mpz_fac_ui(kfact.get_mpz_t(), static_cast<unsigned long>(k));
    return num / Rational(kfact, 1);
}

Rational binomial(long a, long k) {
    if (k < 0) return Rational(0);
    BigInt num(1);
    for (long t = 0; t < k; ++t) {
        num *= BigInt(a - t);
        if (sgn(num) == 0) return Rational(0);
    }
    BigInt kfact;
    mpz_fac_ui(kfact.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(num, kfact);
}

bool rational_sqrt(const Rational& a, Rational& root) {
    if (a.sign() < 0) return false;
    if (a.is_zero()) {
        root = Rational(0);
        return true;
    }
    BigInt num = a.numerator();
    BigInt den = a.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return false;
    }
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

} // namespace fockcas
