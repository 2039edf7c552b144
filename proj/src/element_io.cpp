#include "fockcas/element_io.hpp"

#include <cctype>
#include <sstream>

namespace fockcas {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool consume_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
    }

    // nat := digit+
    long long nat(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected number ") + what);
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// idx := '-'nat | '-'nat'/2'  (always negative in source form; returns i > 0)
HalfInt parse_index(Scanner& sc) {
    sc.expect('-', "in mode index (creation indices are negative)");
    long long a = sc.nat("in mode index");
    if (sc.consume('/')) {
        long long d = sc.nat("after '/' in mode index");
        if (d != 2) sc.fail("only /2 denominators are allowed in indices");
        if (a % 2 == 0) sc.fail("half-integer index must have odd numerator");
        return HalfInt::from_twice(a);
    }
    return HalfInt::whole(a);
}

// rational := int['/'nat], sign handled by the caller
Rational parse_unsigned_rational(Scanner& sc) {
    BigInt num(static_cast<long>(sc.nat("in coefficient")));
    BigInt den(1);
    if (sc.consume('/')) {
        den = BigInt(static_cast<long>(sc.nat("after '/' in coefficient")));
        if (sgn(den) == 0) sc.fail("zero denominator in coefficient");
    }
    return Rational(num, den);
}

struct Term {
    Rational coeff;
    Monomial mono;
};

// term := [rational '*'] ('h(' idx ')' ['^' nat])* SYMBOL
// A signed coefficient is accepted (the grammar's int carries the sign).
Term parse_term(Scanner& sc, std::string_view symbol, bool negate) {
    Term t{Rational(1), Monomial()};
    bool neg = sc.consume('-');
    if (!neg) sc.consume('+');
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        t.coeff = parse_unsigned_rational(sc);
        if (!sc.consume('*')) {
            // allow a lone "0"
            if (t.coeff.is_zero() && (sc.done() || sc.peek() == '+' || sc.peek() == '-')) {
                if (neg != negate) t.coeff = -t.coeff;
                return t;
            }
            sc.fail("expected '*' after coefficient");
        }
    }
    while (sc.consume_word("h(")) {
        HalfInt idx = parse_index(sc);
        sc.expect(')', "after mode index");
        long long exp = 1;
        if (sc.consume('^')) {
            exp = sc.nat("in exponent");
            if (exp <= 0) sc.fail("exponent must be positive");
        }
        for (long long k = 0; k < exp; ++k) t.mono = t.mono.with_part(idx);
    }
    if (!sc.consume_word(std::string(symbol))) {
        sc.fail("expected '" + std::string(symbol) + "'");
    }
    if (neg != negate) t.coeff = -t.coeff;
    return t;
}

} // namespace

FockVector parse_element(std::string_view text, std::optional<Sector> expect,
                         std::string_view symbol) {
    Scanner sc(text);
    std::vector<Term> terms;
    terms.push_back(parse_term(sc, symbol, false));
    while (!sc.done()) {
        bool neg;
        if (sc.consume('+')) neg = false;
        else if (sc.consume('-')) neg = true;
        else sc.fail("expected '+' or '-' between terms");
        terms.push_back(parse_term(sc, symbol, neg));
    }

    // Infer or check the sector from the indices present.
    std::optional<Sector> inferred;
    for (const auto& t : terms) {
        for (const auto& [part, exp] : t.mono.factors()) {
            Sector s = part.is_integer() ? Sector::Untwisted : Sector::Twisted;
            if (!inferred) inferred = s;
            else if (*inferred != s) throw SectorError("mixed index parities in '" + std::string(text) + "'");
        }
    }
    Sector sector = expect.value_or(inferred.value_or(Sector::Untwisted));
    if (expect && inferred && *inferred != *expect) {
        throw SectorError("element '" + std::string(text) + "' is " + sector_name(*inferred) +
                          " but the " + sector_name(*expect) + " sector was expected");
    }
    FockVector v(sector);
    for (const auto& t : terms) v.add_term(t.mono, t.coeff);
    return v;
}

std::string format_monomial(const Monomial& m, std::string_view symbol) {
    std::string out;
    for (const auto& [part, exp] : m.factors()) {
        out += "h(-" + part.str() + ")";
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    if (!out.empty()) out += " ";
    out += symbol;
    return out;
}

std::string format_element(const FockVector& v, std::string_view symbol) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : v.terms()) {
        Rational a = c;
        if (first) {
            first = false;
            // sign carried by the coefficient of the first term
        } else if (a.sign() < 0) {
            out += " - ";
            a = -a;
        } else {
            out += " + ";
        }
        if (!a.is_one()) out += a.str() + "*";
        out += format_monomial(m, symbol);
    }
    return out;
}

HalfInt parse_halfint(std::string_view text) {
    Scanner sc(text);
    bool neg = sc.consume('-');
    long long a = sc.nat("in half-integer");
    long long twice = 2 * a;
    if (sc.consume('/')) {
        long long d = sc.nat("after '/'");
        if (d != 2) sc.fail("only halves are supported");
        if (a % 2 == 0) sc.fail("half-integer must have odd numerator");
        twice = a;
    }
    if (!sc.done()) sc.fail("trailing characters");
    return HalfInt::from_twice(neg ? -twice : twice);
}

} // namespace fockcas
