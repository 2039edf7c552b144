#include "fockcas/fock.hpp"

#include <algorithm>
#include <array>

namespace fockcas {

std::string sector_name(Sector s) {
    return s == Sector::Untwisted ? "untwisted" : "twisted";
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [part, exp] : factors_) d += exp;
    return d;
}

HalfInt Monomial::weight() const {
    HalfInt w;
    for (const auto& [part, exp] : factors_) w += part * exp;
    return w;
}

HalfInt Monomial::max_part() const {
    return factors_.empty() ? HalfInt() : factors_.front().first;
}

int Monomial::exponent_of(HalfInt part) const {
    for (const auto& [p, exp] : factors_) {
        if (p == part) return exp;
        if (p < part) break; // stored by decreasing part
    }
    return 0;
}

Monomial Monomial::with_part(HalfInt part) const {
    Monomial out = *this;
    auto it = out.factors_.begin();
    while (it != out.factors_.end() && it->first > part) ++it;
    if (it != out.factors_.end() && it->first == part) {
        ++it->second;
    } else {
        out.factors_.insert(it, {part, 1});
    }
    return out;
}

Monomial Monomial::without_part(HalfInt part) const {
    Monomial out = *this;
    for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
        if (it->first == part) {
            if (--it->second == 0) out.factors_.erase(it);
            return out;
        }
    }
    throw InternalError("without_part: factor h(-" + part.str() + ") not present");
}

bool Monomial::operator<(const Monomial& o) const {
    HalfInt wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return factors_ < o.factors_;
}

FockVector FockVector::vacuum(Sector s) {
    FockVector v(s);
    v.terms_[Monomial()] = Rational(1);
    return v;
}

Rational FockVector::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [part, exp] : m.factors()) {
        if (!part.is_positive()) {
            throw InternalError("monomial part must be positive");
        }
        if (!index_in_sector(part, sector_)) {
            throw SectorError("part h(-" + part.str() + ") not in " + sector_name(sector_) + " sector");
        }
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    if (sector_ != o.sector_) {
        throw SectorError("cannot add vectors from different sectors");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    if (sector_ != o.sector_) {
        throw SectorError("cannot subtract vectors from different sectors");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

FockVector FockVector::operator-() const {
    FockVector out(sector_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

HalfInt FockVector::max_weight() const {
    HalfInt w;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
}

int FockVector::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool FockVector::is_homogeneous() const {
    if (terms_.empty()) return true;
    HalfInt w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_) {
        if (m.weight() != w) return false;
    }
    return true;
}

namespace {

void check_index(HalfInt i, const FockVector& v, const char* op) {
    if (!i.is_positive()) {
        throw Error(std::string(op) + ": index must be positive, got " + i.str());
    }
    if (!index_in_sector(i, v.sector())) {
        throw SectorError(std::string(op) + ": index " + i.str() + " has wrong parity for the " +
                          sector_name(v.sector()) + " sector");
    }
}

} // namespace

FockVector create(HalfInt i, const FockVector& v) {
    check_index(i, v, "create");
    FockVector out(v.sector());
    for (const auto& [m, c] : v.terms()) {
        out.add_term(m.with_part(i), c);
    }
    return out;
}

FockVector annihilate(HalfInt i, const FockVector& v) {
    check_index(i, v, "annihilate");
    FockVector out(v.sector());
    for (const auto& [m, c] : v.terms()) {
        int e = m.exponent_of(i);
        if (e == 0) continue; // commutes through, kills the cyclic vector
        out.add_term(m.without_part(i), c * Rational(e) * i.to_rational());
    }
    return out;
}

FockVector theta(const FockVector& v) {
    FockVector out(v.sector());
    for (const auto& [m, c] : v.terms()) {
        out.add_term(m, m.degree() % 2 == 0 ? c : -c);
    }
    return out;
}

std::map<HalfInt, FockVector> weight_decompose(const FockVector& v) {
    std::map<HalfInt, FockVector> out;
    for (const auto& [m, c] : v.terms()) {
        auto [it, inserted] = out.try_emplace(m.weight(), FockVector(v.sector()));
        it->second.add_term(m, c);
    }
    return out;
}

BigInt graded_dim(long n, Parity parity) {
    if (n < 0) throw Error("graded_dim: n must be non-negative");
    // g[m][p]: partitions of m into parts <= current bound with length parity p.
    std::vector<std::array<BigInt, 2>> g(n + 1);
    g[0][0] = 1;
    for (long part = 1; part <= n; ++part) {
        for (long m = part; m <= n; ++m) {
            // add one copy of `part` to a partition counted in g[m - part]
            g[m][0] += g[m - part][1];
            g[m][1] += g[m - part][0];
        }
    }
    switch (parity) {
        case Parity::Even: return g[n][0];
        case Parity::Odd: return g[n][1];
        case Parity::All: return g[n][0] + g[n][1];
    }
    throw InternalError("graded_dim: bad parity");
}

} // namespace fockcas
