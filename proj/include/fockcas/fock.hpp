#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fockcas/errors.hpp"
#include "fockcas/halfint.hpp"
#include "fockcas/rational.hpp"

namespace fockcas {

enum class Sector { Untwisted, Twisted };

/// True when index i is legal in the given sector: integers for the untwisted
/// sector, half-odd integers for the twisted one.
constexpr bool index_in_sector(HalfInt i, Sector s) {
    return i.is_integer() == (s == Sector::Untwisted);
}

std::string sector_name(Sector s);

/// Monomial in creation operators applied to the cyclic vector:
/// h(-i1)^{e1} ... h(-ik)^{ek} with i1 > i2 > ... > ik > 0.
/// Factors are stored by decreasing part with exponents collected, which makes
/// the representation a canonical map key.
class Monomial {
public:
    using Factor = std::pair<HalfInt, int>; // (part, exponent)

    Monomial() = default;

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    /// Total number of creation operators (counting exponents).
    int degree() const;
    /// Sum of parts with multiplicity.
    HalfInt weight() const;
    /// Largest part; HalfInt 0 for the empty monomial.
    HalfInt max_part() const;
    int exponent_of(HalfInt part) const;

    Monomial with_part(HalfInt part) const;
    /// Removes one factor of the given part; the part must be present.
    Monomial without_part(HalfInt part) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    /// Orders by weight, then lexicographically on the factor list.
    bool operator<(const Monomial& o) const;

private:
    std::vector<Factor> factors_;
};

/// Finite rational-linear combination of monomials over one sector. Immutable
/// in spirit: all operations return new values. No zero coefficients are kept;
/// the zero vector is the empty term map.
class FockVector {
public:
    explicit FockVector(Sector s = Sector::Untwisted) : sector_(s) {}

    static FockVector zero(Sector s = Sector::Untwisted) { return FockVector(s); }
    static FockVector vacuum(Sector s = Sector::Untwisted);

    Sector sector() const { return sector_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;

    /// Merges a term in, dropping it if the total coefficient becomes zero.
    /// Throws SectorError when a part of m has the wrong parity.
    void add_term(const Monomial& m, const Rational& c);

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Rational& c);

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Rational& c, FockVector v) { return v *= c; }
    friend FockVector operator*(FockVector v, const Rational& c) { return v *= c; }
    FockVector operator-() const;

    bool operator==(const FockVector& o) const {
        return sector_ == o.sector_ && terms_ == o.terms_;
    }

    /// Largest monomial weight present (0 for the zero vector).
    HalfInt max_weight() const;
    /// Largest factor count over the terms.
    int max_degree() const;
    /// True when every monomial has the same weight (vacuously for zero).
    bool is_homogeneous() const;

private:
    Sector sector_;
    std::map<Monomial, Rational> terms_;
};

/// Left multiplication by the creation operator h(-i), i > 0.
FockVector create(HalfInt i, const FockVector& v);

/// Action of the annihilation operator h(i), i > 0, by the derivation rule
/// [h(i), h(-j)] = i delta_{ij}; kills the cyclic vector.
FockVector annihilate(HalfInt i, const FockVector& v);

/// The order-2 automorphism negating h: scales a k-factor monomial by (-1)^k.
FockVector theta(const FockVector& v);

/// Splits into homogeneous components, keyed by weight.
std::map<HalfInt, FockVector> weight_decompose(const FockVector& v);

enum class Parity { Even, Odd, All };

/// Number of partitions of n whose length has the given parity; Parity::All
/// gives the plain partition count p(n).
BigInt graded_dim(long n, Parity parity);

} // namespace fockcas
