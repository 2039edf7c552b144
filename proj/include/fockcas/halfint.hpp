#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fockcas/rational.hpp"

namespace fockcas {

/// Element of (1/2)Z, stored as twice its value. Mode indices and weights live
/// here so that the integer (untwisted) and half-odd (twisted) lattices share
/// one type.
class HalfInt {
public:
    constexpr HalfInt() : twice_(0) {}

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt(t); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr std::int64_t as_integer() const { return twice_ / 2; } // requires is_integer()

    Rational to_rational() const { return Rational(twice_, 2); }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(twice_ * k); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr bool is_positive() const { return twice_ > 0; }
    constexpr bool is_zero() const { return twice_ == 0; }

    /// "3", "-2", "3/2", "-1/2".
    std::string str() const;

private:
    explicit constexpr HalfInt(std::int64_t t) : twice_(t) {}
    std::int64_t twice_;
};

} // namespace fockcas
