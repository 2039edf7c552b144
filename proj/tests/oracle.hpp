#pragma once

// Brute-force reference implementations used to pin expected values. These
// stay deliberately independent of the pruned enumeration in the library:
// mode tuples are drawn from a wide box and applied one operator at a time.

#include <cstdlib>
#include <vector>

#include "fockcas/fock.hpp"

namespace oracle {

using fockcas::FockVector;
using fockcas::HalfInt;
using fockcas::Monomial;
using fockcas::Rational;
using fockcas::Sector;

inline Rational binom(long a, long k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (long t = 0; t < k; ++t) r *= Rational(a - t, t + 1);
    return r;
}

// Direct expansion of u_n v over all mode tuples in [-B, B]^k.
inline FockVector naive_nth_product(const FockVector& u, long n, const FockVector& v) {
    FockVector out(Sector::Untwisted);
    const long wu = static_cast<long>(u.max_weight().twice() / 2);
    const long wv = static_cast<long>(v.max_weight().twice() / 2);
    const long box = wu + wv + std::labs(n) + 3;

    for (const auto& [u_mono, u_coeff] : u.terms()) {
        std::vector<long> parts;
        for (const auto& [part, exp] : u_mono.factors()) {
            for (int e = 0; e < exp; ++e) parts.push_back(static_cast<long>(part.as_integer()));
        }
        long target = n + 1;
        for (long p : parts) target -= p;

        std::vector<long> modes(parts.size());
        // enumerate every tuple with the given sum; no pruning beyond the box
        auto rec = [&](auto&& self, std::size_t pos, long sum_left) -> void {
            if (pos + 1 == modes.size()) {
                modes[pos] = sum_left;
                if (sum_left < -box || sum_left > box) return;
                Rational coeff = u_coeff;
                for (std::size_t j = 0; j < modes.size(); ++j) {
                    coeff *= binom(-modes[j] - 1, parts[j] - 1);
                }
                if (coeff.is_zero()) return;
                bool has_zero_mode = false;
                for (long m : modes) has_zero_mode = has_zero_mode || (m == 0);
                if (has_zero_mode) return; // h(0) acts as zero
                FockVector w = v;
                for (long m : modes) {
                    if (m > 0) w = fockcas::annihilate(HalfInt::whole(m), w);
                }
                for (long m : modes) {
                    if (m < 0) w = fockcas::create(HalfInt::whole(-m), w);
                }
                out += coeff * w;
                return;
            }
            for (long m = -box; m <= box; ++m) {
                modes[pos] = m;
                self(self, pos + 1, sum_left - m);
            }
        };
        if (modes.empty()) {
            if (target == 0) out += u_coeff * v; // empty monomial: identity at n = -1
        } else {
            rec(rec, 0, target);
        }
    }
    return out;
}

// Laplace expansion along the first row.
inline Rational naive_determinant(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return Rational(1);
    if (n == 1) return a[0][0];
    Rational det(0);
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col].is_zero()) continue;
        std::vector<std::vector<Rational>> minor(n - 1, std::vector<Rational>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][cc++] = a[i][j];
            }
        }
        Rational term = a[0][col] * naive_determinant(minor);
        if (col % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

// All partitions of n, parts non-increasing.
inline void enumerate_partitions(long n, long max_part, std::vector<long>& cur,
                                 std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<long>> partitions(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    enumerate_partitions(n, n, cur, out);
    return out;
}

} // namespace oracle
