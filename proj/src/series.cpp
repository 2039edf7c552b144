#include "fockcas/series.hpp"

#include <mutex>

namespace fockcas {

BivariatePoly::BivariatePoly(long maxdeg) : maxdeg_(maxdeg) {
    if (maxdeg < 0) throw Error("BivariatePoly: negative truncation degree");
    c_.resize(static_cast<std::size_t>(maxdeg) + 1);
    for (long m = 0; m <= maxdeg; ++m) {
        c_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(maxdeg - m) + 1);
    }
}

const Rational& BivariatePoly::at(long m, long n) const {
    if (m < 0 || n < 0 || m + n > maxdeg_) {
        throw Error("BivariatePoly::at: (" + std::to_string(m) + "," + std::to_string(n) +
                    ") outside degree " + std::to_string(maxdeg_));
    }
    return c_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

void BivariatePoly::set(long m, long n, const Rational& v) {
    at(m, n); // bounds check
    c_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = v;
}

void BivariatePoly::add(long m, long n, const Rational& v) {
    at(m, n);
    c_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] += v;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    if (o.maxdeg_ != maxdeg_) throw Error("BivariatePoly: degree mismatch");
    for (long m = 0; m <= maxdeg_; ++m) {
        for (long n = 0; n + m <= maxdeg_; ++n) {
            c_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] += o.at(m, n);
        }
    }
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
    for (auto& row : c_) {
        for (auto& v : row) v *= c;
    }
    return *this;
}

BivariatePoly BivariatePoly::truncated_mul(const BivariatePoly& o) const {
    if (o.maxdeg_ != maxdeg_) throw Error("BivariatePoly: degree mismatch");
    BivariatePoly out(maxdeg_);
    for (long m1 = 0; m1 <= maxdeg_; ++m1) {
        for (long n1 = 0; m1 + n1 <= maxdeg_; ++n1) {
            const Rational& a = at(m1, n1);
            if (a.is_zero()) continue;
            for (long m2 = 0; m1 + n1 + m2 <= maxdeg_; ++m2) {
                for (long n2 = 0; m1 + n1 + m2 + n2 <= maxdeg_; ++n2) {
                    const Rational& b = o.at(m2, n2);
                    if (b.is_zero()) continue;
                    out.add(m1 + m2, n1 + n2, a * b);
                }
            }
        }
    }
    return out;
}

CmnTable::CmnTable(long maxdeg) : maxdeg_(maxdeg), coeffs_(maxdeg) {
    // (1+x)^{1/2} truncated: sum_k C(1/2, k) x^k
    std::vector<Rational> sqrt_series(static_cast<std::size_t>(maxdeg) + 1);
    for (long k = 0; k <= maxdeg; ++k) {
        sqrt_series[static_cast<std::size_t>(k)] = binomial(Rational(1, 2), k);
    }
    // u = ((1+x)^{1/2} + (1+y)^{1/2})/2 - 1: no constant term
    BivariatePoly u(maxdeg);
    for (long k = 1; k <= maxdeg; ++k) {
        Rational half = sqrt_series[static_cast<std::size_t>(k)] * Rational(1, 2);
        u.add(k, 0, half);
        u.add(0, k, half);
    }
    // -log(1 + u) = sum_{p >= 1} (-1)^p u^p / p
    BivariatePoly power = u;
    for (long p = 1; p <= maxdeg; ++p) {
        BivariatePoly term = power;
        term *= Rational((p % 2 == 0) ? 1 : -1, p);
        coeffs_ += term;
        if (p < maxdeg) power = power.truncated_mul(u);
    }
}

const Rational& CmnTable::at(long m, long n) const {
    if (m < 0 || n < 0 || m + n > maxdeg_) {
        throw Error("CmnTable::at: (" + std::to_string(m) + "," + std::to_string(n) +
                    ") outside computed degree " + std::to_string(maxdeg_));
    }
    return coeffs_.at(m, n);
}

CmnTable cmn_table(long maxdeg) {
    return CmnTable(maxdeg);
}

std::shared_ptr<const CmnTable> cmn_table_cached(long maxdeg) {
    static std::mutex mu;
    static std::shared_ptr<const CmnTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || cache->maxdeg() < maxdeg) {
        cache = std::make_shared<const CmnTable>(maxdeg);
    }
    return cache;
}

} // namespace fockcas
