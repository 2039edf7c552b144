#pragma once

#include <memory>
#include <vector>

#include "fockcas/rational.hpp"

namespace fockcas {

/// Bivariate polynomial over Q truncated at total degree `maxdeg`; used to
/// expand the twisted-sector generating function.
class BivariatePoly {
public:
    explicit BivariatePoly(long maxdeg);

    long maxdeg() const { return maxdeg_; }
    const Rational& at(long m, long n) const;
    void set(long m, long n, const Rational& v);
    void add(long m, long n, const Rational& v);

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator*=(const Rational& c);
    /// Product truncated at total degree maxdeg.
    BivariatePoly truncated_mul(const BivariatePoly& o) const;

private:
    long maxdeg_;
    std::vector<std::vector<Rational>> c_; // c_[m][n], m + n <= maxdeg
};

/// Coefficients c_mn of -log(((1+x)^{1/2} + (1+y)^{1/2}) / 2), exact, complete
/// for all m + n <= maxdeg. Symmetric: c(m,n) = c(n,m).
class CmnTable {
public:
    explicit CmnTable(long maxdeg);

    long maxdeg() const { return maxdeg_; }
    /// Valid for m, n >= 0 with m + n <= maxdeg; throws Error outside.
    const Rational& at(long m, long n) const;

private:
    long maxdeg_;
    BivariatePoly coeffs_;
};

/// Computes the table afresh.
CmnTable cmn_table(long maxdeg);

/// Process-wide cache: returns a table with at least the requested degree.
/// Thread-safe; existing entries never change when the table grows.
std::shared_ptr<const CmnTable> cmn_table_cached(long maxdeg);

} // namespace fockcas
