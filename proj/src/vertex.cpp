#include "fockcas/vertex.hpp"

#include <algorithm>

#include "mode_engine.hpp"

namespace fockcas {

namespace {

void require_untwisted(const FockVector& v, const char* op) {
    if (v.sector() != Sector::Untwisted) {
        throw SectorError(std::string(op) + ": argument must be untwisted");
    }
}

} // namespace

FockVector nth_product(const FockVector& u, long long n, const FockVector& v) {
    require_untwisted(u, "nth_product");
    require_untwisted(v, "nth_product");
    FockVector out(Sector::Untwisted);
    auto vacuum = detail::CyclicScalars::vacuum();
    for (const auto& [u_mono, u_coeff] : u.terms()) {
        long long twice_S = 2 * (n + 1) - u_mono.weight().twice();
        detail::normal_ordered_apply(u_mono, u_coeff, twice_S, 0, v, vacuum, out);
    }
    return out;
}

std::vector<CommutatorTerm> commutator_expansion(const FockVector& u, long long i,
                                                 const FockVector& v, long long j) {
    require_untwisted(u, "commutator_expansion");
    require_untwisted(v, "commutator_expansion");
    std::vector<CommutatorTerm> out;
    // u_k v = 0 once k >= wt(u) + wt(v) on homogeneous pieces
    long long k_max = (u.max_weight() + v.max_weight()).twice() / 2;
    for (long long k = 0; k < std::max(k_max, 1LL); ++k) {
        FockVector ukv = nth_product(u, k, v);
        if (ukv.is_zero()) continue;
        out.push_back({k, binomial(static_cast<long>(i), static_cast<long>(k)),
                       std::move(ukv), i + j - k});
    }
    return out;
}

bool verify_borcherds(const FockVector& u, const FockVector& v, const FockVector& w,
                      long long p, long long q, long long r) {
    require_untwisted(u, "verify_borcherds");
    require_untwisted(v, "verify_borcherds");
    require_untwisted(w, "verify_borcherds");

    const long long wu = u.max_weight().twice() / 2;
    const long long wv = v.max_weight().twice() / 2;
    const long long ww = w.max_weight().twice() / 2;

    FockVector lhs(Sector::Untwisted);
    // u_{r+i} v vanishes once r+i >= wu + wv
    for (long long i = 0; r + i < wu + wv; ++i) {
        if (i > 0 && p >= 0 && i > p) break; // C(p,i) = 0 from here on
        FockVector inner = nth_product(u, r + i, v);
        if (inner.is_zero()) continue;
        lhs += binomial(static_cast<long>(p), static_cast<long>(i)) *
               nth_product(inner, p + q - i, w);
    }

    FockVector rhs(Sector::Untwisted);
    const long long i_stop = std::max(wv + ww - q, wu + ww - p);
    for (long long i = 0; i < i_stop; ++i) {
        if (r >= 0 && i > r) break; // C(r,i) = 0
        Rational c = binomial(static_cast<long>(r), static_cast<long>(i));
        if (i % 2 != 0) c = -c;
        if (c.is_zero()) continue;
        FockVector term(Sector::Untwisted);
        FockVector vw = nth_product(v, q + i, w);
        if (!vw.is_zero()) term += nth_product(u, p + r - i, vw);
        FockVector uw = nth_product(u, p + i, w);
        if (!uw.is_zero()) {
            FockVector second = nth_product(v, q + r - i, uw);
            if (r % 2 != 0) term += second;
            else term -= second;
        }
        rhs += c * term;
    }
    return lhs == rhs;
}

FockVector translate(const FockVector& u) {
    FockVector out(u.sector());
    for (const auto& [mono, coeff] : u.terms()) {
        for (const auto& [part, exp] : mono.factors()) {
            // [L(-1), h(-i)^e] shifts one factor: e * i * h(-i-1) h(-i)^{e-1}
            Monomial shifted = mono.without_part(part).with_part(part + HalfInt::whole(1));
            out.add_term(shifted, coeff * Rational(exp) * part.to_rational());
        }
    }
    return out;
}

} // namespace fockcas
