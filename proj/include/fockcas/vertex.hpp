#pragma once

#include <cstdint>
#include <vector>

#include "fockcas/fock.hpp"

namespace fockcas {

/// n-th product u_n v of elements of the untwisted algebra, computed by
/// expanding Y(u,x) as the normal-ordered product of derivative fields.
/// Throws SectorError unless both arguments are untwisted.
FockVector nth_product(const FockVector& u, long long n, const FockVector& v);

/// One term C(i,k) (u_k v)_{i+j-k} of the mode commutator [u_i, v_j].
struct CommutatorTerm {
    long long k;
    Rational coeff;     // C(i, k)
    FockVector element; // u_k v, nonzero
    long long mode;     // i + j - k
};

/// Finite expansion of [u_i, v_j] = sum_{k >= 0} C(i,k) (u_k v)_{i+j-k};
/// entries with u_k v = 0 are omitted.
std::vector<CommutatorTerm> commutator_expansion(const FockVector& u, long long i,
                                                 const FockVector& v, long long j);

/// Checks the Borcherds identity
///   sum_{i>=0} C(p,i) (u_{r+i} v)_{p+q-i} w
///     = sum_{i>=0} (-1)^i C(r,i) ( u_{p+r-i} (v_{q+i} w)
///                                  - (-1)^r v_{q+r-i} (u_{p+i} w) )
/// by expanding both finite sums exactly. A false return is a finding.
bool verify_borcherds(const FockVector& u, const FockVector& v, const FockVector& w,
                      long long p, long long q, long long r);

/// Translation operator L(-1), by the derivation rule
/// [L(-1), h(-i)] = i h(-i-1), L(-1)vac = 0. Independent of nth_product.
FockVector translate(const FockVector& u);

} // namespace fockcas
