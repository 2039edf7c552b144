#pragma once

// Internal engine: expands the normal-ordered product of derivative fields for
// a creation monomial u = h(-i1)...h(-ik)vac acting at a fixed mode on a target
// vector. One enumeration serves the algebra itself (vacuum target), the
// untwisted Whittaker modules (annihilators pick up zeta scalars on the cyclic
// vector) and the twisted modules (half-odd mode lattice).
//
// The expansion is
//   sum over tuples (m_1..m_k) with sum(m_j + i_j) = n+1 of
//     prod_j C(-m_j - 1, i_j - 1) * :h(m_1)...h(m_k): target
// with annihilation modes applied before creation modes.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fockcas/fock.hpp"

namespace fockcas::detail {

// Scalars by which non-negative modes act on the cyclic vector:
// h(m) u = scalar(m) u. An empty table is the true vacuum.
struct CyclicScalars {
    // slot k holds the scalar for doubled index 2k + parity_offset
    std::vector<Rational> slots;
    int twice_offset = 0;       // 0: indices 0,1,2,..; 1: indices 1/2,3/2,..
    std::int64_t twice_top = -1;   // largest doubled index with nonzero scalar, -1 if none

    static CyclicScalars vacuum() { return {}; }

    Rational scalar(std::int64_t twice_m) const {
        if (twice_m < 0 || twice_m > twice_top) return Rational(0);
        std::int64_t slot = (twice_m - twice_offset) / 2;
        if ((twice_m - twice_offset) % 2 != 0 || slot < 0 ||
            slot >= static_cast<std::int64_t>(slots.size())) {
            return Rational(0);
        }
        return slots[static_cast<std::size_t>(slot)];
    }
};

// Accumulates scale * (u_mono at doubled mode-sum twice_S) applied to w into
// out. mode_parity is the doubled-lattice parity: 0 for integer modes, 1 for
// half-odd modes. Contributions whose parity cannot match are silently zero.
void normal_ordered_apply(const Monomial& u_mono, const Rational& scale,
                          std::int64_t twice_S, int mode_parity,
                          const FockVector& w, const CyclicScalars& zeta,
                          FockVector& out);

} // namespace fockcas::detail
