#pragma once

#include <string>

#include "fockcas/modules.hpp"

namespace fockcas {

/// A representative of an isomorphism class of modules with a Whittaker
/// vector: M(1,zeta) for odd s, M(1,zeta)(theta) for even s.
struct ModuleDescriptor {
    WhittakerParams params;
    bool canonical = false;

    /// "M(1,(0,2))" or "M(1,(1))(theta)".
    std::string str() const;

    bool operator==(const ModuleDescriptor& o) const {
        return params == o.params && canonical == o.canonical;
    }
};

/// Inverts the type map: solves the triangular quadratic system for zeta.
/// s odd gives the untwisted module with r = (s-1)/2, s even the twisted one
/// with r = s/2. Throws IrrationalParameter when 2*lambda_s is not the square
/// of a rational (the solution then exists over C but not over Q).
ModuleDescriptor params_from_type(const WhittakerType& type);

/// Sign representative: zeta or -zeta, whichever makes the highest-index
/// nonzero entry positive.
WhittakerParams canonicalize(const WhittakerParams& p);

/// The classification lookup: canonical parameters whose module carries a
/// Whittaker vector of the given type. Round-trips through whittaker_type_of
/// and throws InternalError if that check ever fails.
ModuleDescriptor classify(const WhittakerType& type);

/// Both directions of the fiber statement: the types of p and q agree exactly
/// when p = +-q. Requires the same sector and the same r.
bool fiber_check(const WhittakerParams& p, const WhittakerParams& q);

} // namespace fockcas
