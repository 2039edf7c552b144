#include "fockcas/classify.hpp"

namespace fockcas {

std::string ModuleDescriptor::str() const {
    std::string out = "M(1,(";
    for (std::size_t k = 0; k < params.zeta.size(); ++k) {
        if (k) out += ",";
        out += params.zeta[k].str();
    }
    out += "))";
    if (params.sector == Sector::Twisted) out += "(theta)";
    return out;
}

ModuleDescriptor params_from_type(const WhittakerType& type) {
    const long long s = type.s;
    Rational leading;
    if (!rational_sqrt(Rational(2) * type.lambda_at(s), leading)) {
        throw IrrationalParameter("2*lambda_s = " + (Rational(2) * type.lambda_at(s)).str() +
                                  " is not the square of a rational");
    }

    if (s % 2 == 1) {
        // untwisted, r = (s-1)/2; unknowns zeta_0..zeta_r, lambda indexed r+1..2r+1
        const long long r = (s - 1) / 2;
        std::vector<Rational> zeta(static_cast<std::size_t>(r) + 1);
        zeta[static_cast<std::size_t>(r)] = leading; // lambda_{2r+1} = zeta_r^2 / 2
        for (long long i = 2 * r; i >= r + 1; --i) {
            // lambda_i = zeta_r zeta_{i-1-r} + (1/2) sum_{j=i-r}^{r-1} zeta_j zeta_{i-1-j}
            Rational sum(0);
            for (long long j = i - r; j <= r - 1; ++j) {
                sum += zeta[static_cast<std::size_t>(j)] * zeta[static_cast<std::size_t>(i - 1 - j)];
            }
            zeta[static_cast<std::size_t>(i - 1 - r)] =
                (type.lambda_at(i) - sum * Rational(1, 2)) / leading;
        }
        return {WhittakerParams(Sector::Untwisted, std::move(zeta)), false};
    }

    // twisted, r = s/2; unknowns zeta_{1/2}..zeta_{r-1/2} (slot k holds index k+1/2),
    // lambda indexed r+1..2r
    const long long r = s / 2;
    std::vector<Rational> zeta(static_cast<std::size_t>(r));
    zeta[static_cast<std::size_t>(r - 1)] = leading; // lambda_{2r} = zeta_{r-1/2}^2 / 2
    for (long long i = 2 * r - 1; i >= r + 1; --i) {
        // lambda_i = zeta_{r-1/2} zeta_{i-r-1/2}
        //            + (1/2) sum over interior pairs of indices summing to i-1
        Rational sum(0);
        // slots a,b with (a+1/2) + (b+1/2) = i-1, strictly between the solved tail
        for (long long a = i - r; a <= r - 2; ++a) {
            long long b = (i - 2) - a;
            if (b < 0 || b >= r) continue;
            sum += zeta[static_cast<std::size_t>(a)] * zeta[static_cast<std::size_t>(b)];
        }
        zeta[static_cast<std::size_t>(i - r - 1)] =
            (type.lambda_at(i) - sum * Rational(1, 2)) / leading;
    }
    return {WhittakerParams(Sector::Twisted, std::move(zeta)), false};
}

WhittakerParams canonicalize(const WhittakerParams& p) {
    for (auto it = p.zeta.rbegin(); it != p.zeta.rend(); ++it) {
        if (it->is_zero()) continue;
        if (it->sign() > 0) return p;
        WhittakerParams flipped = p;
        for (auto& z : flipped.zeta) z = -z;
        return flipped;
    }
    return p; // all zero: fixed point
}

ModuleDescriptor classify(const WhittakerType& type) {
    ModuleDescriptor d = params_from_type(type);
    d.params = canonicalize(d.params);
    d.canonical = true;
    if (!(whittaker_type_of(d.params) == type)) {
        throw InternalError("classify: round trip failed for " + type.str());
    }
    return d;
}

bool fiber_check(const WhittakerParams& p, const WhittakerParams& q) {
    if (p.sector != q.sector) {
        throw SectorError("fiber_check: parameters from different sectors");
    }
    if (p.zeta.size() != q.zeta.size()) {
        throw Error("fiber_check: parameters with different r");
    }
    bool same_type = (whittaker_type_of(p) == whittaker_type_of(q));
    WhittakerParams neg = q;
    for (auto& z : neg.zeta) z = -z;
    bool plus_minus = (p == q) || (p == neg);
    return same_type == plus_minus;
}

} // namespace fockcas
