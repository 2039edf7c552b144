#include "fockcas/modules.hpp"

#include <algorithm>

#include "fockcas/identities.hpp"
#include "mode_engine.hpp"

namespace fockcas {

WhittakerParams::WhittakerParams(Sector s, std::vector<Rational> z)
    : sector(s), zeta(std::move(z)) {
    if (zeta.empty()) {
        throw Error("WhittakerParams: zeta must be non-empty");
    }
}

long WhittakerParams::r() const {
    return sector == Sector::Untwisted ? static_cast<long>(zeta.size()) - 1
                                       : static_cast<long>(zeta.size());
}

HalfInt WhittakerParams::index_of_slot(std::size_t k) const {
    return sector == Sector::Untwisted
               ? HalfInt::whole(static_cast<long long>(k))
               : HalfInt::from_twice(2 * static_cast<long long>(k) + 1);
}

HalfInt WhittakerParams::top_index() const {
    return index_of_slot(zeta.size() - 1);
}

Rational WhittakerParams::scalar_at(HalfInt i) const {
    bool integer_index = (sector == Sector::Untwisted);
    if (i.is_integer() != integer_index) return Rational(0);
    long long slot = integer_index ? i.as_integer() : (i.twice() - 1) / 2;
    if (slot < 0 || slot >= static_cast<long long>(zeta.size())) return Rational(0);
    return zeta[static_cast<std::size_t>(slot)];
}

std::string WhittakerParams::str() const {
    std::string out = sector_name(sector) + " zeta=(";
    for (std::size_t k = 0; k < zeta.size(); ++k) {
        if (k) out += ",";
        out += zeta[k].str();
    }
    return out + ")";
}

ModuleVector ModuleVector::cyclic(const WhittakerParams& p) {
    return {p, FockVector::vacuum(p.sector)};
}

const FockVector* XGradedFock::component(long long d) const {
    auto it = components_.find(d);
    return it == components_.end() ? nullptr : &it->second;
}

void XGradedFock::add(long long d, const FockVector& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(d, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) components_.erase(it);
    }
}

XGradedFock exp_delta(const FockVector& u) {
    if (u.sector() != Sector::Untwisted) {
        throw SectorError("exp_delta: argument must be untwisted");
    }
    XGradedFock out;
    if (u.is_zero()) return out;

    const long maxdeg = static_cast<long>(u.max_weight().twice() / 2);
    auto table = cmn_table_cached(maxdeg);

    out.add(0, u);
    // term_k = Delta(term_{k-1}) / k, accumulated until it vanishes;
    // each Delta application lowers the weight by at least 2.
    std::map<long long, FockVector> frontier;
    frontier.emplace(0, u);
    for (long long k = 1; !frontier.empty(); ++k) {
        std::map<long long, FockVector> next;
        for (const auto& [d, vec] : frontier) {
            long wt = static_cast<long>(vec.max_weight().twice() / 2);
            for (long m = 1; m + 1 <= wt; ++m) {
                FockVector am = annihilate(HalfInt::whole(m), vec);
                if (am.is_zero()) continue;
                for (long n = 1; m + n <= wt; ++n) {
                    const Rational& c = table->at(m, n);
                    if (c.is_zero()) continue;
                    FockVector amn = annihilate(HalfInt::whole(n), am);
                    if (amn.is_zero()) continue;
                    amn *= c;
                    auto [it, inserted] = next.try_emplace(d + m + n, amn);
                    if (!inserted) it->second += amn;
                }
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            it->second *= Rational(1, k);
            if (it->second.is_zero()) it = next.erase(it);
            else {
                out.add(it->first, it->second);
                ++it;
            }
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

detail::CyclicScalars scalars_from(const WhittakerParams& p) {
    detail::CyclicScalars z;
    z.slots = p.zeta;
    z.twice_offset = (p.sector == Sector::Untwisted) ? 0 : 1;
    z.twice_top = -1;
    for (std::size_t k = 0; k < p.zeta.size(); ++k) {
        if (!p.zeta[k].is_zero()) z.twice_top = p.index_of_slot(k).twice();
    }
    return z;
}

} // namespace

ModuleVector module_mode_action(const FockVector& u, HalfInt n, const ModuleVector& w) {
    if (u.sector() != Sector::Untwisted) {
        throw SectorError("module_mode_action: u must be an element of the untwisted algebra");
    }
    if (w.vec.sector() != w.params.sector) {
        throw InternalError("module vector sector does not match its parameters");
    }
    detail::CyclicScalars zeta = scalars_from(w.params);
    FockVector out(w.params.sector);

    if (w.params.sector == Sector::Untwisted) {
        if (!n.is_integer()) return {w.params, out}; // wrong parity acts as zero
        for (const auto& [u_mono, u_coeff] : u.terms()) {
            long long twice_S = n.twice() + 2 - u_mono.weight().twice();
            detail::normal_ordered_apply(u_mono, u_coeff, twice_S, 0, w.vec, zeta, out);
        }
        return {w.params, out};
    }

    // Twisted: Y(u,x) = Y_0(e^{Delta_x} u, x); offset d shifts the mode to n-d.
    XGradedFock corrected = exp_delta(u);
    for (const auto& [d, comp] : corrected.components()) {
        HalfInt shifted = n - HalfInt::whole(d);
        for (const auto& [u_mono, u_coeff] : comp.terms()) {
            long long twice_S = shifted.twice() + 2 - u_mono.weight().twice();
            detail::normal_ordered_apply(u_mono, u_coeff, twice_S, 1, w.vec, zeta, out);
        }
    }
    return {w.params, out};
}

WhittakerType::WhittakerType(long long s_, std::vector<Rational> lambda_)
    : s(s_), lambda(std::move(lambda_)) {
    if (s < 2) {
        throw NotWhittaker("WhittakerType: s must be at least 2, got " + std::to_string(s));
    }
    auto expected = static_cast<std::size_t>(s - s / 2);
    if (lambda.size() != expected) {
        throw Error("WhittakerType: expected " + std::to_string(expected) +
                    " eigenvalues for s = " + std::to_string(s) + ", got " +
                    std::to_string(lambda.size()));
    }
    if (lambda.back().is_zero()) {
        throw DegenerateType("WhittakerType: lambda_s must be nonzero");
    }
}

const Rational& WhittakerType::lambda_at(long long i) const {
    long long lo = low_index();
    if (i < lo || i > s) {
        throw Error("lambda index " + std::to_string(i) + " outside [" + std::to_string(lo) +
                    "," + std::to_string(s) + "]");
    }
    return lambda[static_cast<std::size_t>(i - lo)];
}

std::string WhittakerType::str() const {
    std::string out = "s=" + std::to_string(s) + " lambda=(";
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (k) out += ",";
        out += lambda[k].str();
    }
    return out + ")";
}

WhittakerType whittaker_type_of(const WhittakerParams& params) {
    if (params.zeta.empty()) throw Error("whittaker_type_of: empty zeta");
    if (params.zeta.back().is_zero()) {
        throw DegenerateType("whittaker_type_of: the last zeta entry must be nonzero");
    }
    const long r = params.r();
    if (params.sector == Sector::Untwisted && r == 0) {
        throw NotWhittaker("whittaker_type_of: untwisted r = 0 gives an ordinary module");
    }
    // lambda_i = (1/2) sum_{j+k = i-1} zeta_j zeta_k over the sector's index set
    const long long s = (params.sector == Sector::Untwisted) ? 2 * r + 1 : 2 * r;
    std::vector<Rational> lambda;
    for (long long i = r + 1; i <= s; ++i) {
        Rational sum(0);
        const auto& z = params.zeta;
        const long long size = static_cast<long long>(z.size());
        for (long long a = 0; a < size; ++a) {
            // slot indices a, b with index(a) + index(b) = i - 1
            long long b;
            if (params.sector == Sector::Untwisted) {
                b = (i - 1) - a;
            } else {
                b = (i - 2) - a; // (a + 1/2) + (b + 1/2) = i - 1
            }
            if (b < 0 || b >= size) continue;
            sum += z[static_cast<std::size_t>(a)] * z[static_cast<std::size_t>(b)];
        }
        lambda.push_back(sum * Rational(1, 2));
    }
    return WhittakerType(s, std::move(lambda));
}

std::map<long long, Rational> j_eigenvalues(const WhittakerParams& params) {
    WhittakerType type = whittaker_type_of(params); // validates params
    const long long s = type.s;
    ModuleVector w = ModuleVector::cyclic(params);
    const FockVector J = jay();

    std::map<long long, Rational> out;
    for (long long i = s + s / 2 + 2; i <= 2 * s + 3; ++i) {
        ModuleVector v = module_mode_action(J, HalfInt::whole(i), w);
        if (v.vec.is_zero()) {
            out.emplace(i, Rational(0));
            continue;
        }
        if (v.vec.term_count() != 1 || !v.vec.terms().begin()->first.empty()) {
            throw InternalError("J_" + std::to_string(i) + " on the cyclic vector of " +
                                params.str() + " is not scalar");
        }
        out.emplace(i, v.vec.terms().begin()->second);
    }
    return out;
}

} // namespace fockcas
