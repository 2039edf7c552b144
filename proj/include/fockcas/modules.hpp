#pragma once

#include <map>
#include <string>
#include <vector>

#include "fockcas/fock.hpp"
#include "fockcas/series.hpp"

namespace fockcas {

/// Parameters of an induced Whittaker module: sector plus the tuple zeta.
/// Untwisted: entries are the eigenvalues of h(0), ..., h(r) on the cyclic
/// vector. Twisted: eigenvalues of h(1/2), ..., h(r - 1/2). Trailing zeros are
/// significant (they change r).
struct WhittakerParams {
    Sector sector = Sector::Untwisted;
    std::vector<Rational> zeta;

    WhittakerParams() = default;
    WhittakerParams(Sector s, std::vector<Rational> z);

    /// Untwisted: zeta has r+1 entries; twisted: r entries.
    long r() const;
    /// Mode index of slot k: k (untwisted) or k + 1/2 (twisted).
    HalfInt index_of_slot(std::size_t k) const;
    /// Largest index carried by the tuple: r resp. r - 1/2.
    HalfInt top_index() const;
    /// Eigenvalue of h(i) on the cyclic vector; zero beyond the tuple.
    Rational scalar_at(HalfInt i) const;

    bool operator==(const WhittakerParams& o) const {
        return sector == o.sector && zeta == o.zeta;
    }

    /// "untwisted zeta=(0,2)"-style display.
    std::string str() const;
};

/// Element of M(1,zeta) or M(1,zeta)(theta): creation monomials applied to the
/// cyclic vector, tagged with the module parameters.
struct ModuleVector {
    WhittakerParams params;
    FockVector vec;

    static ModuleVector cyclic(const WhittakerParams& p);

    bool operator==(const ModuleVector& o) const {
        return params == o.params && vec == o.vec;
    }
};

/// Finite expansion sum_d v_d x^{-d} with v_d in M(1); the value of e^{Delta_x}
/// applied to an algebra element.
class XGradedFock {
public:
    const std::map<long long, FockVector>& components() const { return components_; }
    const FockVector* component(long long d) const;
    void add(long long d, const FockVector& v);

private:
    std::map<long long, FockVector> components_;
};

/// e^{Delta_x} u for untwisted u, where Delta_x applies annihilation pairs
/// h(m)h(n), m,n >= 1, weighted c_mn at x-offset m+n. Offset 0 is u itself.
XGradedFock exp_delta(const FockVector& u);

/// Action of the mode u_n on a module vector. u must be untwisted. For the
/// twisted module the vertex operator is Y_0(e^{Delta_x} u, x); the index n may
/// be any half-integer and indices whose parity cannot contribute give zero.
ModuleVector module_mode_action(const FockVector& u, HalfInt n, const ModuleVector& w);

/// Whittaker type: s >= 2 together with the omega-eigenvalues
/// lambda_{floor(s/2)+1}, ..., lambda_s, the last one nonzero.
struct WhittakerType {
    long long s = 2;
    std::vector<Rational> lambda;

    WhittakerType(long long s_, std::vector<Rational> lambda_);

    long long low_index() const { return s / 2 + 1; }
    const Rational& lambda_at(long long i) const;

    bool operator==(const WhittakerType& o) const { return s == o.s && lambda == o.lambda; }

    std::string str() const;
};

/// Type of the cyclic vector of the module, from the quadratic sums in the
/// parameters. Untwisted gives s = 2r+1, twisted s = 2r. Throws DegenerateType
/// when the last zeta entry vanishes, NotWhittaker for untwisted r = 0.
WhittakerType whittaker_type_of(const WhittakerParams& params);

/// Eigenvalues of J_i on the cyclic vector, computed by direct mode action,
/// for every i in [s + floor(s/2) + 2, 2s + 3] (where the action is scalar;
/// indices past 2s+1 give 0). Keys are the mode indices i.
std::map<long long, Rational> j_eigenvalues(const WhittakerParams& params);

} // namespace fockcas
