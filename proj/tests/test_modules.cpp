#include <doctest.h>

#include <functional>
#include <random>

#include "fockcas/element_io.hpp"
#include "fockcas/identities.hpp"
#include "fockcas/modules.hpp"
#include "fockcas/vertex.hpp"

using namespace fockcas;

namespace {

FockVector elt(const std::string& s) { return parse_element(s); }

bool is_scalar_times(const ModuleVector& got, const Rational& c, const ModuleVector& base) {
    ModuleVector want{base.params, c * base.vec};
    return got == want;
}

ModuleVector act(const FockVector& u, long long n, const ModuleVector& w) {
    return module_mode_action(u, HalfInt::whole(n), w);
}

// basis of module vectors of weight <= max_weight (monomial coefficients 1)
std::vector<ModuleVector> module_basis(const WhittakerParams& p, long twice_max_weight) {
    std::vector<ModuleVector> out;
    std::vector<HalfInt> parts;
    std::function<void(long, long)> rec = [&](long twice_left, long twice_max_part) {
        FockVector v(p.sector);
        Monomial m;
        for (HalfInt part : parts) m = m.with_part(part);
        v.add_term(m, Rational(1));
        out.push_back({p, v});
        long start = std::min(twice_left, twice_max_part);
        // align to the sector's lattice: even doubled parts untwisted, odd twisted
        if (p.sector == Sector::Untwisted ? (start % 2 != 0) : (start % 2 == 0)) start -= 1;
        for (long tp = start; tp >= 1; tp -= 2) {
            parts.push_back(HalfInt::from_twice(tp));
            rec(twice_left - tp, tp);
            parts.pop_back();
        }
    };
    rec(twice_max_weight, twice_max_weight);
    return out;
}

} // namespace

TEST_CASE("whittaker parameters index their sector") {
    WhittakerParams u(Sector::Untwisted, {Rational(0), Rational(2)});
    CHECK(u.r() == 1);
    CHECK(u.top_index() == HalfInt::whole(1));
    CHECK(u.scalar_at(HalfInt::whole(0)) == Rational(0));
    CHECK(u.scalar_at(HalfInt::whole(1)) == Rational(2));
    CHECK(u.scalar_at(HalfInt::whole(5)) == Rational(0));
    CHECK(u.scalar_at(HalfInt::from_twice(1)) == Rational(0));

    WhittakerParams t(Sector::Twisted, {Rational(1), Rational(3)});
    CHECK(t.r() == 2);
    CHECK(t.top_index() == HalfInt::from_twice(3));
    CHECK(t.scalar_at(HalfInt::from_twice(1)) == Rational(1));
    CHECK(t.scalar_at(HalfInt::from_twice(3)) == Rational(3));
    CHECK_THROWS_AS(WhittakerParams(Sector::Untwisted, {}), Error);
}

TEST_CASE("exp_delta on small elements") {
    FockVector om = virasoro();
    auto x = exp_delta(om);
    REQUIRE(x.components().size() == 2);
    CHECK(*x.component(0) == om);
    CHECK(*x.component(2) == Rational(1, 16) * FockVector::vacuum());

    auto xv = exp_delta(FockVector::vacuum());
    REQUIRE(xv.components().size() == 1);
    CHECK(*xv.component(0) == FockVector::vacuum());

    auto xh = exp_delta(elt("h(-1) vac"));
    REQUIRE(xh.components().size() == 1);
    CHECK(*xh.component(0) == elt("h(-1) vac"));
}

TEST_CASE("exp_delta structure") {
    for (const auto& u : {jay(), elt("h(-3)h(-2)h(-1) vac"), elt("h(-2)^3 vac + h(-1) vac")}) {
        auto x = exp_delta(u);
        REQUIRE(x.component(0) != nullptr);
        CHECK(*x.component(0) == u);
        for (const auto& [d, comp] : x.components()) {
            if (d == 0) continue;
            CHECK(d >= 2);
            // each offset-d component drops exactly d in weight
            CHECK(comp.max_weight().twice() <= u.max_weight().twice() - 2 * d);
        }
    }
    CHECK_THROWS_AS(exp_delta(FockVector::vacuum(Sector::Twisted)), SectorError);
}

TEST_CASE("untwisted module actions") {
    WhittakerParams z3(Sector::Untwisted, {Rational(3)});
    ModuleVector u3 = ModuleVector::cyclic(z3);
    CHECK(is_scalar_times(act(elt("h(-1) vac"), 0, u3), Rational(3), u3)); // h(0) acts by zeta_0

    WhittakerParams z02(Sector::Untwisted, {Rational(0), Rational(2)});
    ModuleVector u = ModuleVector::cyclic(z02);
    FockVector om = virasoro();
    CHECK(is_scalar_times(act(om, 3, u), Rational(2), u));
    CHECK(act(om, 2, u).vec.is_zero());
    CHECK(is_scalar_times(act(elt("h(-1) vac"), 1, u), Rational(2), u));

    // negative modes create
    ModuleVector created = act(elt("h(-1) vac"), -2, u);
    FockVector expect(Sector::Untwisted);
    expect.add_term(Monomial().with_part(HalfInt::whole(2)), Rational(1));
    CHECK(created.vec == expect);

    // wrong parity of the mode index acts as zero
    CHECK(module_mode_action(om, HalfInt::from_twice(3), u).vec.is_zero());
    CHECK_THROWS_AS(module_mode_action(FockVector::vacuum(Sector::Twisted), HalfInt::whole(0), u),
                    SectorError);
}

TEST_CASE("twisted module actions") {
    FockVector om = virasoro(), J = jay();

    WhittakerParams tz(Sector::Twisted, {Rational(1)});
    ModuleVector w = ModuleVector::cyclic(tz);
    CHECK(is_scalar_times(act(om, 2, w), Rational(1, 2), w));
    CHECK(is_scalar_times(act(J, 5, w), Rational(1), w));

    // ground state of the twisted vacuum module has conformal weight 1/16
    WhittakerParams tv(Sector::Twisted, {Rational(0)});
    ModuleVector v0 = ModuleVector::cyclic(tv);
    CHECK(is_scalar_times(act(om, 1, v0), Rational(1, 16), v0));

    // theta-odd element at a half-integer mode: h(-1)vac acts by zeta_{1/2}
    ModuleVector r = module_mode_action(elt("h(-1) vac"), HalfInt::from_twice(1), w);
    CHECK(is_scalar_times(r, Rational(1), w));
    // integer modes of a theta-odd element act as zero
    CHECK(module_mode_action(elt("h(-1) vac"), HalfInt::whole(1), w).vec.is_zero());
}

TEST_CASE("whittaker types from parameters") {
    WhittakerType t1 = whittaker_type_of(WhittakerParams(Sector::Untwisted, {Rational(0), Rational(2)}));
    CHECK(t1.s == 3);
    CHECK(t1.lambda == std::vector<Rational>{Rational(0), Rational(2)});

    WhittakerType t2 = whittaker_type_of(WhittakerParams(Sector::Twisted, {Rational(1)}));
    CHECK(t2.s == 2);
    CHECK(t2.lambda == std::vector<Rational>{Rational(1, 2)});

    WhittakerType t3 = whittaker_type_of(WhittakerParams(Sector::Untwisted, {Rational(1), Rational(1)}));
    CHECK(t3.s == 3);
    CHECK(t3.lambda == std::vector<Rational>{Rational(1), Rational(1, 2)});

    CHECK_THROWS_AS(whittaker_type_of(WhittakerParams(Sector::Untwisted, {Rational(1), Rational(0)})),
                    DegenerateType);
    CHECK_THROWS_AS(whittaker_type_of(WhittakerParams(Sector::Untwisted, {Rational(1)})),
                    NotWhittaker);
}

TEST_CASE("type eigenvalues match direct module actions") {
    FockVector om = virasoro();
    std::vector<WhittakerParams> cases = {
        {Sector::Untwisted, {Rational(0), Rational(2)}},
        {Sector::Untwisted, {Rational(1), Rational(1)}},
        {Sector::Untwisted, {Rational(1, 2), Rational(-2), Rational(3)}},
        {Sector::Twisted, {Rational(1)}},
        {Sector::Twisted, {Rational(-1, 2), Rational(2)}},
        {Sector::Twisted, {Rational(1), Rational(0), Rational(3, 2)}},
    };
    for (const auto& p : cases) {
        WhittakerType t = whittaker_type_of(p);
        ModuleVector u = ModuleVector::cyclic(p);
        for (long long i = t.low_index(); i <= t.s; ++i) {
            CHECK(is_scalar_times(act(om, i, u), t.lambda_at(i), u));
        }
        for (long long i = t.s + 1; i <= t.s + 3; ++i) {
            CHECK(act(om, i, u).vec.is_zero());
        }
    }
}

TEST_CASE("whittaker annihilation and top J eigenvalue up to s = 7") {
    FockVector J = jay();
    std::vector<WhittakerParams> cases = {
        {Sector::Untwisted, {Rational(1), Rational(2)}},                              // s = 3
        {Sector::Untwisted, {Rational(0), Rational(1), Rational(-1)}},                // s = 5
        {Sector::Untwisted, {Rational(2), Rational(0), Rational(1), Rational(1, 2)}}, // s = 7
        {Sector::Twisted, {Rational(2)}},                                             // s = 2
        {Sector::Twisted, {Rational(1), Rational(-1)}},                               // s = 4
        {Sector::Twisted, {Rational(0), Rational(1, 2), Rational(1)}},                // s = 6
    };
    for (const auto& p : cases) {
        WhittakerType t = whittaker_type_of(p);
        ModuleVector u = ModuleVector::cyclic(p);
        for (long long i = 2 * t.s + 2; i <= 2 * t.s + 4; ++i) {
            CHECK(act(J, i, u).vec.is_zero());
        }
        Rational top = t.lambda_at(t.s);
        CHECK(is_scalar_times(act(J, 2 * t.s + 1, u), Rational(4) * top * top, u));
    }
}

TEST_CASE("j eigenvalue tables") {
    auto m1 = j_eigenvalues(WhittakerParams(Sector::Untwisted, {Rational(0), Rational(2)}));
    CHECK(m1.at(7) == Rational(16));
    CHECK(m1.at(8) == Rational(0));
    CHECK(m1.at(6) == Rational(0));

    auto m2 = j_eigenvalues(WhittakerParams(Sector::Twisted, {Rational(1)}));
    CHECK(m2.at(5) == Rational(1));
    CHECK(m2.at(6) == Rational(0));
}

TEST_CASE("j eigenvalues match the quartic closed form where it applies") {
    // Untwisted: J_i on the cyclic vector is the sum of zeta_{i1}..zeta_{i4}
    // over index tuples summing to i-3, for i in [3r+3, 4r+3].
    WhittakerParams p(Sector::Untwisted, {Rational(1), Rational(1, 2), Rational(2)});
    const long r = p.r();
    auto eig = j_eigenvalues(p); // keys [3r+3, 4r+3+2] here
    for (long long i = 3 * r + 3; i <= 4 * r + 3; ++i) {
        Rational quartic(0);
        for (long a = 0; a <= r; ++a) {
            for (long b = 0; b <= r; ++b) {
                for (long c = 0; c <= r; ++c) {
                    long d = static_cast<long>(i - 3) - a - b - c;
                    if (d < 0 || d > r) continue;
                    quartic += p.zeta[a] * p.zeta[b] * p.zeta[c] * p.zeta[d];
                }
            }
        }
        CHECK(eig.at(i) == quartic);
    }
    CHECK(eig.at(4 * r + 4) == Rational(0));
    CHECK(eig.at(4 * r + 5) == Rational(0));

    // Twisted: the direct action is authoritative; the analogous quartic sum
    // over half-odd indices is only reached at the top mode 2s+1, where the
    // series corrections cannot contribute.
    WhittakerParams q(Sector::Twisted, {Rational(1), Rational(-1, 2)});
    WhittakerType t = whittaker_type_of(q); // s = 4
    auto eig2 = j_eigenvalues(q);
    Rational top = t.lambda_at(t.s);
    CHECK(eig2.at(2 * t.s + 1) == Rational(4) * top * top);
    Rational quartic_top(0);
    const long rr = q.r();
    for (long a = 0; a < rr; ++a) {
        for (long b = 0; b < rr; ++b) {
            for (long c = 0; c < rr; ++c) {
                // doubled indices (2a+1)+... sum to 2(i-3); i = 2s+1
                long twice_needed = 2 * (2 * static_cast<long>(t.s) + 1 - 3) - (2 * a + 1) -
                                    (2 * b + 1) - (2 * c + 1);
                if (twice_needed < 1 || twice_needed % 2 == 0) continue;
                long d = (twice_needed - 1) / 2;
                if (d >= rr) continue;
                quartic_top += q.zeta[a] * q.zeta[b] * q.zeta[c] * q.zeta[d];
            }
        }
    }
    CHECK(eig2.at(2 * t.s + 1) == quartic_top);
}

TEST_CASE("commutator realization on module vectors") {
    FockVector om = virasoro(), J = jay();
    WhittakerParams uz(Sector::Untwisted, {Rational(1), Rational(2)});
    WhittakerParams tz(Sector::Twisted, {Rational(1), Rational(1, 2)});

    for (const auto& params : {uz, tz}) {
        // theta-fixed elements act at integer modes in both sectors
        std::vector<FockVector> pool = {om, J, elt("h(-2)h(-1) vac"), elt("h(-1)^2 vac")};
        auto basis = module_basis(params, 8); // weight <= 4
        std::mt19937 rng(41);
        for (int t = 0; t < 60; ++t) {
            const FockVector& a = pool[rng() % pool.size()];
            const FockVector& b = pool[rng() % pool.size()];
            long long i = static_cast<long long>(rng() % 9) - 2;
            long long j = static_cast<long long>(rng() % 9) - 2;
            const ModuleVector& w = basis[rng() % basis.size()];
            FockVector lhs = act(a, i, act(b, j, w)).vec - act(b, j, act(a, i, w)).vec;
            FockVector rhs(params.sector);
            for (const auto& term : commutator_expansion(a, i, b, j)) {
                rhs += term.coeff * act(term.element, term.mode, w).vec;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("translation covariance of module actions") {
    // (L(-1)u)_n = -n u_{n-1} as operators on every module
    FockVector om = virasoro(), J = jay();
    std::vector<WhittakerParams> modules = {
        {Sector::Untwisted, {Rational(1), Rational(2)}},
        {Sector::Twisted, {Rational(1), Rational(1, 2)}},
        {Sector::Twisted, {Rational(0)}},
    };
    for (const auto& params : modules) {
        std::vector<ModuleVector> targets = {ModuleVector::cyclic(params)};
        {
            FockVector extra(params.sector);
            extra.add_term(Monomial().with_part(params.sector == Sector::Untwisted
                                                    ? HalfInt::whole(2)
                                                    : HalfInt::from_twice(3)),
                           Rational(1));
            targets.push_back({params, extra});
        }
        for (const auto& u : {om, J, elt("h(-2)h(-1) vac"), elt("h(-1) vac"), elt("h(-3) vac")}) {
            bool odd = u.max_degree() % 2 != 0;
            for (long long twice_n = -8; twice_n <= 12; ++twice_n) {
                bool half_mode = (twice_n % 2) != 0;
                if (params.sector == Sector::Untwisted && half_mode) continue;
                if (params.sector == Sector::Twisted && (half_mode != odd)) continue;
                HalfInt n = HalfInt::from_twice(twice_n);
                for (const auto& w : targets) {
                    FockVector lhs = module_mode_action(translate(u), n, w).vec;
                    FockVector rhs =
                        -n.to_rational() *
                        module_mode_action(u, n - HalfInt::whole(1), w).vec;
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("exp_delta caches the series per process") {
    // same values whether the table is fresh or cached
    auto cached = cmn_table_cached(8);
    CmnTable fresh = cmn_table(8);
    for (long m = 0; m <= 8; ++m) {
        for (long n = 0; m + n <= 8; ++n) {
            CHECK(cached->at(m, n) == fresh.at(m, n));
        }
    }
}
