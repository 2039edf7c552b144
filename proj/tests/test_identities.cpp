#include <doctest.h>

#include <random>

#include "fockcas/element_io.hpp"
#include "fockcas/identities.hpp"
#include "oracle.hpp"

using namespace fockcas;

namespace {

FockVector elt(const std::string& s) { return parse_element(s); }

} // namespace

TEST_CASE("generators") {
    CHECK(generator("omega") == elt("1/2*h(-1)^2 vac"));
    CHECK(generator("jay") == elt("h(-1)^4 vac - 2*h(-3)h(-1) vac + 3/2*h(-2)^2 vac"));
    CHECK(generator("vac") == FockVector::vacuum());
    CHECK_THROWS_AS(generator("nope"), ParseError);

    auto d = weight_decompose(jay());
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == HalfInt::whole(4));
    CHECK(theta(jay()) == jay());
    CHECK(theta(virasoro()) == virasoro());
}

TEST_CASE("mode chains compose right to left") {
    CHECK(mode_chain({{jay(), -1}}) == jay());
    CHECK(mode_chain({{virasoro(), -1}}) == virasoro());
    // omega_{-1}(J_{-2} vac) differs from J_{-2}(omega_{-1} vac)
    FockVector a = mode_chain({{virasoro(), -1}, {jay(), -2}});
    FockVector b = mode_chain({{jay(), -2}, {virasoro(), -1}});
    CHECK(a != b);
    CHECK(a.is_homogeneous());
    CHECK(a.max_weight() == HalfInt::whole(7));
}

TEST_CASE("the weight-9 and weight-10 relations vanish") {
    auto p9 = assemble_relation("P9");
    CHECK(p9.pass);
    CHECK(p9.residual_terms() == 0);
    auto p10 = assemble_relation("P10");
    CHECK(p10.pass);
    CHECK(p10.residual_terms() == 0);
    CHECK_THROWS_AS(assemble_relation("P11"), ParseError);
}

TEST_CASE("relation summands are homogeneous and theta-fixed") {
    FockVector om = virasoro(), J = jay();
    std::vector<FockVector> summands = {
        mode_chain({{J, -6}}),
        mode_chain({{om, -1}, {J, -4}}),
        mode_chain({{om, -2}, {J, -3}}),
        mode_chain({{om, -3}, {J, -2}}),
        mode_chain({{om, -1}, {om, -1}, {J, -2}}),
        mode_chain({{om, -4}, {J, -1}}),
        mode_chain({{om, -2}, {om, -1}, {J, -1}}),
    };
    for (const auto& s : summands) {
        CHECK(s.is_homogeneous());
        CHECK(s.max_weight() == HalfInt::whole(9));
        CHECK(theta(s) == s); // lives in the fixed-point subalgebra
    }
    // ambient graded dimensions where the relations cancel
    CHECK(graded_dim(9, Parity::All) == 30);
    CHECK(graded_dim(10, Parity::All) == 42);
}

TEST_CASE("omega-J commutator identity") {
    auto rep = verify_lie_oj(-1, 2, -1, 2, 4);
    CHECK(rep.pass);
    CHECK(rep.residual_terms() == 0);

    FockVector om = virasoro(), J = jay();
    CHECK(nth_product(om, 1, J) == Rational(4) * J);
    for (long long k = 2; k <= 4; ++k) {
        CHECK(nth_product(om, k, J).is_zero());
    }
}

TEST_CASE("J-J commutator against the closed combinations") {
    auto rep = verify_jj_commutator();
    CHECK(rep.pass);
    CHECK(rep.residual_terms() == 0);

    FockVector J = jay();
    CHECK(nth_product(J, 7, J) == Rational(54) * FockVector::vacuum());
    CHECK(nth_product(J, 6, J).is_zero());
    CHECK(nth_product(J, 4, J) == Rational(216) * elt("h(-2)h(-1) vac"));
    CHECK(nth_product(J, 8, J).is_zero());
}

TEST_CASE("J-J commutator as operators") {
    FockVector J = jay();
    auto basis = basis_up_to_weight(4);
    std::vector<FockVector> kproducts;
    for (long long k = 0; k <= 7; ++k) kproducts.push_back(nth_product(J, k, J));
    for (long long i : {-2LL, 0LL, 3LL, 4LL}) {
        for (long long j : {-1LL, 2LL, 4LL}) {
            for (const auto& b : basis) {
                FockVector direct = nth_product(J, i, nth_product(J, j, b)) -
                                    nth_product(J, j, nth_product(J, i, b));
                FockVector expansion(Sector::Untwisted);
                for (long long k = 0; k <= 7; ++k) {
                    if (kproducts[static_cast<std::size_t>(k)].is_zero()) continue;
                    expansion += binomial(i, k) *
                                 nth_product(kproducts[static_cast<std::size_t>(k)], i + j - k, b);
                }
                CHECK(direct == expansion);
            }
        }
    }
}

TEST_CASE("central charge") {
    CHECK(central_charge() == Rational(1));
    CHECK(nth_product(virasoro(), 3, virasoro()) == Rational(1, 2) * FockVector::vacuum());
    CHECK(nth_product(virasoro(), 2, virasoro()).is_zero());
}

TEST_CASE("bareiss determinant matches laplace expansion") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<long> entry(-4, 4), den(1, 3);
    for (int size = 1; size <= 6; ++size) {
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
            for (auto& row : a) {
                for (auto& x : row) x = Rational(entry(rng), den(rng));
            }
            CHECK(bareiss_determinant(a) == oracle::naive_determinant(a));
        }
    }
    // singular and zero-pivot cases
    std::vector<std::vector<Rational>> sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(bareiss_determinant(sing) == Rational(0));
    std::vector<std::vector<Rational>> swap_needed = {{Rational(0), Rational(1)},
                                                      {Rational(1), Rational(0)}};
    CHECK(bareiss_determinant(swap_needed) == Rational(-1));
    CHECK(bareiss_determinant({}) == Rational(1));
}

TEST_CASE("determinant lemma examples") {
    // n = 0: single entry C(x0,0) C(y0,0) = 1
    auto r0 = verify_determinant_lemma(0, {Rational(5)}, {Rational(-3)});
    CHECK(r0.pass);

    // n = 1 at the documented points: determinant 4
    std::vector<Rational> xs = {Rational(2), Rational(0)};
    std::vector<Rational> ys = {Rational(3), Rational(1)};
    CHECK(determinant_closed_form(1, xs, ys) == Rational(4));
    auto r1 = verify_determinant_lemma(1, xs, ys);
    CHECK(r1.pass);

    CHECK_THROWS_AS(verify_determinant_lemma(1, {Rational(2), Rational(2)}, ys), DegenerateInput);
    CHECK_THROWS_AS(verify_determinant_lemma(1, xs, {Rational(1)}), Error);
}

TEST_CASE("determinant lemma at random points, against the oracle too") {
    std::mt19937 rng(52);
    std::uniform_int_distribution<long> num(-8, 8), den(1, 4);
    auto distinct_points = [&](long n) {
        std::vector<Rational> pts;
        while (static_cast<long>(pts.size()) < n + 1) {
            Rational c(num(rng), den(rng));
            bool dup = false;
            for (const auto& p : pts) dup = dup || p == c;
            if (!dup) pts.push_back(c);
        }
        return pts;
    };
    for (long n = 1; n <= 2; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
            auto xs = distinct_points(n), ys = distinct_points(n);
            auto r = verify_determinant_lemma(n, xs, ys);
            CHECK(r.pass);

            // cross-check the fraction-free route with plain Laplace expansion
            std::vector<std::pair<long, long>> s;
            for (long i = 0; i <= n; ++i) {
                for (long j = 0; i + j <= n; ++j) s.emplace_back(i, j);
            }
            std::vector<std::vector<Rational>> a(s.size(), std::vector<Rational>(s.size()));
            for (std::size_t row = 0; row < s.size(); ++row) {
                for (std::size_t col = 0; col < s.size(); ++col) {
                    a[row][col] = binomial(xs[static_cast<std::size_t>(s[row].first)], s[col].first) *
                                  binomial(ys[static_cast<std::size_t>(s[row].second)], s[col].second);
                }
            }
            CHECK(oracle::naive_determinant(a) == determinant_closed_form(n, xs, ys));
        }
    }
}

TEST_CASE("determinant scales as a homogeneous form of the expected degree") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long> num(-6, 6);
    for (long n = 1; n <= 2; ++n) {
        std::vector<Rational> xs, ys;
        for (long i = 0; i <= n; ++i) {
            xs.emplace_back(2 * num(rng) + 7 + 30 * i); // distinct by spacing
            ys.emplace_back(2 * num(rng) + 31 + 30 * i);
        }
        long degree = n * (n + 1) * (n + 2) / 3;
        for (long tval : {2L, 3L}) {
            Rational t(tval);
            std::vector<Rational> txs, tys;
            for (const auto& x : xs) txs.push_back(t * x);
            for (const auto& y : ys) tys.push_back(t * y);
            Rational scale(1);
            for (long e = 0; e < degree; ++e) scale *= t;
            CHECK(determinant_closed_form(n, txs, tys) ==
                  scale * determinant_closed_form(n, xs, ys));
            // and the matrix route agrees at the scaled points
            CHECK(verify_determinant_lemma(n, txs, tys).pass);
        }
    }
}
