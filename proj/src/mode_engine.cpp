#include "mode_engine.hpp"

#include <algorithm>
#include <array>

namespace fockcas::detail {

namespace {

constexpr std::array<std::int64_t, 21> kFactorial = {
    1LL, 1LL, 2LL, 6LL, 24LL, 120LL, 720LL, 5040LL, 40320LL, 362880LL,
    3628800LL, 39916800LL, 479001600LL, 6227020800LL, 87178291200LL,
    1307674368000LL, 20922789888000LL, 355687428096000LL, 6402373705728000LL,
    121645100408832000LL, 2432902008176640000LL};

struct Enumeration {
    // one entry per factor group of u: (doubled part, multiplicity), parts desc
    std::vector<std::pair<std::int64_t, int>> groups;
    std::int64_t twice_S = 0;
    int parity = 0;            // doubled-mode parity
    std::int64_t acap = 0;        // doubled annihilator cap
    std::int64_t min_annih = 0;   // smallest legal annihilator mode (doubled)
    bool graded = false;       // vacuum target: exact weight bookkeeping
    std::int64_t annih_budget = 0;    // doubled, graded only
    std::int64_t create_budget = 0;   // doubled, graded only
    const CyclicScalars* zeta = nullptr;
    const Monomial* w_mono = nullptr;
    Rational base;             // overall scale * coefficient of w_mono
    FockVector* out = nullptr;
    std::map<std::pair<std::int64_t, std::int64_t>, Rational>* binom_cache = nullptr;

    int total_positions = 0;
    std::vector<std::int64_t> modes; // chosen doubled modes, flattened positions

    void run() {
        modes.assign(static_cast<std::size_t>(total_positions), 0);
        recurse(0, 0, 0, twice_S, total_positions, 0, 0);
    }

private:
    const Rational& binom(std::int64_t twice_mode, std::int64_t twice_part) {
        auto key = std::make_pair(twice_mode, twice_part);
        auto it = binom_cache->find(key);
        if (it != binom_cache->end()) return it->second;
        long k = static_cast<long>(twice_part / 2 - 1); // parts of u are integers
        std::int64_t twice_a = -twice_mode - 2;
        Rational value = (twice_a % 2 == 0) ? binomial(static_cast<long>(twice_a / 2), k)
                                            : binomial(Rational(twice_a, 2), k);
        return binom_cache->emplace(key, std::move(value)).first->second;
    }

    void recurse(int g, int p, std::int64_t prev_in_group, std::int64_t sum_rem, int pos_rem,
                 std::int64_t annih_used, std::int64_t create_used) {
        if (pos_rem == 0) {
            if (sum_rem == 0) emit();
            return;
        }
        if (p == groups[static_cast<std::size_t>(g)].second) {
            recurse(g + 1, 0, 0, sum_rem, pos_rem, annih_used, create_used);
            return;
        }
        const std::int64_t twice_part = groups[static_cast<std::size_t>(g)].first;

        std::int64_t hi = acap;
        if (p > 0) hi = std::min(hi, prev_in_group); // non-increasing within a group
        if (graded) hi = std::min(hi, annih_budget - annih_used);
        // every other position contributes at most acap
        std::int64_t lo = sum_rem - static_cast<std::int64_t>(pos_rem - 1) * std::max(acap, std::int64_t{0});
        if (graded) lo = std::max(lo, -(create_budget - create_used));
        // Integer creators must cover the derivative order (m <= -i), else the
        // binomial vanishes. On the half-odd lattice the falling factorial
        // never hits zero, so every negative mode contributes there.
        const std::int64_t creator_hi = (parity == 0) ? -twice_part : -1;

        const int idx = total_positions - pos_rem;
        if (pos_rem == 1) { // the remaining sum pins the last mode
            std::int64_t tm = sum_rem;
            if (tm > hi || tm < lo) return;
            if ((((tm % 2) + 2) % 2) != parity) return;
            if (tm < min_annih && tm > creator_hi) return;
            modes[static_cast<std::size_t>(idx)] = tm;
            recurse(g, p + 1, tm, 0, 0, annih_used + (tm > 0 ? tm : 0),
                    create_used + (tm < 0 ? -tm : 0));
            return;
        }
        // align hi down to the mode lattice
        std::int64_t start = hi;
        if (((start % 2) + 2) % 2 != parity) --start;
        for (std::int64_t tm = start; tm >= lo; tm -= 2) {
            if (tm < min_annih && tm > creator_hi) continue; // hole: vanishing binomial / h(0)
            modes[static_cast<std::size_t>(idx)] = tm;
            std::int64_t na = annih_used + (tm > 0 ? tm : 0);
            std::int64_t nc = create_used + (tm < 0 ? -tm : 0);
            recurse(g, p + 1, tm, sum_rem - tm, pos_rem - 1, na, nc);
        }
    }

    void emit() {
        // multiplicity: ordered tuples collapsing to this sorted choice
        std::int64_t mult = 1;
        std::size_t pos = 0;
        for (const auto& [part, count] : groups) {
            mult *= kFactorial[static_cast<std::size_t>(count)];
            int run = 1;
            for (int i = 1; i < count; ++i) {
                if (modes[pos + static_cast<std::size_t>(i)] ==
                    modes[pos + static_cast<std::size_t>(i - 1)]) {
                    ++run;
                } else {
                    mult /= kFactorial[static_cast<std::size_t>(run)];
                    run = 1;
                }
            }
            mult /= kFactorial[static_cast<std::size_t>(run)];
            pos += static_cast<std::size_t>(count);
        }

        Rational coeff = base * Rational(mult);
        pos = 0;
        for (const auto& [part, count] : groups) {
            for (int i = 0; i < count; ++i) {
                coeff *= binom(modes[pos + static_cast<std::size_t>(i)], part);
                if (coeff.is_zero()) return;
            }
            pos += static_cast<std::size_t>(count);
        }

        // annihilators first (right of the normal-ordered product), then creators
        std::vector<std::pair<Monomial, Rational>> cur, next;
        cur.emplace_back(*w_mono, coeff);
        for (std::int64_t tm : modes) {
            if (tm < 0) continue;
            next.clear();
            HalfInt m = HalfInt::from_twice(tm);
            Rational zs = zeta->scalar(tm);
            for (const auto& [mono, cf] : cur) {
                int e = mono.exponent_of(m);
                if (e > 0) next.emplace_back(mono.without_part(m), cf * Rational(e) * m.to_rational());
                if (!zs.is_zero()) next.emplace_back(mono, cf * zs);
            }
            cur.swap(next);
            if (cur.empty()) return;
        }
        for (std::int64_t tm : modes) {
            if (tm >= 0) continue;
            HalfInt part = HalfInt::from_twice(-tm);
            for (auto& [mono, cf] : cur) mono = mono.with_part(part);
        }
        for (const auto& [mono, cf] : cur) out->add_term(mono, cf);
    }
};

} // namespace

void normal_ordered_apply(const Monomial& u_mono, const Rational& scale,
                          std::int64_t twice_S, int mode_parity,
                          const FockVector& w, const CyclicScalars& zeta,
                          FockVector& out) {
    if (scale.is_zero() || w.is_zero()) return;

    Enumeration e;
    for (const auto& [part, exp] : u_mono.factors()) {
        e.groups.emplace_back(part.twice(), exp);
    }
    e.total_positions = u_mono.degree();
    if (e.total_positions > 20) {
        throw Error("mode expansion limited to 20 factors");
    }
    // parity feasibility: k modes of fixed doubled parity sum to twice_S
    std::int64_t parity_sum = (static_cast<std::int64_t>(e.total_positions) * mode_parity) % 2;
    if (((twice_S % 2) + 2) % 2 != parity_sum) return;

    e.twice_S = twice_S;
    e.parity = mode_parity;
    e.zeta = &zeta;
    e.out = &out;
    e.min_annih = (mode_parity == 1) ? 1 : (zeta.scalar(0).is_zero() ? 2 : 0);
    e.graded = zeta.twice_top < 0;

    std::map<std::pair<std::int64_t, std::int64_t>, Rational> cache;
    e.binom_cache = &cache;

    for (const auto& [w_mono, w_coeff] : w.terms()) {
        e.acap = std::max(w_mono.max_part().twice(), zeta.twice_top);
        if (e.graded) {
            e.annih_budget = w_mono.weight().twice();
            e.create_budget = e.annih_budget - twice_S; // exact result weight (doubled)
            if (e.create_budget < 0) continue;
        }
        e.w_mono = &w_mono;
        e.base = scale * w_coeff;
        e.run();
    }
}

} // namespace fockcas::detail
