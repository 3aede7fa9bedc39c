#include "hibi/series.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace hibi {

namespace {

void check_oracle_caps(const Poset& p, const Caps& caps) {
    if (p.size() > caps.oracle_elements)
        throw SizeCapExceeded("series oracle capped at " + std::to_string(caps.oracle_elements) +
                              " elements, got " + std::to_string(p.size()));
}

std::vector<int> topo_order(const Poset& p) {
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ca = std::popcount(p.down_mask(a)), cb = std::popcount(p.down_mask(b));
        return ca != cb ? ca < cb : a < b;
    });
    return order;
}

// Binomials C(d, 0..d) via Pascal, exact.
std::vector<int128> binomial_row(int d) {
    std::vector<int128> row{1};
    for (int k = 1; k <= d; ++k) {
        std::vector<int128> next(k + 1, 1);
        for (int i = 1; i < k; ++i) next[i] = checked_add(row[i - 1], row[i]);
        row = std::move(next);
    }
    return row;
}

}  // namespace

int128 hilbert_function(const Poset& p, int n, const Caps& caps) {
    check_oracle_caps(p, caps);
    if (n < 0) throw PreconditionViolated("negative degree");
    if (n > p.size() + 4)
        throw SizeCapExceeded("oracle degree capped at |P|+4 = " + std::to_string(p.size() + 4) +
                              ", got " + std::to_string(n));
    if (p.empty()) return 1;

    // Values are at most |P|+4 <= 12, so four bits per element pack the whole
    // bound profile of the not-yet-placed elements into one word.
    auto order = topo_order(p);
    const int sz = p.size();
    auto slot = [&](std::uint64_t state, int e) -> int {
        return static_cast<int>((state >> (4 * e)) & 0xf);
    };
    auto with_slot = [&](std::uint64_t state, int e, int v) -> std::uint64_t {
        return (state & ~(0xfull << (4 * e))) | (static_cast<std::uint64_t>(v) << (4 * e));
    };

    std::uint64_t init = 0;
    for (int e = 0; e < sz; ++e) init = with_slot(init, e, n);

    std::unordered_map<std::uint64_t, int128> states{{init, 1}};
    for (int step = 0; step < sz; ++step) {
        int e = order[step];
        std::uint64_t uppers = p.up_mask(e) & ~(1ull << e);
        std::unordered_map<std::uint64_t, int128> next;
        next.reserve(states.size() * 2);
        for (const auto& [state, count] : states) {
            int bound = slot(state, e);
            std::uint64_t cleared = with_slot(state, e, 0);
            for (int v = 0; v <= bound; ++v) {
                std::uint64_t ns = cleared;
                std::uint64_t rest = uppers;
                while (rest) {
                    int f = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (slot(ns, f) > v) ns = with_slot(ns, f, v);
                }
                auto& acc = next[ns];
                acc = checked_add(acc, count);
            }
        }
        states = std::move(next);
    }

    int128 total = 0;
    for (const auto& [state, count] : states) total = checked_add(total, count);
    return total;
}

HilbertSummary h_polynomial(const Poset& p, const Caps& caps) {
    check_oracle_caps(p, caps);
    if (p.empty()) throw EmptyPoset("Hilbert summary of the empty poset");
    const int n = p.size();
    const int d = n + 1;

    std::vector<int128> hf(n + 4);
    for (int k = 0; k <= n + 3; ++k) hf[k] = hilbert_function(p, k, caps);

    auto binom = binomial_row(d);
    std::vector<int128> q(n + 4, 0);
    for (int k = 0; k <= n + 3; ++k) {
        int128 acc = 0;
        for (int j = 0; j <= std::min(k, d); ++j) {
            int128 term = checked_mul(binom[j], hf[k - j]);
            acc = (j % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
        }
        q[k] = acc;
    }

    if (q[0] != 1) throw InternalInconsistency("h-polynomial constant term is not 1");
    for (int k = n + 1; k <= n + 3; ++k)
        if (q[k] != 0)
            throw StabilizationFailure("numerator coefficient " + std::to_string(k) +
                                       " did not vanish; the Hilbert function is wrong");
    int q_degree = 0;
    for (int k = 0; k <= n; ++k) {
        if (q[k] < 0)
            throw InternalInconsistency("negative h-vector entry at " + std::to_string(k));
        if (q[k] != 0) q_degree = k;
    }

    HilbertSummary s;
    s.d = d;
    for (int k = 0; k <= n + 3; ++k) s.hf.push_back(to_int64(hf[k]));
    for (int k = 0; k <= q_degree; ++k) s.h_coeffs.push_back(to_int64(q[k]));
    s.q_degree = q_degree;
    s.a_invariant_oracle = q_degree - d;
    s.reg_oracle = q_degree + 1;
    s.canonical_min_degree = canonical_min_degree(p, caps);
    s.symmetric = true;
    for (int k = 0; k <= q_degree; ++k)
        if (s.h_coeffs[k] != s.h_coeffs[q_degree - k]) s.symmetric = false;
    return s;
}

namespace {

struct StrictSearch {
    const Poset& p;
    const std::vector<int>& order;  // descending: uppers placed first
    std::vector<int> value;
    int upper_bound;  // max element value: rank + 1
    int best;

    void run(int step, int current_max) {
        if (current_max >= best) return;  // cannot improve the final maximum
        if (step == static_cast<int>(order.size())) {
            best = current_max;
            return;
        }
        int e = order[step];
        int lo = 1;
        std::uint64_t uppers = p.up_mask(e) & ~(1ull << e);
        while (uppers) {
            int f = std::countr_zero(uppers);
            uppers &= uppers - 1;
            lo = std::max(lo, value[f] + 1);
        }
        for (int v = lo; v <= upper_bound; ++v) {
            value[e] = v;
            run(step + 1, std::max(current_max, v));
        }
        value[e] = 0;
    }
};

}  // namespace

int canonical_min_degree(const Poset& p, const Caps& caps) {
    check_oracle_caps(p, caps);
    if (p.empty()) throw EmptyPoset("canonical degree of the empty poset");
    const int r = rank(p);

    auto order = topo_order(p);
    std::reverse(order.begin(), order.end());
    StrictSearch search{p, order, std::vector<int>(p.size(), 0), r + 1, r + 3};
    search.run(0, 0);
    if (search.best > r + 2)
        throw InternalInconsistency("no strict order-reversing map within the depth bound");
    return search.best + 1;  // v(BOTTOM) exceeds the largest element value by one
}

int dim_oracle(const Poset& p, const Caps& caps) {
    check_oracle_caps(p, caps);
    if (p.empty()) throw EmptyPoset("dimension oracle of the empty poset");
    const int n = p.size();
    const int points = n + 3;  // HF(0..n+2)

    // Newton divided differences over exact rationals; the interpolant's
    // degree is the last nonzero coefficient.
    std::vector<Rational> coef(points);
    for (int i = 0; i < points; ++i) coef[i] = Rational(hilbert_function(p, i, caps));
    for (int lvl = 1; lvl < points; ++lvl)
        for (int i = points - 1; i >= lvl; --i)
            coef[i] = (coef[i] - coef[i - 1]) / Rational(lvl);

    int degree = 0;
    for (int i = 0; i < points; ++i)
        if (!coef[i].is_zero()) degree = i;
    return degree + 1;
}

bool gorenstein_oracle(const Poset& p, const Caps& caps) {
    return h_polynomial(p, caps).symmetric;
}

}  // namespace hibi
