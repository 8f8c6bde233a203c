#ifndef TROPVOL_SCAN_HPP
#define TROPVOL_SCAN_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tropvol/rational.hpp"

namespace tropvol {

struct budget_exceeded : std::runtime_error {
    long long required;
    explicit budget_exceeded(long long req)
        : std::runtime_error("scan budget exceeded; required membership tests: " +
                             std::to_string(req)),
          required(req) {}
};

struct ScanConfig {
    long long budget = 100000000;  // membership tests
    unsigned threads = 1;
};

/// Default budget, overridable through TROPVOL_BUDGET.
inline ScanConfig default_scan_config() {
    ScanConfig cfg;
    if (const char* env = std::getenv("TROPVOL_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) cfg.budget = v;
    }
    return cfg;
}

using IntBox = std::vector<std::pair<long long, long long>>;  // closed [lo, hi]

inline long long int_box_cubes(const IntBox& box) {
    long long total = 1;
    for (const auto& [lo, hi] : box) {
        if (hi <= lo) return 0;
        long long w = hi - lo;
        if (total > (1LL << 62) / w) throw budget_exceeded(1LL << 62);
        total *= w;
    }
    return total;
}

inline long long int_box_points(const IntBox& box) {
    long long total = 1;
    for (const auto& [lo, hi] : box) {
        if (hi < lo) return 0;
        long long w = hi - lo + 1;
        if (total > (1LL << 62) / w) throw budget_exceeded(1LL << 62);
        total *= w;
    }
    return total;
}

namespace detail {

inline long long permutation_count(std::size_t d) {
    long long f = 1;
    for (std::size_t i = 2; i <= d; ++i) f *= static_cast<long long>(i);
    return f;
}

// All permutations of 0..d-1 in lexicographic order, concatenated.
std::vector<std::uint8_t> all_permutations(std::size_t d);

template <class Fn>
void split_range(long long total, unsigned threads, const Fn& fn) {
    if (threads <= 1 || total < 1024) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    long long chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        long long b = t * chunk, e = std::min<long long>(total, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, t, b, e] { fn(t, b, e); });
    }
    for (auto& th : pool) th.join();
}

inline void unflatten(long long idx, const IntBox& box, bool cubes,
                      std::vector<long long>& out) {
    for (std::size_t i = box.size(); i-- > 0;) {
        long long w = box[i].second - box[i].first + (cubes ? 0 : 1);
        out[i] = box[i].first + idx % w;
        idx /= w;
    }
}

}  // namespace detail

/// Counts integer points of the box accepted by pred.  pred gets a
/// pointer to d coordinates.  Deterministic under any thread count.
template <class Pred>
long long count_lattice_points_in_box(const IntBox& box, const Pred& pred,
                                      const ScanConfig& cfg) {
    const long long total = int_box_points(box);
    if (total > cfg.budget) throw budget_exceeded(total);
    std::vector<long long> partial(std::max(1u, cfg.threads), 0);
    detail::split_range(total, cfg.threads, [&](unsigned t, long long b, long long e) {
        std::vector<long long> x(box.size());
        long long cnt = 0;
        for (long long idx = b; idx < e; ++idx) {
            detail::unflatten(idx, box, false, x);
            if (pred(x.data())) ++cnt;
        }
        partial[t] += cnt;
    });
    long long sum = 0;
    for (auto c : partial) sum += c;
    return sum;
}

/// Counts alcoves of the box (cubes x coordinate orderings) whose
/// centroid is accepted.  pred receives the centroid scaled by (d+1),
/// which makes it an integer vector.
template <class Pred>
long long count_alcoves_in_box(const IntBox& box, const Pred& pred,
                               const ScanConfig& cfg) {
    const std::size_t d = box.size();
    const long long cubes = int_box_cubes(box);
    const long long perms = detail::permutation_count(d);
    if (cubes > cfg.budget / perms) throw budget_exceeded(cubes * perms);
    const auto perm_table = detail::all_permutations(d);

    std::vector<long long> partial(std::max(1u, cfg.threads), 0);
    detail::split_range(cubes, cfg.threads, [&](unsigned t, long long b, long long e) {
        std::vector<long long> base(d), c(d);
        long long cnt = 0;
        for (long long idx = b; idx < e; ++idx) {
            detail::unflatten(idx, box, true, base);
            const std::uint8_t* p = perm_table.data();
            for (long long q = 0; q < perms; ++q, p += d) {
                // centroid * (d+1): coordinate p[j] carries fractional part (d-j)/(d+1)
                for (std::size_t j = 0; j < d; ++j)
                    c[p[j]] = (static_cast<long long>(d) + 1) * base[p[j]] +
                              static_cast<long long>(d - j);
                if (pred(c.data())) ++cnt;
            }
        }
        partial[t] += cnt;
    });
    long long sum = 0;
    for (auto c2 : partial) sum += c2;
    return sum;
}

/// Integer generator matrix with a fast residuation membership test.
/// x must carry the same scaling as the entries.
struct IntGenerators {
    std::size_t m = 0, n = 0;
    std::vector<long long> a;  // row-major, all finite

    long long at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    // x is the full m-vector (first coordinate included).
    bool contains(const long long* x) const {
        bool ok = true;
        thread_local std::vector<long long> lambda;
        lambda.assign(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            long long best = x[0] - at(0, j);
            for (std::size_t i = 1; i < m; ++i) {
                long long v = x[i] - at(i, j);
                if (v > best) best = v;
            }
            lambda[j] = best;
        }
        for (std::size_t i = 0; i < m && ok; ++i) {
            long long row = at(i, 0) + lambda[0];
            for (std::size_t j = 1; j < n; ++j) {
                long long v = at(i, j) + lambda[j];
                if (v < row) row = v;
            }
            ok = row == x[i];
        }
        return ok;
    }
};

inline constexpr long long kIntInf = (1LL << 62);

}  // namespace tropvol

#endif
