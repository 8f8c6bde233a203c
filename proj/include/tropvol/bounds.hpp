#ifndef TROPVOL_BOUNDS_HPP
#define TROPVOL_BOUNDS_HPP

#include <vector>

#include "tropvol/enclosure.hpp"
#include "tropvol/geometry.hpp"

namespace tropvol {

struct BoundsReport {
    unsigned m, n, k;
    Rat r_big;      // box bound R
    Rat r_xt;       // inner radius of X_T
    Enclosure lower, upper;
    Rat eps;        // volume mode
    long long s;    // counting mode
    bool counting;
};

/// Two-sided volume bounds for the outer parallel body of a rank-k
/// polytope: lower 2^((k-m)/2) kappa_{m-k} k r^(k-1) eps^(m-k), upper
/// 2^(m+k-1) 3^(m+n-2) (m-1)^((k-1)/2) R^(k-1) eps^(m-k).
/// Requires 0 < eps <= R sqrt(m-1).
BoundsReport volume_bounds(unsigned m, unsigned n, unsigned k, const Rat& r_big,
                           const Rat& r_xt, const Rat& eps, unsigned prec = 128);

/// Lattice-count bounds at dilation s: exact lower
/// (floor(s r)+1)^k - floor(s r)^k and upper
/// 3^(m+n-2) * sum_{t=0}^{k-1} (1 + 2 s R sqrt(m-1))^t.
BoundsReport counting_bounds(unsigned m, unsigned n, unsigned k, const Rat& r_big,
                             const Rat& r_xt, long long s, unsigned prec = 128);

/// The explicit rational epsilon of the rank reduction, with the
/// irrational factor 2^((m-1)/2) strengthened to 2^(ceil((m-1)/2)).
Rat choice_epsilon(unsigned m, unsigned n, const Rat& r_big);

/// Enclosure of the min-ratio threshold
/// min_k pi^((m-k)/2) / (Gamma((m-k)/2+1) 2^((m-k)/2) 2^m 3^(m+n-2)
///                       (2 k W sqrt(m-1))^(k-2)).
Enclosure bar_epsilon(unsigned m, unsigned n, const Rat& w, unsigned prec = 128);

struct IntervalRow {
    unsigned k;
    Enclosure lower, upper;
};

enum class Verdict { disjoint, overlap, inconclusive };

struct IntervalTable {
    std::vector<IntervalRow> rows;  // k = 1..m
    Verdict verdict;
    unsigned precision;  // bits at which the verdict was reached
};

/// Per-rank volume intervals [alpha^-1 C-_k eps^(m-k),
/// alpha C+_k eps^(m-k)] with the generic radius bound r >= 1/k.
/// Precision is doubled internally until the verdict is conclusive or
/// max_prec is reached.
IntervalTable interval_table_volume(unsigned m, unsigned n, const Rat& r_big,
                                    const Rat& eps, const Rat& alpha,
                                    unsigned prec = 128, unsigned max_prec = 1u << 14);

/// Counting analogue: [alpha^-1 L_{k-1}(s), alpha U_{k-1}(s)].
IntervalTable interval_table_counting(unsigned m, unsigned n, const Rat& r_big,
                                      long long s, const Rat& alpha,
                                      unsigned prec = 128, unsigned max_prec = 1u << 14);

/// Rank of an integer matrix read off from the exact volume of
/// P + B_H(eps); eps must make the interval table disjoint.
unsigned rank_from_volume(const Matrix& a, const Rat& eps,
                          const ScanConfig& cfg = default_scan_config(),
                          unsigned prec = 256);

/// Rank read off from the exact count |sP and Z^(m-1)|.
unsigned rank_from_counting(const Matrix& a, long long s,
                            const ScanConfig& cfg = default_scan_config(),
                            unsigned prec = 256);

/// Smallest s divisible by lcm(1..m) whose counting intervals are
/// provably disjoint.
long long minimal_certified_s(unsigned m, unsigned n, const Rat& r_big,
                              unsigned prec = 256);

/// The proof-recipe dilation k! * ceil(k^k 3^(m+n-2)
/// (2 R ceil(sqrt(m-1)))^(k-1)); usually far beyond scanning range.
Int recipe_s(unsigned m, unsigned n, const Rat& r_big, unsigned k);

/// Vol(P) = 0 iff troprank(A) < m.
bool zero_volume_decision(const Matrix& a);

}  // namespace tropvol

#endif
