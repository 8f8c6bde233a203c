#ifndef TROPVOL_INEQ_HPP
#define TROPVOL_INEQ_HPP

#include <utility>
#include <vector>

#include "tropvol/matrix.hpp"
#include "tropvol/scan.hpp"

namespace tropvol {

/// Two-sided min-plus system A (.) x (+) c <= B (.) x (+) d restricted
/// to a finite coordinate box.
struct InequalityPolytope {
    Matrix lhs;                // r x n
    std::vector<Ext> lhs_c;    // r
    Matrix rhs;                // r x n
    std::vector<Ext> rhs_c;    // r
    std::vector<std::pair<Rat, Rat>> box;  // n finite intervals
};

bool ineq_contains(const InequalityPolytope& q, const Point& x);

struct IneqVolumeResult {
    Rat volume;
    long long alcoves_tested;
    bool exact;  // false when the cleared system kept non-integer constants
};

/// Alcove-centroid volume of the boxed region.  Exact when the system
/// has integer constants after clearing the common denominator.
IneqVolumeResult ineq_volume(const InequalityPolytope& q,
                             const ScanConfig& cfg = default_scan_config());

/// Exact number of integer points of the dilation s * Q.
long long ineq_count(const InequalityPolytope& q, long long s,
                     const ScanConfig& cfg = default_scan_config());

/// Monotone 2-SAT formula: clauses of two distinct unnegated variables.
struct SatFormula {
    std::size_t n_vars;
    std::vector<std::pair<std::size_t, std::size_t>> clauses;  // 1-based
};

void validate_formula(const SatFormula& f);

/// The counting gadget: box [-L, 0]^n plus, per clause, the constraint
/// min over the clause variables <= -L/2.
InequalityPolytope sat_gadget(const SatFormula& f, long long l);

long long sat_count_bruteforce(const SatFormula& f, std::size_t max_n = 20);

}  // namespace tropvol

#endif
