#ifndef TROPVOL_RANK_HPP
#define TROPVOL_RANK_HPP

#include <vector>

#include "tropvol/core.hpp"

namespace tropvol {

struct no_finite_permanent : input_error {
    using input_error::input_error;
};

/// Result of the min-plus assignment problem on a square matrix.
/// singular means the optimum is attained by at least two permutations.
struct PermanentResult {
    Rat value;
    std::vector<std::size_t> witness;  // witness[i] = column matched to row i
    bool singular;
};

/// Exact tropical permanent by a shortest-augmenting-path assignment
/// solver.  Uniqueness is decided by re-solving with each optimal edge
/// forbidden.
PermanentResult tropical_permanent(const Matrix& m);

/// Largest r such that A has a tropically nonsingular r x r minor.
/// Searches sizes min(m,n) down to 1 with early exit.
std::size_t tropical_rank(const Matrix& a);

/// Minimum cycle mean and critical graph of a constraint matrix.
struct SpectralData {
    Rat rho_min;
    std::vector<std::size_t> critical_cycle;            // elementary, mean = rho_min
    std::vector<std::vector<std::size_t>> critical_sccs;  // sorted components
    std::vector<std::size_t> representatives;           // smallest index per SCC
};

/// Karp's dynamic program; exact rational result.
SpectralData min_cycle_mean(const CellSystem& b);

struct InnerBall {
    Rat radius;
    Point center;  // normalized, center[0] = 0
};

/// Inner radius rho_min(B) and an inscribed-ball center (subeigenvector,
/// taken as the Kleene-star column of B - rho at the smallest critical
/// index).  Requires X_B nonempty and bounded.
InnerBall inner_radius(const CellSystem& b);

/// Restriction of B* to the representative set D (one index per
/// tightness class): the full-dimensional cell X_T tropically
/// isomorphic to X_B.  For a full-dimensional shortest-path-closed B,
/// D = {1..m} returns B unchanged.
CellSystem project_to_XT(const CellSystem& b, const std::vector<std::size_t>& d);

/// The isomorphism X_T -> X_S: psi(y)_i = min_{d in D} (B*_id + y_d),
/// with psi_d(y) = y_d.  y is indexed like d.
Point apply_psi(const CellSystem& b, const std::vector<std::size_t>& d,
                const std::vector<Rat>& y);

}  // namespace tropvol

#endif
