#ifndef TROPVOL_CORE_HPP
#define TROPVOL_CORE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tropvol/matrix.hpp"

namespace tropvol {

/// Covector type of a point: row i lists the generator columns whose
/// column minimum is attained in row i.  Every column is covered by at
/// least one row.
struct CovectorType {
    std::vector<std::vector<std::size_t>> rows;  // sorted column indices per row

    bool covers_all_columns(std::size_t n) const;
    bool all_rows_nonempty() const;

    friend bool operator==(const CovectorType& a, const CovectorType& b) {
        return a.rows == b.rows;
    }
    friend bool operator<(const CovectorType& a, const CovectorType& b) {
        return a.rows < b.rows;
    }
};

/// Difference-constraint system of a cell: X = { x : x_i - x_j <= b_ij }.
/// Diagonal entries are +inf by construction.
struct CellSystem {
    Matrix b;  // square

    std::size_t size() const { return b.rows(); }
};

struct NegativeCycle {
    std::vector<std::size_t> vertices;  // cycle v0 -> v1 -> ... -> v0
    Rat weight;
};

struct negative_cycle_error : std::runtime_error {
    NegativeCycle cycle;
    explicit negative_cycle_error(NegativeCycle c)
        : std::runtime_error("negative cycle in constraint graph"), cycle(std::move(c)) {}
};

/// Per-coordinate enclosing intervals for coordinates 2..m of the
/// normalized polytope, plus the max width R.
struct BoundingBox {
    std::vector<std::pair<Rat, Rat>> intervals;  // size m-1
    Rat outer_radius;                            // R = max interval width
};

/// Column-normalizes generators so the first row is zero.  Leaves tconv
/// unchanged in TP^{m-1}.
Matrix normalize_generators(const Matrix& a);

/// Covector type of x with respect to the generators A.
CovectorType type_of(const Matrix& a, const Point& x);

/// Residuation-based membership oracle for x in tconv(A):
/// lambda_j = max_i (x_i - a_ij), then x is a member iff A (.) lambda = x.
bool contains_point(const Matrix& a, const Point& x);

/// B_S with b_kj = min_{i in S_j} (a_ki - a_ji), k != j; inf diagonal.
/// Rows j referenced with empty S_j make the cell unbounded; they are
/// rejected with a list of the offending indices.
CellSystem cell_system(const Matrix& a, const CovectorType& s);

/// Kleene star B* = I (+) B (+) B^2 (+) ...: all-pairs shortest paths.
/// Throws negative_cycle_error with a witnessing cycle if one exists.
CellSystem kleene_star(const CellSystem& b);

/// Classes of the tightness relation i ~ j <=> b*_ij + b*_ji = 0
/// (coordinates forced equal up to a constant), sorted by smallest
/// member.
std::vector<std::vector<std::size_t>> tightness_classes(const CellSystem& b);

/// Affine dimension of the polytrope X_B: number of tightness classes
/// minus one.
std::size_t cell_dimension(const CellSystem& b);

/// Enclosing box of tconv(A) after normalization: coordinate i ranges
/// over [min_j a_ij, max_j a_ij].
BoundingBox bounding_box(const Matrix& a);

}  // namespace tropvol

#endif
