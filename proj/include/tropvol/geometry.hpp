#ifndef TROPVOL_GEOMETRY_HPP
#define TROPVOL_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "tropvol/core.hpp"
#include "tropvol/scan.hpp"

namespace tropvol {

/// Simplex of the affine braid arrangement: points of base + [0,1]^d
/// whose fractional parts decrease along `order`.  Volume 1/d!.
struct Alcove {
    std::vector<long long> base;
    std::vector<std::size_t> order;  // permutation of 0..d-1
};

std::vector<Alcove> enumerate_alcoves(const BoundingBox& box,
                                      const ScanConfig& cfg = default_scan_config());

std::vector<Point> alcove_vertices(const Alcove& a);
Point alcove_centroid(const Alcove& a);
Rat alcove_volume(std::size_t d);

/// Tropical polytope given by generators.  `generators` is integer and
/// normalized and describes scale_denominator * P; results are reported
/// rescaled back to P.
struct VertexPolytope {
    Matrix generators;
    Int scale_denominator;
};

VertexPolytope make_vertex_polytope(const Matrix& a);

struct VolumeResult {
    Rat volume;
    long long alcoves_tested;
};

/// Exact Euclidean volume of the bounded full-dimensional part, by
/// counting alcoves of the bounding box whose centroid lies in P.
VolumeResult volume(const VertexPolytope& p, const ScanConfig& cfg = default_scan_config());

struct CountResult {
    long long count;
    long long points_tested;
};

/// Exact |sP and Z^{m-1}| via a box scan of the dilation tconv(sA).
/// s must be divisible by scale_denominator.
CountResult count_lattice_points(const VertexPolytope& p, long long s,
                                 const ScanConfig& cfg = default_scan_config());

/// d x d matrix with zero diagonal and eps off-diagonal; its tropical
/// span is the Hilbert ball of radius eps around the origin.
Matrix hilbert_ball_generators(std::size_t d, const Rat& eps);

Int hilbert_ball_count(std::size_t d, const Rat& delta);
Rat hilbert_ball_volume(std::size_t d, const Rat& delta);

/// Minkowski sum P + B_H(eps): generators A_j + H_k, with rational eps
/// folded into scale_denominator.
VertexPolytope outer_parallel_body(const VertexPolytope& p, const Rat& eps);

struct CellRecord {
    CovectorType type;
    CellSystem system;             // from the stored (scaled) generators
    std::size_t dimension;
    std::optional<Rat> volume;     // full-dimensional cells, rescaled to P
    std::optional<Point> pseudovertex;  // 0-dimensional cells, rescaled to P
};

/// Distinct covector types of alcove centroids and (1/refine)-grid
/// points inside P.  refine >= m makes the full-dimensional cells and
/// the pseudovertices complete; cells in between are best effort.
std::vector<CellRecord> enumerate_cells(const VertexPolytope& p, unsigned refine,
                                        const ScanConfig& cfg = default_scan_config());

/// Leading coefficient of the Ehrhart polynomial, interpolated from
/// lattice counts at m consecutive dilations.
Rat ehrhart_leading_coefficient(const VertexPolytope& p,
                                const ScanConfig& cfg = default_scan_config());

/// Membership and dilated lattice count for a polytrope given by
/// difference constraints x_i - x_j <= b_ij (coordinates 2..m, x_1 = 0).
bool polytrope_contains(const CellSystem& b, const Point& x);
long long polytrope_lattice_count(const CellSystem& b, long long s,
                                  const ScanConfig& cfg = default_scan_config());

}  // namespace tropvol

#endif
