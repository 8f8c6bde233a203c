#include "tropvol/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tropvol {

namespace {

IntBox integer_box(const BoundingBox& box) {
    IntBox out;
    out.reserve(box.intervals.size());
    for (const auto& [lo, hi] : box.intervals)
        out.emplace_back(to_long(floor_rat(lo)), to_long(ceil_rat(hi)));
    return out;
}

Int common_denominator(const Matrix& a) {
    Int q = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(q.get_mpz_t(), q.get_mpz_t(),
                    a.at(i, j).value().get_den_mpz_t());
    return q;
}

IntGenerators scaled_int_generators(const Matrix& g, long long factor) {
    IntGenerators ig;
    ig.m = g.rows();
    ig.n = g.cols();
    ig.a.resize(ig.m * ig.n);
    for (std::size_t i = 0; i < ig.m; ++i)
        for (std::size_t j = 0; j < ig.n; ++j)
            ig.a[i * ig.n + j] = factor * to_long(Int(g.at(i, j).value()));
    return ig;
}

}  // namespace

std::vector<Alcove> enumerate_alcoves(const BoundingBox& box, const ScanConfig& cfg) {
    IntBox ib = integer_box(box);
    const std::size_t d = ib.size();
    const long long cubes = int_box_cubes(ib);
    const long long perms = detail::permutation_count(d);
    if (cubes > cfg.budget / perms) throw budget_exceeded(cubes * perms);

    std::vector<Alcove> out;
    out.reserve(static_cast<std::size_t>(cubes * perms));
    std::vector<long long> base(d);
    for (long long idx = 0; idx < cubes; ++idx) {
        detail::unflatten(idx, ib, true, base);
        std::vector<std::size_t> order(d);
        std::iota(order.begin(), order.end(), 0);
        do {
            out.push_back(Alcove{base, order});
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

std::vector<Point> alcove_vertices(const Alcove& a) {
    const std::size_t d = a.base.size();
    std::vector<Point> verts;
    Point v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = Rat(static_cast<long>(a.base[i]));
    verts.push_back(v);
    // add 1 to the coordinates in order of decreasing fractional part
    for (std::size_t j = 0; j < d; ++j) {
        v[a.order[j]] += 1;
        verts.push_back(v);
    }
    return verts;
}

Point alcove_centroid(const Alcove& a) {
    const std::size_t d = a.base.size();
    Point c(d);
    for (std::size_t j = 0; j < d; ++j)
        c[a.order[j]] = Rat(static_cast<long>(a.base[a.order[j]])) +
                        make_rat(static_cast<long long>(d - j),
                                 static_cast<long long>(d + 1));
    return c;
}

Rat alcove_volume(std::size_t d) { return Rat(1) / Rat(factorial(d)); }

VertexPolytope make_vertex_polytope(const Matrix& a) {
    Matrix norm = normalize_generators(a);
    Int q = common_denominator(norm);
    Matrix g(norm.rows(), norm.cols());
    for (std::size_t i = 0; i < norm.rows(); ++i)
        for (std::size_t j = 0; j < norm.cols(); ++j)
            g.at(i, j) = Ext(Rat(norm.at(i, j).value() * q));
    return VertexPolytope{std::move(g), std::move(q)};
}

VolumeResult volume(const VertexPolytope& p, const ScanConfig& cfg) {
    const std::size_t m = p.generators.rows();
    if (m < 2) throw input_error("volume: need m >= 2");
    const std::size_t d = m - 1;
    IntBox box = integer_box(bounding_box(p.generators));

    // centroid scaled by m is integer; compare against m * generators
    IntGenerators ig = scaled_int_generators(p.generators, static_cast<long long>(m));
    long long hits = count_alcoves_in_box(
        box,
        [&ig, m](const long long* c) {
            thread_local std::vector<long long> x;
            x.assign(m, 0);
            for (std::size_t i = 1; i < m; ++i) x[i] = c[i - 1];
            return ig.contains(x.data());
        },
        cfg);

    long long tested = int_box_cubes(box) * detail::permutation_count(d);
    Rat vol = make_rat(hits) / Rat(factorial(d));
    vol /= Rat(pow_int(p.scale_denominator, d));
    return VolumeResult{vol, tested};
}

CountResult count_lattice_points(const VertexPolytope& p, long long s,
                                 const ScanConfig& cfg) {
    const std::size_t m = p.generators.rows();
    if (s < 1) throw input_error("count_lattice_points: s must be positive");
    Int q = p.scale_denominator;
    Int si(static_cast<long>(s));
    if (si % q != 0)
        throw input_error("count_lattice_points: s must be divisible by the scale denominator " +
                          q.get_str());
    long long t = to_long(Int(si / q));

    IntGenerators ig = scaled_int_generators(p.generators, t);
    IntBox box;
    {
        BoundingBox bb = bounding_box(p.generators);
        for (const auto& [lo, hi] : bb.intervals)
            box.emplace_back(to_long(floor_rat(Rat(lo * make_rat(t)))),
                             to_long(ceil_rat(Rat(hi * make_rat(t)))));
    }
    long long hits = count_lattice_points_in_box(
        box,
        [&ig, m](const long long* c) {
            thread_local std::vector<long long> x;
            x.assign(m, 0);
            for (std::size_t i = 1; i < m; ++i) x[i] = c[i - 1];
            return ig.contains(x.data());
        },
        cfg);
    return CountResult{hits, int_box_points(box)};
}

Matrix hilbert_ball_generators(std::size_t d, const Rat& eps) {
    if (d < 2) throw input_error("hilbert_ball_generators: d must be at least 2");
    if (eps <= 0) throw input_error("hilbert_ball_generators: eps must be positive");
    Matrix h(d, d, Ext(Rat(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j) h.at(i, j) = Ext(eps);
    return h;
}

Int hilbert_ball_count(std::size_t d, const Rat& delta) {
    if (d < 2) throw input_error("hilbert_ball_count: d must be at least 2");
    if (delta < 0) throw input_error("hilbert_ball_count: delta must be nonnegative");
    Int f = floor_rat(delta);
    return pow_int(f + 1, d) - pow_int(f, d);
}

Rat hilbert_ball_volume(std::size_t d, const Rat& delta) {
    if (d < 2) throw input_error("hilbert_ball_volume: d must be at least 2");
    if (delta < 0) throw input_error("hilbert_ball_volume: delta must be nonnegative");
    return Rat(static_cast<long>(d)) * pow_rat(delta, d - 1);
}

VertexPolytope outer_parallel_body(const VertexPolytope& p, const Rat& eps) {
    if (eps <= 0) throw input_error("outer_parallel_body: eps must be positive");
    const std::size_t m = p.generators.rows(), n = p.generators.cols();

    // work at a common scale q2 making both the generators and eps integer
    Int q2;
    mpz_lcm(q2.get_mpz_t(), p.scale_denominator.get_mpz_t(), eps.get_den_mpz_t());
    Int gen_factor = q2 / p.scale_denominator;
    Rat scaled_eps = eps * q2;

    Matrix h = hilbert_ball_generators(m, scaled_eps);
    Matrix out(m, m * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < m; ++i)
                out.at(i, j * m + k) =
                    Ext(Rat(p.generators.at(i, j).value() * gen_factor +
                            h.at(i, k).value()));
    return VertexPolytope{normalize_generators(out), q2};
}

std::vector<CellRecord> enumerate_cells(const VertexPolytope& p, unsigned refine,
                                        const ScanConfig& cfg) {
    const Matrix& g = p.generators;
    const std::size_t m = g.rows();
    const std::size_t d = m - 1;
    if (refine == 0) throw input_error("enumerate_cells: refine must be positive");
    BoundingBox bb = bounding_box(g);

    // alcove centroids classify the full-dimensional cells exactly
    std::map<CovectorType, long long> alcove_hits;
    for (const Alcove& a : enumerate_alcoves(bb, cfg)) {
        Point raw = alcove_centroid(a);
        Point c(m, 0);
        for (std::size_t i = 1; i < m; ++i) c[i] = raw[i - 1];
        if (contains_point(g, c)) ++alcove_hits[type_of(g, c)];
    }

    // grid samples catch the lower-dimensional cells
    std::map<CovectorType, bool> seen;
    for (const auto& [t, cnt] : alcove_hits) seen[t] = true;
    {
        IntBox ib = integer_box(bb);
        const long long r = refine;
        IntBox grid;
        for (const auto& [lo, hi] : ib) grid.emplace_back(lo * r, hi * r);
        if (int_box_points(grid) > cfg.budget) throw budget_exceeded(int_box_points(grid));
        std::vector<long long> gp(d);
        const long long total = int_box_points(grid);
        for (long long idx = 0; idx < total; ++idx) {
            detail::unflatten(idx, grid, false, gp);
            Point x(m, 0);
            for (std::size_t i = 1; i < m; ++i)
                x[i] = make_rat(gp[i - 1], r);
            if (contains_point(g, x)) seen[type_of(g, x)] = true;
        }
    }

    Rat cell_scale = Rat(pow_int(p.scale_denominator, d));
    std::vector<CellRecord> out;
    for (const auto& [type, flag] : seen) {
        CellRecord rec;
        rec.type = type;
        rec.system = cell_system(g, type);
        rec.dimension = cell_dimension(rec.system);
        if (rec.dimension == d) {
            auto it = alcove_hits.find(type);
            long long hits = it == alcove_hits.end() ? 0 : it->second;
            rec.volume = make_rat(hits) / Rat(factorial(d)) / cell_scale;
        }
        if (rec.dimension == 0) {
            CellSystem star = kleene_star(rec.system);
            Point v(m, 0);
            for (std::size_t i = 1; i < m; ++i)
                v[i] = star.b.at(i, 0).value() / Rat(p.scale_denominator);
            rec.pseudovertex = std::move(v);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

Rat ehrhart_leading_coefficient(const VertexPolytope& p, const ScanConfig& cfg) {
    const std::size_t m = p.generators.rows();
    const std::size_t d = m - 1;
    long long q = to_long(p.scale_denominator);

    std::vector<Int> counts;
    for (std::size_t t = 1; t <= m; ++t)
        counts.emplace_back(static_cast<long>(
            count_lattice_points(p, q * static_cast<long long>(t), cfg).count));

    // d-th finite difference extracts d! * (leading coefficient in t)
    for (std::size_t step = 0; step < d; ++step)
        for (std::size_t i = counts.size() - 1; i >= 1; --i)
            counts[i] -= counts[i - 1];
    Rat lead = Rat(counts.back()) / Rat(factorial(d));
    return lead / Rat(pow_int(Int(static_cast<long>(q)), d));
}

bool polytrope_contains(const CellSystem& b, const Point& x) {
    const std::size_t m = b.size();
    if (x.size() != m) throw dimension_mismatch("polytrope_contains: point size mismatch");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || b.b.at(i, j).is_inf()) continue;
            if (x[i] - x[j] > b.b.at(i, j).value()) return false;
        }
    return true;
}

long long polytrope_lattice_count(const CellSystem& b, long long s,
                                  const ScanConfig& cfg) {
    if (s < 1) throw input_error("polytrope_lattice_count: s must be positive");
    const std::size_t m = b.size();
    CellSystem star = [&] {
        try {
            return kleene_star(b);
        } catch (const negative_cycle_error&) {
            return CellSystem{Matrix(0, 0)};
        }
    }();
    if (star.size() == 0) return 0;  // empty polytrope

    IntBox box;
    for (std::size_t i = 1; i < m; ++i) {
        const Ext& up = star.b.at(i, 0);
        const Ext& down = star.b.at(0, i);
        if (up.is_inf() || down.is_inf())
            throw input_error("polytrope_lattice_count: unbounded polytrope");
        box.emplace_back(to_long(ceil_rat(Rat(-down.value() * make_rat(s)))),
                         to_long(floor_rat(Rat(up.value() * make_rat(s)))));
    }
    return count_lattice_points_in_box(
        box,
        [&](const long long* c) {
            Point x(m, 0);
            for (std::size_t i = 1; i < m; ++i) x[i] = Rat(static_cast<long>(c[i - 1]));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    if (i == j || b.b.at(i, j).is_inf()) continue;
                    if (x[i] - x[j] > b.b.at(i, j).value() * make_rat(s)) return false;
                }
            return true;
        },
        cfg);
}

}  // namespace tropvol
