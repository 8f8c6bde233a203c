// End-to-end checks of the library against independently computed
// values.  Each check prints one PASS/FAIL line; the exit status is the
// number of failures.

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tropvol/bounds.hpp"
#include "tropvol/ineq.hpp"
#include "tropvol/rank.hpp"

using namespace tropvol;

namespace {

int failures = 0;

void check(const char* name, const std::function<void()>& body) {
    try {
        body();
        std::printf("PASS: %s\n", name);
    } catch (const std::exception& e) {
        std::printf("FAIL: %s (%s)\n", name, e.what());
        ++failures;
    }
}

struct check_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failed(what);
}

Matrix mat(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Ext>> data;
    for (const auto& row : rows) {
        std::vector<Ext> r;
        for (int v : row) r.push_back(Ext(Rat(v)));
        data.push_back(std::move(r));
    }
    return Matrix::from_rows(data);
}

Matrix random_int_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int lo,
                         int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Ext(Rat(dist(rng)));
    return a;
}

// inner radius of the full-dimensional image X_T of a maximal cell
Rat best_reduced_radius(const Matrix& a, std::size_t k) {
    if (k <= 1) return 0;
    VertexPolytope p = make_vertex_polytope(a);
    Rat best = 0;
    for (const CellRecord& rec : enumerate_cells(p, 12)) {
        if (rec.dimension + 1 != k) continue;
        std::vector<std::size_t> reps;
        for (const auto& cls : tightness_classes(rec.system))
            reps.push_back(cls.front());
        Rat r = inner_radius(project_to_XT(rec.system, reps)).radius;
        if (r > best) best = r;
    }
    return best;
}

// conclusive interval comparisons, refining the enclosure until the
// rational value clears the bound
void require_at_least(const Rat& value, const std::function<Enclosure(unsigned)>& bound,
                      const std::string& what) {
    for (unsigned prec = 128; prec <= (1u << 14); prec *= 2) {
        Enclosure e = bound(prec);
        if (value >= e.hi() || (e.width() == 0 && value >= e.lo())) return;
        if (value < e.lo()) throw check_failed(what + ": bound violated");
    }
    throw check_failed(what + ": inconclusive after refinement");
}

void require_at_most(const Rat& value, const std::function<Enclosure(unsigned)>& bound,
                     const std::string& what) {
    for (unsigned prec = 128; prec <= (1u << 14); prec *= 2) {
        Enclosure e = bound(prec);
        if (value <= e.lo() || (e.width() == 0 && value <= e.hi())) return;
        if (value > e.hi()) throw check_failed(what + ": bound violated");
    }
    throw check_failed(what + ": inconclusive after refinement");
}

void planar_examples() {
    std::vector<Matrix> polytopes = {
        mat({{0, 0, 0}, {0, -2, -4}, {0, 2, 4}}),
        mat({{0, 0, 0}, {2, 2, 0}, {0, 2, 2}}),
        mat({{0, 0, 0, 0}, {0, 1, 0, -1}, {0, -1, -4, -3}}),
    };
    for (const Matrix& a : polytopes)
        require(volume(make_vertex_polytope(a)).volume == Rat(4),
                "planar example volume != 4");

    Matrix three = mat({{-1, -4, -7}, {-3, -2, 2}, {2, -1, -3}});
    for (std::size_t shift = 0; shift < 3; ++shift) {
        Matrix rotated(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                rotated.at(i, j) = three.at((i + shift) % 3, j);
        require(volume(make_vertex_polytope(rotated)).volume == Rat(4),
                "reordered volume != 4");
    }
}

void hilbert_ball_identities() {
    for (std::size_t d = 2; d <= 4; ++d)
        for (int delta = 1; delta <= 4; ++delta) {
            VertexPolytope ball =
                make_vertex_polytope(hilbert_ball_generators(d, Rat(delta)));
            Int expected_count = pow_int(Int(delta + 1), d) - pow_int(Int(delta), d);
            require(count_lattice_points(ball, 1).count == expected_count.get_si(),
                    "ball count mismatch");
            Rat expected_volume = Rat(d) * pow_rat(Rat(delta), d - 1);
            require(volume(ball).volume == expected_volume, "ball volume mismatch");
        }
}

void volume_vs_dilation_counts() {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> md(2, 3), nd(2, 4);
    int done = 0;
    while (done < 50) {
        std::size_t m = md(rng), n = nd(rng);
        Matrix a = random_int_matrix(rng, m, n, -3, 3);
        if (tropical_rank(a) != m) continue;
        VertexPolytope p = make_vertex_polytope(a);
        require(volume(p).volume == ehrhart_leading_coefficient(p),
                "volume != leading coefficient");
        ++done;
    }
}

void bound_sandwiches() {
    std::mt19937 rng(102);
    std::uniform_int_distribution<int> md(2, 4), nd(2, 5);
    int done = 0;
    while (done < 100) {
        std::size_t m = md(rng), n = nd(rng);
        Matrix a = random_int_matrix(rng, m, n, -3, 3);
        std::size_t k = tropical_rank(a);
        Rat r = best_reduced_radius(a, k);
        Rat r_big = std::max(bounding_box(a).outer_radius, Rat(1));
        VertexPolytope p = make_vertex_polytope(a);

        for (const Rat& eps : {make_rat(1, 2), Rat(1), Rat(2)}) {
            if (Rat(eps * eps) > r_big * r_big * Rat(static_cast<long>(m - 1)))
                continue;  // outside the guaranteed range
            Rat vol = volume(outer_parallel_body(p, eps)).volume;
            require_at_least(vol, [&](unsigned prec) {
                return volume_bounds(m, n, k, r_big, r, eps, prec).lower;
            }, "fattened volume lower bound");
            require_at_most(vol, [&](unsigned prec) {
                return volume_bounds(m, n, k, r_big, r, eps, prec).upper;
            }, "fattened volume upper bound");
        }

        for (long long s = 1; s <= 3; ++s) {
            Rat cnt = make_rat(count_lattice_points(p, s).count);
            require_at_least(cnt, [&](unsigned prec) {
                return counting_bounds(m, n, k, r_big, r, s, prec).lower;
            }, "lattice count lower bound");
            require_at_most(cnt, [&](unsigned prec) {
                return counting_bounds(m, n, k, r_big, r, s, prec).upper;
            }, "lattice count upper bound");
        }
        ++done;
    }
}

void interval_separation_and_rank_recovery() {
    for (unsigned m = 2; m <= 3; ++m)
        for (unsigned n = 2; n <= 3; ++n) {
            IntervalTable t =
                interval_table_volume(m, n, Rat(1), choice_epsilon(m, n, Rat(1)), Rat(1));
            require(t.verdict == Verdict::disjoint, "volume intervals not disjoint");
        }

    for (unsigned bits = 0; bits < 16; ++bits) {
        Matrix a(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                a.at(i, j) = Ext(Rat((bits >> (2 * i + j)) & 1));
        std::size_t expected = tropical_rank(a);
        require(rank_from_volume(a, choice_epsilon(2, 2, Rat(1))) == expected,
                "2x2 volume rank mismatch");
        require(rank_from_counting(a, minimal_certified_s(2, 2, Rat(1))) == expected,
                "2x2 counting rank mismatch");
    }

    // the certified 3x3 epsilon is far below scanning range; use the
    // coarsest epsilon whose interval table is still provably disjoint
    Rat eps33;
    for (long d = 512;; d += 512) {
        eps33 = make_rat(1, d);
        if (interval_table_volume(3, 3, Rat(1), eps33, Rat(1)).verdict ==
            Verdict::disjoint)
            break;
    }
    long long s33 = minimal_certified_s(3, 3, Rat(1));
    std::mt19937 rng(103);
    int done = 0;
    while (done < 8) {
        Matrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = Ext(Rat(rng() % 2));
        // wider boxes certify only at epsilons whose scan grid exceeds a
        // single-core budget
        if (bounding_box(a).outer_radius > 1) continue;
        ++done;
        std::size_t expected = tropical_rank(a);
        require(rank_from_volume(a, eps33) == expected, "3x3 volume rank mismatch");
        require(rank_from_counting(a, s33) == expected, "3x3 counting rank mismatch");
    }
}

void gadget_identities() {
    std::mt19937 rng(104);
    std::uniform_int_distribution<std::size_t> nd(2, 8);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = nd(rng);
        std::size_t max_r = std::min<std::size_t>(15, n * (n - 1) / 2);
        SatFormula f;
        f.n_vars = n;
        std::uniform_int_distribution<std::size_t> var(1, n);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        std::size_t want = 1 + rng() % max_r;
        while (f.clauses.size() < want) {
            std::size_t i = var(rng), j = var(rng);
            if (i == j) continue;
            auto c = std::minmax(i, j);
            if (seen.insert({c.first, c.second}).second)
                f.clauses.emplace_back(c.first, c.second);
        }
        long long solutions = sat_count_bruteforce(f);
        require(ineq_volume(sat_gadget(f, 2)).volume == make_rat(solutions),
                "gadget volume != solution count");
        require(ineq_count(sat_gadget(f, 1), 1) == solutions,
                "gadget point count != solution count");
    }
}

void structural_invariants() {
    std::mt19937 rng(105);
    std::uniform_int_distribution<int> dim(2, 5), coord(-12, 12);

    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t m = dim(rng), n = dim(rng);
        Matrix a = random_int_matrix(rng, m, n, -5, 5);
        Point x(m, Rat(0));
        for (std::size_t i = 1; i < m; ++i) x[i] = make_rat(coord(rng), 3);
        require(contains_point(a, x) == type_of(a, x).all_rows_nonempty(),
                "membership != nonempty type rows");
    }

    std::uniform_int_distribution<int> small(2, 4);
    int projections = 0;
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t m = small(rng), n = small(rng);
        Matrix a = random_int_matrix(rng, m, n, -3, 3);
        std::map<std::size_t, long> by_dim;
        for (const CellRecord& rec : enumerate_cells(make_vertex_polytope(a), 12)) {
            ++by_dim[rec.dimension];
            if (rec.pseudovertex)
                for (const Rat& c : *rec.pseudovertex)
                    require(is_integer(c), "fractional pseudovertex");
            std::vector<std::size_t> reps;
            for (const auto& cls : tightness_classes(rec.system))
                reps.push_back(cls.front());
            if (reps.size() < rec.system.size() && projections < 60) {
                CellSystem t = project_to_XT(rec.system, reps);
                for (long long s = 1; s <= 3; ++s)
                    require(polytrope_lattice_count(rec.system, s) ==
                                polytrope_lattice_count(t, s),
                            "projection changed the lattice count");
                ++projections;
            }
            InnerBall ball = inner_radius(rec.system);
            for (std::size_t i = 0; i < rec.system.size(); ++i)
                for (std::size_t j = 0; j < rec.system.size(); ++j) {
                    const Ext& bij = rec.system.b.at(i, j);
                    if (i == j || bij.is_inf()) continue;
                    require(ball.center[i] - ball.center[j] <=
                                bij.value() - ball.radius,
                            "inscribed ball leaves the cell");
                }
        }
        for (const auto& [t, cnt] : by_dim) {
            Int bound = pow_int(Int(3), m + n - t - 2);
            require(Int(cnt) <= bound, "cell count above the trinomial bound");
        }
    }
    require(projections > 10, "too few degenerate cells sampled");
}

}  // namespace

int main() {
    check("planar volumes equal 4 in every normalization", planar_examples);
    check("hilbert ball closed forms match the scanners", hilbert_ball_identities);
    check("exact volume equals the dilation-count leading coefficient",
          volume_vs_dilation_counts);
    check("volume and count sandwiches hold on random instances", bound_sandwiches);
    check("interval separation recovers the rank", interval_separation_and_rank_recovery);
    check("clause gadget volume and count equal the solution count", gadget_identities);
    check("structural invariants", structural_invariants);
    return failures;
}
