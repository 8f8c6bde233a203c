#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tropvol/bounds.hpp"
#include "tropvol/rank.hpp"

using namespace tropvol;

namespace {

Matrix bit_matrix(unsigned bits, std::size_t m, std::size_t n) {
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = Ext(Rat((bits >> (i * n + j)) & 1));
    return a;
}

// largest inscribed-ball radius over the full-dimensional cells
Rat max_cell_radius(const Matrix& a) {
    VertexPolytope p = make_vertex_polytope(a);
    Rat best = 0;
    for (const CellRecord& rec : enumerate_cells(p, 12)) {
        if (rec.dimension != a.rows() - 1) continue;
        Rat r = inner_radius(rec.system).radius / Rat(p.scale_denominator);
        if (r > best) best = r;
    }
    return best;
}

}  // namespace

TEST_CASE("enclosure arithmetic") {
    Enclosure pi = Enclosure::pi(64);
    CHECK(pi.lo() > make_rat(314159, 100000));
    CHECK(pi.hi() < make_rat(314160, 100000));
    CHECK(Enclosure::pi(128).width() < Enclosure::pi(32).width());

    Enclosure r2 = Enclosure::sqrt_of(Rat(2), 64);
    CHECK(r2.lo() > make_rat(141421, 100000));
    CHECK(r2.hi() < make_rat(141422, 100000));
    CHECK((r2 * r2).contains(Rat(2)));

    Enclosure x = Enclosure::exact(make_rat(3, 4));
    CHECK((x + x).contains(make_rat(3, 2)));
    CHECK((x - x).contains(Rat(0)));
    CHECK(x.pow(3).contains(make_rat(27, 64)));
    CHECK(x.reciprocal().contains(make_rat(4, 3)));
    CHECK((x / x).contains(Rat(1)));
    CHECK(Enclosure::exact(Rat(4)).sqrt(64).contains(Rat(2)));
    CHECK(Enclosure(Rat(0), Rat(1)).provably_less(Enclosure(Rat(2), Rat(3))));
    CHECK_FALSE(Enclosure(Rat(0), Rat(2)).provably_less(Enclosure(Rat(1), Rat(3))));
    CHECK_THROWS_AS(Enclosure(Rat(1), Rat(0)), input_error);
    CHECK_THROWS_AS(Enclosure(Rat(-1), Rat(1)).reciprocal(), input_error);
}

TEST_CASE("unit ball volumes and gamma values") {
    CHECK(unit_ball_volume(0, 64).contains(Rat(1)));
    CHECK(unit_ball_volume(1, 64).contains(Rat(2)));
    CHECK(unit_ball_volume(2, 64).lo() > make_rat(314159, 100000));
    CHECK(unit_ball_volume(2, 64).hi() < make_rat(314160, 100000));
    // 4 pi / 3
    CHECK(unit_ball_volume(3, 64).lo() > make_rat(418879, 100000));
    CHECK(unit_ball_volume(3, 64).hi() < make_rat(418880, 100000));
    // pi^2 / 2
    CHECK(unit_ball_volume(4, 64).lo() > make_rat(493480, 100000));
    CHECK(unit_ball_volume(4, 64).hi() < make_rat(493481, 100000));

    CHECK(gamma_half_plus_one(0, 64).contains(Rat(1)));
    CHECK(gamma_half_plus_one(2, 64).contains(Rat(1)));
    CHECK(gamma_half_plus_one(4, 64).contains(Rat(2)));
    // Gamma(3/2) = sqrt(pi)/2
    CHECK(gamma_half_plus_one(1, 64).lo() > make_rat(88622, 100000));
    CHECK(gamma_half_plus_one(1, 64).hi() < make_rat(88624, 100000));

    CHECK(sqrt2_pow(0, 64).contains(Rat(1)));
    CHECK(sqrt2_pow(4, 64).contains(Rat(4)));
    CHECK(sqrt2_pow(3, 64).lo() > make_rat(282842, 100000));
    CHECK(sqrt2_pow(3, 64).hi() < make_rat(282843, 100000));
}

TEST_CASE("explicit epsilon choices") {
    CHECK(choice_epsilon(2, 2, Rat(1)) == Rat(1, 72));
    CHECK(choice_epsilon(3, 3, Rat(1)) == Rat(1, 15552));
    CHECK(choice_epsilon(2, 2, Rat(5)) == Rat(1, 72));  // R enters at m > 2 only

    Enclosure bar = bar_epsilon(2, 2, Rat(1));
    CHECK(bar.contains(Rat(1, 36)));
    CHECK(bar.width() < Rat(1, 1000));

    for (unsigned m = 2; m <= 4; ++m)
        for (unsigned n = 2; n <= 4; ++n)
            for (int r = 1; r <= 3; ++r)
                CHECK(choice_epsilon(m, n, Rat(r)) <
                      bar_epsilon(m, n, Rat(r)).lo());
}

TEST_CASE("volume bounds") {
    // k = m: no ball factor, exact lower bound k r^(k-1)
    BoundsReport full = volume_bounds(3, 3, 3, Rat(2), Rat(2), Rat(1, 4));
    CHECK(full.lower.contains(Rat(12)));
    CHECK(full.lower.width() == Rat(0));
    // upper: 2^5 3^4 R^2 sqrt(4)
    CHECK(full.upper.contains(Rat(32 * 81 * 4 * 2)));

    BoundsReport thin = volume_bounds(3, 3, 1, Rat(2), Rat(1), Rat(1, 2));
    // lower: 2^-1 kappa_2 eps^2 = pi/8
    CHECK((thin.lower * Enclosure::exact(Rat(8))).lo() > make_rat(314159, 100000));
    CHECK((thin.lower * Enclosure::exact(Rat(8))).hi() < make_rat(314160, 100000));
    CHECK(thin.lower.hi() < thin.upper.lo());

    CHECK_THROWS_AS(volume_bounds(3, 3, 2, Rat(1), Rat(1), Rat(0)), input_error);
    CHECK_THROWS_AS(volume_bounds(3, 3, 2, Rat(1), Rat(1), Rat(3)), input_error);
    CHECK_NOTHROW(volume_bounds(2, 2, 1, Rat(1), Rat(1), Rat(1)));  // eps = R sqrt(1)
}

TEST_CASE("counting bounds") {
    BoundsReport one = counting_bounds(3, 3, 1, Rat(1), Rat(0), 5);
    CHECK(one.upper.contains(Rat(81)));
    CHECK(one.upper.width() == Rat(0));
    CHECK(one.lower.contains(Rat(1)));  // floor(0)+1 = 1

    BoundsReport three = counting_bounds(3, 3, 3, Rat(1), Rat(3, 2), 2);
    CHECK(three.lower.contains(Rat(37)));  // 4^3 - 3^3
    CHECK(three.lower.width() == Rat(0));
    CHECK(three.upper.lo() > three.lower.hi() - three.lower.hi());  // positive
}

TEST_CASE("volume interval tables") {
    IntervalTable t22 = interval_table_volume(2, 2, Rat(1), choice_epsilon(2, 2, Rat(1)),
                                              Rat(1));
    CHECK(t22.rows.size() == 2);
    CHECK(t22.verdict == Verdict::disjoint);
    CHECK(t22.rows[0].k == 1);
    for (std::size_t i = 0; i + 1 < t22.rows.size(); ++i)
        CHECK(t22.rows[i].upper.hi() < t22.rows[i + 1].lower.lo());

    IntervalTable t33 = interval_table_volume(3, 3, Rat(1), choice_epsilon(3, 3, Rat(1)),
                                              Rat(1));
    CHECK(t33.verdict == Verdict::disjoint);

    // a coarse approximation factor merges the intervals
    IntervalTable loose = interval_table_volume(2, 2, Rat(1),
                                                choice_epsilon(2, 2, Rat(1)), Rat(100));
    CHECK(loose.verdict == Verdict::overlap);
}

TEST_CASE("counting interval tables") {
    long long s = minimal_certified_s(2, 2, Rat(1));
    CHECK(s == 10);
    CHECK(interval_table_counting(2, 2, Rat(1), s, Rat(1)).verdict ==
          Verdict::disjoint);
    CHECK(interval_table_counting(2, 2, Rat(1), 2, Rat(1)).verdict ==
          Verdict::overlap);

    long long s33 = minimal_certified_s(3, 3, Rat(1));
    CHECK(s33 % 6 == 0);
    CHECK(interval_table_counting(3, 3, Rat(1), s33, Rat(1)).verdict ==
          Verdict::disjoint);
    CHECK(interval_table_counting(3, 3, Rat(1), s33 - 6, Rat(1)).verdict !=
          Verdict::disjoint);
}

TEST_CASE("rank recovery for all 2x2 zero-one matrices") {
    Rat eps = choice_epsilon(2, 2, Rat(1));
    for (unsigned bits = 0; bits < 16; ++bits) {
        Matrix a = bit_matrix(bits, 2, 2);
        std::size_t expected = tropical_rank(a);
        CHECK(rank_from_volume(a, eps) == expected);
        CHECK(rank_from_counting(a, 10) == expected);
    }
}

TEST_CASE("rank recovery rejects bad parameters") {
    Matrix a = bit_matrix(6, 2, 2);
    CHECK_THROWS_AS(rank_from_volume(a, Rat(1, 2)), input_error);  // table overlaps
    CHECK_THROWS_AS(rank_from_counting(a, 1), input_error);
    Matrix frac(2, 2, Ext(make_rat(1, 2)));
    CHECK_THROWS_AS(rank_from_volume(frac, choice_epsilon(2, 2, Rat(1))), input_error);
}

TEST_CASE("bound sandwich for small matrices") {
    Rat eps = choice_epsilon(2, 2, Rat(1));
    for (unsigned bits = 0; bits < 16; ++bits) {
        Matrix a = bit_matrix(bits, 2, 2);
        unsigned k = tropical_rank(a);
        Rat r = k == 2 ? max_cell_radius(a) : Rat(1);
        Rat r_big = std::max(bounding_box(a).outer_radius, Rat(1));
        BoundsReport rep = volume_bounds(2, 2, k, r_big, r, eps);
        VertexPolytope hopb = outer_parallel_body(make_vertex_polytope(a), eps);
        Rat vol = volume(hopb).volume;
        CHECK(vol >= rep.lower.lo());
        CHECK(vol <= rep.upper.hi());
    }
}

TEST_CASE("recipe dilation") {
    CHECK(recipe_s(2, 2, Rat(1), 2) == 144);
    CHECK(recipe_s(2, 2, Rat(1), 1) == 9);
}

TEST_CASE("zero volume decision") {
    CHECK(zero_volume_decision(Matrix(3, 3, Ext(Rat(0)))));
    Matrix fig2 = Matrix::from_rows({{Ext(Rat(-1)), Ext(Rat(-4)), Ext(Rat(-7))},
                                     {Ext(Rat(-3)), Ext(Rat(-2)), Ext(Rat(2))},
                                     {Ext(Rat(2)), Ext(Rat(-1)), Ext(Rat(-3))}});
    CHECK_FALSE(zero_volume_decision(fig2));

    std::mt19937 rng(51);
    std::uniform_int_distribution<int> entry(-2, 2), nd(3, 4);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a(3, nd(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(i, j) = Ext(Rat(entry(rng)));
        CHECK(zero_volume_decision(a) ==
              (volume(make_vertex_polytope(a)).volume == 0));
    }
}
