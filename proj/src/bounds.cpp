#include "tropvol/bounds.hpp"

#include <algorithm>

#include "tropvol/rank.hpp"

namespace tropvol {

namespace {

Int ceil_sqrt(const Int& v) {
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    if (rem != 0) root += 1;
    return root;
}

Enclosure epow(const Enclosure& base, long e) {
    if (e >= 0) return base.pow(static_cast<unsigned long>(e));
    return base.pow(static_cast<unsigned long>(-e)).reciprocal();
}

Rat three_pow(unsigned e) { return Rat(pow_int(Int(3), e)); }

Rat two_pow(unsigned e) { return Rat(pow_int(Int(2), e)); }

void require_rank_range(unsigned m, unsigned k) {
    if (m < 2) throw input_error("bounds: m must be at least 2");
    if (k < 1 || k > m) throw input_error("bounds: k out of range 1..m");
}

void check_eps_range(unsigned m, const Rat& r_big, const Rat& eps, unsigned prec,
                     unsigned max_prec) {
    if (eps <= 0) throw input_error("bounds: eps must be positive");
    for (unsigned p = prec;; p *= 2) {
        Enclosure limit =
            Enclosure::sqrt_of(Rat(static_cast<long>(m - 1)), p) * Enclosure::exact(r_big);
        if (eps <= limit.lo()) return;
        if (eps > limit.hi())
            throw input_error("bounds: eps exceeds R*sqrt(m-1)");
        if (p >= max_prec)
            throw input_error("bounds: eps range check inconclusive at max precision");
    }
}

Verdict table_verdict(const std::vector<IntervalRow>& rows) {
    bool all_disjoint = true;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].upper.lo() >= rows[i + 1].lower.hi()) return Verdict::overlap;
        if (!(rows[i].upper.hi() < rows[i + 1].lower.lo())) all_disjoint = false;
    }
    return all_disjoint ? Verdict::disjoint : Verdict::inconclusive;
}

}  // namespace

BoundsReport volume_bounds(unsigned m, unsigned n, unsigned k, const Rat& r_big,
                           const Rat& r_xt, const Rat& eps, unsigned prec) {
    require_rank_range(m, k);
    if (r_xt < 0) throw input_error("volume_bounds: negative radius");
    check_eps_range(m, r_big, eps, prec, 1u << 14);

    Rat eps_pow = pow_rat(eps, m - k);
    Enclosure lower = sqrt2_pow(m - k, prec).reciprocal() *
                      unit_ball_volume(m - k, prec) *
                      Enclosure::exact(Rat(static_cast<long>(k)) *
                                       pow_rat(r_xt, k - 1) * eps_pow);
    Enclosure upper =
        Enclosure::exact(two_pow(m + k - 1) * three_pow(m + n - 2) *
                         pow_rat(r_big, k - 1) * eps_pow) *
        Enclosure::sqrt_of(Rat(pow_int(Int(static_cast<long>(m - 1)), k - 1)), prec);
    return BoundsReport{m, n, k, r_big, r_xt, lower, upper, eps, 0, false};
}

BoundsReport counting_bounds(unsigned m, unsigned n, unsigned k, const Rat& r_big,
                             const Rat& r_xt, long long s, unsigned prec) {
    require_rank_range(m, k);
    if (s < 1) throw input_error("counting_bounds: s must be positive");
    if (r_xt < 0) throw input_error("counting_bounds: negative radius");

    Int f = floor_rat(Rat(r_xt * make_rat(s)));
    Enclosure lower = Enclosure::exact(Rat(pow_int(f + 1, k) - pow_int(f, k)));

    Enclosure growth = Enclosure::exact(Rat(1)) +
                       Enclosure::exact(Rat(2) * make_rat(s) * r_big) *
                           Enclosure::sqrt_of(Rat(static_cast<long>(m - 1)), prec);
    Enclosure sum = Enclosure::exact(Rat(0));
    for (unsigned t = 0; t < k; ++t) sum = sum + growth.pow(t);
    Enclosure upper = Enclosure::exact(three_pow(m + n - 2)) * sum;
    return BoundsReport{m, n, k, r_big, r_xt, lower, upper, Rat(0), s, true};
}

Rat choice_epsilon(unsigned m, unsigned n, const Rat& r_big) {
    if (m < 2) throw input_error("choice_epsilon: m must be at least 2");
    if (r_big < 1) throw input_error("choice_epsilon: R must be at least 1");
    Rat denom = two_pow((m - 1 + 1) / 2) * two_pow(m) * three_pow(m + n - 2);
    Rat base = Rat(2 * static_cast<long>(m)) * r_big *
               Rat(ceil_sqrt(Int(static_cast<long>(m - 1))));
    denom *= pow_rat(base, m - 2);
    denom *= Rat(factorial(m / 2));
    return Rat(1) / denom;
}

Enclosure bar_epsilon(unsigned m, unsigned n, const Rat& w, unsigned prec) {
    if (m < 2) throw input_error("bar_epsilon: m must be at least 2");
    if (w < 1) throw input_error("bar_epsilon: W must be at least 1");

    bool have = false;
    Rat best_lo, best_hi;
    for (unsigned k = 1; k <= m; ++k) {
        Enclosure num = epow(Enclosure::pi(prec), static_cast<long>((m - k) / 2));
        if ((m - k) % 2 == 1) num = num * Enclosure::pi(prec).sqrt(prec);
        Enclosure den = gamma_half_plus_one(m - k, prec) * sqrt2_pow(m - k, prec) *
                        Enclosure::exact(two_pow(m) * three_pow(m + n - 2));
        Enclosure base = Enclosure::exact(Rat(2 * static_cast<long>(k)) * w) *
                         Enclosure::sqrt_of(Rat(static_cast<long>(m - 1)), prec);
        den = den * epow(base, static_cast<long>(k) - 2);
        Enclosure ratio = num / den;
        if (!have || ratio.lo() < best_lo) best_lo = ratio.lo();
        if (!have || ratio.hi() < best_hi) best_hi = ratio.hi();
        have = true;
    }
    return Enclosure(best_lo, best_hi);
}

IntervalTable interval_table_volume(unsigned m, unsigned n, const Rat& r_big,
                                    const Rat& eps, const Rat& alpha,
                                    unsigned prec, unsigned max_prec) {
    if (m < 2) throw input_error("interval_table: m must be at least 2");
    if (alpha < 1) throw input_error("interval_table: alpha must be at least 1");
    if (eps <= 0) throw input_error("interval_table: eps must be positive");

    IntervalTable table;
    for (unsigned p = prec;; p *= 2) {
        table.rows.clear();
        for (unsigned k = 1; k <= m; ++k) {
            Rat eps_pow = pow_rat(eps, m - k);
            // lower constant with the generic radius bound r >= 1/k
            Enclosure cminus =
                unit_ball_volume(m - k, p) * sqrt2_pow(m - k, p).reciprocal() *
                Enclosure::exact(Rat(static_cast<long>(k)) *
                                 pow_rat(Rat(1, static_cast<long>(k)), k - 1));
            Enclosure cplus =
                Enclosure::exact(two_pow(m + k - 1) * three_pow(m + n - 2) *
                                 pow_rat(r_big, k - 1)) *
                Enclosure::sqrt_of(Rat(pow_int(Int(static_cast<long>(m - 1)), k - 1)), p);
            Enclosure lo = cminus * Enclosure::exact(eps_pow / alpha);
            Enclosure hi = cplus * Enclosure::exact(eps_pow * alpha);
            table.rows.push_back(IntervalRow{k, lo, hi});
        }
        table.verdict = table_verdict(table.rows);
        table.precision = p;
        if (table.verdict != Verdict::inconclusive || p >= max_prec) return table;
    }
}

IntervalTable interval_table_counting(unsigned m, unsigned n, const Rat& r_big,
                                      long long s, const Rat& alpha,
                                      unsigned prec, unsigned max_prec) {
    if (m < 2) throw input_error("interval_table: m must be at least 2");
    if (alpha < 1) throw input_error("interval_table: alpha must be at least 1");
    if (s < 1) throw input_error("interval_table: s must be positive");

    IntervalTable table;
    for (unsigned p = prec;; p *= 2) {
        table.rows.clear();
        for (unsigned k = 1; k <= m; ++k) {
            BoundsReport b =
                counting_bounds(m, n, k, r_big, Rat(1, static_cast<long>(k)), s, p);
            Enclosure lo = b.lower * Enclosure::exact(Rat(1) / alpha);
            Enclosure hi = b.upper * Enclosure::exact(alpha);
            table.rows.push_back(IntervalRow{k, lo, hi});
        }
        table.verdict = table_verdict(table.rows);
        table.precision = p;
        if (table.verdict != Verdict::inconclusive || p >= max_prec) return table;
    }
}

namespace {

unsigned locate_rank(const IntervalTable& table, const Rat& value,
                     const char* what) {
    unsigned found = 0;
    bool unique = true;
    for (const IntervalRow& row : table.rows)
        if (row.lower.lo() <= value && value <= row.upper.hi()) {
            if (found) unique = false;
            found = row.k;
        }
    if (!found || !unique)
        throw input_error(std::string(what) +
                          ": measured value matches no unique interval");
    return found;
}

Rat box_bound(const Matrix& a) {
    Rat r = bounding_box(a).outer_radius;
    return r < 1 ? Rat(1) : r;
}

}  // namespace

unsigned rank_from_volume(const Matrix& a, const Rat& eps, const ScanConfig& cfg,
                          unsigned prec) {
    if (!a.all_integer()) throw input_error("rank_from_volume: matrix must be integer");
    const unsigned m = static_cast<unsigned>(a.rows());
    const unsigned n = static_cast<unsigned>(a.cols());

    IntervalTable table = interval_table_volume(m, n, box_bound(a), eps, Rat(1), prec);
    if (table.verdict != Verdict::disjoint)
        throw input_error(table.verdict == Verdict::overlap
                              ? "rank_from_volume: intervals overlap at this eps"
                              : "rank_from_volume: disjointness inconclusive at max precision");

    VertexPolytope p = make_vertex_polytope(a);
    Rat vol = volume(outer_parallel_body(p, eps), cfg).volume;
    return locate_rank(table, vol, "rank_from_volume");
}

unsigned rank_from_counting(const Matrix& a, long long s, const ScanConfig& cfg,
                            unsigned prec) {
    if (!a.all_integer()) throw input_error("rank_from_counting: matrix must be integer");
    const unsigned m = static_cast<unsigned>(a.rows());
    const unsigned n = static_cast<unsigned>(a.cols());

    IntervalTable table =
        interval_table_counting(m, n, box_bound(a), s, Rat(1), prec);
    if (table.verdict != Verdict::disjoint)
        throw input_error(table.verdict == Verdict::overlap
                              ? "rank_from_counting: intervals overlap at this s"
                              : "rank_from_counting: disjointness inconclusive at max precision");

    VertexPolytope p = make_vertex_polytope(a);
    Rat count = make_rat(count_lattice_points(p, s, cfg).count);
    return locate_rank(table, count, "rank_from_counting");
}

long long minimal_certified_s(unsigned m, unsigned n, const Rat& r_big,
                              unsigned prec) {
    if (m < 2) throw input_error("minimal_certified_s: m must be at least 2");
    Int l0 = 1;
    for (unsigned t = 2; t <= m; ++t)
        mpz_lcm_ui(l0.get_mpz_t(), l0.get_mpz_t(), t);
    const long long step = to_long(l0);

    auto good = [&](long long t) {
        return interval_table_counting(m, n, r_big, t * step, Rat(1), prec).verdict ==
               Verdict::disjoint;
    };

    long long t = 1;
    while (!good(t)) {
        if (t > (1LL << 40)) throw input_error("minimal_certified_s: no certified s found");
        t *= 2;
    }
    long long lo = t / 2, hi = t;  // lo bad (or 0), hi good
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        (good(mid) ? hi : lo) = mid;
    }
    return hi * step;
}

Int recipe_s(unsigned m, unsigned n, const Rat& r_big, unsigned k) {
    require_rank_range(m, k);
    Rat inner = pow_rat(Rat(static_cast<long>(k)), k) * three_pow(m + n - 2) *
                pow_rat(Rat(2) * r_big * Rat(ceil_sqrt(Int(static_cast<long>(m - 1)))),
                        k - 1);
    return factorial(k) * ceil_rat(inner);
}

bool zero_volume_decision(const Matrix& a) {
    return tropical_rank(a) < a.rows();
}

}  // namespace tropvol
