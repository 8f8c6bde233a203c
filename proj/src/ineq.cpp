#include "tropvol/ineq.hpp"

#include <algorithm>

namespace tropvol {

namespace {

Ext eval_side(const Matrix& a, const std::vector<Ext>& c, std::size_t i,
              const Point& x) {
    Ext v = c[i];
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const Ext& e = a.at(i, j);
        if (e.is_inf()) continue;
        v = v & Ext(e.value() + x[j]);
    }
    return v;
}

void check_shape(const InequalityPolytope& q) {
    const std::size_t r = q.lhs.rows(), n = q.lhs.cols();
    if (q.rhs.rows() != r || q.rhs.cols() != n || q.lhs_c.size() != r ||
        q.rhs_c.size() != r || q.box.size() != n)
        throw dimension_mismatch("inequality system: inconsistent shapes");
    for (const auto& [lo, hi] : q.box)
        if (lo > hi) throw input_error("inequality system: empty box interval");
}

void lcm_in(Int& q, const Rat& v) {
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), v.get_den_mpz_t());
}

Int system_denominator(const InequalityPolytope& q) {
    Int d = 1;
    for (std::size_t i = 0; i < q.lhs.rows(); ++i) {
        for (std::size_t j = 0; j < q.lhs.cols(); ++j) {
            if (q.lhs.at(i, j).is_finite()) lcm_in(d, q.lhs.at(i, j).value());
            if (q.rhs.at(i, j).is_finite()) lcm_in(d, q.rhs.at(i, j).value());
        }
        if (q.lhs_c[i].is_finite()) lcm_in(d, q.lhs_c[i].value());
        if (q.rhs_c[i].is_finite()) lcm_in(d, q.rhs_c[i].value());
    }
    return d;
}

Int box_denominator(const InequalityPolytope& q) {
    Int d = 1;
    for (const auto& [lo, hi] : q.box) {
        lcm_in(d, lo);
        lcm_in(d, hi);
    }
    return d;
}

// Integer form of the system: incoming points are pre-multiplied by
// xmul, matrix entries and constants by entry_scale.
struct IntSystem {
    std::size_t r = 0, n = 0;
    long long xmul = 1;
    std::vector<long long> la, ra, lc, rc;
    bool exact = true;  // all scaled constants were integer

    IntSystem(const InequalityPolytope& q, const Rat& entry_scale, long long xm)
        : r(q.lhs.rows()), n(q.lhs.cols()), xmul(xm) {
        auto conv = [&](const Ext& e) -> long long {
            if (e.is_inf()) return kIntInf;
            Rat v = e.value() * entry_scale;
            if (!is_integer(v)) {
                exact = false;
                // round toward an integer grid; callers flag the result
                return to_long(floor_rat(v));
            }
            return to_long(Int(v));
        };
        la.resize(r * n);
        ra.resize(r * n);
        lc.resize(r);
        rc.resize(r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                la[i * n + j] = conv(q.lhs.at(i, j));
                ra[i * n + j] = conv(q.rhs.at(i, j));
            }
            lc[i] = conv(q.lhs_c[i]);
            rc[i] = conv(q.rhs_c[i]);
        }
    }

    bool contains(const long long* x) const {
        for (std::size_t i = 0; i < r; ++i) {
            long long lv = lc[i], rv = rc[i];
            for (std::size_t j = 0; j < n; ++j) {
                long long a = la[i * n + j];
                if (a != kIntInf) lv = std::min(lv, a + xmul * x[j]);
                long long b = ra[i * n + j];
                if (b != kIntInf) rv = std::min(rv, b + xmul * x[j]);
            }
            if (lv > rv) return false;
        }
        return true;
    }
};

}  // namespace

bool ineq_contains(const InequalityPolytope& q, const Point& x) {
    check_shape(q);
    if (x.size() != q.box.size())
        throw dimension_mismatch("ineq_contains: point size mismatch");
    for (std::size_t j = 0; j < q.box.size(); ++j)
        if (x[j] < q.box[j].first || x[j] > q.box[j].second) return false;
    for (std::size_t i = 0; i < q.lhs.rows(); ++i)
        if (!(eval_side(q.lhs, q.lhs_c, i, x) <= eval_side(q.rhs, q.rhs_c, i, x)))
            return false;
    return true;
}

IneqVolumeResult ineq_volume(const InequalityPolytope& q, const ScanConfig& cfg) {
    check_shape(q);
    const std::size_t n = q.box.size();
    const long long perms = detail::permutation_count(n);

    auto scan_box = [&](const Int& scale) {
        IntBox box;
        for (const auto& [lo, hi] : q.box)
            box.emplace_back(to_long(floor_rat(Rat(lo * scale))),
                             to_long(ceil_rat(Rat(hi * scale))));
        return box;
    };
    auto fits = [&](const Int& scale) {
        return int_box_cubes(scan_box(scale)) <= cfg.budget / perms;
    };

    Int full = 1;
    mpz_lcm(full.get_mpz_t(), system_denominator(q).get_mpz_t(),
            box_denominator(q).get_mpz_t());
    Int scale = full;
    if (!fits(scale)) {
        scale = box_denominator(q);
        if (!fits(scale))
            throw budget_exceeded(int_box_cubes(scan_box(scale)) * perms);
    }

    IntBox box = scan_box(scale);
    long long tested = int_box_cubes(box) * perms;
    Rat entry_scale = Rat(scale) * Rat(static_cast<long>(n + 1));
    IntSystem sys(q, entry_scale, 1);

    long long hits;
    if (sys.exact) {
        hits = count_alcoves_in_box(
            box, [&sys](const long long* c) { return sys.contains(c); }, cfg);
    } else {
        // constants stayed fractional at this resolution; evaluate the
        // centroids exactly and report a refinement-limited estimate
        Rat denom = entry_scale;
        hits = count_alcoves_in_box(
            box,
            [&](const long long* c) {
                Point y(n);
                for (std::size_t j = 0; j < n; ++j)
                    y[j] = Rat(static_cast<long>(c[j])) / denom;
                return ineq_contains(q, y);
            },
            cfg);
    }
    Rat vol = make_rat(hits) / Rat(factorial(n)) / Rat(pow_int(scale, n));
    return IneqVolumeResult{vol, tested, sys.exact};
}

long long ineq_count(const InequalityPolytope& q, long long s, const ScanConfig& cfg) {
    check_shape(q);
    if (s < 1) throw input_error("ineq_count: s must be positive");
    const std::size_t n = q.box.size();

    IntBox box;
    for (const auto& [lo, hi] : q.box)
        box.emplace_back(to_long(ceil_rat(Rat(lo * make_rat(s)))),
                         to_long(floor_rat(Rat(hi * make_rat(s)))));

    Int q1 = system_denominator(q);
    IntSystem sys(q, Rat(q1) * make_rat(s), to_long(q1));
    if (sys.exact)
        return count_lattice_points_in_box(
            box, [&sys](const long long* x) { return sys.contains(x); }, cfg);

    return count_lattice_points_in_box(
        box,
        [&](const long long* x) {
            Point y(n);
            for (std::size_t j = 0; j < n; ++j)
                y[j] = make_rat(x[j], s);
            return ineq_contains(q, y);
        },
        cfg);
}

void validate_formula(const SatFormula& f) {
    if (f.n_vars == 0) throw input_error("formula needs at least one variable");
    for (const auto& [i, k] : f.clauses) {
        if (i < 1 || i > f.n_vars || k < 1 || k > f.n_vars)
            throw input_error("clause literal out of range");
        if (i == k) throw input_error("clause literals must be distinct");
    }
}

InequalityPolytope sat_gadget(const SatFormula& f, long long l) {
    validate_formula(f);
    if (l < 1) throw input_error("sat_gadget: L must be positive");
    const std::size_t n = f.n_vars, r = f.clauses.size();

    InequalityPolytope q{Matrix(std::max<std::size_t>(r, 1), n, Ext::inf()),
                         std::vector<Ext>(std::max<std::size_t>(r, 1), Ext::inf()),
                         Matrix(std::max<std::size_t>(r, 1), n, Ext::inf()),
                         std::vector<Ext>(std::max<std::size_t>(r, 1), Ext::inf()),
                         {}};
    if (r == 0) {
        // no rows: inf <= inf holds everywhere, box only
        q.lhs = Matrix(1, n, Ext::inf());
        q.rhs = Matrix(1, n, Ext::inf());
        q.lhs_c.assign(1, Ext::inf());
        q.rhs_c.assign(1, Ext::inf());
    } else {
        q.lhs = Matrix(r, n, Ext::inf());
        q.rhs = Matrix(r, n, Ext::inf());
        q.lhs_c.assign(r, Ext::inf());
        q.rhs_c.assign(r, Ext::inf());
        for (std::size_t c = 0; c < r; ++c) {
            q.lhs.at(c, f.clauses[c].first - 1) = Ext(Rat(0));
            q.lhs.at(c, f.clauses[c].second - 1) = Ext(Rat(0));
            q.rhs_c[c] = Ext(make_rat(-l, 2));
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        q.box.emplace_back(make_rat(-l), Rat(0));
    return q;
}

long long sat_count_bruteforce(const SatFormula& f, std::size_t max_n) {
    validate_formula(f);
    if (f.n_vars > max_n)
        throw input_error("sat_count_bruteforce: too many variables for brute force");
    long long count = 0;
    for (unsigned long mask = 0; mask < (1UL << f.n_vars); ++mask) {
        bool ok = true;
        for (const auto& [i, k] : f.clauses)
            if (!((mask >> (i - 1)) & 1) && !((mask >> (k - 1)) & 1)) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

}  // namespace tropvol
