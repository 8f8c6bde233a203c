#include "tropvol/rank.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace tropvol {

namespace {

// Shortest-augmenting-path assignment solver (row potentials u, column
// potentials v).  Returns the matched column per row, or empty if no
// finite perfect matching exists.
std::vector<std::size_t> solve_assignment(const Matrix& c, Rat* value_out) {
    const std::size_t n = c.rows();
    std::vector<Rat> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, n);  // match[j] = row on column j, n = free
    std::vector<std::size_t> way(n + 1, 0);

    auto reduced = [&](std::size_t i, std::size_t j) -> Ext {
        const Ext& cij = c.at(i, j - 1);
        if (cij.is_inf()) return Ext::inf();
        return Ext(cij.value() - u[i] - v[j]);
    };

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Ext> minv(n + 1, Ext::inf());
        std::vector<bool> used(n + 1, false);
        std::size_t j0 = 0;
        match[0] = i;
        do {
            used[j0] = true;
            std::size_t i0 = match[j0], j1 = 0;
            Ext delta = Ext::inf();
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Ext cur = reduced(i0, j);
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (delta.is_inf()) return {};  // no augmenting path with finite weight
            const Rat dv = delta.value();
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += dv;
                    if (j > 0) v[j] -= dv;
                } else if (minv[j].is_finite()) {
                    minv[j] = Ext(minv[j].value() - dv);
                }
            }
            j0 = j1;
        } while (match[j0] != n);
        // augment along the alternating path
        while (j0 != 0) {
            std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        }
    }

    Rat total = 0;
    std::vector<std::size_t> row_to_col(n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        row_to_col[match[j]] = j - 1;
        total += c.at(match[j], j - 1).value();
    }
    if (value_out) *value_out = total;
    return row_to_col;
}

void combinations(std::size_t n, std::size_t r,
                  const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (fn(idx)) return;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

PermanentResult tropical_permanent(const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("tropical_permanent: non-square");
    Rat value;
    auto witness = solve_assignment(m, &value);
    if (witness.empty())
        throw no_finite_permanent("tropical_permanent: every permutation has infinite weight");

    PermanentResult res{value, witness, false};
    // A second optimal permutation exists iff forbidding some edge of the
    // optimum leaves the optimal value unchanged.
    for (std::size_t i = 0; i < m.rows() && !res.singular; ++i) {
        Matrix forbidden = m;
        forbidden.at(i, witness[i]) = Ext::inf();
        Rat alt;
        if (!solve_assignment(forbidden, &alt).empty() && alt == value)
            res.singular = true;
    }
    return res;
}

std::size_t tropical_rank(const Matrix& a) {
    if (!a.all_finite()) throw input_error("tropical_rank: non-finite entry");
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t r = std::min(m, n); r >= 1; --r) {
        bool found = false;
        combinations(m, r, [&](const std::vector<std::size_t>& rows) {
            combinations(n, r, [&](const std::vector<std::size_t>& cols) {
                Matrix minor(r, r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        minor.at(i, j) = a.at(rows[i], cols[j]);
                if (!tropical_permanent(minor).singular) {
                    found = true;
                    return true;
                }
                return false;
            });
            return found;
        });
        if (found) return r;
    }
    return 0;  // unreachable for finite matrices
}

SpectralData min_cycle_mean(const CellSystem& b) {
    const std::size_t m = b.size();
    // Karp: D[k][v] = min weight of a walk of length k ending at v,
    // starting anywhere.
    std::vector<std::vector<Ext>> d(m + 1, std::vector<Ext>(m, Ext::inf()));
    for (std::size_t v = 0; v < m; ++v) d[0][v] = Ext(0);
    for (std::size_t k = 1; k <= m; ++k)
        for (std::size_t u = 0; u < m; ++u) {
            if (d[k - 1][u].is_inf()) continue;
            for (std::size_t v = 0; v < m; ++v)
                d[k][v] = d[k][v] & (d[k - 1][u] * b.b.at(u, v));
        }

    bool have = false;
    Rat rho;
    for (std::size_t v = 0; v < m; ++v) {
        if (d[m][v].is_inf()) continue;
        bool row_have = false;
        Rat row_max;
        for (std::size_t k = 0; k < m; ++k) {
            if (d[k][v].is_inf()) continue;
            Rat cand = (d[m][v].value() - d[k][v].value()) / Rat(static_cast<long>(m - k));
            if (!row_have || cand > row_max) {
                row_max = cand;
                row_have = true;
            }
        }
        if (row_have && (!have || row_max < rho)) {
            rho = row_max;
            have = true;
        }
    }
    if (!have) throw input_error("min_cycle_mean: graph has no finite cycle");

    // Critical graph of B - rho: edges on zero-mean cycles.
    CellSystem shifted{Matrix(m, m, Ext::inf())};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (b.b.at(i, j).is_finite())
                shifted.b.at(i, j) = Ext(b.b.at(i, j).value() - rho);
    CellSystem star = kleene_star(shifted);

    std::vector<std::vector<std::size_t>> crit_out(m);
    std::vector<bool> critical(m, false);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Ext& e = shifted.b.at(i, j);
            const Ext& back = star.b.at(j, i);
            if (e.is_finite() && back.is_finite() && e.value() + back.value() == 0) {
                crit_out[i].push_back(j);
                critical[i] = critical[j] = true;
            }
        }

    SpectralData sd;
    sd.rho_min = rho;

    // Witness cycle: walk critical edges from the smallest critical vertex.
    {
        std::size_t start = 0;
        while (!critical[start]) ++start;
        std::vector<long> pos(m, -1);
        std::vector<std::size_t> path;
        std::size_t v = start;
        while (pos[v] < 0) {
            pos[v] = static_cast<long>(path.size());
            path.push_back(v);
            v = crit_out[v].front();
        }
        sd.critical_cycle.assign(path.begin() + pos[v], path.end());
    }

    // SCCs of the critical subgraph: i, j in one component iff each
    // reaches the other through critical edges.
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (auto j : crit_out[i]) reach[i][j] = true;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < m; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    std::vector<bool> assigned(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (!critical[i] || assigned[i]) continue;
        std::vector<std::size_t> comp;
        for (std::size_t j = i; j < m; ++j)
            if (critical[j] && !assigned[j] && (i == j || (reach[i][j] && reach[j][i]))) {
                comp.push_back(j);
                assigned[j] = true;
            }
        sd.representatives.push_back(comp.front());
        sd.critical_sccs.push_back(std::move(comp));
    }
    return sd;
}

InnerBall inner_radius(const CellSystem& b) {
    CellSystem star = kleene_star(b);  // throws on empty cell
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (star.b.at(i, j).is_inf())
                throw input_error("inner_radius: unbounded cell");

    SpectralData sd = min_cycle_mean(b);
    const std::size_t m = b.size();
    CellSystem shifted{Matrix(m, m, Ext::inf())};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (b.b.at(i, j).is_finite())
                shifted.b.at(i, j) = Ext(b.b.at(i, j).value() - sd.rho_min);
    CellSystem sstar = kleene_star(shifted);

    const std::size_t d = sd.representatives.front();
    Point u(m);
    for (std::size_t i = 0; i < m; ++i) u[i] = sstar.b.at(i, d).value();
    return InnerBall{sd.rho_min, normalize_point(u)};
}

CellSystem project_to_XT(const CellSystem& b, const std::vector<std::size_t>& d) {
    auto classes = tightness_classes(b);
    if (d.size() != classes.size())
        throw input_error("project_to_XT: |D| != number of tightness classes");
    std::vector<bool> hit(classes.size(), false);
    for (auto idx : d) {
        bool found = false;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const auto& cls = classes[c];
            if (std::find(cls.begin(), cls.end(), idx) != cls.end()) {
                if (hit[c]) throw input_error("project_to_XT: two indices in one class");
                hit[c] = true;
                found = true;
                break;
            }
        }
        if (!found) throw input_error("project_to_XT: index out of range");
    }

    // restrict the shortest-path closure: paths through dropped vertices
    // still constrain the representatives
    CellSystem star = kleene_star(b);
    CellSystem t{Matrix(d.size(), d.size(), Ext::inf())};
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (i != j) t.b.at(i, j) = star.b.at(d[i], d[j]);
    return t;
}

Point apply_psi(const CellSystem& b, const std::vector<std::size_t>& d,
                const std::vector<Rat>& y) {
    if (y.size() != d.size()) throw dimension_mismatch("apply_psi: |y| != |D|");
    CellSystem star = kleene_star(b);
    Point x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        Ext best = Ext::inf();
        for (std::size_t t = 0; t < d.size(); ++t)
            best = best & (star.b.at(i, d[t]) * Ext(y[t]));
        x[i] = best.value();
    }
    return x;
}

}  // namespace tropvol
