#include "tropvol/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropvol {

bool CovectorType::covers_all_columns(std::size_t n) const {
    std::vector<bool> seen(n, false);
    for (const auto& row : rows)
        for (auto j : row) seen.at(j) = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool CovectorType::all_rows_nonempty() const {
    return std::none_of(rows.begin(), rows.end(),
                        [](const auto& r) { return r.empty(); });
}

Matrix normalize_generators(const Matrix& a) {
    if (!a.all_finite()) throw input_error("normalize_generators: non-finite entry");
    Matrix out(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const Rat& top = a.at(0, j).value();
        for (std::size_t i = 0; i < a.rows(); ++i)
            out.at(i, j) = Ext(a.at(i, j).value() - top);
    }
    return out;
}

CovectorType type_of(const Matrix& a, const Point& x) {
    if (!a.all_finite()) throw input_error("type_of: non-finite generator entry");
    if (x.size() != a.rows()) throw dimension_mismatch("type_of: point size != m");
    CovectorType s;
    s.rows.resize(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        // column minimum of a_kj - x_k
        Rat best = a.at(0, j).value() - x[0];
        for (std::size_t k = 1; k < a.rows(); ++k) {
            Rat v = a.at(k, j).value() - x[k];
            if (v < best) best = v;
        }
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a.at(i, j).value() - x[i] == best) s.rows[i].push_back(j);
    }
    return s;
}

bool contains_point(const Matrix& a, const Point& x) {
    if (!a.all_finite()) throw input_error("contains_point: non-finite generator entry");
    if (x.size() != a.rows()) throw dimension_mismatch("contains_point: point size != m");
    const std::size_t m = a.rows(), n = a.cols();
    // lambda_j = max_i (x_i - a_ij); then A (.) lambda >= x with equality
    // exactly on tconv(A).
    std::vector<Rat> lambda(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat best = x[0] - a.at(0, j).value();
        for (std::size_t i = 1; i < m; ++i) {
            Rat v = x[i] - a.at(i, j).value();
            if (v > best) best = v;
        }
        lambda[j] = best;
    }
    for (std::size_t i = 0; i < m; ++i) {
        Rat row = a.at(i, 0).value() + lambda[0];
        for (std::size_t j = 1; j < n; ++j) {
            Rat v = a.at(i, j).value() + lambda[j];
            if (v < row) row = v;
        }
        if (row != x[i]) return false;
    }
    return true;
}

CellSystem cell_system(const Matrix& a, const CovectorType& s) {
    if (!a.all_finite()) throw input_error("cell_system: non-finite generator entry");
    const std::size_t m = a.rows();
    if (s.rows.size() != m) throw dimension_mismatch("cell_system: type size != m");

    std::vector<std::size_t> empty_rows;
    for (std::size_t j = 0; j < m; ++j)
        if (s.rows[j].empty()) empty_rows.push_back(j);
    if (!empty_rows.empty()) {
        std::ostringstream os;
        os << "cell_system: unbounded cell, empty type rows:";
        for (auto j : empty_rows) os << ' ' << (j + 1);
        throw input_error(os.str());
    }

    CellSystem cs{Matrix(m, m, Ext::inf())};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) continue;
            Ext best = Ext::inf();
            for (auto i : s.rows[j])
                best = best & Ext(a.at(k, i).value() - a.at(j, i).value());
            cs.b.at(k, j) = best;
        }
    return cs;
}

CellSystem kleene_star(const CellSystem& b) {
    const std::size_t m = b.size();
    if (b.b.rows() != b.b.cols()) throw dimension_mismatch("kleene_star: non-square");
    Matrix d = b.b;
    for (std::size_t i = 0; i < m; ++i) d.at(i, i) = d.at(i, i) & Ext(0);
    // next-hop matrix for cycle reconstruction
    std::vector<std::vector<std::size_t>> nxt(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) nxt[i][j] = j;

    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            if (d.at(i, k).is_inf()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                Ext via = d.at(i, k) * d.at(k, j);
                if (via < d.at(i, j)) {
                    d.at(i, j) = via;
                    nxt[i][j] = nxt[i][k];
                }
            }
        }

    for (std::size_t i = 0; i < m; ++i) {
        if (d.at(i, i) < Ext(0)) {
            NegativeCycle cyc;
            cyc.weight = 0;
            std::size_t v = i;
            do {
                cyc.vertices.push_back(v);
                std::size_t w = nxt[v][i];
                cyc.weight += b.b.at(v, w).value();
                v = w;
            } while (v != i && cyc.vertices.size() <= m);
            throw negative_cycle_error(std::move(cyc));
        }
    }
    return CellSystem{std::move(d)};
}

std::vector<std::vector<std::size_t>> tightness_classes(const CellSystem& b) {
    CellSystem star = kleene_star(b);
    const std::size_t m = b.size();
    // union-find over tight pairs
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const Ext& ij = star.b.at(i, j);
            const Ext& ji = star.b.at(j, i);
            if (ij.is_finite() && ji.is_finite() && ij.value() + ji.value() == 0)
                parent[std::max(find(i), find(j))] = std::min(find(i), find(j));
        }
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> slot(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t r = find(i);
        if (slot[r] == m) {
            slot[r] = classes.size();
            classes.emplace_back();
        }
        classes[slot[r]].push_back(i);
    }
    return classes;
}

std::size_t cell_dimension(const CellSystem& b) {
    return tightness_classes(b).size() - 1;
}

BoundingBox bounding_box(const Matrix& a) {
    Matrix norm = normalize_generators(a);
    BoundingBox box;
    box.outer_radius = 0;
    for (std::size_t i = 1; i < norm.rows(); ++i) {
        Rat lo = norm.at(i, 0).value(), hi = lo;
        for (std::size_t j = 1; j < norm.cols(); ++j) {
            const Rat& v = norm.at(i, j).value();
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        if (hi - lo > box.outer_radius) box.outer_radius = hi - lo;
        box.intervals.emplace_back(std::move(lo), std::move(hi));
    }
    return box;
}

}  // namespace tropvol
