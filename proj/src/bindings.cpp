#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropvol/bounds.hpp"
#include "tropvol/geometry.hpp"
#include "tropvol/ineq.hpp"
#include "tropvol/io.hpp"
#include "tropvol/rank.hpp"

namespace py = pybind11;
using namespace tropvol;

namespace {

Ext cell_from_object(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Ext(Rat(h.cast<long>()));
    std::string s = py::str(h).cast<std::string>();
    if (s == "inf" || s == "+inf") return Ext::inf();
    return Ext(parse_rat(s));
}

Matrix matrix_from_object(const py::object& rows) {
    std::vector<std::vector<Ext>> data;
    for (const py::handle& row : rows) {
        std::vector<Ext> r;
        for (const py::handle& cell : row) r.push_back(cell_from_object(cell));
        data.push_back(std::move(r));
    }
    return Matrix::from_rows(data);
}

py::list matrix_to_list(const Matrix& a) {
    py::list rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < a.cols(); ++j) row.append(a.at(i, j).str());
        rows.append(std::move(row));
    }
    return rows;
}

Point point_from_object(const py::object& xs) {
    Point x;
    for (const py::handle& v : xs) {
        if (py::isinstance<py::int_>(v))
            x.push_back(Rat(v.cast<long>()));
        else
            x.push_back(parse_rat(py::str(v).cast<std::string>()));
    }
    return x;
}

SatFormula formula_from_args(std::size_t n, const py::object& clauses) {
    SatFormula f;
    f.n_vars = n;
    for (const py::handle& c : clauses) {
        auto pair = c.cast<std::pair<std::size_t, std::size_t>>();
        f.clauses.push_back(pair);
    }
    validate_formula(f);
    return f;
}

}  // namespace

PYBIND11_MODULE(_tropvol, mod) {
    mod.doc() = "exact tropical polytope volumes, lattice counts and rank bounds";

    py::register_exception<budget_exceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<input_error>(mod, "InputError", PyExc_ValueError);

    mod.def("minplus_product", [](const py::object& a, const py::object& b) {
        return matrix_to_list(minplus_product(matrix_from_object(a), matrix_from_object(b)));
    });
    mod.def("normalize", [](const py::object& a) {
        return matrix_to_list(normalize_generators(matrix_from_object(a)));
    });
    mod.def("type_of", [](const py::object& a, const py::object& x) {
        CovectorType t = type_of(matrix_from_object(a), point_from_object(x));
        py::list rows;
        for (const auto& row : t.rows) {
            py::list r;
            for (auto j : row) r.append(j + 1);
            rows.append(std::move(r));
        }
        return rows;
    });
    mod.def("contains", [](const py::object& a, const py::object& x) {
        return contains_point(matrix_from_object(a), point_from_object(x));
    });
    mod.def("volume", [](const py::object& a) {
        return rat_str(volume(make_vertex_polytope(matrix_from_object(a))).volume);
    });
    mod.def("count", [](const py::object& a, long long s) {
        return count_lattice_points(make_vertex_polytope(matrix_from_object(a)), s).count;
    });
    mod.def("rank", [](const py::object& a) {
        return tropical_rank(matrix_from_object(a));
    });
    mod.def("zero_volume", [](const py::object& a) {
        return zero_volume_decision(matrix_from_object(a));
    });
    mod.def("hilbert_count", [](std::size_t d, const std::string& delta) {
        return hilbert_ball_count(d, parse_rat(delta)).get_str();
    });
    mod.def("hilbert_volume", [](std::size_t d, const std::string& delta) {
        return rat_str(hilbert_ball_volume(d, parse_rat(delta)));
    });
    mod.def("hilbert_generators", [](std::size_t d, const std::string& eps) {
        return matrix_to_list(hilbert_ball_generators(d, parse_rat(eps)));
    });
    mod.def("outer_parallel_body", [](const py::object& a, const std::string& eps) {
        VertexPolytope h =
            outer_parallel_body(make_vertex_polytope(matrix_from_object(a)), parse_rat(eps));
        return py::make_tuple(matrix_to_list(h.generators), h.scale_denominator.get_str());
    });
    mod.def("hopb_volume", [](const py::object& a, const std::string& eps) {
        VertexPolytope h =
            outer_parallel_body(make_vertex_polytope(matrix_from_object(a)), parse_rat(eps));
        return rat_str(volume(h).volume);
    });
    mod.def("sat_count", [](std::size_t n, const py::object& clauses) {
        return sat_count_bruteforce(formula_from_args(n, clauses));
    });
    mod.def("sat_gadget_volume", [](std::size_t n, const py::object& clauses, long long l) {
        return rat_str(ineq_volume(sat_gadget(formula_from_args(n, clauses), l)).volume);
    });
    mod.def("sat_gadget_count", [](std::size_t n, const py::object& clauses, long long s) {
        return ineq_count(sat_gadget(formula_from_args(n, clauses), 1), s);
    });
    mod.def("choice_epsilon", [](unsigned m, unsigned n, const std::string& r) {
        return rat_str(choice_epsilon(m, n, parse_rat(r)));
    });
    mod.def("rank_from_volume", [](const py::object& a, const std::string& eps) {
        return rank_from_volume(matrix_from_object(a), parse_rat(eps));
    });
    mod.def("rank_from_counting", [](const py::object& a, long long s) {
        return rank_from_counting(matrix_from_object(a), s);
    });
    mod.def("parse_matrix", [](const std::string& text) {
        return matrix_to_list(parse_matrix(text));
    });
}
