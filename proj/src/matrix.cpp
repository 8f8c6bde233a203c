#include "tropvol/matrix.hpp"

#include <sstream>

namespace tropvol {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            Int num(digits, 10);
            Int den = pow_int(Int(10), s.size() - dot - 1);
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        Rat r(s);
        r.canonicalize();
        if (r.get_den() <= 0) throw input_error("non-positive denominator: " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational literal: '" + s + "'");
    }
}

std::string rat_str(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Matrix Matrix::from_rows(const std::vector<std::vector<Ext>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw input_error("matrix dimensions must be positive");
    Matrix a(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != a.cols()) throw dimension_mismatch("ragged matrix rows");
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = rows[i][j];
    }
    return a;
}

bool Matrix::all_finite() const {
    for (const auto& e : data_)
        if (e.is_inf()) return false;
    return true;
}

bool Matrix::all_integer() const {
    for (const auto& e : data_)
        if (e.is_inf() || !is_integer(e.value())) return false;
    return true;
}

std::vector<Ext> Matrix::column(std::size_t j) const {
    std::vector<Ext> c(m_);
    for (std::size_t i = 0; i < m_; ++i) c[i] = at(i, j);
    return c;
}

Matrix minplus_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw dimension_mismatch("minplus_product: inner dimensions differ");
    Matrix c(a.rows(), b.cols(), Ext::inf());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_inf()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = c.at(i, j) & (a.at(i, k) * b.at(k, j));
        }
    return c;
}

Point normalize_point(const Point& x) {
    if (x.empty()) throw input_error("empty point");
    Point y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - x[0];
    return y;
}

}  // namespace tropvol
