#ifndef TROPVOL_MATRIX_HPP
#define TROPVOL_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "tropvol/extended.hpp"

namespace tropvol {

struct dimension_mismatch : input_error {
    using input_error::input_error;
};

/// Dense matrix over the min-plus semiring.
class Matrix {
  public:
    Matrix() : m_(0), n_(0) {}
    Matrix(std::size_t m, std::size_t n, Ext fill = Ext(0))
        : m_(m), n_(n), data_(m * n, fill) {
        if (m == 0 || n == 0) throw input_error("matrix dimensions must be positive");
    }

    static Matrix from_rows(const std::vector<std::vector<Ext>>& rows);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    Ext& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Ext& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool all_finite() const;
    bool all_integer() const;

    std::vector<Ext> column(std::size_t j) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.data_ == b.data_;
    }

  private:
    std::size_t m_, n_;
    std::vector<Ext> data_;
};

/// min-plus matrix product: (A*B)_ij = min_k (a_ik + b_kj).
Matrix minplus_product(const Matrix& a, const Matrix& b);

/// A point of TP^{m-1}, stored as a full length-m coordinate vector.
using Point = std::vector<Rat>;

/// Shifts so that the first coordinate is 0.
Point normalize_point(const Point& x);

}  // namespace tropvol

#endif
