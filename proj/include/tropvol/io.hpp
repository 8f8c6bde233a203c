#ifndef TROPVOL_IO_HPP
#define TROPVOL_IO_HPP

#include <iosfwd>
#include <string>

#include "tropvol/ineq.hpp"
#include "tropvol/matrix.hpp"

namespace tropvol {

struct parse_error : input_error {
    std::size_t line, column;
    parse_error(const std::string& msg, std::size_t line, std::size_t column);
};

/// Text format: "m n" header, then m rows of n entries ("p/q", decimal,
/// or "inf").  JSON alternative {"m":…,"n":…,"entries":[[…]]} detected
/// by a leading '{'.
Matrix parse_matrix(const std::string& text);
Matrix load_matrix(const std::string& path);

std::string matrix_to_text(const Matrix& a);
std::string matrix_to_json(const Matrix& a);

/// DIMACS-like monotone 2-SAT: header "p m2sat n r", then r lines "i k".
SatFormula parse_m2sat(const std::string& text);
SatFormula load_m2sat(const std::string& path);

}  // namespace tropvol

#endif
