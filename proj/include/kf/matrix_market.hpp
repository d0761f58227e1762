// matrix_market.hpp — MatrixMarket readers and writers, plus the plain text
// vector format (one value per line, "re" or "re im").
//
// Supported: array and coordinate formats, real and complex fields, general
// symmetry.  Array data is stored column-major in the file, per the format
// definition.  Coordinate entries are 1-based; duplicate entries accumulate.
#pragma once

#include <iosfwd>
#include <string>

#include "kf/matrix.hpp"

namespace kf {

Matrix parse_matrix_market(std::istream& in);
Matrix parse_matrix_market_file(const std::string& path);

// Array-format writer; emits a complex field iff any entry has a nonzero
// imaginary part.  Values are printed with 17 significant digits.
void write_matrix_market(std::ostream& out, const Matrix& m);
void write_matrix_market_file(const std::string& path, const Matrix& m);

// Coordinate-format writer for unit lower triangular matrices: the unit
// diagonal plus every nonzero strict-lower entry, row-major order.
void write_unit_lower_coordinate(std::ostream& out, const UnitLowerTriangular& t);
void write_unit_lower_coordinate_file(const std::string& path, const UnitLowerTriangular& t);

Vector parse_vector(std::istream& in);
Vector parse_vector_file(const std::string& path);

void write_vector(std::ostream& out, const Vector& v);
void write_vector_file(const std::string& path, const Vector& v);

// 17-significant-digit formatting used by every writer (and the reports).
std::string format_double(double x);

}  // namespace kf
