#pragma once

#include <iosfwd>
#include <string>

#include "bellswap/matrix.hpp"

namespace bellswap {

// Matrix file schema: { "dim": n, "re": [[...]], "im": [[...]] }, row-major,
// numbers written with 17 significant digits so values round-trip exactly.
std::string matrix_to_json(const ComplexMatrix& m, int indent = 0);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

ComplexMatrix matrix_from_json(const std::string& text);
ComplexMatrix read_matrix_file(const std::string& path);

// %.17g with a fixed ("C") locale.
std::string format_double_17(double v);

}  // namespace bellswap
