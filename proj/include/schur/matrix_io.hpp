#pragma once

#include <iosfwd>
#include <string>

#include "schur/linalg.hpp"

namespace schur {

// Header "SCHURMAT 1 n d dim", then one row per line of "re im" pairs.
// Binary twin: "SCHURMAT", uint16 n, uint16 d, uint32 dim, then row-major
// little-endian double pairs.
struct MatrixFile {
  int n = 0;
  int d = 0;
  ComplexMatrix matrix;
};

enum class MatrixFormat { Text, Binary };

void write_matrix_text(std::ostream& os, const MatrixFile& m);
MatrixFile read_matrix_text(std::istream& is);
void write_matrix_binary(std::ostream& os, const MatrixFile& m);
MatrixFile read_matrix_binary(std::istream& is);

void save_matrix(const std::string& path, const MatrixFile& m, MatrixFormat format);
// Detects the format from the first bytes.
MatrixFile load_matrix(const std::string& path);

}  // namespace schur
