#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "schur/bch.hpp"
#include "schur/krovi.hpp"
#include "schur/matrix_io.hpp"
#include "schur/tables.hpp"

using namespace schur;

namespace {

MatrixFile sample() {
  MatrixFile m{3, 2, schur_unitary_krovi(3, 2).dense()};
  m.matrix(0, 1) = cplx(1.0 / 3.0, -2.0 / 7.0);
  return m;
}

}  // namespace

TEST(MatrixText, Roundtrip) {
  const MatrixFile m = sample();
  std::stringstream ss;
  write_matrix_text(ss, m);
  EXPECT_EQ(ss.str().rfind("SCHURMAT 1 3 2 8\n", 0), 0u);
  const MatrixFile back = read_matrix_text(ss);
  EXPECT_EQ(back.n, 3);
  EXPECT_EQ(back.d, 2);
  EXPECT_LE(max_abs_diff(back.matrix, m.matrix), 1e-15);
}

TEST(MatrixBinary, BitExactRoundtrip) {
  const MatrixFile m = sample();
  std::stringstream ss;
  write_matrix_binary(ss, m);
  EXPECT_EQ(ss.str().size(), 16u + 64u * 16u);
  const MatrixFile back = read_matrix_binary(ss);
  EXPECT_TRUE(back.matrix == m.matrix);
}

TEST(MatrixFiles, LoadDetectsFormat) {
  const auto dir = std::filesystem::temp_directory_path();
  const MatrixFile m{1, 5, schur_unitary_bch(1, 5).dense()};
  for (auto fmt : {MatrixFormat::Text, MatrixFormat::Binary}) {
    const auto path = (dir / (fmt == MatrixFormat::Text ? "schur_io_test.txt" : "schur_io_test.bin")).string();
    save_matrix(path, m, fmt);
    const MatrixFile back = load_matrix(path);
    EXPECT_LE(max_abs_diff(back.matrix, ComplexMatrix::Identity(5, 5)), 0.0);
    std::remove(path.c_str());
  }
}

TEST(MatrixFiles, RejectBadInput) {
  std::stringstream bad("SCHURMAT 1 2 2 5\n");
  EXPECT_THROW(read_matrix_text(bad), std::runtime_error);
  std::stringstream truncated("SCHURMAT 1 1 2 2\n1 0 0 0\n");
  EXPECT_THROW(read_matrix_text(truncated), std::runtime_error);
  EXPECT_THROW(load_matrix("/nonexistent/matrix.txt"), std::runtime_error);
}

TEST(Tables, KostkaRowsMatchKostka) {
  const auto rows = kostka_rows(4);
  EXPECT_EQ(rows.size(), 25u);
  for (const auto& r : rows) {
    EXPECT_EQ(r["kind"], "kostka");
    const Partition shape(r["shape"].get<std::vector<int>>());
    const Composition mu(r["mu"].get<std::vector<int>>());
    EXPECT_EQ(r["value"].get<std::int64_t>(), kostka(shape, mu));
  }
}

TEST(Tables, FsymbolRows) {
  const auto rows = fsymbol_rows(Partition({1}), Partition({2, 1}));
  bool half = false, root = false;
  for (const auto& r : rows) {
    if (r["family"] != "left") continue;
    const double v = r["value"];
    half = half || std::abs(v - 0.5) < 1e-15;
    root = root || std::abs(v - std::sqrt(3.0) / 2) < 1e-15;
  }
  EXPECT_TRUE(half && root);
}

TEST(Tables, VentryWorkedExample) {
  const GTPattern m({{0}, {2, 0}, {2, 0, 0}, {2, 1, 0, 0}, {3, 2, 0, 0, 0}});
  const auto rows = ventry_rows(Partition({3, 2}), Composition({2, 1, 2}), StandardTableau::from_word({1, 1, 1, 2, 2}), m);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["value"].get<double>(), 0.0);
}

TEST(Tables, JsonLinesRoundtrip) {
  const auto rows = rw_rows({2, 1, 0}, {2, 0});
  std::stringstream ss;
  write_table(ss, rows);
  EXPECT_EQ(read_table(ss), rows);
}
