#include <gtest/gtest.h>

#include <sstream>

#include "properties.hpp"
#include "reveng/abelian.hpp"
#include "reveng/int_matrix.hpp"

using namespace reveng;

TEST(IntMatrix, DeterminantBareiss) {
  EXPECT_EQ(determinant(IntMatrix{{2, 4}, {6, 8}}), -8);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
  EXPECT_EQ(determinant(IntMatrix::identity(5)), 1);
}

TEST(IntMatrix, SmithSmallExample) {
  IntMatrix a{{2, 4}, {6, 8}};
  auto s = smith_normal_form(a);
  ASSERT_EQ(s.rank, 2u);
  EXPECT_EQ(s.diag[0], 2);
  EXPECT_EQ(s.diag[1], 4);
  EXPECT_EQ(s.left * a * s.right, s.diagonal_matrix());
}

TEST(IntMatrix, SmithZeroAndRectangular) {
  auto z = smith_normal_form(IntMatrix(3, 2));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.diag.empty());
  IntMatrix r{{1, 2, 3}, {4, 5, 6}};
  auto s = smith_normal_form(r);
  ASSERT_EQ(s.rank, 2u);
  EXPECT_EQ(s.diag[0], 1);
  EXPECT_EQ(s.diag[1], 3);
  EXPECT_EQ(s.left * r * s.right, s.diagonal_matrix());
}

TEST(IntMatrix, SmithLargeEntriesDoNotOverflow) {
  IntMatrix a{{1'000'000'007, 0}, {0, 998'244'353}};
  auto s = smith_normal_form(a * a * a);
  ASSERT_EQ(s.rank, 2u);
  EXPECT_EQ(s.diag[1], BigInt(1'000'000'007) * 998'244'353 * BigInt(1'000'000'007) * 998'244'353 *
                              BigInt(1'000'000'007) * 998'244'353);
}

TEST(IntMatrix, RowLattice) {
  IntMatrix a{{2, 0}, {0, 3}};
  EXPECT_TRUE(in_row_lattice(a, {4, -3}));
  EXPECT_FALSE(in_row_lattice(a, {1, 0}));
  EXPECT_THROW(in_row_lattice(a, {1, 0, 0}), InvalidArgument);
}

TEST(IntMatrix, ReadWrite) {
  std::istringstream in("2 3\n1 -2 3\n4 5 -6\n");
  auto m = read_matrix(in);
  EXPECT_EQ(m, (IntMatrix{{1, -2, 3}, {4, 5, -6}}));
  std::ostringstream out;
  write_matrix(out, m);
  std::istringstream back(out.str());
  EXPECT_EQ(read_matrix(back), m);
  std::istringstream bad("2 2\n1 2 3\n");
  EXPECT_THROW(read_matrix(bad), InvalidArgument);
  std::istringstream junk("2 x\n");
  EXPECT_THROW(read_matrix(junk), InvalidArgument);
}

TEST(Abelian, CokernelInvariants) {
  EXPECT_EQ(to_string(invariants_of_cokernel(IntMatrix{{2, 4}, {6, 8}})), "Z/2 + Z/4");
  EXPECT_EQ(to_string(invariants_of_cokernel(IntMatrix{{2, 0, 0}})), "Z^2 + Z/2");
  EXPECT_EQ(to_string(invariants_of_cokernel(IntMatrix{{1, 0}, {0, 1}})), "0");
}

TEST(IntMatrixProperty, SmithMatchesGcdOfMinors) {
  auto const c = props::snf_matches_minors();
  EXPECT_TRUE(c.ok) << c.detail;
  EXPECT_EQ(c.samples, 500u);
}
