#include "bcwork/fixtures.hpp"
#include "bcwork/linalg.hpp"
#include "properties.hpp"

#include "doctest.h"

#include <random>

using namespace bcwork;

namespace {

FixtureStore fixtures() {
  return FixtureStore(BCWORK_FIXTURE_DIR);
}

IntVector vec(std::initializer_list<long long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long long x : xs) v(i++) = x;
  return v;
}

IntMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 7), entry(-6, 6);
  IntMatrix M(size(rng), size(rng));
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) M(i, j) = entry(rng);
  return M;
}

}  // namespace

TEST_CASE("snf of diag(2,3) has invariant factors (1,6)") {
  const IntMatrix M = from_rows({{2, 0}, {0, 3}});
  const auto d = snf(M);
  CHECK(d.invariant_factors() == std::vector<Int>{1, 6});
  CHECK(d.U * M * d.V == d.S);
  // d1 = gcd of entries, d1 d2 = |det|
  CHECK(d.S(0, 0) == 1);
  CHECK(d.S(0, 0) * d.S(1, 1) == abs_value(determinant(M)));
}

TEST_CASE("snf of the empty matrix") {
  const auto d = snf(IntMatrix(0, 0));
  CHECK(d.U.size() == 0);
  CHECK(d.V.size() == 0);
  CHECK(d.invariant_factors().empty());
}

TEST_CASE("snf of a matrix needing the divisibility fix") {
  const IntMatrix M = from_rows({{2, 0}, {0, 4}, {0, 0}});
  const auto d = snf(M);
  CHECK(d.invariant_factors() == std::vector<Int>{2, 4});
  const IntMatrix N = from_rows({{4, 0}, {0, 6}});
  CHECK(invariant_factors(N) == std::vector<Int>{2, 12});
}

TEST_CASE("determinant by fraction-free elimination") {
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})) == 4);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(identity<Int>(3)).empty());
  const IntMatrix M = from_rows({{1, 1, 0}, {0, 0, 0}});
  const auto k = kernel_basis(M);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK((M * v).isZero());
  CHECK(same_lattice(k, {vec({1, -1, 0}), vec({0, 0, 1})}));
}

TEST_CASE("cokernel shapes") {
  CHECK(cokernel(IntMatrix::Zero(2, 2)).shape() == AbelianGroupShape{2, {}});
  CHECK(cokernel(from_rows({{2}, {0}})).shape() == AbelianGroupShape{1, {2}});
  CHECK(free_group_of_rank(3).shape() == AbelianGroupShape{3, {}});
}

TEST_CASE("solve_integer") {
  const IntMatrix M = from_rows({{2}});
  const auto x = solve_integer(M, vec({4}));
  REQUIRE(x);
  CHECK((*x)(0) == 2);
  CHECK_FALSE(solve_integer(M, vec({3})));
}

TEST_CASE("basis extension in a cokernel") {
  const IntMatrix M = from_rows({{1}, {1}, {0}});  // Z^3 / (1,1,0) = Z^2
  CHECK(is_cokernel_basis(M, from_rows({{1, 0}, {0, 0}, {0, 1}})));
  CHECK_FALSE(is_cokernel_basis(M, from_rows({{1, 0}, {1, 0}, {0, 1}})));  // sum class is 2 e1
  CHECK(extends_to_basis(M, from_rows({{0}, {0}, {1}})));
  CHECK_FALSE(extends_to_basis(M, from_rows({{0}, {0}, {2}})));
}

TEST_CASE("stacked SA Bredon matrix") {
  const IntMatrix M = fixtures().matrix("SA_LHS_H0");
  CHECK(M.rows() == 17);
  CHECK(M.cols() == 5);
  CHECK(invariant_factors(M) == std::vector<Int>(4, Int(1)));
  CHECK(cokernel(M).shape() == AbelianGroupShape{13, {}});
  CHECK(kernel_basis(M).size() == 1);
}

TEST_CASE("stacked GA Bredon matrix") {
  const IntMatrix M = fixtures().matrix("GA_LHS_H0");
  CHECK(M.rows() == 17);
  CHECK(invariant_factors(M) == std::vector<Int>(6, Int(1)));
  CHECK(cokernel(M).shape() == AbelianGroupShape{11, {}});
}

TEST_CASE("kernels of the stacked SA Pimsner matrix and of cmm -> p6m") {
  const FixtureStore fs = fixtures();
  const auto k = kernel_basis(fs.matrix("SA_RHS_STACK"));
  REQUIRE(k.size() == 1);
  CHECK(same_lattice(k, {vec({0, 0, 1, -1, 0, 0})}));
  const auto k26 = kernel_basis(fs.matrix("IOTA26"));
  REQUIRE(k26.size() == 1);
  CHECK(same_lattice(k26, {vec({1, -1, 0, 0, -2, 1})}));
}

TEST_CASE("ranks of the GA induction matrices") {
  const FixtureStore fs = fixtures();
  CHECK(rank(fs.matrix("IOTA24")) == 5);
  CHECK(rank(fs.matrix("IOTA26")) == 5);
  CHECK(rank(IntMatrix(IntMatrix::Zero(3, 4))) == 0);
}

TEST_CASE("rank plus nullity, kernel vectors and solve on random matrices") {
  std::mt19937 rng(3);
  for (int n = 0; n < 100; ++n) {
    const IntMatrix M = random_matrix(rng);
    const auto k = kernel_basis(M);
    CHECK(rank(M) + static_cast<Eigen::Index>(k.size()) == M.cols());
    for (const auto& v : k) CHECK((M * v).isZero());
    IntVector x(M.cols());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = static_cast<long long>(rng() % 7) - 3;
    const IntVector b = M * x;
    const auto y = solve_integer(M, b);
    REQUIRE(y);
    CHECK(M * *y == b);
  }
}

TEST_CASE("absent solutions have a genuine obstruction") {
  std::mt19937 rng(5);
  for (int n = 0; n < 100; ++n) {
    const IntMatrix M = random_matrix(rng);
    IntVector b(M.rows());
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = static_cast<long long>(rng() % 11) - 5;
    if (solve_integer(M, b)) continue;
    const auto d = snf(M);
    const IntVector c = d.U * b;
    bool obstructed = false;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const Int di = i < d.S.cols() && i < d.S.rows() ? d.S(i, i) : Int(0);
      if (di == 0 ? c(i) != 0 : c(i) % di != 0) obstructed = true;
    }
    CHECK(obstructed);
  }
}

TEST_CASE("snf contract property") {
  const auto r = properties::snf_contract();
  INFO(r.detail);
  CHECK(r.passed);
}
