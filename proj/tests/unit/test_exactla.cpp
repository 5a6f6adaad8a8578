#include <catch_amalgamated.hpp>

#include "kbh/errors.hpp"
#include "kbh/exactla/linalg.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kbh;

TEST_CASE("rational parsing is canonical") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("4/-2"), ParseError);
  CHECK(to_string(parse_rational("+5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("matrix storage never keeps zeros") {
  Matrix m(2, 2);
  m.set(0, 1, 3);
  m.add_to(0, 1, -3);
  CHECK(m.is_zero());
  CHECK(m.nonzeros() == 0);
  CHECK(Matrix::kron(Matrix::identity(2), Matrix::from_rows({{1, 2}})) ==
        Matrix::from_rows({{1, 2, 0, 0}, {0, 0, 1, 2}}));
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix(0, 0)) == 0);
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix(0, 4)) == 0);
  CHECK(rank(Matrix(4, 0)) == 0);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(2)).dim() == 0);
  const Subspace full = kernel_basis(Matrix(2, 3));
  CHECK(full.dim() == 3);
  CHECK(full.ambient_dim() == 3);
  const Subspace k = kernel_basis(Matrix::from_rows({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k == Subspace::span(Matrix::from_rows({{1}, {-1}})));
  CHECK(kernel_basis(Matrix(3, 0)).dim() == 0);
}

TEST_CASE("subspace arithmetic examples") {
  const Subspace e1 = Subspace::coordinate(2, {0});
  const Subspace e2 = Subspace::coordinate(2, {1});
  CHECK(subspace_arithmetic(e1, e1) == SubspaceDims{1, 1, 0});
  CHECK(subspace_arithmetic(e1, e2) == SubspaceDims{2, 0, 1});
  const Subspace u = Subspace::span(Matrix::from_rows({{1}, {1}, {0}}));
  const Subspace v = Subspace::coordinate(3, {0, 1});
  CHECK(subspace_arithmetic(u, v) == SubspaceDims{2, 1, 0});
  CHECK_THROWS_AS(subspace_arithmetic(e1, v), std::invalid_argument);
}

TEST_CASE("solve returns a solution or nothing") {
  const Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
  const auto x = solve(a, Matrix::from_rows({{3}, {6}}));
  REQUIRE(x);
  CHECK(a * *x == Matrix::from_rows({{3}, {6}}));
  CHECK_FALSE(solve(a, Matrix::from_rows({{1}, {0}})));
}

TEST_CASE("property: rank against a dense oracle, rank-nullity, transpose") {
  gen::Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = rng.uniform(0, 7);
    const std::size_t c = rng.uniform(0, 7);
    Matrix m = gen::random_matrix(rng, r, c, rng.uniform(1, 9) / 10.0);
    // Plant dependencies so low ranks are common.
    if (r >= 2 && rng.coin()) {
      for (std::size_t j = 0; j < c; ++j) m.set(r - 1, j, m.at(0, j) * 2 + m.at(1, j));
    }
    const std::size_t rk = rank(m);
    CHECK(rk == oracle::rank(m));
    CHECK(rk == rank(m.transpose()));
    const Subspace ker = kernel_basis(m);
    CHECK(rk + ker.dim() == c);
    CHECK((m * ker.basis()).is_zero());
    CHECK(oracle::rank(ker.basis()) == ker.dim());
  }
}

TEST_CASE("property: modular law and intersection membership") {
  gen::Rng rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.uniform(1, 6);
    const Subspace u = Subspace::span(gen::random_matrix(rng, n, rng.uniform(0, 4), 0.6));
    const Subspace v = Subspace::span(gen::random_matrix(rng, n, rng.uniform(0, 4), 0.6));
    const SubspaceDims d = subspace_arithmetic(u, v);
    CHECK(d.sum_dim + d.intersection_dim == u.dim() + v.dim());
    CHECK(d.quotient_dim == d.sum_dim - v.dim());
    const Subspace w = intersection(u, v);
    CHECK(u.contains(w.basis()));
    CHECK(v.contains(w.basis()));
  }
}

TEST_CASE("determinism: identical inputs give identical kernels") {
  gen::Rng a(7), b(7);
  const Matrix m1 = gen::random_matrix(a, 5, 8);
  const Matrix m2 = gen::random_matrix(b, 5, 8);
  CHECK(kernel_basis(m1).basis() == kernel_basis(m2).basis());
}
