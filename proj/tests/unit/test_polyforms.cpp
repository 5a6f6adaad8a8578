#include <catch_amalgamated.hpp>

#include "kbh/errors.hpp"
#include "kbh/polyforms/stein.hpp"
#include "support/oracles.hpp"

using namespace kbh;

namespace {

PolyBivector constant_pi() { return PolyBivector(2, {{0, 1, 1, {0, 0}}}); }
PolyBivector linear_pi() { return PolyBivector(2, {{0, 1, 1, {1, 0}}}); }

}  // namespace

TEST_CASE("zero bivector at weight 0") {
  for (int n = 0; n <= 3; ++n) {
    const PolyFormSlice s = stein_slice(PolyBivector(n, {}), 0);
    CHECK(s.dim(0) == 1);
    REQUIRE(s.basis.count(0));
    CHECK(to_string(s.basis.at(0).front()) == "1");
    for (int p = 0; p <= n; ++p) CHECK(s.dim(p) == static_cast<std::size_t>(oracle::binomial(n, p)));
    for (int k = -n; k <= 0; ++k) CHECK(s.complex.differential(k).is_zero());
  }
}

TEST_CASE("constant bivector: the top form sits alone at weight -2") {
  const PolyFormSlice s = stein_slice(constant_pi(), -2);
  CHECK(s.dim(0) == 0);
  CHECK(s.dim(1) == 0);
  REQUIRE(s.dim(2) == 1);
  CHECK(to_string(s.basis.at(2).front()) == "dz1^dz2");
  const auto h = stein_homology(constant_pi(), {-2});
  CHECK(h.at({-2, 0}) == 1);
  CHECK(h.at({-2, 1}) == 0);
  CHECK(h.at({-2, 2}) == 0);
}

TEST_CASE("constant bivector at weight 0 obeys the chi identity") {
  const PolyFormSlice s = stein_slice(constant_pi(), 0);
  CHECK(s.dim(0) == 1);
  CHECK(s.dim(1) == 4);
  CHECK(s.dim(2) == 3);
  const auto h = homology_dims(s.complex);
  CHECK(alternating_sum(h) == s.alternating_dim());
  CHECK(h == oracle::homology(s.complex));
}

TEST_CASE("linear bivector slices are closed and square to zero") {
  for (int w = 0; w <= 4; ++w) {
    const PolyFormSlice s = stein_slice(linear_pi(), w);
    CHECK_NOTHROW(s.complex.validate());
    CHECK(alternating_sum(homology_dims(s.complex)) == s.alternating_dim());
  }
  const PolyFormSlice s1 = stein_slice(linear_pi(), 1);
  CHECK(s1.dim(0) == 2);
  CHECK(s1.dim(1) == 4);
  CHECK(s1.dim(2) == 2);
}

TEST_CASE("zero bivector: homology equals slice dimensions") {
  const auto h = stein_homology(PolyBivector(1, {}), {0, 1, 2});
  for (int w = 0; w <= 2; ++w) {
    CHECK(h.at({w, 1}) == 1);
    CHECK(h.at({w, 0}) == 1);
  }
  CHECK(stein_homology(PolyBivector(2, {}), {}).empty());
}

TEST_CASE("bivector input checks") {
  CHECK_THROWS_AS(PolyBivector(2, {{0, 1, 1, {1, 0}}, {0, 1, 1, {0, 0}}}), ValidationError);
  CHECK_THROWS_AS(PolyBivector(2, {{0, 0, 1, {0, 0}}}), ValidationError);
  CHECK_THROWS_AS(PolyBivector(2, {{0, 2, 1, {0, 0}}}), ValidationError);
  CHECK_THROWS_AS(PolyBivector(2, {{0, 1, 1, {0}}}), ValidationError);
  const PolyBivector flipped(2, {{1, 0, 2, {0, 0}}});
  REQUIRE(flipped.terms().size() == 1);
  CHECK(flipped.terms()[0].i == 0);
  CHECK(flipped.terms()[0].coeff == -2);
  CHECK(PolyBivector(2, {{0, 1, 1, {0, 0}}, {1, 0, 1, {0, 0}}}).is_zero());
}

TEST_CASE("slices beyond the cap are rejected") {
  CHECK_THROWS_AS(stein_slice(linear_pi(), 9), InconsistentData);
  CHECK_NOTHROW(stein_slice(linear_pi(), 9, 9));
  // Constant bivector: 2-forms at weight 7 need degree 9.
  CHECK_THROWS_AS(stein_slice(constant_pi(), 7), InconsistentData);
}

TEST_CASE("a non-Poisson bivector is caught on some slice") {
  // {z2, z3} = z1, {z1, z2} = z2 fails Jacobi.
  const PolyBivector pi(3, {{1, 2, 1, {1, 0, 0}}, {0, 1, 1, {0, 1, 0}}});
  bool caught = false;
  for (int w = 0; w <= 3 && !caught; ++w) {
    try {
      stein_slice(pi, w);
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()) == "bivector not Poisson at weight " + std::to_string(w));
      caught = true;
    }
  }
  CHECK(caught);
}

TEST_CASE("so(3) linear bivector is Poisson on every small slice") {
  const PolyBivector pi(3, {{0, 1, 1, {0, 0, 1}}, {1, 2, 1, {1, 0, 0}}, {2, 0, 1, {0, 1, 0}}});
  for (int w = 0; w <= 3; ++w) {
    const PolyFormSlice s = stein_slice(pi, w);
    CHECK(alternating_sum(homology_dims(s.complex)) == s.alternating_dim());
  }
}
