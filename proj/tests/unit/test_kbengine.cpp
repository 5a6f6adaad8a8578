#include <catch_amalgamated.hpp>

#include "kbh/errors.hpp"
#include "kbh/kbengine/kb.hpp"
#include "kbh/modelzoo/zoo.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kbh;

namespace {

KBDims kb(int n, std::vector<std::size_t> values) {
  KBDims d = KBDims::zero(n);
  for (std::size_t k = 0; k < values.size(); ++k) d.dims[static_cast<int>(k)] = values[k];
  return d;
}

}  // namespace

TEST_CASE("KB double complex reindexes the model") {
  const DoubleComplex dc = kb_double_complex(torus(1));
  CHECK(dc.dims() == std::map<Bidegree, std::size_t>{
                         {{-1, 0}, 1}, {{-1, 1}, 1}, {{0, 0}, 1}, {{0, 1}, 1}});
  CHECK(dc.d1_blocks().empty());
  CHECK(dc.d2_blocks().empty());
  CHECK(kb_double_complex(point_model()).dims() ==
        std::map<Bidegree, std::size_t>{{{0, 0}, 1}});

  const DoubleComplex iw =
      kb_double_complex(parallelizable(3, iwasawa_constants(), bivector(3, 0, 1)));
  CHECK_FALSE(iw.d1_blocks().empty());
  CHECK_NOTHROW(iw.validate());
}

TEST_CASE("KB homology examples") {
  CHECK(kb_homology(torus(1)) == kb(1, {1, 2, 1}));
  CHECK(kb_homology(point_model()) == kb(0, {1}));
  CHECK(kb_homology(torus(2)) == kb(2, {1, 4, 6, 4, 1}));
  CHECK(kb_homology(hodge_formal(oracle::projective_space(2))) == kb(2, {0, 0, 3, 0, 0}));
}

TEST_CASE("formal models only accept the zero bivector") {
  const DolbeaultPoissonModel f = hodge_formal(HodgeDiamond{2, {{{0, 0}, 1}, {{2, 0}, 1}}});
  CHECK(kb_homology(f).at(0) == 1);
  const DolbeaultPoissonModel bad = f.with_contraction({{{2, 0}, Matrix::from_rows({{1}})}});
  CHECK_THROWS_AS(kb_homology(bad), ValidationError);
}

TEST_CASE("invalid models are rejected by the engine") {
  const DolbeaultPoissonModel t1 = torus(1);
  const BlockMap del{{{0, 0}, Matrix::from_rows({{1}})}, {{0, 1}, Matrix::from_rows({{1}})}};
  const BlockMap delbar{{{0, 0}, Matrix::from_rows({{1}})}, {{1, 0}, Matrix::from_rows({{1}})}};
  const DolbeaultPoissonModel broken(1, t1.labels(), del, delbar, {});
  CHECK_THROWS_AS(kb_homology(broken), ValidationError);
}

TEST_CASE("HKR examples") {
  const HHDims p1 = hkr_hochschild(oracle::projective_space(1));
  CHECK(p1.at(0) == 2);
  CHECK(p1.at(-1) == 0);
  CHECK(p1.at(1) == 0);
  HodgeDiamond t{1, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}}};
  const HHDims ht = hkr_hochschild(t);
  CHECK(ht.at(-1) == 1);
  CHECK(ht.at(0) == 2);
  CHECK(ht.at(1) == 1);
  const HHDims empty = hkr_hochschild(HodgeDiamond{});
  for (const auto& [k, d] : empty.dims) CHECK(d == 0);
}

TEST_CASE("Euler characteristic examples") {
  CHECK(euler_char(kb(1, {1, 2, 1})) == 0);
  CHECK(euler_char(kb(0, {1})) == 1);
  CHECK(euler_char(kb(2, {0, 0, 3, 0, 0})) == 3);
}

TEST_CASE("property: pi = 0 homology is HH(n - k) of the dbar diamond") {
  gen::Rng rng(61);
  std::vector<DolbeaultPoissonModel> models = {torus(1), torus(2), parallelizable(3, iwasawa_constants())};
  for (int i = 0; i < 15; ++i) models.push_back(gen::random_dbar_model(rng, rng.uniform(0, 3)).model);
  for (const auto& m : models) {
    const KBDims d = kb_homology(m);
    const HHDims hh = hkr_hochschild(hodge_diamond(m));
    for (int k = 0; k <= 2 * m.n(); ++k) CHECK(d.at(k) == hh.at(m.n() - k));
    CHECK(d == oracle::antidiagonal_sums(hodge_diamond(m)));
  }
}

TEST_CASE("property: E_1 is the dbar diamond and chi is pi-independent") {
  gen::Rng rng(62);
  for (int i = 0; i < 15; ++i) {
    const gen::RandomModel r = gen::random_dbar_model(rng, rng.uniform(0, 3));
    CHECK(hodge_diamond(r.model) == r.diamond);
    const SpectralPages sp = kb_spectral_pages(r.model, 1);
    for (const auto& [b, d] : sp.page(1)) CHECK(d == r.diamond.at(-b.p, b.q));
    CHECK(euler_char(kb_homology(r.model)) == chain_euler_char(r.model));
  }
  for (const Matrix& pi : {bivector(3, 0, 1), bivector(3, 0, 2), bivector(3, 0, 1, 5)}) {
    const DolbeaultPoissonModel m = parallelizable(3, iwasawa_constants(), pi);
    CHECK(euler_char(kb_homology(m)) == chain_euler_char(m));
    CHECK(chain_euler_char(m) == 0);
  }
}

TEST_CASE("index bounds") {
  const KBDims d = kb_homology(torus(1));
  CHECK(d.at(-1) == 0);
  CHECK(d.at(3) == 0);
}
