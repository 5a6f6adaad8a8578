#include "kbh/modelzoo/zoo.hpp"

#include <stdexcept>

#include "kbh/errors.hpp"

namespace kbh {

namespace {

using exterior::Element;
using exterior::Monomial;

std::string label(Monomial m, int n) {
  std::string s;
  for (int g : exterior::indices(m)) {
    if (!s.empty()) s += "^";
    s += g < n ? "w" + std::to_string(g + 1) : "wb" + std::to_string(g - n + 1);
  }
  return s.empty() ? "1" : s;
}

StructureConstants normalized(int n, const StructureConstants& c) {
  StructureConstants out;
  for (auto [key, v] : c) {
    auto [k, i, j] = key;
    if (k < 0 || i < 0 || j < 0 || k >= n || i >= n || j >= n) {
      throw std::invalid_argument("structure constant index out of range");
    }
    if (i == j) {
      if (v != 0) throw std::invalid_argument("structure constants must be antisymmetric");
      continue;
    }
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    Rational& slot = out[{k, i, j}];
    slot += v;
    if (slot == 0) out.erase({k, i, j});
  }
  return out;
}

// Generator images of d (offset 0) or dbar (offset n).
std::vector<Element> images(int n, const StructureConstants& c, int offset) {
  std::vector<Element> img(2 * static_cast<std::size_t>(n));
  for (const auto& [key, v] : c) {
    const auto [k, i, j] = key;
    const Monomial m = (Monomial{1} << (i + offset)) | (Monomial{1} << (j + offset));
    img[k + offset][m] -= v;
  }
  return img;
}

BlockMap derivation_blocks(const WedgeData& w, const std::vector<Element>& img, Bidegree step) {
  BlockMap out;
  for (const auto& [b, basis] : w.monomials) {
    auto target = w.monomials.find(b + step);
    if (target == w.monomials.end()) continue;
    std::map<Monomial, std::size_t> index;
    for (std::size_t r = 0; r < target->second.size(); ++r) index[target->second[r]] = r;
    Matrix m(target->second.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      for (const auto& [mon, v] : exterior::derivation(img, Element{{basis[col], Rational(1)}})) {
        m.add_to(index.at(mon), col, v);
      }
    }
    if (!m.is_zero()) out.emplace(b, std::move(m));
  }
  return out;
}

}  // namespace

DolbeaultPoissonModel point_model() {
  DolbeaultPoissonModel m = torus(0);
  return m.with_info({"point", false, {}});
}

DolbeaultPoissonModel torus(int n) { return torus(n, Matrix(n, n)); }

DolbeaultPoissonModel torus(int n, const Matrix& pi) {
  DolbeaultPoissonModel m = parallelizable(n, {}, pi);
  ModelInfo info = m.info();
  info.name = "torus(" + std::to_string(n) + ")";
  return m.with_info(std::move(info));
}

DolbeaultPoissonModel parallelizable(int n, const StructureConstants& c) {
  return parallelizable(n, c, Matrix(n, n));
}

DolbeaultPoissonModel parallelizable(int n, const StructureConstants& constants,
                                     const Matrix& pi) {
  if (n < 0 || n > 15) throw std::invalid_argument("parallelizable: n must lie in [0, 15]");
  const StructureConstants c = normalized(n, constants);

  Labels labels;
  WedgeData wedge;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      std::vector<Monomial> basis;
      std::vector<std::string> names;
      for (Monomial h : exterior::monomials(0, n, p)) {
        for (Monomial a : exterior::monomials(n, n, q)) {
          basis.push_back(h | a);
          names.push_back(label(h | a, n));
        }
      }
      labels[{p, q}] = std::move(names);
      wedge.monomials[{p, q}] = std::move(basis);
    }
  }

  const auto del_img = images(n, c, 0);
  for (int k = 0; k < n; ++k) {
    if (!exterior::derivation(del_img, exterior::derivation(del_img, {{Monomial{1} << k, 1}}))
             .empty()) {
      throw ValidationError("structure constants fail the Jacobi identity (d^2 w" +
                            std::to_string(k + 1) + " != 0)");
    }
  }
  BlockMap del = derivation_blocks(wedge, del_img, {1, 0});
  BlockMap delbar = derivation_blocks(wedge, images(n, c, n), {0, 1});

  ModelInfo info;
  info.name = "parallelizable(" + std::to_string(n) + ")";
  DolbeaultPoissonModel m(n, std::move(labels), std::move(del), std::move(delbar), {},
                          std::move(info), std::move(wedge));
  m = m.with_contraction(contraction_from_bivector(m, pi));
  const ValidationReport report = validate_model(m);
  if (const IdentityCheck* bad = report.first_failure()) {
    throw ValidationError("bivector rejected: " + bad->name + " fails at " + to_string(*bad->at));
  }
  return m;
}

StructureConstants iwasawa_constants() { return {{{2, 0, 1}, Rational(1)}}; }

DolbeaultPoissonModel hodge_formal(const HodgeDiamond& h) {
  Labels labels;
  for (const auto& [b, d] : h.h) {
    if (b.p < 0 || b.q < 0 || b.p > h.n || b.q > h.n) {
      throw std::invalid_argument("hodge number " + to_string(b) + " outside the diamond");
    }
    auto& names = labels[b];
    for (std::size_t i = 0; i < d; ++i) {
      names.push_back("h" + std::to_string(b.p) + std::to_string(b.q) + "_" + std::to_string(i + 1));
    }
  }
  ModelInfo info;
  info.name = "hodge_formal(" + std::to_string(h.n) + ")";
  info.formal = true;
  return DolbeaultPoissonModel(h.n, std::move(labels), {}, {}, {}, std::move(info));
}

Matrix bivector(int n, int i, int j, const Rational& value) {
  Matrix m(n, n);
  m.set(i, j, value);
  m.set(j, i, -value);
  return m;
}

}  // namespace kbh
