#include <functional>
#include <stdexcept>

#include "kbh/errors.hpp"
#include "kbh/poisson/model.hpp"

namespace kbh {

namespace {

std::vector<Bidegree> grid(const DolbeaultPoissonModel& m) {
  std::vector<Bidegree> out;
  for (int p = 0; p <= m.n(); ++p) {
    for (int q = 0; q <= m.n(); ++q) out.push_back({p, q});
  }
  return out;
}

IdentityCheck run_check(const char* name, const std::vector<Bidegree>& where,
                        const std::function<Matrix(Bidegree)>& composite) {
  IdentityCheck c{name, true, std::nullopt, std::nullopt};
  for (Bidegree b : where) {
    Matrix r = composite(b);
    if (!r.is_zero()) {
      c.passed = false;
      c.at = b;
      c.residual = std::move(r);
      break;
    }
  }
  return c;
}

IdentityCheck koszul_square_check(const DolbeaultPoissonModel& m, const KoszulDifferential& k) {
  return run_check(kKoszulSquared, grid(m), [&](Bidegree b) {
    return k.block(m, {b.p - 1, b.q}) * k.block(m, b);
  });
}

IdentityCheck koszul_delbar_check(const DolbeaultPoissonModel& m, const KoszulDifferential& k) {
  return run_check(kDelbarKoszul, grid(m), [&](Bidegree b) {
    return m.delbar({b.p - 1, b.q}) * k.block(m, b) + k.block(m, {b.p, b.q + 1}) * m.delbar(b);
  });
}

}  // namespace

KoszulDifferential raw_koszul_differential(const DolbeaultPoissonModel& m) {
  KoszulDifferential k;
  for (Bidegree b : grid(m)) {
    if (m.dim(b) == 0 || m.dim({b.p - 1, b.q}) == 0) continue;
    Matrix block = m.contraction({b.p + 1, b.q}) * m.del(b) -
                   m.del({b.p - 2, b.q}) * m.contraction(b);
    if (!block.is_zero()) k.blocks.emplace(b, std::move(block));
  }
  return k;
}

KoszulDifferential koszul_differential(const DolbeaultPoissonModel& m) {
  KoszulDifferential k = raw_koszul_differential(m);
  for (const IdentityCheck& c : {koszul_square_check(m, k), koszul_delbar_check(m, k)}) {
    if (!c.passed) {
      throw ValidationError("not a valid holomorphic Poisson model: " + c.name + " fails at " +
                            to_string(*c.at));
    }
  }
  return k;
}

BlockMap contraction_from_bivector(const DolbeaultPoissonModel& m, const Matrix& coeffs) {
  if (!m.wedge()) {
    throw std::invalid_argument("contraction_from_bivector: model carries no wedge data");
  }
  const int n = m.n();
  if (coeffs.rows() != static_cast<std::size_t>(n) || coeffs.cols() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("contraction_from_bivector: bivector must be " +
                                std::to_string(n) + "x" + std::to_string(n));
  }
  if (coeffs.transpose() != -coeffs) {
    throw std::invalid_argument("contraction_from_bivector: coefficients are not antisymmetric");
  }
  const auto& mono = m.wedge()->monomials;
  BlockMap out;
  for (const auto& [b, basis] : mono) {
    const Bidegree to{b.p - 2, b.q};
    if (m.dim(to) == 0) continue;
    std::map<exterior::Monomial, std::size_t> index;
    const auto& target = mono.at(to);
    for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = i;
    Matrix block(m.dim(to), m.dim(b));
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const exterior::Element x{{basis[col], Rational(1)}};
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const Rational& c = coeffs.at(i, j);
          if (c == 0) continue;
          for (const auto& [mon, v] : exterior::interior(j, exterior::interior(i, x))) {
            block.add_to(index.at(mon), col, c * v);
          }
        }
      }
    }
    if (!block.is_zero()) out.emplace(b, std::move(block));
  }
  return out;
}

ValidationReport validate_model(const DolbeaultPoissonModel& m) {
  ValidationReport report;
  const auto where = grid(m);
  report.checks.push_back(run_check(kDelSquared, where, [&](Bidegree b) {
    return m.del({b.p + 1, b.q}) * m.del(b);
  }));
  report.checks.push_back(run_check(kDelbarSquared, where, [&](Bidegree b) {
    return m.delbar({b.p, b.q + 1}) * m.delbar(b);
  }));
  report.checks.push_back(run_check(kDelDelbar, where, [&](Bidegree b) {
    return m.del({b.p, b.q + 1}) * m.delbar(b) + m.delbar({b.p + 1, b.q}) * m.del(b);
  }));
  const KoszulDifferential k = raw_koszul_differential(m);
  report.checks.push_back(koszul_square_check(m, k));
  report.checks.push_back(koszul_delbar_check(m, k));
  return report;
}

}  // namespace kbh
