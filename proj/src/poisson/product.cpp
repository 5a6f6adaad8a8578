#include "kbh/poisson/model.hpp"

namespace kbh {

namespace {

struct Pairing {
  Bidegree bx;
  Bidegree by;
  std::size_t offset;
};

// Summands X_bx (x) Y_by of the product space at b, in basis order.
std::vector<Pairing> summands(const DolbeaultPoissonModel& x, const DolbeaultPoissonModel& y,
                              Bidegree b) {
  std::vector<Pairing> out;
  std::size_t offset = 0;
  for (const auto& [bx, names] : x.labels()) {
    const Bidegree by{b.p - bx.p, b.q - bx.q};
    const std::size_t d = names.size() * y.dim(by);
    if (d == 0) continue;
    out.push_back({bx, by, offset});
    offset += d;
  }
  return out;
}

bool odd(Bidegree b) { return (b.p + b.q) % 2 != 0; }

}  // namespace

std::size_t product_offset(const DolbeaultPoissonModel& x, const DolbeaultPoissonModel& y,
                           Bidegree bx, Bidegree by) {
  for (const Pairing& s : summands(x, y, bx + by)) {
    if (s.bx == bx) return s.offset;
  }
  throw std::invalid_argument("product_offset: " + to_string(bx) + " (x) " + to_string(by) +
                              " is not a summand");
}

DolbeaultPoissonModel product_model(const DolbeaultPoissonModel& x,
                                    const DolbeaultPoissonModel& y) {
  const int n = x.n() + y.n();
  Labels labels;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      std::vector<std::string> names;
      for (const Pairing& s : summands(x, y, {p, q})) {
        for (const auto& a : x.labels().at(s.bx)) {
          for (const auto& c : y.labels().at(s.by)) names.push_back(a + "*" + c);
        }
      }
      if (!names.empty()) labels.emplace(Bidegree{p, q}, std::move(names));
    }
  }
  auto dim = [&](Bidegree b) {
    auto it = labels.find(b);
    return it == labels.end() ? std::size_t{0} : it->second.size();
  };

  // Assembles an operator of bidegree `step` from its action on each summand.
  auto assemble = [&](Bidegree step, auto&& left, auto&& right, bool koszul_sign) {
    BlockMap out;
    for (const auto& [b, names] : labels) {
      const Bidegree to = b + step;
      if (dim(to) == 0) continue;
      Matrix block(dim(to), names.size());
      for (const Pairing& s : summands(x, y, b)) {
        const std::size_t nx = x.dim(s.bx);
        const std::size_t ny = y.dim(s.by);
        const Matrix l = left(s.bx);
        if (!l.is_zero()) {
          block.place(product_offset(x, y, s.bx + step, s.by), s.offset,
                      Matrix::kron(l, Matrix::identity(ny)));
        }
        const Matrix r = right(s.by);
        if (!r.is_zero()) {
          const Rational sign = koszul_sign && odd(s.bx) ? -1 : 1;
          block.place(product_offset(x, y, s.bx, s.by + step), s.offset,
                      Matrix::kron(Matrix::identity(nx), r), sign);
        }
      }
      if (!block.is_zero()) out.emplace(b, std::move(block));
    }
    return out;
  };

  BlockMap del = assemble(
      {1, 0}, [&](Bidegree b) { return x.del(b); }, [&](Bidegree b) { return y.del(b); }, true);
  BlockMap delbar = assemble(
      {0, 1}, [&](Bidegree b) { return x.delbar(b); }, [&](Bidegree b) { return y.delbar(b); },
      true);
  BlockMap contraction = assemble(
      {-2, 0}, [&](Bidegree b) { return x.contraction(b); },
      [&](Bidegree b) { return y.contraction(b); }, false);

  ModelInfo info;
  info.name = x.info().name + " x " + y.info().name;
  info.formal = x.info().formal && y.info().formal;
  return DolbeaultPoissonModel(n, std::move(labels), std::move(del), std::move(delbar),
                               std::move(contraction), std::move(info));
}

}  // namespace kbh
