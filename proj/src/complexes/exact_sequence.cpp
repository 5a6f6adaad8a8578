#include "kbh/complexes/exact_sequence.hpp"

#include <algorithm>
#include <stdexcept>

#include "kbh/errors.hpp"

namespace kbh {

namespace {

bool same_dims(const Complex& x, const Complex& y) { return x.dims() == y.dims(); }

void check_ses(const ChainMap& f, const ChainMap& g) {
  if (!same_dims(f.target, g.source)) {
    throw ValidationError("f and g are not composable: target of f differs from source of g");
  }
  f.source.validate();
  f.target.validate();
  g.target.validate();
  try {
    f.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("f: ") + e.what());
  }
  try {
    g.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("g: ") + e.what());
  }
  const Complex& a = f.source;
  const Complex& b = f.target;
  const Complex& c = g.target;
  const int lo = std::min({a.min_degree(), b.min_degree(), c.min_degree()});
  const int hi = std::max({a.max_degree(), b.max_degree(), c.max_degree()});
  for (int k = lo; k <= hi; ++k) {
    const std::size_t rf = rank(f.at(k));
    const std::size_t rg = rank(g.at(k));
    const std::string deg = " in degree " + std::to_string(k);
    if (rf != a.dim(k)) throw ValidationError("f is not injective" + deg);
    if (rg != c.dim(k)) throw ValidationError("g is not surjective" + deg);
    if (!(g.at(k) * f.at(k)).is_zero()) throw ValidationError("g f != 0" + deg);
    if (rf + rg != b.dim(k)) throw ValidationError("im f != ker g" + deg);
  }
}

}  // namespace

bool LongExactSequence::is_exact() const { return first_non_exact() < 0; }

int LongExactSequence::first_non_exact() const {
  const std::size_t n = entries.size();
  if (n == 0) return maps.empty() ? -1 : 0;
  if (maps.size() + 1 != n) return 0;
  std::vector<std::size_t> ranks(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) ranks[i] = rank(maps[i]);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t incoming = i == 0 ? 0 : ranks[i - 1];
    const std::size_t outgoing = i + 1 == n ? 0 : ranks[i];
    if (i > 0 && i + 1 < n && !(maps[i] * maps[i - 1]).is_zero()) return static_cast<int>(i);
    // im(incoming) = ker(outgoing) <=> composition zero and ranks add up.
    if (incoming + outgoing != entries[i].dim) return static_cast<int>(i);
  }
  return -1;
}

long long LongExactSequence::alternating_dim_sum() const {
  long long s = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    s += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(entries[i].dim);
  }
  return s;
}

LongExactSequence les_from_ses(const ChainMap& f, const ChainMap& g) {
  check_ses(f, g);
  const Complex& a = f.source;
  const Complex& b = f.target;
  const Complex& c = g.target;
  LongExactSequence les;
  if (a.empty() && b.empty() && c.empty()) return les;
  const int lo = std::min({a.empty() ? b.min_degree() : a.min_degree(), b.min_degree(),
                           c.empty() ? b.min_degree() : c.min_degree()});
  const int hi = std::max({a.max_degree(), b.max_degree(), c.max_degree()});

  for (int k = lo; k <= hi; ++k) {
    const HomologyBasis ha = homology_basis(a, k);
    const HomologyBasis hb = homology_basis(b, k);
    const HomologyBasis hc = homology_basis(c, k);
    const std::string deg = std::to_string(k);
    les.entries.push_back({"H^" + deg + "(A)", ha.dim()});
    les.entries.push_back({"H^" + deg + "(B)", hb.dim()});
    les.entries.push_back({"H^" + deg + "(C)", hc.dim()});
    les.maps.push_back(hb.coordinates(f.at(k) * ha.representatives));
    les.maps.push_back(hc.coordinates(g.at(k) * hb.representatives));
    if (k == hi) break;

    // delta: lift through g, apply d_B, pull back through f.
    const HomologyBasis ha_next = homology_basis(a, k + 1);
    Matrix delta(ha_next.dim(), hc.dim());
    if (hc.dim() > 0) {
      const auto lift = solve(g.at(k), hc.representatives);
      if (!lift) throw std::logic_error("les_from_ses: g not surjective after validation");
      const Matrix db = b.differential(k) * *lift;
      const auto pulled = solve(f.at(k + 1), db);
      if (!pulled) throw std::logic_error("les_from_ses: d_B lift not in the image of f");
      delta = ha_next.coordinates(*pulled);
    }
    les.maps.push_back(std::move(delta));
  }
  return les;
}

}  // namespace kbh
