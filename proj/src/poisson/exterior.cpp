#include "kbh/poisson/exterior.hpp"

#include <bit>

namespace kbh::exterior {

int degree(Monomial m) { return std::popcount(m); }

std::vector<int> indices(Monomial m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return out;
}

int wedge_sign(Monomial a, Monomial b) {
  if (a & b) return 0;
  // Each generator of b jumps over the generators of a that are larger.
  int swaps = 0;
  for (int j : indices(b)) swaps += std::popcount(a >> (j + 1));
  return swaps % 2 == 0 ? 1 : -1;
}

void add_wedge(Element& out, const Rational& coeff, Monomial a, Monomial b) {
  const int s = wedge_sign(a, b);
  if (s == 0 || coeff == 0) return;
  Rational& slot = out[a | b];
  slot += s > 0 ? coeff : Rational(-coeff);
  if (slot == 0) out.erase(a | b);
}

Element wedge(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) add_wedge(out, ca * cb, ma, mb);
  }
  return out;
}

Element interior(int g, const Element& x) {
  Element out;
  const Monomial bit = Monomial{1} << g;
  for (const auto& [m, c] : x) {
    if (!(m & bit)) continue;
    const int pos = std::popcount(m & (bit - 1));
    Rational& slot = out[m & ~bit];
    slot += pos % 2 == 0 ? c : Rational(-c);
    if (slot == 0) out.erase(m & ~bit);
  }
  return out;
}

Element derivation(const std::vector<Element>& images, const Element& x) {
  Element out;
  for (const auto& [m, c] : x) {
    const auto idx = indices(m);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const int g = idx[s];
      if (g >= static_cast<int>(images.size())) continue;
      const Monomial bit = Monomial{1} << g;
      const Monomial prefix = m & (bit - 1);
      const Monomial suffix = m & ~((bit << 1) - 1);
      const Rational sign = s % 2 == 0 ? c : Rational(-c);
      for (const auto& [img, ic] : images[g]) {
        // prefix ^ img ^ suffix
        const int s1 = wedge_sign(prefix, img);
        if (s1 == 0) continue;
        const int s2 = wedge_sign(prefix | img, suffix);
        if (s2 == 0) continue;
        const Monomial res = prefix | img | suffix;
        Rational& slot = out[res];
        slot += sign * ic * (s1 * s2);
        if (slot == 0) out.erase(res);
      }
    }
  }
  return out;
}

std::vector<Monomial> monomials(int lo, int count, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || degree > count) return out;
  std::vector<int> pick(degree);
  for (int i = 0; i < degree; ++i) pick[i] = i;
  for (;;) {
    Monomial m = 0;
    for (int i : pick) m |= Monomial{1} << (lo + i);
    out.push_back(m);
    int i = degree - 1;
    while (i >= 0 && pick[i] == count - degree + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < degree; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace kbh::exterior
