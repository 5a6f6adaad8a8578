#include "kbh/polyforms/stein.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "kbh/errors.hpp"

namespace kbh {

namespace {

using FormElement = std::map<FormMonomial, Rational>;

int total(const std::vector<int>& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

void add_term(FormElement& out, const FormMonomial& f, const Rational& c) {
  if (c == 0) return;
  Rational& slot = out[f];
  slot += c;
  if (slot == 0) out.erase(f);
}

// Exponent vectors of total degree `a`, lexicographically descending.
void compositions(int n, int a, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == n - 1) {
    cur.push_back(a);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = a; v >= 0; --v) {
    cur.push_back(v);
    compositions(n, a - v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::uint32_t> subsets(int n, int p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (std::popcount(m) == p) out.push_back(m);
  }
  // Lexicographic in the sorted index tuple.
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
      const int ia = std::countr_zero(a);
      const int ib = std::countr_zero(b);
      if (ia != ib) return ia < ib;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
  return out;
}

// Sign of moving generator g to the front of the wedge word I.
int front_sign(int g, std::uint32_t dz) {
  return std::popcount(dz & ((std::uint32_t{1} << g) - 1)) % 2 == 0 ? 1 : -1;
}

FormElement del(const FormMonomial& f) {
  FormElement out;
  for (std::size_t i = 0; i < f.alpha.size(); ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (f.alpha[i] == 0 || (f.dz & bit)) continue;
    FormMonomial g = f;
    --g.alpha[i];
    g.dz |= bit;
    add_term(out, g, Rational(f.alpha[i] * front_sign(static_cast<int>(i), f.dz)));
  }
  return out;
}

FormElement contract(const PolyBivector& pi, const FormMonomial& f) {
  FormElement out;
  for (const PolyTerm& t : pi.terms()) {
    const std::uint32_t bi = std::uint32_t{1} << t.i;
    const std::uint32_t bj = std::uint32_t{1} << t.j;
    if (!(f.dz & bi) || !(f.dz & bj)) continue;
    // i_{dz_j} after i_{dz_i}
    int sign = front_sign(t.i, f.dz);
    sign *= front_sign(t.j, f.dz & ~bi);
    FormMonomial g = f;
    g.dz &= ~(bi | bj);
    for (std::size_t k = 0; k < g.alpha.size(); ++k) g.alpha[k] += t.alpha[k];
    add_term(out, g, t.coeff * sign);
  }
  return out;
}

FormElement apply_op(const std::function<FormElement(const FormMonomial&)>& op,
                  const FormElement& x) {
  FormElement out;
  for (const auto& [f, c] : x) {
    for (const auto& [g, v] : op(f)) add_term(out, g, c * v);
  }
  return out;
}

FormElement koszul(const PolyBivector& pi, const FormMonomial& f) {
  FormElement out = apply_op([&](const FormMonomial& g) { return contract(pi, g); }, del(f));
  for (const auto& [g, c] : apply_op(del, contract(pi, f))) add_term(out, g, -c);
  return out;
}

}  // namespace

PolyBivector::PolyBivector(int n, std::vector<PolyTerm> terms) : n_(n) {
  if (n < 0 || n > 31) throw ValidationError("dimension n must lie in [0, 31]");
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, Rational> merged;
  for (PolyTerm& t : terms) {
    if (t.i < 0 || t.j < 0 || t.i >= n || t.j >= n) {
      throw ValidationError("bivector term index out of range 1.." + std::to_string(n));
    }
    if (t.i == t.j) throw ValidationError("bivector term has i == j");
    if (static_cast<int>(t.alpha.size()) != n) {
      throw ValidationError("bivector term exponent must have " + std::to_string(n) + " entries");
    }
    for (int a : t.alpha) {
      if (a < 0) throw ValidationError("bivector term has a negative exponent");
    }
    if (t.i > t.j) {
      std::swap(t.i, t.j);
      t.coeff = -t.coeff;
    }
    merged[{{t.i, t.j}, t.alpha}] += t.coeff;
  }
  std::optional<int> d;
  for (const auto& [key, c] : merged) {
    if (c == 0) continue;
    const int deg = total(key.second);
    if (d && *d != deg) {
      throw ValidationError("bivector is not homogeneous: terms of degree " + std::to_string(*d) +
                            " and " + std::to_string(deg));
    }
    d = deg;
    terms_.push_back({key.first.first, key.first.second, c, key.second});
  }
  if (d) degree_ = *d;
}

std::string to_string(const FormMonomial& f) {
  std::string s;
  for (std::size_t i = 0; i < f.alpha.size(); ++i) {
    if (f.alpha[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(i + 1);
    if (f.alpha[i] > 1) s += "^" + std::to_string(f.alpha[i]);
  }
  std::string forms;
  for (std::size_t i = 0; i < f.alpha.size(); ++i) {
    if (!(f.dz & (std::uint32_t{1} << i))) continue;
    if (!forms.empty()) forms += "^";
    forms += "dz" + std::to_string(i + 1);
  }
  if (s.empty()) return forms.empty() ? "1" : forms;
  return forms.empty() ? s : s + " " + forms;
}

std::size_t PolyFormSlice::dim(int p) const {
  auto it = basis.find(p);
  return it == basis.end() ? 0 : it->second.size();
}

long long PolyFormSlice::alternating_dim() const {
  return alternating_sum(complex.dims());
}

PolyFormSlice stein_slice(const PolyBivector& pi, int w, int cap) {
  const int n = pi.n();
  PolyFormSlice s;
  s.n = n;
  s.d = pi.degree();
  s.w = w;
  for (int p = 0; p <= n; ++p) {
    const int a = w - (s.d - 1) * p;
    if (a < 0) continue;
    if (a > cap) {
      throw InconsistentData("weight " + std::to_string(w) + " slice needs polynomial degree " +
                             std::to_string(a) + " > cap " + std::to_string(cap));
    }
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur;
    if (n == 0) {
      if (a == 0) alphas.push_back({});
    } else {
      compositions(n, a, cur, alphas);
    }
    std::vector<FormMonomial> forms;
    for (const auto& alpha : alphas) {
      for (std::uint32_t dz : subsets(n, p)) forms.push_back({alpha, dz});
    }
    if (!forms.empty()) s.basis[p] = std::move(forms);
  }
  for (const auto& [p, forms] : s.basis) s.complex.set_dim(-p, forms.size());

  std::map<int, Matrix> diff;
  for (const auto& [p, forms] : s.basis) {
    if (p == 0) continue;
    const std::vector<FormMonomial> empty;
    auto it = s.basis.find(p - 1);
    const auto& target = it == s.basis.end() ? empty : it->second;
    std::map<FormMonomial, std::size_t> index;
    for (std::size_t r = 0; r < target.size(); ++r) index[target[r]] = r;
    Matrix m(target.size(), forms.size());
    for (std::size_t c = 0; c < forms.size(); ++c) {
      for (const auto& [g, v] : koszul(pi, forms[c])) {
        auto hit = index.find(g);
        if (hit == index.end()) {
          throw std::logic_error("d_pi leaves the weight " + std::to_string(w) + " slice at " +
                                 to_string(g));
        }
        m.set(hit->second, c, v);
      }
    }
    diff[p] = m;
    s.complex.set_differential(-p, std::move(m));
  }
  for (const auto& [p, m] : diff) {
    auto below = diff.find(p - 1);
    if (below != diff.end() && !(below->second * m).is_zero()) {
      throw ValidationError("bivector not Poisson at weight " + std::to_string(w));
    }
  }
  return s;
}

Complex stein_complex(const PolyBivector& pi, int w, int cap) {
  return stein_slice(pi, w, cap).complex;
}

std::map<std::pair<int, int>, std::size_t> stein_homology(const PolyBivector& pi,
                                                          const std::vector<int>& weights,
                                                          int cap) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (int w : weights) {
    const std::map<int, std::size_t> h = homology_dims(stein_complex(pi, w, cap));
    for (int k = 0; k <= pi.n(); ++k) {
      auto it = h.find(k - pi.n());
      out[{w, k}] = it == h.end() ? 0 : it->second;
    }
  }
  return out;
}

}  // namespace kbh
