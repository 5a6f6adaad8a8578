#include "kbh/kbengine/kb.hpp"

#include "kbh/errors.hpp"

namespace kbh {

namespace {

template <class Key>
std::size_t lookup(const std::map<Key, std::size_t>& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

template <class Key>
bool same_support(const std::map<Key, std::size_t>& a, const std::map<Key, std::size_t>& b) {
  for (const auto& [k, v] : a) {
    if (lookup(b, k) != v) return false;
  }
  for (const auto& [k, v] : b) {
    if (lookup(a, k) != v) return false;
  }
  return true;
}

void require_valid(const DolbeaultPoissonModel& m) {
  if (m.info().formal && !m.has_zero_contraction()) {
    throw ValidationError("formal model '" + m.info().name +
                          "' carries no contraction; only pi = 0 is supported");
  }
  const ValidationReport report = validate_model(m);
  if (const IdentityCheck* bad = report.first_failure()) {
    throw ValidationError("not a valid holomorphic Poisson model: " + bad->name + " fails at " +
                          to_string(*bad->at));
  }
}

}  // namespace

KBDims KBDims::zero(int n) {
  KBDims d;
  d.n = n;
  for (int k = 0; k <= 2 * n; ++k) d.dims[k] = 0;
  return d;
}

std::size_t KBDims::at(int k) const { return lookup(dims, k); }

bool operator==(const KBDims& a, const KBDims& b) {
  return a.n == b.n && same_support(a.dims, b.dims);
}

std::size_t HodgeDiamond::at(int p, int q) const { return lookup(h, Bidegree{p, q}); }

bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) {
  return a.n == b.n && same_support(a.h, b.h);
}

std::size_t HHDims::at(int k) const { return lookup(dims, k); }

bool operator==(const HHDims& a, const HHDims& b) {
  return a.n == b.n && same_support(a.dims, b.dims);
}

DoubleComplex kb_double_complex(const DolbeaultPoissonModel& m) {
  require_valid(m);
  const KoszulDifferential dpi = raw_koszul_differential(m);
  DoubleComplex dc;
  for (const auto& [b, names] : m.labels()) dc.set_dim({-b.p, b.q}, names.size());
  for (const auto& [b, block] : dpi.blocks) dc.set_d1({-b.p, b.q}, block);
  for (const auto& [b, block] : m.delbar_blocks()) dc.set_d2({-b.p, b.q}, block);
  return dc;
}

KBDims kb_homology(const DolbeaultPoissonModel& m) {
  const std::map<int, std::size_t> h = homology_dims(total_complex(kb_double_complex(m)));
  KBDims out = KBDims::zero(m.n());
  for (auto& [k, d] : out.dims) d = lookup(h, k - m.n());
  return out;
}

SpectralPages kb_spectral_pages(const DolbeaultPoissonModel& m, int r_max) {
  return spectral_pages(kb_double_complex(m), r_max);
}

HodgeDiamond hodge_diamond(const DolbeaultPoissonModel& m) {
  HodgeDiamond out;
  out.n = m.n();
  for (int p = 0; p <= m.n(); ++p) {
    Complex column;
    for (int q = 0; q <= m.n(); ++q) column.set_dim(q, m.dim({p, q}));
    for (int q = 0; q < m.n(); ++q) column.set_differential(q, m.delbar({p, q}));
    for (const auto& [q, d] : homology_dims(column)) {
      if (d > 0) out.h[{p, q}] = d;
    }
  }
  return out;
}

HHDims hkr_hochschild(const HodgeDiamond& h) {
  HHDims out;
  out.n = h.n;
  for (int k = -h.n; k <= h.n; ++k) out.dims[k] = 0;
  for (const auto& [b, d] : h.h) out.dims[b.p - b.q] += d;
  return out;
}

long long euler_char(const KBDims& d) { return alternating_sum(d.dims); }

long long chain_euler_char(const DolbeaultPoissonModel& m) {
  long long s = 0;
  for (const auto& [b, names] : m.labels()) {
    s += ((b.p + b.q) % 2 == 0 ? 1 : -1) * static_cast<long long>(names.size());
  }
  return m.n() % 2 == 0 ? s : -s;
}

}  // namespace kbh
