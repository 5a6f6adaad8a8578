#include "kbh/calculus/rules.hpp"

#include <algorithm>

#include "kbh/errors.hpp"

namespace kbh {

namespace {

bool all_zero(const KBDims& d) {
  return std::all_of(d.dims.begin(), d.dims.end(), [](const auto& e) { return e.second == 0; });
}

void require_n(const KBDims& d, int n, const char* what) {
  if (d.n != n && !all_zero(d)) {
    throw ValidationError(std::string(what) + " has n = " + std::to_string(d.n) +
                          ", expected " + std::to_string(n));
  }
}

}  // namespace

KBDims kunneth_dims(const KBDims& a, const KBDims& b) {
  KBDims out = KBDims::zero(a.n + b.n);
  for (const auto& [i, da] : a.dims) {
    for (const auto& [j, db] : b.dims) out.dims[i + j] += da * db;
  }
  return out;
}

HHDims leray_hirsch_hh(const HHDims& x, const ClassBidegrees& classes) {
  if (classes.empty()) throw ValidationError("leray-hirsch needs at least one class");
  int extra = 0;
  for (const ClassBidegree& c : classes) {
    if (c.u < 0 || c.v < 0) throw ValidationError("class bidegrees must be nonnegative");
    extra = std::max({extra, c.u, c.v});
  }
  HHDims out;
  out.n = x.n + extra;
  for (int k = -out.n; k <= out.n; ++k) {
    std::size_t s = 0;
    for (const ClassBidegree& c : classes) s += x.at(k + c.v - c.u);
    out.dims[k] = s;
  }
  return out;
}

HHDims flag_bundle_hh(const HHDims& x, std::size_t b_fiber) {
  if (b_fiber < 1) throw ValidationError("fiber betti sum must be >= 1");
  HHDims out = x;
  for (auto& [k, d] : out.dims) d *= b_fiber;
  return out;
}

KBDims flag_manifold_kb(int n, std::size_t b) {
  if (n < 0) throw ValidationError("n must be >= 0");
  if (b < 1) throw ValidationError("betti sum must be >= 1");
  KBDims out = KBDims::zero(n);
  out.dims[n] = b;
  return out;
}

HodgeDiamond projective_bundle_hodge(const HodgeDiamond& hy, int r) {
  if (r < 1) throw ValidationError("projective bundle rank must be >= 1");
  HodgeDiamond out;
  out.n = hy.n + r - 1;
  for (const auto& [b, d] : hy.h) {
    for (int i = 0; i < r; ++i) {
      if (d > 0) out.h[{b.p + i, b.q + i}] += d;
    }
  }
  return out;
}

HodgeDiamond blowup_hodge(const HodgeDiamond& hx, const HodgeDiamond& hy, int r) {
  if (r < 2) throw ValidationError("blow-up codimension must be >= 2");
  const bool empty = std::all_of(hy.h.begin(), hy.h.end(),
                                 [](const auto& e) { return e.second == 0; });
  if (!empty && hy.n != hx.n - r) {
    throw ValidationError("center has n = " + std::to_string(hy.n) + ", expected " +
                          std::to_string(hx.n - r));
  }
  HodgeDiamond out = hx;
  for (const auto& [b, d] : hy.h) {
    for (int i = 1; i < r; ++i) {
      if (d > 0) out.h[{b.p + i, b.q + i}] += d;
    }
  }
  return out;
}

KBDims blowup_kb(const BlowupData& d) {
  if (d.r < 2) throw ValidationError("blow-up codimension must be >= 2");
  require_n(d.y, d.x.n - d.r, "center");
  require_n(d.e, d.x.n - 1, "exceptional divisor");
  KBDims out = KBDims::zero(d.x.n);
  for (auto& [k, v] : out.dims) {
    const long long value = static_cast<long long>(d.x.at(k)) +
                            static_cast<long long>(d.e.at(k - 1)) -
                            static_cast<long long>(d.y.at(k - d.r));
    if (value < 0) {
      throw InconsistentData("inconsistent blow-up data: negative dimension at k = " +
                             std::to_string(k));
    }
    v = static_cast<std::size_t>(value);
  }
  return out;
}

KBDims blowup_point_kb(const KBDims& x) {
  if (x.n < 2) throw ValidationError("point blow-up needs n >= 2");
  KBDims out = x;
  out.dims[x.n] += static_cast<std::size_t>(x.n - 1);
  return out;
}

bool mv_euler_check(const KBDims& u, const KBDims& v, const KBDims& uv, const KBDims& uni) {
  for (const KBDims* d : {&u, &v, &uv}) {
    if (d->n != uni.n) throw ValidationError("Mayer-Vietoris tables must share n");
  }
  return euler_char(uni) == euler_char(u) + euler_char(v) - euler_char(uv);
}

}  // namespace kbh
