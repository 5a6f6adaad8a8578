#pragma once

#include <cstddef>
#include <vector>

#include "kbh/kbengine/kb.hpp"

namespace kbh {

/// Bidegree (u, v) of a fiber class t_i.
struct ClassBidegree {
  int u = 0;
  int v = 0;
};
using ClassBidegrees = std::vector<ClassBidegree>;

/// Blow-up of X along Y of codimension r with exceptional divisor E.
struct BlowupData {
  int r = 2;
  KBDims x;
  KBDims y;
  KBDims e;
};

/// Precondition failures throw ValidationError; blow-up data that would
/// produce a negative dimension throws InconsistentData.

KBDims kunneth_dims(const KBDims& a, const KBDims& b);

/// HH_E(k) = sum_i HH_X(k + v_i - u_i). The result spans
/// n_X + max_i max(u_i, v_i).
HHDims leray_hirsch_hh(const HHDims& x, const ClassBidegrees& classes);

HHDims flag_bundle_hh(const HHDims& x, std::size_t b_fiber);

/// dims(n) = b, zero elsewhere.
KBDims flag_manifold_kb(int n, std::size_t b);

/// h_E(p,q) = sum_{i<r} h_Y(p-i, q-i), n_E = n_Y + r - 1.
HodgeDiamond projective_bundle_hodge(const HodgeDiamond& hy, int r);

/// h(p,q) = h_X(p,q) + sum_{i=1}^{r-1} h_Y(p-i, q-i). An empty hy is
/// accepted whatever its n.
HodgeDiamond blowup_hodge(const HodgeDiamond& hx, const HodgeDiamond& hy, int r);

/// dims(k) = X(k) + E(k-1) - Y(k-r).
KBDims blowup_kb(const BlowupData& d);

/// Blow-up at a point: dims(n) += n - 1. Requires n >= 2.
KBDims blowup_point_kb(const KBDims& x);

/// chi(union) == chi(u) + chi(v) - chi(uv).
bool mv_euler_check(const KBDims& u, const KBDims& v, const KBDims& uv, const KBDims& uni);

}  // namespace kbh
