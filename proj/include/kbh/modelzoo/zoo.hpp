#pragma once

#include <array>
#include <map>

#include "kbh/kbengine/kb.hpp"
#include "kbh/poisson/model.hpp"

namespace kbh {

/// c^k_{ij}, keyed (k, i, j) with 0-based indices. Entries with i > j are
/// folded onto (k, j, i) with the sign flipped.
using StructureConstants = std::map<std::array<int, 3>, Rational>;

/// One cell at (0,0), n = 0.
DolbeaultPoissonModel point_model();

/// Invariant forms on a complex torus: d = dbar = 0 and the contraction
/// of the constant bivector `pi` (antisymmetric n x n).
DolbeaultPoissonModel torus(int n);
DolbeaultPoissonModel torus(int n, const Matrix& pi);

/// Invariant forms on a complex parallelizable manifold:
/// d w^k = -sum_{i<j} c^k_{ij} w^i ^ w^j, dbar mirrors it on the
/// conjugates. Throws ValidationError when c fails Jacobi or when pi does
/// not give a valid model; std::invalid_argument for malformed input.
DolbeaultPoissonModel parallelizable(int n, const StructureConstants& c, const Matrix& pi);
DolbeaultPoissonModel parallelizable(int n, const StructureConstants& c);

/// n = 3 with the single constant c^3_{12} = 1.
StructureConstants iwasawa_constants();

/// Dimension-only model: dim h(p,q) at each bidegree, all operators zero.
DolbeaultPoissonModel hodge_formal(const HodgeDiamond& h);

/// Antisymmetric n x n matrix with pi^{ij} = value, pi^{ji} = -value
/// (0-based i, j).
Matrix bivector(int n, int i, int j, const Rational& value = 1);

}  // namespace kbh
