#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kbh/complexes/double_complex.hpp"
#include "kbh/poisson/exterior.hpp"

namespace kbh {

using Labels = std::map<Bidegree, std::vector<std::string>>;

/// Exterior-algebra realization of a model: generators 0..n-1 are the
/// holomorphic coframe w^1..w^n, generators n..2n-1 the conjugates. The
/// basis at (p,q) lists the monomials in the same order as the labels.
struct WedgeData {
  std::map<Bidegree, std::vector<exterior::Monomial>> monomials;
};

struct ModelInfo {
  std::string name;
  /// Dimension-only model (d = dbar = 0, no wedge data); only the zero
  /// bivector is meaningful on it.
  bool formal = false;
  /// Free-text assertions (compactness, manifold realization, ...); never
  /// used in computation.
  std::map<std::string, std::string> metadata;
};

/// Finite bigraded stand-in for the Dolbeault complex of a holomorphic
/// Poisson manifold: spaces A^{p,q} (0 <= p,q <= n) with d, dbar and the
/// contraction l_pi as block matrices. Immutable after construction.
class DolbeaultPoissonModel {
 public:
  DolbeaultPoissonModel() = default;
  /// Checks block shapes and bidegree bounds (std::invalid_argument);
  /// operator identities are checked by validate_model.
  DolbeaultPoissonModel(int n, Labels labels, BlockMap del, BlockMap delbar,
                        BlockMap contraction, ModelInfo info = {},
                        std::optional<WedgeData> wedge = std::nullopt);

  int n() const { return n_; }
  std::size_t dim(Bidegree b) const;
  std::size_t total_dim() const;
  const Labels& labels() const { return labels_; }
  const ModelInfo& info() const { return info_; }
  const std::optional<WedgeData>& wedge() const { return wedge_; }

  /// Blocks by source bidegree; absent blocks are zero of the right shape.
  Matrix del(Bidegree from) const;
  Matrix delbar(Bidegree from) const;
  Matrix contraction(Bidegree from) const;
  const BlockMap& del_blocks() const { return del_; }
  const BlockMap& delbar_blocks() const { return delbar_; }
  const BlockMap& contraction_blocks() const { return contraction_; }

  bool has_zero_contraction() const { return contraction_.empty(); }

  /// Same spaces and d, dbar; new contraction blocks.
  DolbeaultPoissonModel with_contraction(BlockMap contraction) const;
  DolbeaultPoissonModel with_info(ModelInfo info) const;

 private:
  int n_ = 0;
  Labels labels_;
  BlockMap del_;
  BlockMap delbar_;
  BlockMap contraction_;
  ModelInfo info_;
  std::optional<WedgeData> wedge_;
};

bool operator==(const DolbeaultPoissonModel& a, const DolbeaultPoissonModel& b);

/// Blocks (p,q) -> (p-1,q) of d_pi = l_pi d - d l_pi.
struct KoszulDifferential {
  BlockMap blocks;

  Matrix block(const DolbeaultPoissonModel& m, Bidegree from) const;
};

/// Computes d_pi blockwise and checks d_pi^2 = 0 and
/// dbar d_pi + d_pi dbar = 0; throws ValidationError ("not a valid
/// holomorphic Poisson model ...") naming the offending bidegree.
KoszulDifferential koszul_differential(const DolbeaultPoissonModel& m);

/// Same computation without the identity checks.
KoszulDifferential raw_koszul_differential(const DolbeaultPoissonModel& m);

/// l_pi = sum_{i<j} pi^{ij} i_{theta_j} i_{theta_i}: contract with theta_i
/// first, then theta_j, so l_{theta_1 ^ theta_2}(w^1 ^ w^2) = 1.
/// `coeffs` must be an antisymmetric n x n matrix.
BlockMap contraction_from_bivector(const DolbeaultPoissonModel& m, const Matrix& coeffs);

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::optional<Bidegree> at;       // source bidegree of the first failure
  std::optional<Matrix> residual;   // the nonzero composite there
};

struct ValidationReport {
  std::vector<IdentityCheck> checks;

  bool passed() const;
  const IdentityCheck* first_failure() const;
  std::string summary() const;
};

/// Identity names, in report order.
inline constexpr const char* kDelSquared = "d^2 = 0";
inline constexpr const char* kDelbarSquared = "dbar^2 = 0";
inline constexpr const char* kDelDelbar = "d dbar + dbar d = 0";
inline constexpr const char* kKoszulSquared = "d_pi^2 = 0";
inline constexpr const char* kDelbarKoszul = "dbar d_pi + d_pi dbar = 0";

ValidationReport validate_model(const DolbeaultPoissonModel& m);

/// Tensor product model with bidegrees added, d and dbar extended as
/// graded derivations and l = l_pi (x) 1 + 1 (x) l_sigma. Basis element
/// x_i (x) y_j at (p,q) is ordered by the X-bidegree, then i, then j.
DolbeaultPoissonModel product_model(const DolbeaultPoissonModel& x,
                                    const DolbeaultPoissonModel& y);

/// Position of x_i (x) y_j inside the product's (p,q) space.
std::size_t product_offset(const DolbeaultPoissonModel& x, const DolbeaultPoissonModel& y,
                           Bidegree bx, Bidegree by);

}  // namespace kbh
