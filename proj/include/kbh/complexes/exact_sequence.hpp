#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kbh/complexes/complex.hpp"

namespace kbh {

/// Finite sequence of vector spaces and maps entry_i -> entry_{i+1}.
struct LongExactSequence {
  struct Entry {
    std::string label;
    std::size_t dim = 0;
  };
  std::vector<Entry> entries;
  std::vector<Matrix> maps;  // maps[i] : entries[i] -> entries[i+1]

  /// Exactness of 0 -> e_0 -> ... -> e_last -> 0 at every node.
  bool is_exact() const;
  /// First node where exactness fails, or -1.
  int first_non_exact() const;
  long long alternating_dim_sum() const;
};

/// Long exact homology sequence of 0 -> A -f-> B -g-> C -> 0, laid out as
/// ... H^k(A) -> H^k(B) -> H^k(C) -delta-> H^{k+1}(A) ...
/// Maps are matrices in the bases chosen by homology_basis(). Throws
/// ValidationError naming the failing map and degree when the input is
/// not a degreewise short exact sequence of complexes.
LongExactSequence les_from_ses(const ChainMap& f, const ChainMap& g);

}  // namespace kbh
