#pragma once

// Independent reference computations for tests: dense Gauss-Jordan over Q,
// brute-force sign counting, closed-form dimension formulas.

#include <cstddef>
#include <map>
#include <vector>

#include "kbh/complexes/complex.hpp"
#include "kbh/kbengine/kb.hpp"
#include "kbh/poisson/exterior.hpp"

namespace oracle {

using kbh::Rational;
using Dense = std::vector<std::vector<Rational>>;

Dense dense(const kbh::Matrix& m);
std::size_t rank(Dense a);
std::size_t rank(const kbh::Matrix& m);
std::size_t nullity(const kbh::Matrix& m);
Dense multiply(const Dense& a, const Dense& b);

/// Homology of a complex from dense ranks only.
std::map<int, std::size_t> homology(const kbh::Complex& c);

/// Sign of sorting the concatenated index word by bubble sort.
int sort_sign(std::vector<int> word);

long long binomial(int n, int k);

/// sum_{p-q=n-k} h(p,q) for k in [0, 2n].
kbh::KBDims antidiagonal_sums(const kbh::HodgeDiamond& h);

/// h^{i,i} = 1 for 0 <= i <= n.
kbh::HodgeDiamond projective_space(int n);

}  // namespace oracle
