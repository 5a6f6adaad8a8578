#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kbh/exactla/rational.hpp"

namespace kbh::exterior {

/// Wedge monomial g_{i1} ^ ... ^ g_{ik} with i1 < ... < ik, encoded as a
/// bitmask over at most 32 generators. Generator order is bit order.
using Monomial = std::uint32_t;
using Element = std::map<Monomial, Rational>;

int degree(Monomial m);
std::vector<int> indices(Monomial m);

/// Sign and result of a ^ b; sign 0 when they share a generator.
int wedge_sign(Monomial a, Monomial b);
void add_wedge(Element& out, const Rational& coeff, Monomial a, Monomial b);
Element wedge(const Element& a, const Element& b);

/// Interior product with the dual of generator g: removes g from position
/// s (0-based) with sign (-1)^s; zero if g is absent.
Element interior(int g, const Element& x);

/// Extends generator images (each of odd degree change +1) to a degree +1
/// graded derivation: D(g_{i1}...g_{ik}) = sum_s (-1)^s ... D(g_is) ...
Element derivation(const std::vector<Element>& images, const Element& x);

/// All monomials in generators [lo, lo+count) of the given degree,
/// lexicographic in their sorted index tuples.
std::vector<Monomial> monomials(int lo, int count, int degree);

}  // namespace kbh::exterior
