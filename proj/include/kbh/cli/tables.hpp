#pragma once

#include <string>

#include <json.hpp>

#include "kbh/calculus/rules.hpp"
#include "kbh/polyforms/stein.hpp"

namespace kbh::cli {

using Json = nlohmann::ordered_json;

/// {"n": int, "dims": {"k": int}} with k in [0, 2n]; missing k are zero.
KBDims parse_kb_table(const std::string& text, const std::string& source);
/// Same layout with k in [-n, n].
HHDims parse_hh_table(const std::string& text, const std::string& source);
/// {"n": int, "h": {"p,q": int}} with 0 <= p, q <= n.
HodgeDiamond parse_hodge_table(const std::string& text, const std::string& source);
/// Array of {"i", "j", "coeff", "alpha"} terms (1-based indices), either
/// bare or under a "terms" key.
PolyBivector parse_bivector(const std::string& text, int n, const std::string& source);

Json to_json(const KBDims& d);
Json to_json(const HHDims& d);
Json to_json(const HodgeDiamond& h);
Json to_json(const std::map<Bidegree, std::size_t>& page);

std::string kb_text(const KBDims& d);
std::string hh_text(const HHDims& d);
std::string hodge_text(const HodgeDiamond& h);
std::string page_text(const std::map<Bidegree, std::size_t>& page);

}  // namespace kbh::cli
