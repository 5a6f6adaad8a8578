#include "kbh/cli/tables.hpp"

#include <iomanip>
#include <sstream>

#include "kbh/errors.hpp"

namespace kbh::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw ParseError(source + ": " + what);
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, std::string("invalid JSON: ") + e.what());
  }
}

void only_fields(const json& doc, const std::string& source, std::initializer_list<const char*> ok) {
  if (!doc.is_object()) fail(source, "expected an object");
  for (const auto& [k, v] : doc.items()) {
    bool known = false;
    for (const char* f : ok) known = known || k == f;
    if (!known) fail(source, "unknown field '" + k + "'");
  }
}

int read_n(const json& doc, const std::string& source) {
  auto it = doc.find("n");
  if (it == doc.end() || !it->is_number_integer() || it->get<int>() < 0) {
    fail(source, "field 'n' must be a nonnegative integer");
  }
  return it->get<int>();
}

std::size_t read_count(const json& v, const std::string& source, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(source, "entry '" + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

int read_index(const std::string& key, const std::string& source) {
  try {
    std::size_t used = 0;
    const int k = std::stoi(key, &used);
    if (used == key.size()) return k;
  } catch (const std::logic_error&) {
  }
  fail(source, "key '" + key + "' is not an integer");
}

std::map<int, std::size_t> read_graded(const json& doc, const std::string& source, int lo,
                                       int hi) {
  auto it = doc.find("dims");
  if (it == doc.end() || !it->is_object()) fail(source, "field 'dims' must be an object");
  std::map<int, std::size_t> out;
  for (int k = lo; k <= hi; ++k) out[k] = 0;
  for (const auto& [key, v] : it->items()) {
    const int k = read_index(key, source);
    if (k < lo || k > hi) {
      fail(source, "degree " + key + " outside [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    }
    out[k] = read_count(v, source, key);
  }
  return out;
}

std::string row(const std::string& label, const std::map<int, std::size_t>& dims) {
  std::ostringstream os;
  os << std::left << std::setw(6) << label;
  for (const auto& [k, d] : dims) os << std::right << std::setw(6) << k;
  os << "\n" << std::left << std::setw(6) << "dim";
  for (const auto& [k, d] : dims) os << std::right << std::setw(6) << d;
  os << "\n";
  return os.str();
}

}  // namespace

KBDims parse_kb_table(const std::string& text, const std::string& source) {
  const json doc = parse(text, source);
  only_fields(doc, source, {"n", "dims"});
  KBDims d;
  d.n = read_n(doc, source);
  d.dims = read_graded(doc, source, 0, 2 * d.n);
  return d;
}

HHDims parse_hh_table(const std::string& text, const std::string& source) {
  const json doc = parse(text, source);
  only_fields(doc, source, {"n", "dims"});
  HHDims d;
  d.n = read_n(doc, source);
  d.dims = read_graded(doc, source, -d.n, d.n);
  return d;
}

HodgeDiamond parse_hodge_table(const std::string& text, const std::string& source) {
  const json doc = parse(text, source);
  only_fields(doc, source, {"n", "h"});
  HodgeDiamond h;
  h.n = read_n(doc, source);
  auto it = doc.find("h");
  if (it == doc.end() || !it->is_object()) fail(source, "field 'h' must be an object");
  for (const auto& [key, v] : it->items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) fail(source, "key '" + key + "' is not of the form \"p,q\"");
    const int p = read_index(key.substr(0, comma), source);
    const int q = read_index(key.substr(comma + 1), source);
    if (p < 0 || q < 0 || p > h.n || q > h.n) fail(source, "bidegree " + key + " outside [0, n]^2");
    const std::size_t d = read_count(v, source, key);
    if (d > 0) h.h[{p, q}] = d;
  }
  return h;
}

PolyBivector parse_bivector(const std::string& text, int n, const std::string& source) {
  json doc = parse(text, source);
  if (doc.is_object()) {
    only_fields(doc, source, {"terms"});
    auto it = doc.find("terms");
    if (it == doc.end()) fail(source, "missing field 'terms'");
    doc = *it;
  }
  if (!doc.is_array()) fail(source, "expected an array of terms");
  std::vector<PolyTerm> terms;
  for (std::size_t t = 0; t < doc.size(); ++t) {
    const std::string path = source + ": terms[" + std::to_string(t) + "]";
    const json& e = doc[t];
    if (!e.is_object()) throw ParseError(path + ": expected an object");
    for (const auto& [k, v] : e.items()) {
      if (k != "i" && k != "j" && k != "coeff" && k != "alpha") {
        throw ParseError(path + ": unknown field '" + k + "'");
      }
    }
    PolyTerm term;
    for (const char* f : {"i", "j"}) {
      auto it = e.find(f);
      if (it == e.end() || !it->is_number_integer()) {
        throw ParseError(path + "." + f + ": expected an integer");
      }
    }
    term.i = e["i"].get<int>() - 1;
    term.j = e["j"].get<int>() - 1;
    auto c = e.find("coeff");
    if (c == e.end()) throw ParseError(path + ".coeff: missing field");
    if (c->is_number_integer()) {
      term.coeff = parse_rational(std::to_string(c->get<long long>()));
    } else if (c->is_string()) {
      term.coeff = parse_rational(c->get<std::string>());
    } else {
      throw ParseError(path + ".coeff: expected a rational string");
    }
    auto a = e.find("alpha");
    if (a == e.end()) {
      term.alpha.assign(static_cast<std::size_t>(n), 0);
    } else {
      if (!a->is_array()) throw ParseError(path + ".alpha: expected an array of integers");
      for (const auto& x : *a) {
        if (!x.is_number_integer()) throw ParseError(path + ".alpha: expected integers");
        term.alpha.push_back(x.get<int>());
      }
    }
    terms.push_back(std::move(term));
  }
  return PolyBivector(n, std::move(terms));
}

Json to_json(const KBDims& d) {
  Json dims = Json::object();
  for (int k = 0; k <= 2 * d.n; ++k) dims[std::to_string(k)] = d.at(k);
  return {{"n", d.n}, {"dims", std::move(dims)}};
}

Json to_json(const HHDims& d) {
  Json dims = Json::object();
  for (int k = -d.n; k <= d.n; ++k) dims[std::to_string(k)] = d.at(k);
  return {{"n", d.n}, {"dims", std::move(dims)}};
}

Json to_json(const HodgeDiamond& h) {
  Json grid = Json::object();
  for (int p = 0; p <= h.n; ++p) {
    for (int q = 0; q <= h.n; ++q) {
      if (h.at(p, q) > 0) grid[std::to_string(p) + "," + std::to_string(q)] = h.at(p, q);
    }
  }
  return {{"n", h.n}, {"h", std::move(grid)}};
}

Json to_json(const std::map<Bidegree, std::size_t>& page) {
  Json out = Json::object();
  for (const auto& [b, d] : page) {
    if (d > 0) out[std::to_string(b.p) + "," + std::to_string(b.q)] = d;
  }
  return out;
}

std::string kb_text(const KBDims& d) {
  std::map<int, std::size_t> dims;
  for (int k = 0; k <= 2 * d.n; ++k) dims[k] = d.at(k);
  return "n = " + std::to_string(d.n) + "\n" + row("k", dims);
}

std::string hh_text(const HHDims& d) {
  std::map<int, std::size_t> dims;
  for (int k = -d.n; k <= d.n; ++k) dims[k] = d.at(k);
  return "n = " + std::to_string(d.n) + "\n" + row("k", dims);
}

std::string hodge_text(const HodgeDiamond& h) {
  std::ostringstream os;
  os << "n = " << h.n << "\n" << std::left << std::setw(6) << "q\\p";
  for (int p = 0; p <= h.n; ++p) os << std::right << std::setw(6) << p;
  os << "\n";
  for (int q = h.n; q >= 0; --q) {
    os << std::left << std::setw(6) << q;
    for (int p = 0; p <= h.n; ++p) os << std::right << std::setw(6) << h.at(p, q);
    os << "\n";
  }
  return os.str();
}

std::string page_text(const std::map<Bidegree, std::size_t>& page) {
  if (page.empty()) return "  (zero)\n";
  int p0 = page.begin()->first.p, p1 = p0, q0 = page.begin()->first.q, q1 = q0;
  for (const auto& [b, d] : page) {
    p0 = std::min(p0, b.p);
    p1 = std::max(p1, b.p);
    q0 = std::min(q0, b.q);
    q1 = std::max(q1, b.q);
  }
  std::ostringstream os;
  os << std::left << std::setw(6) << "q\\p";
  for (int p = p0; p <= p1; ++p) os << std::right << std::setw(6) << p;
  os << "\n";
  for (int q = q1; q >= q0; --q) {
    os << std::left << std::setw(6) << q;
    for (int p = p0; p <= p1; ++p) {
      auto it = page.find({p, q});
      os << std::right << std::setw(6) << (it == page.end() ? 0 : it->second);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace kbh::cli
