#include "kbh/modelzoo/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kbh/errors.hpp"

namespace kbh {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string key(Bidegree b) { return std::to_string(b.p) + "," + std::to_string(b.q); }

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void check_fields(const json& obj, const std::string& path, std::set<std::string> allowed,
                  bool lax) {
  if (!obj.is_object()) fail(path, "expected an object");
  if (lax) return;
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) fail(path + "." + k, "unknown field");
  }
}

const json& field(const json& obj, const std::string& path, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(path + "." + name, "missing field");
  return *it;
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

Bidegree parse_key(const std::string& k, const std::string& path) {
  const auto comma = k.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(k);
    std::size_t used = 0;
    const int p = std::stoi(k.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(k);
    const std::string rest = k.substr(comma + 1);
    const int q = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(k);
    return {p, q};
  } catch (const std::logic_error&) {
    fail(path, "bidegree key '" + k + "' is not of the form \"p,q\"");
  }
}

Matrix parse_matrix(const json& rows, std::size_t nrows, std::size_t ncols,
                    const std::string& path) {
  if (!rows.is_array()) fail(path, "expected an array of rows");
  if (rows.size() != nrows) {
    fail(path, "has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(nrows));
  }
  Matrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    const json& row = rows[i];
    if (!row.is_array()) fail(rp, "expected an array");
    if (row.size() != ncols) {
      fail(rp, "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(ncols));
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      const std::string ep = rp + "[" + std::to_string(j) + "]";
      const json& e = row[j];
      if (!e.is_string()) fail(ep, "expected a rational string");
      try {
        m.set(i, j, parse_rational(e.get<std::string>()));
      } catch (const ParseError& err) {
        fail(ep, err.what());
      }
    }
  }
  return m;
}

BlockMap parse_blocks(const json& doc, const char* name, const Labels& labels, Bidegree step,
                      bool lax) {
  BlockMap out;
  auto it = doc.find(name);
  if (it == doc.end()) return out;
  const std::string path = std::string("model.") + name;
  if (!it->is_array()) fail(path, "expected an array of blocks");
  auto dim = [&](Bidegree b) {
    auto l = labels.find(b);
    return l == labels.end() ? std::size_t{0} : l->second.size();
  };
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string bp = path + "[" + std::to_string(i) + "]";
    const json& block = (*it)[i];
    check_fields(block, bp, {"from", "matrix"}, lax);
    const json& from = field(block, bp, "from");
    if (!from.is_array() || from.size() != 2) fail(bp + ".from", "expected [p, q]");
    const Bidegree b{as_int(from[0], bp + ".from[0]"), as_int(from[1], bp + ".from[1]")};
    if (out.count(b)) fail(bp + ".from", "duplicate block from " + to_string(b));
    out.emplace(b, parse_matrix(field(block, bp, "matrix"), dim(b + step), dim(b),
                                bp + ".matrix"));
  }
  return out;
}

ordered_json dump_blocks(const BlockMap& blocks) {
  ordered_json arr = ordered_json::array();
  for (const auto& [b, m] : blocks) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m.to_dense()) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back(to_string(v));
      rows.push_back(std::move(r));
    }
    arr.push_back({{"from", {b.p, b.q}}, {"matrix", std::move(rows)}});
  }
  return arr;
}

}  // namespace

std::string save_model(const DolbeaultPoissonModel& m) {
  ordered_json doc;
  doc["format"] = kModelFormat;
  doc["name"] = m.info().name;
  doc["n"] = m.n();
  if (m.info().formal) doc["formal"] = true;
  ordered_json basis = ordered_json::object();
  for (const auto& [b, names] : m.labels()) basis[key(b)] = names;
  doc["basis"] = std::move(basis);
  doc["del"] = dump_blocks(m.del_blocks());
  doc["delbar"] = dump_blocks(m.delbar_blocks());
  doc["contraction"] = dump_blocks(m.contraction_blocks());
  if (m.wedge()) {
    ordered_json w = ordered_json::object();
    for (const auto& [b, mons] : m.wedge()->monomials) {
      if (m.dim(b) > 0) w[key(b)] = mons;
    }
    doc["wedge"] = std::move(w);
  }
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : m.info().metadata) meta[k] = v;
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

DolbeaultPoissonModel parse_model(const std::string& text, bool lax) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  check_fields(doc, "model",
               {"format", "name", "n", "formal", "basis", "del", "delbar", "contraction", "wedge",
                "metadata"},
               lax);
  const json& format = field(doc, "model", "format");
  if (!format.is_string() || format.get<std::string>() != kModelFormat) {
    fail("model.format", std::string("expected \"") + kModelFormat + "\"");
  }
  ModelInfo info;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("model.name", "expected a string");
    info.name = it->get<std::string>();
  }
  const int n = as_int(field(doc, "model", "n"), "model.n");
  if (n < 0) fail("model.n", "must be >= 0");
  if (auto it = doc.find("formal"); it != doc.end()) {
    if (!it->is_boolean()) fail("model.formal", "expected a boolean");
    info.formal = it->get<bool>();
  }
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) fail("model.metadata", "expected an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) fail("model.metadata." + k, "expected a string");
      info.metadata[k] = v.get<std::string>();
    }
  }

  Labels labels;
  const json& basis = field(doc, "model", "basis");
  if (!basis.is_object()) fail("model.basis", "expected an object keyed \"p,q\"");
  for (const auto& [k, v] : basis.items()) {
    const std::string path = "model.basis." + k;
    const Bidegree b = parse_key(k, path);
    if (b.p < 0 || b.q < 0 || b.p > n || b.q > n) fail(path, "bidegree outside [0, n]^2");
    if (!v.is_array()) fail(path, "expected an array of labels");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
      names.push_back(v[i].get<std::string>());
    }
    if (!names.empty()) labels[b] = std::move(names);
  }

  std::optional<WedgeData> wedge;
  if (auto it = doc.find("wedge"); it != doc.end()) {
    if (!it->is_object()) fail("model.wedge", "expected an object keyed \"p,q\"");
    WedgeData w;
    for (const auto& [k, v] : it->items()) {
      const std::string path = "model.wedge." + k;
      const Bidegree b = parse_key(k, path);
      if (!v.is_array()) fail(path, "expected an array of monomials");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_unsigned()) {
          fail(path + "[" + std::to_string(i) + "]", "expected a monomial bitmask");
        }
        w.monomials[b].push_back(v[i].get<exterior::Monomial>());
      }
    }
    wedge = std::move(w);
  }

  BlockMap del = parse_blocks(doc, "del", labels, {1, 0}, lax);
  BlockMap delbar = parse_blocks(doc, "delbar", labels, {0, 1}, lax);
  BlockMap contraction = parse_blocks(doc, "contraction", labels, {-2, 0}, lax);
  try {
    return DolbeaultPoissonModel(n, std::move(labels), std::move(del), std::move(delbar),
                                 std::move(contraction), std::move(info), std::move(wedge));
  } catch (const std::invalid_argument& e) {
    fail("model", e.what());
  }
}

DolbeaultPoissonModel load_model(const std::string& text, bool lax) {
  DolbeaultPoissonModel m = parse_model(text, lax);
  if (m.info().formal && !m.has_zero_contraction()) {
    throw ValidationError("formal model carries a nonzero contraction");
  }
  const ValidationReport report = validate_model(m);
  if (const IdentityCheck* bad = report.first_failure()) {
    throw ValidationError("not a valid holomorphic Poisson model: " + bad->name + " fails at " +
                          to_string(*bad->at));
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

}  // namespace kbh
