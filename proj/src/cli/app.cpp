#include "kbh/cli/app.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kbh/cli/tables.hpp"
#include "kbh/errors.hpp"
#include "kbh/modelzoo/model_io.hpp"

#ifndef KBH_VERSION
#define KBH_VERSION "0.0.0"
#endif

namespace kbh::cli {

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return os.str();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

struct Report {
  std::string command;
  Json options = Json::object();
  Json inputs = Json::array();
  Json result = Json::object();
  Json metadata = Json::object();
  std::string text;

  // Reads an input file and records its digest (never its path, so that
  // reports depend on content only).
  std::string input(const std::string& role, const std::string& path) {
    std::string data = read_file(path);
    inputs.push_back({{"role", role}, {"sha256", sha256_hex(data)}});
    return data;
  }
};

struct OutputFlags {
  bool json = false;
  bool no_timestamp = false;
};

void emit(const Report& r, const OutputFlags& flags, std::ostream& out) {
  if (flags.json) {
    Json doc;
    doc["command"] = r.command;
    doc["options"] = r.options;
    doc["inputs"] = r.inputs;
    doc["result"] = r.result;
    doc["metadata"] = r.metadata;
    doc["engine_version"] = KBH_VERSION;
    if (!flags.no_timestamp) doc["timestamp"] = utc_now();
    out << doc.dump(2) << "\n";
    return;
  }
  out << "kbhom " << r.command << "\n" << r.text;
  for (const auto& [k, v] : r.metadata.items()) {
    out << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void add_output_flags(CLI::App* sub, OutputFlags& flags) {
  sub->add_flag("--json", flags.json, "Print a JSON report");
  sub->add_flag("--no-timestamp", flags.no_timestamp, "Omit the timestamp from JSON reports");
}

Json hypothesis(bool asserted) { return asserted ? "asserted by user" : "not asserted"; }

Json model_metadata(const DolbeaultPoissonModel& m) {
  Json meta = Json::object();
  meta["model"] = m.info().name;
  meta["n"] = m.n();
  if (m.info().formal) meta["formal"] = true;
  Json asserted = Json::object();
  for (const auto& [k, v] : m.info().metadata) asserted[k] = v;
  if (!asserted.empty()) meta["asserted"] = std::move(asserted);
  return meta;
}

std::vector<int> parse_weights(const std::string& spec) {
  const auto dots = spec.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int w = std::stoi(spec, &used);
      if (used != spec.size()) throw std::invalid_argument(spec);
      return {w};
    }
    const std::string a = spec.substr(0, dots);
    const std::string b = spec.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(spec);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(spec);
    std::vector<int> out;
    for (int w = lo; w <= hi; ++w) out.push_back(w);
    return out;
  } catch (const std::logic_error&) {
    throw ParseError("--weights expects 'a..b' or a single integer, got '" + spec + "'");
  }
}

ClassBidegree parse_class(const std::string& spec) {
  const auto comma = spec.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(spec);
    std::size_t used = 0;
    const std::string a = spec.substr(0, comma);
    const std::string b = spec.substr(comma + 1);
    const int u = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(spec);
    const int v = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(spec);
    return {u, v};
  } catch (const std::logic_error&) {
    throw ParseError("--class expects 'u,v', got '" + spec + "'");
  }
}

// --- subcommands -----------------------------------------------------------

struct CheckArgs {
  std::string model;
  bool lax = false;
};

int cmd_check(const CheckArgs& a, Report& r) {
  r.command = "check";
  const DolbeaultPoissonModel m = parse_model(r.input("model", a.model), a.lax);
  r.metadata = model_metadata(m);
  ValidationReport v = validate_model(m);
  if (m.info().formal && !m.has_zero_contraction()) {
    v.checks.insert(v.checks.begin(),
                    IdentityCheck{"formal model has zero contraction", false, std::nullopt,
                                  std::nullopt});
  }
  Json checks = Json::array();
  for (const IdentityCheck& c : v.checks) {
    Json e = {{"identity", c.name}, {"passed", c.passed}};
    e["at"] = c.at ? Json::array({c.at->p, c.at->q}) : Json(nullptr);
    checks.push_back(std::move(e));
  }
  r.result = {{"passed", v.passed()}, {"checks", std::move(checks)}};
  r.text = v.summary() + (v.passed() ? "PASS\n" : "FAIL\n");
  return v.passed() ? kOk : kValidationFailure;
}

struct ComputeArgs {
  std::string model;
  int pages = 0;
  bool lax = false;
};

int cmd_compute(const ComputeArgs& a, Report& r) {
  r.command = "compute";
  if (a.pages > 0) r.options["pages"] = a.pages;
  const DolbeaultPoissonModel m = load_model(r.input("model", a.model), a.lax);
  r.metadata = model_metadata(m);
  const KBDims kb = kb_homology(m);
  const long long chi = euler_char(kb);
  r.result["kb"] = to_json(kb);
  r.result["euler_characteristic"] = chi;
  std::ostringstream text;
  text << "Koszul-Brylinski homology H_k\n" << kb_text(kb) << "euler characteristic: " << chi
       << "\n";
  if (a.pages > 0) {
    const SpectralPages sp = kb_spectral_pages(m, a.pages);
    Json pages = Json::array();
    for (const SpectralPage& p : sp.pages) {
      if (p.r > a.pages) break;
      pages.push_back({{"r", p.r}, {"dims", to_json(p.dims)}});
      text << "E_" << p.r << "\n" << page_text(p.dims);
    }
    r.result["pages"] = std::move(pages);
    r.result["limit"] = to_json(sp.limit);
    r.result["degeneration_page"] = sp.degeneration_page;
    text << "E_inf\n" << page_text(sp.limit) << "degenerates at page " << sp.degeneration_page
         << "\n";
  }
  r.text = text.str();
  return kOk;
}

struct SteinArgs {
  int n = 0;
  std::string pi;
  std::string weights;
  int cap = kDefaultAlphaCap;
};

int cmd_stein(const SteinArgs& a, Report& r) {
  r.command = "stein";
  r.options = {{"n", a.n}, {"weights", a.weights}, {"cap", a.cap}};
  if (a.n < 0 || a.n > 31) throw ParseError("--n must lie in [0, 31]");
  const PolyBivector pi = a.pi.empty() ? PolyBivector(a.n, {})
                                       : parse_bivector(r.input("pi", a.pi), a.n, "pi");
  const std::vector<int> weights = parse_weights(a.weights);
  std::ostringstream text;
  text << "C^" << a.n << ", bivector degree " << pi.degree() << (pi.is_zero() ? " (zero)" : "")
       << "\n";
  Json slices = Json::array();
  for (int w : weights) {
    const PolyFormSlice s = stein_slice(pi, w, a.cap);
    const auto h = homology_dims(s.complex);
    Json dims = Json::object();
    Json homology = Json::object();
    std::map<int, std::size_t> hk;
    long long chi = 0;
    for (int k = 0; k <= a.n; ++k) {
      auto it = h.find(k - a.n);
      hk[k] = it == h.end() ? 0 : it->second;
      homology[std::to_string(k)] = hk[k];
      chi += ((k - a.n) % 2 == 0 ? 1 : -1) * static_cast<long long>(hk[k]);
    }
    for (int p = 0; p <= a.n; ++p) dims[std::to_string(p)] = s.dim(p);
    slices.push_back({{"w", w},
                      {"form_dims", std::move(dims)},
                      {"homology", std::move(homology)},
                      {"euler_characteristic", chi},
                      {"alternating_dim", s.alternating_dim()}});
    text << "weight " << w << ": H_k";
    for (const auto& [k, d] : hk) text << "  k=" << k << ":" << d;
    text << "  (chi " << chi << ", slice " << s.alternating_dim() << ")\n";
  }
  r.result = {{"n", a.n}, {"degree", pi.degree()}, {"slices", std::move(slices)}};
  r.text = text.str();
  return kOk;
}

int cmd_kunneth(const std::vector<std::string>& files, bool compact, Report& r) {
  r.command = "kunneth";
  const KBDims a = parse_kb_table(r.input("x", files.at(0)), "x");
  const KBDims b = parse_kb_table(r.input("y", files.at(1)), "y");
  const KBDims out = kunneth_dims(a, b);
  r.metadata["compactness"] = hypothesis(compact);
  r.result = to_json(out);
  r.text = kb_text(out);
  return kOk;
}

int cmd_leray_hirsch(const std::string& file, const std::vector<std::string>& classes,
                     Report& r) {
  r.command = "leray-hirsch";
  r.options["classes"] = classes;
  const HHDims x = parse_hh_table(r.input("base", file), "base");
  ClassBidegrees cls;
  for (const auto& c : classes) cls.push_back(parse_class(c));
  const HHDims out = leray_hirsch_hh(x, cls);
  r.result = to_json(out);
  r.text = "Hochschild homology HH_k\n" + hh_text(out);
  return kOk;
}

struct FlagArgs {
  int n = -1;
  std::string bundle;
  long long betti = 0;
};

int cmd_flag(const FlagArgs& a, Report& r) {
  r.command = "flag";
  r.options["betti"] = a.betti;
  if (a.betti < 1) throw ParseError("--betti must be >= 1");
  if (!a.bundle.empty()) {
    const HHDims x = parse_hh_table(r.input("base", a.bundle), "base");
    const HHDims out = flag_bundle_hh(x, static_cast<std::size_t>(a.betti));
    r.result = to_json(out);
    r.text = "Hochschild homology HH_k\n" + hh_text(out);
    return kOk;
  }
  if (a.n < 0) throw ParseError("flag needs --n or --bundle");
  r.options["n"] = a.n;
  const KBDims out = flag_manifold_kb(a.n, static_cast<std::size_t>(a.betti));
  r.result = to_json(out);
  r.text = kb_text(out);
  return kOk;
}

int cmd_pbundle(const std::string& file, int rank, Report& r) {
  r.command = "pbundle";
  r.options["rank"] = rank;
  const HodgeDiamond y = parse_hodge_table(r.input("base", file), "base");
  const HodgeDiamond out = projective_bundle_hodge(y, rank);
  r.result = to_json(out);
  r.text = hodge_text(out);
  return kOk;
}

struct BlowupArgs {
  std::string x, y, e;
  int codim = 2;
  bool hodge = false;
  bool star = false;
};

int cmd_blowup(const BlowupArgs& a, Report& r) {
  r.command = "blowup";
  r.options = {{"codim", a.codim}, {"hodge", a.hodge}};
  r.metadata["star"] = hypothesis(a.star);
  if (a.hodge) {
    const HodgeDiamond hx = parse_hodge_table(r.input("x", a.x), "x");
    const HodgeDiamond hy = parse_hodge_table(r.input("y", a.y), "y");
    const HodgeDiamond out = blowup_hodge(hx, hy, a.codim);
    r.result = to_json(out);
    r.text = hodge_text(out);
    return kOk;
  }
  if (a.e.empty()) throw ParseError("blowup needs --e (exceptional divisor table)");
  BlowupData d;
  d.r = a.codim;
  d.x = parse_kb_table(r.input("x", a.x), "x");
  d.y = parse_kb_table(r.input("y", a.y), "y");
  d.e = parse_kb_table(r.input("e", a.e), "e");
  const KBDims out = blowup_kb(d);
  r.result = to_json(out);
  r.text = kb_text(out);
  return kOk;
}

int cmd_blowup_point(const std::string& file, bool star, Report& r) {
  r.command = "blowup-point";
  r.metadata["star"] = hypothesis(star);
  const KBDims x = parse_kb_table(r.input("x", file), "x");
  const KBDims out = blowup_point_kb(x);
  r.result = to_json(out);
  r.text = kb_text(out);
  return kOk;
}

int cmd_mv_check(const std::vector<std::string>& files, Report& r) {
  r.command = "mv-check";
  const char* roles[] = {"u", "v", "uv", "union"};
  std::vector<KBDims> t;
  for (std::size_t i = 0; i < 4; ++i) t.push_back(parse_kb_table(r.input(roles[i], files.at(i)), roles[i]));
  const bool ok = mv_euler_check(t[0], t[1], t[2], t[3]);
  Json chis = Json::object();
  for (std::size_t i = 0; i < 4; ++i) chis[roles[i]] = euler_char(t[i]);
  r.result = {{"consistent", ok}, {"euler_characteristics", std::move(chis)}};
  std::ostringstream text;
  text << "chi(union) = " << euler_char(t[3]) << ", chi(u) + chi(v) - chi(uv) = "
       << euler_char(t[0]) + euler_char(t[1]) - euler_char(t[2]) << "\n"
       << (ok ? "consistent" : "inconsistent") << "\n";
  r.text = text.str();
  return ok ? kOk : kInconsistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszul-Brylinski homology of holomorphic Poisson models", "kbhom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", KBH_VERSION);

  OutputFlags flags;

  CheckArgs check;
  auto* s_check = app.add_subcommand("check", "Validate the operator identities of a model");
  s_check->add_option("model", check.model, "kbmodel/1 file")->required();
  s_check->add_flag("--lax", check.lax, "Ignore unknown fields");
  add_output_flags(s_check, flags);

  ComputeArgs compute;
  auto* s_compute = app.add_subcommand("compute", "Koszul-Brylinski homology of a model");
  s_compute->add_option("model", compute.model, "kbmodel/1 file")->required();
  s_compute->add_option("--pages", compute.pages, "Also print spectral pages E_1..E_r")
      ->check(CLI::PositiveNumber);
  s_compute->add_flag("--lax", compute.lax, "Ignore unknown fields");
  add_output_flags(s_compute, flags);

  SteinArgs stein;
  auto* s_stein = app.add_subcommand("stein", "Weight slices of polynomial forms on C^n");
  s_stein->add_option("--n", stein.n, "Dimension of C^n")->required();
  s_stein->add_option("--pi", stein.pi, "Bivector terms (JSON); omit for pi = 0");
  s_stein->add_option("--weights", stein.weights, "Weight range a..b")->required();
  s_stein->add_option("--cap", stein.cap, "Largest polynomial degree allowed in a slice");
  add_output_flags(s_stein, flags);

  std::vector<std::string> kunneth_files;
  bool compact = false;
  auto* s_kunneth = app.add_subcommand("kunneth", "Kunneth formula for KB dimensions");
  s_kunneth->add_option("tables", kunneth_files, "Two KB tables")->required()->expected(2);
  s_kunneth->add_flag("--assert-compact", compact, "Assert that one factor is compact");
  add_output_flags(s_kunneth, flags);

  std::string lh_file;
  std::vector<std::string> lh_classes;
  auto* s_lh = app.add_subcommand("leray-hirsch", "Hochschild homology of a fiber bundle");
  s_lh->add_option("base", lh_file, "HH table of the base")->required();
  s_lh->add_option("--class", lh_classes, "Bidegree u,v of a fiber class (repeatable)")
      ->required();
  add_output_flags(s_lh, flags);

  FlagArgs flag;
  auto* s_flag = app.add_subcommand("flag", "Flag manifolds and flag bundles");
  s_flag->add_option("--n", flag.n, "Dimension of a flag manifold");
  s_flag->add_option("--bundle", flag.bundle, "HH table of the base of a flag bundle");
  s_flag->add_option("--betti", flag.betti, "Sum of the betti numbers of the flag fiber")
      ->required();
  add_output_flags(s_flag, flags);

  std::string pb_file;
  int pb_rank = 1;
  auto* s_pb = app.add_subcommand("pbundle", "Hodge diamond of a projective bundle");
  s_pb->add_option("base", pb_file, "Hodge table of the base")->required();
  s_pb->add_option("--rank", pb_rank, "Rank r of the vector bundle")->required();
  add_output_flags(s_pb, flags);

  BlowupArgs blowup;
  auto* s_blowup = app.add_subcommand("blowup", "Blow-up along a submanifold");
  s_blowup->add_option("--x", blowup.x, "Table of X")->required();
  s_blowup->add_option("--y", blowup.y, "Table of the center Y")->required();
  s_blowup->add_option("--e", blowup.e, "KB table of the exceptional divisor");
  s_blowup->add_option("--codim", blowup.codim, "Codimension r of Y")->required();
  s_blowup->add_flag("--hodge", blowup.hodge, "Tables are Hodge diamonds");
  s_blowup->add_flag("--assert-star", blowup.star,
                     "Assert that the conormal spaces of Y are abelian Lie algebras");
  add_output_flags(s_blowup, flags);

  std::string bp_file;
  bool bp_star = false;
  auto* s_bp = app.add_subcommand("blowup-point", "Blow-up at a point");
  s_bp->add_option("table", bp_file, "KB table of X")->required();
  s_bp->add_flag("--assert-star", bp_star, "Assert that the cotangent space is abelian");
  add_output_flags(s_bp, flags);

  std::vector<std::string> mv_files;
  auto* s_mv = app.add_subcommand("mv-check", "Mayer-Vietoris Euler consistency");
  s_mv->add_option("tables", mv_files, "KB tables of U, V, U cap V, U cup V")
      ->required()
      ->expected(4);
  add_output_flags(s_mv, flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseFailure;
  }

  Report report;
  try {
    int code = kOk;
    if (*s_check) {
      code = cmd_check(check, report);
    } else if (*s_compute) {
      code = cmd_compute(compute, report);
    } else if (*s_stein) {
      code = cmd_stein(stein, report);
    } else if (*s_kunneth) {
      code = cmd_kunneth(kunneth_files, compact, report);
    } else if (*s_lh) {
      code = cmd_leray_hirsch(lh_file, lh_classes, report);
    } else if (*s_flag) {
      code = cmd_flag(flag, report);
    } else if (*s_pb) {
      code = cmd_pbundle(pb_file, pb_rank, report);
    } else if (*s_blowup) {
      code = cmd_blowup(blowup, report);
    } else if (*s_bp) {
      code = cmd_blowup_point(bp_file, bp_star, report);
    } else if (*s_mv) {
      code = cmd_mv_check(mv_files, report);
    }
    emit(report, flags, out);
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const InconsistentData& e) {
    err << "inconsistent data: " << e.what() << "\n";
    return kInconsistent;
  }
}

}  // namespace kbh::cli
