// Acceptance run: one PASS/FAIL line per criterion, with its time budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "kbh/calculus/rules.hpp"
#include "kbh/cli/app.hpp"
#include "kbh/complexes/exact_sequence.hpp"
#include "kbh/complexes/spectral.hpp"
#include "kbh/errors.hpp"
#include "kbh/kbengine/kb.hpp"
#include "kbh/modelzoo/model_io.hpp"
#include "kbh/modelzoo/zoo.hpp"
#include "kbh/polyforms/stein.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kbh;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs >= limit_s) out.require(false, "over time budget");
  if (!out.ok) ++failures;
  std::printf("%s %2d  %-28s %7.3f s (limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title,
              secs, limit_s, out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::string show(const KBDims& d) {
  std::ostringstream os;
  os << "n=" << d.n << " (";
  for (int k = 0; k <= 2 * d.n; ++k) os << (k ? "," : "") << d.at(k);
  os << ")";
  return os.str();
}

// Dolbeault numbers from dense ranks of the dbar blocks.
HodgeDiamond dense_diamond(const DolbeaultPoissonModel& m) {
  HodgeDiamond h;
  h.n = m.n();
  for (int p = 0; p <= m.n(); ++p) {
    for (int q = 0; q <= m.n(); ++q) {
      const std::size_t d = m.dim({p, q});
      const std::size_t out = oracle::rank(m.delbar({p, q}));
      const std::size_t in = q > 0 ? oracle::rank(m.delbar({p, q - 1})) : 0;
      if (d - out - in > 0) h.h[{p, q}] = d - out - in;
    }
  }
  return h;
}

long long signed_dim_sum(const DolbeaultPoissonModel& m) {
  long long s = 0;
  for (const auto& [b, names] : m.labels()) {
    s += ((b.p + b.q) % 2 == 0 ? 1 : -1) * static_cast<long long>(names.size());
  }
  return m.n() % 2 == 0 ? s : -s;
}

StructureConstants so3() { return {{{2, 0, 1}, 1}, {{0, 1, 2}, 1}, {{1, 2, 0}, 1}}; }

std::vector<DolbeaultPoissonModel> zoo() {
  std::vector<DolbeaultPoissonModel> out{point_model(), torus(1), torus(2), torus(3),
                                         torus(2, bivector(2, 0, 1)),
                                         torus(3, bivector(3, 0, 2, Rational(2, 3))),
                                         parallelizable(3, iwasawa_constants()),
                                         parallelizable(3, iwasawa_constants(), bivector(3, 0, 1)),
                                         parallelizable(3, iwasawa_constants(), bivector(3, 1, 2)),
                                         parallelizable(3, so3()),
                                         hodge_formal(oracle::projective_space(1)),
                                         hodge_formal(oracle::projective_space(3))};
  out.push_back(product_model(torus(1), torus(1)));
  out.push_back(product_model(torus(1, Matrix(1, 1)), parallelizable(3, iwasawa_constants())));
  return out;
}

// First failing (identity, bidegree) in report order, recomputed from the
// operator definitions.
std::pair<std::string, std::optional<Bidegree>> first_violation(const DolbeaultPoissonModel& m) {
  auto k = [&](Bidegree b) {
    return m.contraction({b.p + 1, b.q}) * m.del(b) - m.del({b.p - 2, b.q}) * m.contraction(b);
  };
  const std::vector<std::pair<const char*, std::function<Matrix(Bidegree)>>> ids{
      {kDelSquared, [&](Bidegree b) { return m.del({b.p + 1, b.q}) * m.del(b); }},
      {kDelbarSquared, [&](Bidegree b) { return m.delbar({b.p, b.q + 1}) * m.delbar(b); }},
      {kDelDelbar,
       [&](Bidegree b) { return m.del({b.p, b.q + 1}) * m.delbar(b) + m.delbar({b.p + 1, b.q}) * m.del(b); }},
      {kKoszulSquared, [&](Bidegree b) { return k({b.p - 1, b.q}) * k(b); }},
      {kDelbarKoszul,
       [&](Bidegree b) { return m.delbar({b.p - 1, b.q}) * k(b) + k({b.p, b.q + 1}) * m.delbar(b); }},
  };
  for (const auto& [name, f] : ids) {
    for (int p = 0; p <= m.n(); ++p) {
      for (int q = 0; q <= m.n(); ++q) {
        if (oracle::rank(f({p, q})) != 0) return {name, Bidegree{p, q}};
      }
    }
  }
  return {"", std::nullopt};
}

std::string cli_report(const std::string& path) {
  std::ostringstream out, err;
  const int code = cli::run({"compute", path, "--json", "--no-timestamp"}, out, err);
  return code == cli::kOk ? out.str() : "exit " + std::to_string(code) + ": " + err.str();
}

}  // namespace

int main() {
  criterion(1, "HKR oracle at pi = 0", 2, [](Outcome& o) {
    for (const auto& m : {torus(1), torus(2), parallelizable(3, iwasawa_constants())}) {
      const KBDims kb = kb_homology(m);
      const KBDims expect = oracle::antidiagonal_sums(dense_diamond(m));
      o.require(kb == expect, m.info().name + ": " + show(kb) + " vs " + show(expect));
      o.require(hodge_diamond(m) == dense_diamond(m), m.info().name + ": Hodge diamond");
    }
  });

  criterion(2, "flag manifold formula", 1, [](Outcome& o) {
    const HodgeDiamond point{0, {{{0, 0}, 1}}};
    for (int n = 1; n <= 3; ++n) {
      const HodgeDiamond cp = projective_bundle_hodge(point, n + 1);
      o.require(cp == oracle::projective_space(n), "CP^" + std::to_string(n) + " diamond");
      const KBDims kb = kb_homology(hodge_formal(cp));
      const KBDims f = flag_manifold_kb(n, static_cast<std::size_t>(n + 1));
      o.require(kb == f, "CP^" + std::to_string(n) + ": " + show(kb) + " vs " + show(f));
    }
  });

  criterion(3, "Kunneth cross-check", 5, [](Outcome& o) {
    const KBDims t1 = kb_homology(torus(1));
    const KBDims tt = kb_homology(product_model(torus(1), torus(1)));
    KBDims expect = KBDims::zero(2);
    expect.dims = {{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}};
    o.require(tt == expect, "torus x torus: " + show(tt));
    o.require(kunneth_dims(t1, t1) == expect, "kunneth_dims(T1, T1)");
    const auto iw = parallelizable(3, iwasawa_constants());
    const KBDims ti = kb_homology(product_model(torus(1), iw));
    const KBDims k = kunneth_dims(t1, kb_homology(iw));
    o.require(ti == k, "torus x Iwasawa: " + show(ti) + " vs " + show(k));
  });

  criterion(4, "blow-up consistency", 1, [](Outcome& o) {
    gen::Rng rng(404);
    for (int n = 2; n <= 4; ++n) {
      const KBDims x = KBDims::zero(n);
      KBDims y = KBDims::zero(0);
      y.dims[0] = 1;
      const KBDims a = blowup_point_kb(x);
      const KBDims b = blowup_kb({n, x, y, flag_manifold_kb(n - 1, static_cast<std::size_t>(n))});
      o.require(a == b, "n = " + std::to_string(n) + ": " + show(a) + " vs " + show(b));
      o.require(a.at(n) == static_cast<std::size_t>(n - 1), "point blow-up adds C^{n-1}");
    }
    for (int t = 0; t < 100; ++t) {
      const int r = rng.uniform(2, 4);
      const HodgeDiamond hy = gen::random_diamond(rng, 2);
      HodgeDiamond hx;
      hx.n = hy.n + r;
      for (int i = 0; i < 8; ++i) hx.h[{rng.uniform(0, hx.n), rng.uniform(0, hx.n)}] += 1;
      const HodgeDiamond bl = blowup_hodge(hx, hy, r);
      const HodgeDiamond he = projective_bundle_hodge(hy, r);
      for (int p = 0; p <= hx.n; ++p) {
        for (int q = 0; q <= hx.n; ++q) {
          o.require(bl.at(p, q) + hy.at(p - r, q - r) == hx.at(p, q) + he.at(p - 1, q - 1),
                    "bookkeeping at trial " + std::to_string(t));
        }
      }
    }
  });

  criterion(5, "spectral sequence", 10, [](Outcome& o) {
    gen::Rng rng(505);
    for (int t = 0; t < 50; ++t) {
      const gen::RandomModel rm = gen::random_dbar_model(rng, rng.uniform(1, 3));
      const SpectralPages sp = kb_spectral_pages(rm.model, 4);
      const std::string at = "model " + std::to_string(t);
      for (int p = 0; p <= rm.model.n(); ++p) {
        for (int q = 0; q <= rm.model.n(); ++q) {
          auto it = sp.page(1).find({-p, q});
          const std::size_t e1 = it == sp.page(1).end() ? 0 : it->second;
          o.require(e1 == rm.diamond.at(p, q), at + ": E_1 at " + to_string(Bidegree{-p, q}));
        }
      }
      for (std::size_t r = 1; r < sp.pages.size(); ++r) {
        for (const auto& [b, d] : sp.pages[r].dims) {
          auto it = sp.pages[r - 1].dims.find(b);
          o.require(it != sp.pages[r - 1].dims.end() && d <= it->second, at + ": pages grow");
        }
      }
      auto total = oracle::homology(total_complex(kb_double_complex(rm.model)));
      auto lim = diagonal_sums(sp.limit);
      std::erase_if(total, [](const auto& e) { return e.second == 0; });
      std::erase_if(lim, [](const auto& e) { return e.second == 0; });
      o.require(total == lim, at + ": E_inf diagonals vs total homology");
    }
  });

  criterion(6, "chi invariance", 10, [](Outcome& o) {
    const auto c = iwasawa_constants();
    const int family[20][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
                               {0, 1, 1}, {1, 1, 1}, {2, -1, 0}, {-1, 0, 3}, {0, 2, -1},
                               {1, -1, 1}, {3, 2, 1}, {-2, 1, 1}, {1, 2, 3}, {5, 0, -2},
                               {0, -3, 4}, {2, 2, -2}, {-1, -1, -1}, {4, -3, 2}, {1, 5, -5}};
    int valid = 0;
    for (const auto& f : family) {
      const Matrix pi = bivector(3, 0, 1, f[0]) + bivector(3, 0, 2, f[1]) + bivector(3, 1, 2, f[2]);
      DolbeaultPoissonModel m;
      try {
        m = parallelizable(3, c, pi);
      } catch (const ValidationError&) {
        continue;
      }
      ++valid;
      const long long chi = euler_char(kb_homology(m));
      o.require(chi == 0, "euler characteristic " + std::to_string(chi));
      o.require(chain_euler_char(m) == 0 && signed_dim_sum(m) == 0, "signed dimension sum");
    }
    o.require(valid > 0, "no valid bivector in the family");
    if (o.ok) o.detail = std::to_string(valid) + "/20 valid";
  });

  criterion(7, "long exact sequences", 5, [](Outcome& o) {
    gen::Rng rng(707);
    for (int t = 0; t < 100; ++t) {
      const gen::RandomSES s = gen::random_ses(rng);
      const LongExactSequence les = les_from_ses(s.f, s.g);
      o.require(les.is_exact(), "trial " + std::to_string(t) + ": not exact at node " +
                                    std::to_string(les.first_non_exact()));
      o.require(les.alternating_dim_sum() == 0, "trial " + std::to_string(t) + ": alternating sum");
    }
  });

  criterion(8, "operator identities", 5, [](Outcome& o) {
    for (const auto& m : zoo()) o.require(validate_model(m).passed(), m.info().name + " fails validation");
    const std::string base = save_model(parallelizable(3, iwasawa_constants(), bivector(3, 0, 1)));
    gen::Rng rng(808);
    int injected = 0;
    for (int attempt = 0; injected < 20 && attempt < 500; ++attempt) {
      json doc = json::parse(base);
      const char* ops[] = {"del", "delbar", "contraction"};
      json& blocks = doc[ops[rng.uniform(0, 2)]];
      if (blocks.empty()) continue;
      json& mat = blocks[rng.uniform(0, static_cast<int>(blocks.size()) - 1)]["matrix"];
      json& row = mat[rng.uniform(0, static_cast<int>(mat.size()) - 1)];
      json& cell = row[rng.uniform(0, static_cast<int>(row.size()) - 1)];
      cell = to_string(parse_rational(cell.get<std::string>()) + rng.small_rational());
      const std::string text = doc.dump(2);
      const auto expect = first_violation(parse_model(text));
      if (!expect.second) continue;
      ++injected;
      const std::string want = "not a valid holomorphic Poisson model: " + expect.first +
                               " fails at " + to_string(*expect.second);
      try {
        load_model(text);
        o.require(false, "mutation " + std::to_string(injected) + " accepted");
      } catch (const ValidationError& e) {
        o.require(e.what() == want, std::string("got '") + e.what() + "', want '" + want + "'");
      }
    }
    o.require(injected == 20, "only " + std::to_string(injected) + " invalid mutations");
  });

  criterion(9, "Stein slices", 10, [](Outcome& o) {
    const PolyBivector constant(2, {{0, 1, 1, {0, 0}}});
    const PolyBivector linear(2, {{0, 1, 1, {1, 0}}});
    for (const auto& [pi, lo] : {std::pair{constant, -2}, std::pair{linear, 0}}) {
      for (int w = lo; w <= 6; ++w) {
        const std::string at = "degree " + std::to_string(pi.degree()) + ", w = " + std::to_string(w);
        const PolyFormSlice s = stein_slice(pi, w);
        for (int k = -2; k < 0; ++k) {
          const Matrix dd = s.complex.differential(k + 1) * s.complex.differential(k);
          o.require(oracle::rank(dd) == 0, at + ": square nonzero");
        }
        const long long chi = alternating_sum(oracle::homology(s.complex));
        o.require(chi == s.alternating_dim(), at + ": chi " + std::to_string(chi));
      }
    }
  });

  criterion(10, "CLI round trip", 2, [](Outcome& o) {
    const auto dir = std::filesystem::temp_directory_path() / ("kbh_accept_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    int i = 0;
    for (const auto& m : zoo()) {
      const std::string a = (dir / ("a" + std::to_string(i) + ".json")).string();
      const std::string b = (dir / ("b" + std::to_string(i) + ".json")).string();
      ++i;
      write_file(a, save_model(m));
      write_file(b, save_model(load_model(read_file(a))));
      o.require(read_file(a) == read_file(b), m.info().name + ": saved bytes differ");
      const std::string ra = cli_report(a);
      const std::string rb = cli_report(b);
      o.require(ra.rfind("{", 0) == 0, m.info().name + ": " + ra);
      o.require(ra == rb, m.info().name + ": reports differ");
    }
    std::filesystem::remove_all(dir);
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
