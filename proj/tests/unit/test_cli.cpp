#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "kbh/cli/app.hpp"
#include "kbh/modelzoo/model_io.hpp"
#include "kbh/modelzoo/zoo.hpp"
#include "support/oracles.hpp"

using namespace kbh;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run kbhom(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("kbh_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) const {
    const std::string path = (dir_ / name).string();
    write_file(path, text);
    return path;
  }

 private:
  fs::path dir_;
};

std::vector<std::size_t> dim_row(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("dim", 0) != 0) continue;
    std::istringstream row(line.substr(3));
    std::vector<std::size_t> out;
    std::size_t v;
    while (row >> v) out.push_back(v);
    return out;
  }
  return {};
}

}  // namespace

TEST_CASE("check: valid and invalid models") {
  Scratch s;
  const auto good = s.file("iw.json", save_model(parallelizable(3, iwasawa_constants())));
  auto r = kbhom({"check", good});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("PASS d_pi^2 = 0") != std::string::npos);

  const auto bad = s.file("bad.json", R"({"format":"kbmodel/1","n":2,
    "basis":{"0,0":["a"],"1,0":["b"],"2,0":["c"]},
    "del":[{"from":[0,0],"matrix":[["1"]]},{"from":[1,0],"matrix":[["1"]]}]})");
  r = kbhom({"check", bad, "--json", "--no-timestamp"});
  CHECK(r.code == cli::kValidationFailure);
  const json doc = json::parse(r.out);
  CHECK_FALSE(doc["result"]["passed"].get<bool>());
  CHECK(doc["result"]["checks"][0]["at"] == json::array({0, 0}));
  CHECK_FALSE(doc.contains("timestamp"));

  r = kbhom({"compute", bad});
  CHECK(r.code == cli::kValidationFailure);
  CHECK(r.err.find("(0,0)") != std::string::npos);
}

TEST_CASE("exit codes") {
  Scratch s;
  CHECK(kbhom({}).code == cli::kParseFailure);
  CHECK(kbhom({"nonsense"}).code == cli::kParseFailure);
  CHECK(kbhom({"compute", s.file("garbage.json", "{not json")}).code == cli::kParseFailure);
  CHECK(kbhom({"compute", "/nonexistent/model.json"}).code == cli::kParseFailure);
  const auto x = s.file("x.json", R"({"n":2,"dims":{"0":0,"1":0,"2":0,"3":0,"4":0}})");
  const auto y = s.file("y.json", R"({"n":0,"dims":{"0":1}})");
  const auto e = s.file("e.json", R"({"n":1,"dims":{"0":0,"1":0,"2":0}})");
  CHECK(kbhom({"blowup", "--x", x, "--y", y, "--e", e, "--codim", "2"}).code == cli::kInconsistent);
  const auto t1 = s.file("t1.json", R"({"n":1,"dims":{"0":1,"1":2,"2":1}})");
  CHECK(kbhom({"blowup-point", t1}).code == cli::kValidationFailure);
  CHECK(kbhom({"mv-check", t1, t1, t1, t1}).code == cli::kOk);
  CHECK(kbhom({"mv-check", t1, t1, t1, x}).code == cli::kValidationFailure);
  const auto z1 = s.file("z1.json", R"({"n":1,"dims":{}})");
  const auto p1 = s.file("p1.json", R"({"n":1,"dims":{"0":1}})");
  CHECK(kbhom({"mv-check", z1, z1, z1, p1}).code == cli::kInconsistent);
  CHECK(kbhom({"kunneth", t1, s.file("neg.json", R"({"n":1,"dims":{"0":-1}})")}).code ==
        cli::kParseFailure);
  CHECK(kbhom({"stein", "--n", "2", "--weights", "x"}).code == cli::kParseFailure);
}

TEST_CASE("compute: JSON and text agree") {
  Scratch s;
  const auto path = s.file("t.json", save_model(product_model(torus(1), torus(1))));
  const Run j = kbhom({"compute", path, "--json", "--no-timestamp", "--pages", "2"});
  const Run t = kbhom({"compute", path, "--pages", "2"});
  REQUIRE(j.code == cli::kOk);
  REQUIRE(t.code == cli::kOk);
  const json doc = json::parse(j.out);
  std::vector<std::size_t> dims;
  for (const auto& [k, v] : doc["result"]["kb"]["dims"].items()) dims.push_back(v.get<std::size_t>());
  CHECK(dims == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK(dim_row(t.out) == dims);
  CHECK(doc["result"]["euler_characteristic"] == 0);
  CHECK(doc["result"]["degeneration_page"] == 1);
  CHECK(doc["inputs"][0]["role"] == "model");
  CHECK(doc["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(t.out.find("euler characteristic: 0") != std::string::npos);
}

TEST_CASE("reports are deterministic and content-addressed") {
  Scratch s;
  const std::string text = save_model(parallelizable(3, iwasawa_constants(), bivector(3, 0, 1)));
  const auto a = s.file("a.json", text);
  const auto b = s.file("b.json", text);
  const Run ra = kbhom({"compute", a, "--json", "--no-timestamp"});
  const Run rb = kbhom({"compute", b, "--json", "--no-timestamp"});
  CHECK(ra.code == cli::kOk);
  CHECK(ra.out == rb.out);
  CHECK(json::parse(kbhom({"compute", a, "--json"}).out).contains("timestamp"));
}

TEST_CASE("calculus subcommands") {
  Scratch s;
  const auto t1 = s.file("t1.json", R"({"n":1,"dims":{"0":1,"1":2,"2":1}})");
  json k = json::parse(kbhom({"kunneth", t1, t1, "--json", "--assert-compact"}).out);
  CHECK(k["result"]["dims"]["2"] == 6);
  CHECK(k["metadata"]["compactness"] == "asserted by user");

  const auto pt = s.file("pt.json", R"({"n":0,"dims":{"0":1}})");
  json lh = json::parse(
      kbhom({"leray-hirsch", pt, "--class", "0,0", "--class", "1,1", "--json"}).out);
  CHECK(lh["result"]["n"] == 1);
  CHECK(lh["result"]["dims"]["0"] == 2);

  json fl = json::parse(kbhom({"flag", "--n", "2", "--betti", "3", "--json"}).out);
  CHECK(fl["result"]["dims"]["2"] == 3);

  const auto hpt = s.file("hpt.json", R"({"n":0,"h":{"0,0":1}})");
  json pb = json::parse(kbhom({"pbundle", hpt, "--rank", "3", "--json"}).out);
  CHECK(pb["result"]["h"]["2,2"] == 1);

  const auto surf = s.file("s.json", R"({"n":2,"dims":{"0":1,"1":4,"2":6,"3":4,"4":1}})");
  json bp = json::parse(kbhom({"blowup-point", surf, "--json"}).out);
  CHECK(bp["result"]["dims"]["2"] == 7);
  CHECK(bp["metadata"]["star"] == "not asserted");

  json st = json::parse(
      kbhom({"stein", "--n", "2", "--pi", s.file("pi.json", R"([{"i":1,"j":2,"coeff":1,"alpha":[0,0]}])"),
             "--weights", "-2..0", "--json"})
          .out);
  REQUIRE(st["result"]["slices"].size() == 3);
  CHECK(st["result"]["slices"][0]["homology"]["0"] == 1);
  for (const auto& slice : st["result"]["slices"]) {
    CHECK(slice["euler_characteristic"] == slice["alternating_dim"]);
  }
}

TEST_CASE("the installed binary forwards exit codes") {
  Scratch s;
  const auto good = s.file("t.json", save_model(torus(1)));
  const std::string quiet = " > /dev/null 2>&1";
  int status = std::system((std::string(KBHOM_PATH) + " compute " + good + quiet).c_str());
  CHECK(WEXITSTATUS(status) == 0);
  status = std::system((std::string(KBHOM_PATH) + " compute /nonexistent" + quiet).c_str());
  CHECK(WEXITSTATUS(status) == 1);
}
