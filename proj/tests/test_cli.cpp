#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "symdyn/constructions.hpp"
#include "symdyn/corpus.hpp"
#include "symdyn/document.hpp"
#include "symdyn/error.hpp"
#include "symdyn/follower.hpp"
#include "symdyn/random.hpp"
#include "symdyn/shift.hpp"

using namespace symdyn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("symdyn-test-" + name + "-" + std::to_string(std::random_device{}()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("shift documents round-trip") {
  Rng rng(40);
  std::vector<Presentation> shifts{corpus::golden_mean(), corpus::even_shift(), corpus::even_shift_nondeterministic(),
                                   no_retract_example().X};
  for (int i = 0; i < 20; ++i) shifts.push_back(random_presentation(rng, 3, 3));
  for (int i = 0; i < 10; ++i) shifts.push_back(from_forbidden(random_sft_spec(rng, 3)));
  for (const Presentation& p : shifts) {
    const Json doc = shift_to_json(p);
    const Presentation back = shift_from_json(parse_json(doc.dump(), "mem"));
    CHECK(language_equal(p, back));
    CHECK(shift_to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("forbidden words given as strings") {
  const Json doc = parse_json(R"({"alphabet": ["0", "1"], "kind": "forbidden", "forbidden": ["11"]})", "inline");
  CHECK(language_equal(shift_from_json(doc), corpus::golden_mean()));
}

TEST_CASE("code documents round-trip") {
  for (const SlidingBlockCode& c : {corpus::min_code(), corpus::xor_code(), corpus::non_continuing_code(),
                                    no_retract_example().phi}) {
    const Json doc = code_to_json(c);
    const SlidingBlockCode back = code_from_json(parse_json(doc.dump(2), "mem"));
    CHECK(back.memory() == c.memory());
    CHECK(back.anticipation() == c.anticipation());
    CHECK(back.rule() == c.rule());
    CHECK(code_to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("lasso documents round-trip") {
  const Alphabet a({"1", "1bar", "2", "3"});
  Rng rng(41);
  const Presentation x = no_retract_example().X;
  for (int i = 0; i < 30; ++i) {
    const LassoPoint p = random_lasso(rng, x);
    CHECK(lasso_from_json(lasso_to_json(p, a), a) == p);
  }
}

TEST_CASE("syntax errors name the position") {
  try {
    parse_json("{\n  \"alphabet\": [\"0\",\n}", "broken.json");
    FAIL("no error");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("broken.json:3:") != std::string::npos);
  }
  CHECK_THROWS_AS(shift_from_json(parse_json(R"({"alphabet": ["0"], "kind": "tree"})", "x")), DocumentError);
}

TEST_CASE("digest is FNV-1a") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "--property", "eresolving", "--bundled", "sqrt-non-continuing"}).code == 0);
  CHECK(run({"check", "--property", "retract", "--n", "1", "--bundled", "non-continuing"}).code == 1);
  CHECK(run({"check", "--property", "minimal-retract", "--bundled", "min-code"}).code == 0);
  CHECK(run({"check", "--property", "sft", "--bundled", "even-shift"}).code == 1);
  CHECK(run({"check", "--property", "sft", "--bundled", "golden-mean"}).code == 0);
  CHECK(run({"check", "--property", "right-continuing", "--bundled", "no-retract-example"}).code == 2);
  CHECK(run({"check", "--property", "bogus", "--bundled", "min-code"}).code == 2);
  CHECK(run({"check", "--property", "retract", "--bundled", "nowhere"}).code == 2);
  CHECK(run({"check", "--property", "retract", "--code", "/nonexistent/code.json"}).code == 2);
  CHECK(run({"check", "--property", "retract", "--max-alphabet", "3", "--bundled", "no-retract-example"}).code == 2);
  CHECK(run({"check", "--property", "retract", "--max-states", "1", "--bundled", "no-retract-example"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Run bad = run({"check", "--property", "retract"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("check reports witnesses in JSON") {
  const Run r = run({"check", "--property", "retract", "--n", "4", "--bundled", "no-retract-example", "--json"});
  REQUIRE(r.code == 1);
  const Json doc = parse_json(r.out, "stdout");
  CHECK(doc["command"] == "check");
  CHECK_FALSE(doc.contains("elapsedMs"));
  const Json& v = doc["verdicts"][0];
  CHECK(v["holds"] == false);
  const NoRetractExample ex = no_retract_example();
  const CodedPair w{lasso_from_json(v["witness"]["x"], ex.X.alphabet()), lasso_from_json(v["witness"]["y"], ex.Y.alphabet())};
  CHECK(validate_retract_witness(ex.phi, 4, w));

  const Run t = run({"check", "--property", "sft", "--bundled", "golden-mean", "--json", "--timing"});
  CHECK(parse_json(t.out, "stdout").contains("elapsedMs"));
}

TEST_CASE("seeded commands are deterministic") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"gen", "--kind", "sft", "--symbols", "4", "--seed", "9"},
           {"gen", "--kind", "graph", "--states", "3", "--symbols", "3", "--seed", "9"},
           {"gen", "--kind", "code", "--bundled", "golden-mean", "--symbols", "2", "--seed", "9"},
           {"experiment-kbound", "--count", "10", "--max-symbols", "4", "--seed", "9", "--json"},
           {"construct", "--kind", "retract-zero", "--bundled", "min-code", "--seed", "9", "--json"}}) {
    CAPTURE(args.front());
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  std::set<std::string> outputs;
  for (const char* seed : {"1", "2", "3", "4", "5"})
    outputs.insert(run({"gen", "--kind", "graph", "--states", "3", "--symbols", "3", "--seed", seed}).out);
  CHECK(outputs.size() > 1);
}

TEST_CASE("generated documents load back") {
  const fs::path dir = fresh_dir("gen");
  REQUIRE(run({"gen", "--kind", "sft", "--symbols", "3", "--seed", "3", "--out", (dir / "x.json").string()}).code == 0);
  const Presentation x = shift_from_json(read_json_file(dir / "x.json"));
  CHECK(is_sft(x));
  write(dir / "code.json", R"({"domain": "x.json", "memory": 0, "anticipation": 0, "rule": {}, "codomainAlphabet": ["0"]})");
  // An empty rule table is rejected.
  CHECK(run({"check", "--property", "retract", "--code", (dir / "code.json").string()}).code == 2);
  REQUIRE(run({"gen", "--kind", "code", "--shift", (dir / "x.json").string(), "--symbols", "2", "--seed", "3", "--out",
               (dir / "code.json").string()})
              .code == 0);
  const Json code = read_json_file(dir / "code.json");
  CHECK(code_from_json(code).domain().alphabet().size() == 3);
  fs::remove_all(dir);
}

TEST_CASE("construct writes loadable documents") {
  const fs::path dir = fresh_dir("construct");
  const Run r = run({"construct", "--kind", "no-retract-example", "--out", dir.string(), "--json"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "X.json"));
  CHECK(fs::exists(dir / "Y.json"));
  REQUIRE(fs::exists(dir / "phi.json"));
  CHECK(run({"check", "--property", "minimal-retract", "--code", (dir / "phi.json").string()}).code == 1);
  CHECK(run({"check", "--property", "sft", "--shift", (dir / "Y.json").string()}).code == 0);
  CHECK(run({"check", "--property", "sft", "--shift", (dir / "X.json").string()}).code == 1);
  // X and Y have different alphabets.
  CHECK(run({"check", "--property", "equal", "--shift", (dir / "X.json").string(), "--against",
             (dir / "Y.json").string()})
            .code == 2);

  const fs::path sq = dir / "sqrt";
  REQUIRE(run({"construct", "--kind", "sqrt", "--bundled", "non-continuing", "--out", sq.string()}).code == 0);
  for (const auto& entry : fs::directory_iterator(sq)) {
    if (entry.path().filename().string().find("phi") == std::string::npos) continue;
    CHECK(run({"check", "--property", "eresolving", "--code", entry.path().string()}).code == 0);
    CHECK(run({"check", "--property", "minimal-retract", "--code", entry.path().string()}).code == 1);
  }
  fs::remove_all(dir);
}

TEST_CASE("examples lists and exports the bundled entries") {
  const Run r = run({"examples"});
  CHECK(r.code == 0);
  for (const auto& named : corpus::names()) CHECK(r.out.find(named.name) != std::string::npos);
  const fs::path dir = fresh_dir("examples");
  REQUIRE(run({"examples", "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "min-code.json"));
  CHECK(run({"check", "--property", "minimal-retract", "--code", (dir / "min-code.json").string()}).code == 0);
  fs::remove_all(dir);
}
