#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

#ifndef MONOCLOSE_BIN
#error "MONOCLOSE_BIN must name the built executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "monoclose-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path put(const std::string& name, const std::string& text) {
  const auto p = workdir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

/// Runs the executable inside the scratch directory; args are shell words.
Run run(const std::string& args) {
  const auto out = workdir() / "stdout.txt";
  const auto err = workdir() / "stderr.txt";
  const std::string cmd = "cd '" + workdir().string() + "' && '" MONOCLOSE_BIN "' " + args + " >'" + out.string() +
                          "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

const char* const kRemarkRing = R"({"generators": [[1,0],[1,1],[0,2],[0,3]]})";
const char* const kRemarkQ = R"({"generators": [[1,0],[0,2]]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze emits string integers and flat coefficient keys") {
    put("ring.json", kRemarkRing);
    put("q.json", kRemarkQ);
    const auto r = run("analyze --ring ring.json --ideal q.json --n-max 6 --report json");
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["e1_integral"] == "0");
    CHECK(j["e1_ordinary"] == "-1");
    CHECK(j["e0_integral"] == "2");
    CHECK(j["profile"]["is_S2"] == false);
    CHECK(j["n_max"] == "6");
  }

  TEST_CASE("analyze writes to --out and supports csv and table") {
    put("ring.json", kRemarkRing);
    put("q.json", kRemarkQ);
    auto r = run("analyze --ring ring.json --ideal q.json --n-max 5 --report csv --out report.csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto csv = slurp(workdir() / "report.csv");
    CHECK(csv.rfind("n,ordinary,integral,lim_intersect", 0) == 0);
    CHECK(csv.find("\n2,15,11,11\n") != std::string::npos);
    r = run("analyze --ring ring.json --ideal q.json --n-max 5 --report table");
    CHECK(r.code == 0);
    CHECK(r.out.find("e1^B in [0, 0]") != std::string::npos);
  }

  TEST_CASE("analyze in characteristic p adds the tight candidate") {
    put("ring.json", kRemarkRing);
    put("q.json", kRemarkQ);
    const auto r = run("analyze --ring ring.json --ideal q.json --n-max 6 --char 3 --e-max 4 --report json");
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["e1_tight"] == "0");
    CHECK(j["e1_tight_bracket"] == json::array({"0", "0"}));
  }

  TEST_CASE("analyze on a non-parameter ideal reports ordinary and integral only") {
    put("free.json", R"({"generators": [[1,0],[0,1]]})");
    put("m2.json", R"({"generators": [[2,0],[1,1],[0,2]]})");
    const auto r = run("analyze --ring free.json --ideal m2.json --n-max 5 --report json");
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["e0_ordinary"] == "4");
    CHECK(j["e0_integral"] == "4");
    CHECK_FALSE(j.contains("e0_lim"));
  }

  TEST_CASE("input errors exit 1") {
    put("ring.json", kRemarkRing);
    put("q.json", kRemarkQ);
    put("broken.json", "{\"generators\": [[1,0],\n [0 2]]}");
    put("free.json", R"({"generators": [[1,0],[0,1]]})");
    put("line.json", R"({"generators": [[0,1],[0,2]]})");

    auto r = run("analyze --ring ring.json --ideal broken.json --n-max 6 --report json");
    CHECK(r.code == 1);
    CHECK(r.err.find("broken.json:2:") != std::string::npos);

    r = run("analyze --ring free.json --ideal line.json --n-max 6 --report json");
    CHECK(r.code == 1);
    CHECK(r.err.find("NOT_M_PRIMARY") != std::string::npos);

    r = run("analyze --ring ring.json --ideal q.json --n-max 6 --char 4 --report json");
    CHECK(r.code == 1);
    r = run("analyze --ring ring.json --ideal q.json --n-max 6 --e-max 4 --report json");
    CHECK(r.code == 1);
    r = run("analyze --ring ring.json --ideal q.json --n-max 6 --report xml");
    CHECK(r.code == 1);
    r = run("analyze --ring missing.json --ideal q.json --n-max 6 --report json");
    CHECK(r.code == 1);
    r = run("verify --corpus broken.json");
    CHECK(r.code == 1);
    r = run("bogus");
    CHECK(r.code == 1);
  }

  TEST_CASE("unstabilized fits exit 2") {
    put("strip.json", R"({"generators": [[1,4],[2,5],[5,1]]})");
    put("stripq.json", R"({"generators": [[5,1],[1,4]]})");
    const auto r = run("analyze --ring strip.json --ideal stripq.json --n-max 6 --report json");
    CHECK(r.code == 2);
    const auto j = json::parse(r.out);
    CHECK(j["e1_integral"].is_null());
  }

  TEST_CASE("fuzz is byte-identical across runs") {
    const auto a = run("fuzz --seed 42 --count 12 --max-coord 5");
    const auto b = run("fuzz --seed 42 --count 12 --max-coord 5");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
    const auto c = run("fuzz --seed 43 --count 12 --max-coord 5");
    CHECK(a.out != c.out);
  }

  TEST_CASE("empty fuzz corpus") {
    const auto r = run("fuzz --seed 1 --count 0");
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["summary"]["instances"] == "0");
    CHECK(j["verdicts"].empty());
  }

  TEST_CASE("exhausted generator bounds are an input error") {
    const auto r = run("fuzz --seed 1 --count 50 --max-coord 1 --max-generators 2");
    CHECK(r.code == 1);
    CHECK(r.err.find("GENERATION_EXHAUSTED") != std::string::npos);
  }

  TEST_CASE("verify replays a fuzzed corpus") {
    const auto f = run("fuzz --seed 9 --count 4 --out fuzz.json");
    REQUIRE(f.code == 0);
    const auto fz = json::parse(slurp(workdir() / "fuzz.json"));
    put("corpus.json", json{{"instances", fz["corpus"]}}.dump());
    const auto v = run("verify --corpus corpus.json");
    CHECK(v.code == 0);
    const auto j = json::parse(v.out);
    CHECK(j["summary"]["instances"] == "4");
    CHECK(j["summary"]["violations"] == "0");
  }

  TEST_CASE("a violation exits 3 and writes a reproducer that replays") {
    fs::remove(workdir() / "repro.json");
    const auto r = run("fuzz --seed 42 --count 3 --inject-fault --reproducer repro.json");
    CHECK(r.code == 3);
    REQUIRE(fs::exists(workdir() / "repro.json"));
    const auto repro = json::parse(slurp(workdir() / "repro.json"));
    REQUIRE(repro["instances"].size() == 1);
    CHECK(repro.contains("verdict"));
    const auto again = run("verify --corpus repro.json");
    CHECK(again.code == 0);
    const auto j = json::parse(again.out);
    CHECK(j["verdicts"][0]["id"] == repro["instances"][0]["id"]);
  }

  TEST_CASE("examples") {
    for (const char* name : {"remark-s2", "free-x2y3", "free-maximal"}) {
      const auto r = run(std::string("example ") + name);
      CHECK_MESSAGE(r.code == 0, name);
      CHECK(r.out.find(" no\n") == std::string::npos);
    }
    const auto bad = run("example nope");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("remark-s2") != std::string::npos);
  }
}
