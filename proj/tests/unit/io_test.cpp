#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "monoclose/io.hpp"
#include "support/errors.hpp"

using namespace monoclose;
using io::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "monoclose-io-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("integers are strings on output and either form on input") {
    CHECK(io::int_value(-17) == json("-17"));
    CHECK(io::parse_int(json(5), "x") == 5);
    CHECK(io::parse_int(json("-12"), "x") == -12);
    CHECK(io::parse_int(json("9223372036854775807"), "x") == std::numeric_limits<std::int64_t>::max());
    for (const auto& bad : {json("1.5"), json(""), json("12a"), json(2.5), json(true), json("99999999999999999999")}) {
      CHECK(error_code_of([&] { (void)io::parse_int(bad, "x"); }) == ErrorCode::InvalidInput);
    }
  }

  TEST_CASE("ring round trip") {
    const AffineSemigroup s(2, {{1, 0}, {1, 1}, {0, 2}, {0, 3}});
    const auto j = io::ring_to_json(s);
    CHECK(j["dim"] == "2");
    CHECK(j["generators"][1] == json::array({"0", "3"}));
    CHECK(io::parse_ring(j) == s);
    CHECK(io::parse_ring(json::parse(R"({"generators": [[1, 0], [0, "1"]]})")) == AffineSemigroup::free(2));
  }

  TEST_CASE("ring diagnostics name the offending field") {
    CHECK(message_of([] { (void)io::parse_ring(json::parse(R"({"gens": []})")); }).find("missing field 'generators'") !=
          std::string::npos);
    CHECK(message_of([] { (void)io::parse_ring(json::parse(R"({"generators": [[1, 0], [0]]})")); })
              .find("ring.generators[1]") != std::string::npos);
    CHECK(message_of([] { (void)io::parse_ring(json::parse(R"({"generators": [[1, -1], [0, 1]]})")); })
              .find("nonnegative") != std::string::npos);
    CHECK(error_code_of([] { (void)io::parse_ring(json::parse(R"({"generators": [[1, 1], [2, 2]]})")); }) ==
          ErrorCode::InvalidSemigroup);
    CHECK(error_code_of([] { (void)io::parse_ring(json::parse(R"({"dim": 4, "generators": [[1, 0, 0, 0]]})")); }) ==
          ErrorCode::InvalidInput);
  }

  TEST_CASE("ideals keep or sort their order") {
    const auto s = AffineSemigroup::free(2);
    const auto rec = io::parse_ideal(json::parse(R"({"generators": [[0, 3], [2, 0]]})"), 2);
    CHECK(rec.ordered);
    CHECK(io::make_parameter_ideal(s, rec).ordered() == std::vector<ExponentVector>{{0, 3}, {2, 0}});
    auto loose = rec;
    loose.ordered = false;
    CHECK(io::make_parameter_ideal(s, loose).ordered() == std::vector<ExponentVector>{{0, 3}, {2, 0}});
    const auto rec2 = io::parse_ideal(json::parse(R"({"generators": [[2, 0], [0, 3]], "ordered": false})"), 2);
    CHECK(io::make_parameter_ideal(s, rec2).ordered() == std::vector<ExponentVector>{{0, 3}, {2, 0}});
    CHECK(error_code_of([] { (void)io::parse_ideal(json::parse(R"({"generators": [[1, 0]], "ordered": 1})"), 2); }) ==
          ErrorCode::InvalidInput);
  }

  TEST_CASE("corpus round trip") {
    std::vector<Instance> corpus{builtin_instance("remark-s2"), builtin_instance("free-x2y3")};
    const auto j = io::corpus_to_json(corpus);
    const auto back = io::parse_corpus(j);
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == "remark-s2");
    CHECK(back[0].q.ordered() == corpus[0].q.ordered());
    CHECK(back[1].ring() == corpus[1].ring());
    CHECK(io::parse_corpus(j["instances"]).size() == 2);
  }

  TEST_CASE("corpus records without ids are numbered") {
    const auto c = io::parse_corpus(json::parse(R"([{"ring": {"generators": [[1,0],[0,1]]},
                                                      "ideal": {"generators": [[1,0],[0,1]]}}])"));
    REQUIRE(c.size() == 1);
    CHECK(c[0].id == "instance-0000");
    CHECK(error_code_of([] { (void)io::parse_corpus(json::parse(R"({"instances": 3})")); }) ==
          ErrorCode::InvalidInput);
    CHECK(error_code_of([] {
            (void)io::parse_corpus(json::parse(R"([{"ring": {"generators": [[1,0],[0,1]]},
                                                    "ideal": {"generators": [[1,0],[1,1]]}}])"));
          }) == ErrorCode::NotMPrimary);
  }

  TEST_CASE("malformed files report line and column") {
    const auto path = scratch("broken.json");
    {
      std::ofstream out(path);
      out << "{\n  \"generators\": [[1, 0],\n  [0 1]]\n}\n";
    }
    const auto msg = message_of([&] { (void)io::read_json_file(path); });
    CHECK(msg.find("broken.json:3:") != std::string::npos);
    CHECK(msg.find("malformed JSON") != std::string::npos);
    CHECK(error_code_of([] { (void)io::read_json_file(scratch("missing.json")); }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("text files are written verbatim") {
    const auto path = scratch("out.txt");
    io::write_text_file(path, "a\nb");
    std::ifstream in(path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(all == "a\nb");
  }

  TEST_CASE("analysis json uses string integers and flat coefficient keys") {
    const auto inst = builtin_instance("remark-s2");
    const auto rep = coefficient_report(inst.q);
    const auto profile = ring_profile(inst.q, rep.ordinary);
    const auto j = io::analysis_to_json(inst.ring(), io::IdealRecord{inst.q.ordered(), true},
                                        {rep.ordinary, rep.integral, rep.lim_intersect}, profile, rep, {});
    CHECK(j["e1_ordinary"] == "-1");
    CHECK(j["e1_integral"] == "0");
    CHECK(j["e0_lim"] == "2");
    CHECK(j["e1_bcm_bracket"] == json::array({"0", "0"}));
    CHECK(j["profile"]["is_S2"] == false);
    CHECK(j["profile"]["colength_q"] == "3");
    CHECK(j.contains("sign_convention"));
    const auto csv = io::analysis_to_csv({rep.ordinary, rep.integral});
    CHECK(csv.find("integral") != std::string::npos);
    const auto table = io::analysis_to_table({rep.ordinary}, profile, rep);
    CHECK(table.find("ordinary") != std::string::npos);
  }

  TEST_CASE("reproducer re-parses as a corpus") {
    const auto inst = builtin_instance("free-x2y3");
    const auto v = verify_instance(inst);
    const auto j = io::reproducer_to_json(inst, v);
    CHECK(j.contains("verdict"));
    const auto back = io::parse_corpus(j);
    REQUIRE(back.size() == 1);
    CHECK(back[0].id == inst.id);
    CHECK(back[0].q.ordered() == inst.q.ordered());
  }

  TEST_CASE("verdict json") {
    const auto v = verify_instance(builtin_instance("remark-s2"));
    const auto j = io::verdict_to_json(v);
    CHECK(j["id"] == "remark-s2");
    const auto s = io::summary_to_json(verify_corpus({builtin_instance("free-maximal")}));
    CHECK(s.dump().find("\"instances\"") != std::string::npos);
  }
}
