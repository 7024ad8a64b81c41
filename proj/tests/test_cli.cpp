#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jsr/cli.hpp"
#include "jsr/errors.hpp"
#include "jsr/io.hpp"

using namespace jsr;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "jsr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "jsr_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const char* kSigma1 = R"({"dimension": 2, "matrices": [[["1","1"],["0","0"]], [["1","0"],["1","0"]]], "name": "sigma1"})";

void check_decimals_in_enclosures(const json& j) {
  if (j.is_object()) {
    if (j.contains("decimal") && j.contains("enclosure")) {
      const double d = std::stod(j["decimal"].get<std::string>());
      CHECK(j["enclosure"][0].get<double>() <= d);
      CHECK(d <= j["enclosure"][1].get<double>());
    }
    for (const auto& [k, v] : j.items()) check_decimals_in_enclosures(v);
  } else if (j.is_array()) {
    for (const auto& v : j) check_decimals_in_enclosures(v);
  }
}

}  // namespace

TEST_CASE("document parsing accepts exact entries and rejects floats with a location") {
  const MatrixSetDocument d = parse_document_text(kSigma1);
  CHECK(d.set.size() == 2);
  CHECK(d.name == "sigma1");
  CHECK(parse_document_text(R"({"dimension":1,"matrices":[[[3]],[["-2/4"]]]})").set[1](0, 0) == Rational(-1, 2));

  auto fails_with = [](const char* text, const char* fragment) {
    try {
      parse_document_text(text);
      FAIL("no error for " << text);
    } catch (const InputError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
  };
  fails_with(R"({"dimension":2,"matrices":[[["1",0.5],["0","0"]]]})", "matrices[0][0][1]");
  fails_with(R"({"dimension":2,"matrices":[[["1","0.5"],["0","0"]]]})", "matrices[0][0][1]");
  fails_with(R"({"dimension":2,"matrices":[[["1","0"],["0","0"]],[["1"]]]})", "matrices[1]");
  fails_with(R"({"dimension":2,"matrices":[[["1","0"],["0"]]]})", "matrices[0][1]");
  fails_with(R"({"dimension":0,"matrices":[]})", "dimension");
  fails_with(R"({"matrices":[[["1"]]]})", "dimension");
  fails_with(R"({"dimension":1,"matrices":[[["1"]]],"colour":"red"})", "colour");
  fails_with(R"({"dimension":1,"matrices":[[["1"]],[["1"]]]})", "matrices");
  fails_with(R"({"dimension":1,)", "line 1");
}

TEST_CASE("document round trip is the identity") {
  const MatrixSetDocument d = parse_document_text(
      R"({"dimension":2,"matrices":[[["1/2",0],[3,"-4"]],[["0","1"],["1","0"]]],"name":"x","provenance":"hand",)"
      R"("metadata":{"alpha":"6"}})");
  const json j = to_json(d);
  const MatrixSetDocument again = parse_document(j);
  CHECK(again == d);
  CHECK(to_json(again) == j);
}

TEST_CASE("bounds subcommand on sigma1") {
  const std::string in = write_temp("sigma1.json", kSigma1);
  const Run r = run({"bounds", "--input", in, "--depth", "8"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["best_lower"]["exact"] == "sqrt(2)");
  CHECK(j["best_witness"] == json::array({0, 1}));
  CHECK(j["certified"] == true);
  CHECK(j["levels"].size() == 8);
  CHECK(j["norm"] == "row-sum");
  check_decimals_in_enclosures(j);
  const Run c = run({"bounds", "--input", in, "--depth", "3", "--norm", "col-sum", "--no-prune", "--jobs", "2"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["pruned"] == false);
}

TEST_CASE("reduce subcommands") {
  const std::string five = write_temp("five.json", R"({"dimension":2,"matrices":[
      [["1","0"],["0","1"]], [["0","1"],["0","0"]], [["1","1"],["1","1"]], [["2","0"],["0","0"]], [["0","0"],["3","0"]]]})");
  Run r = run({"reduce", "to-pair", "--input", five});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["dimension"] == 18);
  CHECK(j["matrices"].size() == 2);
  CHECK(j["metadata"]["m_count"] == 5);
  CHECK(parse_document(j).set.dim() == 18);

  const std::string rat = write_temp("rat.json", R"({"dimension":2,"matrices":[[["1/2","1/2"],["0","1/2"]],[["0","1/3"],["1/3","0"]]]})");
  r = run({"reduce", "to-integer", "--input", rat});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["metadata"]["alpha"] == "6");
  CHECK(j["matrices"][0] == json::parse(R"([["3","3"],["0","3"]])"));

  r = run({"reduce", "to-binary", "--input", rat});
  CHECK(r.code == 1);
  const std::string ints = write_temp("ints.json", R"({"dimension":2,"matrices":[[["0","2"],["1","0"]]]})");
  r = run({"reduce", "to-binary", "--input", ints});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["dimension"] == 4);
  const std::string neg = write_temp("neg.json", R"({"dimension":1,"matrices":[[["-2"]]]})");
  CHECK(run({"reduce", "to-binary", "--input", neg}).code == 1);
  r = run({"reduce", "to-binary", "--signed", "--input", neg});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["matrices"][0] == json::parse(R"([["-1","-1"],["-1","-1"]])"));
  CHECK(run({"reduce", "--input", ints}).code == 1);
}

TEST_CASE("certify re-validates a witness taken from a bounds report") {
  const std::string in = write_temp("sigma3.json", R"({"dimension":2,"matrices":[[["0","1"],["1","0"]],[["1","1"],["0","1"]]]})");
  const json rep = json::parse(run({"bounds", "--input", in, "--depth", "6"}).out);
  std::string word;
  for (const auto& x : rep["best_witness"]) word += (word.empty() ? "" : ",") + std::to_string(x.get<int>());
  const std::string exact = rep["best_lower"]["exact"];
  Run r = run({"certify", "--input", in, "--word", word, "--expect", exact, "--depth", "6"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["maximal"] == true);
  CHECK(j["value"]["exact"] == "((3+sqrt(13))/2)^(1/4)");

  r = run({"certify", "--input", in, "--word", "0,1", "--expect", exact});
  CHECK(r.code == 3);
  CHECK(run({"certify", "--input", in, "--word", "0,5"}).code == 1);
}

TEST_CASE("census subcommand writes 120 rows") {
  const std::string out = (std::filesystem::temp_directory_path() / "jsr_cli_tests" / "census.csv").string();
  std::filesystem::create_directories(std::filesystem::path(out).parent_path());
  const Run r = run({"census", "--dim", "2", "--depth", "20", "--output", out});
  REQUIRE(r.code == 0);
  std::ifstream f(out);
  std::string line;
  std::getline(f, line);
  CHECK(line == "canonical_class,member0,member1,rule_chain,certificate_word,exact_value,decimal_value,bounds_gap,status");
  std::size_t rows = 0;
  while (std::getline(f, line)) {
    ++rows;
    CHECK(line.find("CandidateOnly") == std::string::npos);
  }
  CHECK(rows == 120);
  CHECK(r.err.find("120 pairs") != std::string::npos);
}

TEST_CASE("stability subcommand") {
  const std::string half = write_temp("half.json", R"({"dimension":2,"matrices":[[["0","1/2"],["1/2","0"]],[["1/2","1/2"],["0","1/2"]]]})");
  const Run r = run({"stability", "--input", half, "--max-depth", "20"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["outcome"] == "Stable");
}

TEST_CASE("exit codes for bad input and exhausted budgets") {
  const std::string in = write_temp("sigma1.json", kSigma1);
  const std::string bad = write_temp("bad.json", R"({"dimension":2,"matrices":[[["1",0.5],["0","0"]]]})");
  Run r = run({"bounds", "--input", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("matrices[0][0][1]") != std::string::npos);
  CHECK(run({"bounds", "--input", "/nonexistent/x.json"}).code == 1);
  CHECK(run({"bounds", "--input", in, "--frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"bounds", "--input", in, "--depth", "0"}).code == 1);
  r = run({"bounds", "--input", in, "--depth", "40", "--budget", "100"});
  CHECK(r.code == 2);
  CHECK(run({"--help"}).code == 0);
}
