#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mukai/cli.hpp"

using namespace mukai;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("euler prints 12") {
  const auto r = run({"euler", "--n", "6", "--sections", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "12\n");
}

TEST_CASE("gr-chern prints the golden triangle") {
  const auto r = run({"gr-chern", "--n", "6"});
  CHECK(r.code == 0);
  std::string golden = read(std::string(MUKAI_TEST_DATA) + "/golden/gr26_chern.txt");
  golden = golden.substr(golden.find('\n') + 1);
  CHECK(r.out == golden);
}

TEST_CASE("table1 matches the golden table") {
  const auto r = run({"table1"});
  CHECK(r.code == 0);
  CHECK(r.out == read(std::string(MUKAI_TEST_DATA) + "/golden/table1.txt"));
}

TEST_CASE("report --all matches the golden document and round-trips") {
  const auto r = run({"--format", "json-like", "report", "--all"});
  CHECK(r.code == 0);
  CHECK(r.out == read(std::string(MUKAI_TEST_DATA) + "/golden/report_all.json"));
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["status"] == "pass");
  CHECK(report::serialize(report::from_document(doc)) == r.out);
  // sorted by case id
  std::vector<std::string> ids;
  for (const auto& rep : doc["reports"]) ids.push_back(rep["case"]);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("every subcommand round-trips its JSON") {
  const std::vector<std::vector<std::string>> cmds = {
      {"gr-chern", "--n", "5"}, {"euler", "--n", "5", "--sections", "2"}, {"blowup-table", "--case", "7"},
      {"table1"}, {"link", "--genus", "9", "--direction", "reverse"}, {"cubic", "--case", "nine-nodal", "--check", "fibration"}};
  for (auto cmd : cmds) {
    cmd.insert(cmd.begin(), {"--format", "json-like"});
    const auto r = run(cmd);
    CHECK(r.code == 0);
    CHECK(report::serialize(report::from_document(nlohmann::ordered_json::parse(r.out))) == r.out);
  }
}

TEST_CASE("cubic subcommand") {
  const auto r = run({"cubic", "--case", "segre", "--check", "nodes"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("10/10 nodes verified\n", 0) == 0);
  CHECK(run({"cubic", "--case", "nine-nodal", "--check", "nodes"}).out.rfind("9/9 nodes verified\n", 0) == 0);
  CHECK(run({"cubic", "--case", std::string(MUKAI_CASES) + "/segre_p4.cubic"}).code == 0);
  CHECK(run({"cubic", "--case", std::string(MUKAI_CASES) + "/double_line.cubic", "--check", "fibration"}).code == 0);
}

TEST_CASE("link subcommand") {
  for (const char* g : {"6", "7", "8", "9"}) CHECK(run({"link", "--genus", g}).code == 0);
  CHECK(run({"link", "--case", std::string(MUKAI_CASES) + "/g6.json", "--direction", "forward"}).code == 0);
  CHECK(run({"blowup-table", "--case", std::string(MUKAI_CASES) + "/g9.json"}).code == 0);
}

TEST_CASE("failing checks give exit status 1") {
  const std::string path = "bad_case.json";
  std::string text = read(std::string(MUKAI_CASES) + "/g8.json");
  text.replace(text.find("\"m04\": -3"), 9, "\"m04\": -4");
  std::ofstream(path) << text;
  const auto r = run({"link", "--case", path, "--direction", "reverse"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("usage and input errors give exit status 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"euler", "--n", "6"}).code == 2);
  CHECK(run({"link", "--genus", "5"}).code == 2);
  CHECK(run({"link"}).code == 2);
  CHECK(run({"cubic", "--case", "segre", "--check", "lines"}).code == 2);
  CHECK(run({"cubic", "--case", "/nonexistent.cubic"}).code == 2);
  CHECK(run({"blowup-table", "--case", "/nonexistent.json"}).code == 2);
  CHECK(run({"--format", "xml", "table1"}).code == 2);
  const auto r = run({"link", "--genus", "5"});
  CHECK(r.err.find("genus 5") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
