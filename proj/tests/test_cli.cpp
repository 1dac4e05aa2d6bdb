#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rotbraid/io.hpp"
#include "support/testutil.hpp"

using nlohmann::json;
using testutil::run_command;

namespace {

const std::string kCli = ROTBRAID_CLI_PATH;

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path(std::string("/tmp/rotbraid_cli_") + name + "_" +
             std::to_string(::getpid()) + ".json") {}
  ~TempFile() { std::remove(path.c_str()); }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen then classify a full turn") {
    TempFile path_file("full_turn");
    std::string out;
    int code = run_command(
        kCli + " gen --turns 1 --axis 0,0,1 --output " + path_file.path, &out);
    REQUIRE(code == 0);

    code = run_command(kCli + " classify --input " + path_file.path, &out);
    CHECK(code == 0);
    json rep = json::parse(out);
    CHECK(rep["class"] == "nontrivial");
    CHECK(rep["lift_class"] == "nontrivial");
    CHECK(rep["agreement"] == true);
    CHECK(rep["exponent_sum_mod4"] == 2);

    json schema = testutil::load_schema("classification_report.schema.json");
    CHECK_FALSE(testutil::schema_error(schema, rep).has_value());

    // determinism
    std::string out2;
    run_command(kCli + " classify --input " + path_file.path, &out2);
    CHECK(out == out2);
  }

  TEST_CASE("classify a double turn as trivial") {
    TempFile path_file("double_turn");
    run_command(kCli + " gen --turns 2 --axis 0,0,1 --output " + path_file.path, nullptr);
    std::string out;
    int code = run_command(kCli + " classify --input " + path_file.path, &out);
    CHECK(code == 0);
    CHECK(json::parse(out)["class"] == "trivial");
  }

  TEST_CASE("batch classify with jobs") {
    TempFile f1("batch1"), f2("batch2"), f3("batch3");
    run_command(kCli + " gen --turns 1 --seed 10 --output " + f1.path, nullptr);
    run_command(kCli + " gen --turns 2 --seed 11 --wiggle --output " + f2.path, nullptr);
    run_command(kCli + " gen --turns 3 --seed 12 --output " + f3.path, nullptr);
    std::string out;
    int code = run_command(kCli + " classify --jobs 3 --input " + f1.path + " --input " +
                               f2.path + " --input " + f3.path,
                           &out);
    CHECK(code == 0);
    // one report line per input, in input order
    std::vector<std::string> expected{"nontrivial", "trivial", "nontrivial"};
    std::istringstream lines(out);
    std::string line;
    int i = 0;
    while (std::getline(lines, line)) {
      REQUIRE(i < 3);
      CHECK(json::parse(line)["class"] == expected[i++]);
    }
    CHECK(i == 3);
  }

  TEST_CASE("malformed input exits 2") {
    TempFile bad("bad");
    write_file(bad.path, "{ not json");
    std::string out;
    CHECK(run_command(kCli + " classify --input " + bad.path, &out) == 2);
    write_file(bad.path, R"({"format":"segments","segments":[{"axis":[0,0,1],"angle":3.14}]})");
    // not closed
    CHECK(run_command(kCli + " classify --input " + bad.path, &out) == 2);
    CHECK(run_command(kCli + " classify --input /nonexistent.json", &out) == 2);
  }

  TEST_CASE("extract prints the braid word") {
    TempFile path_file("extract");
    run_command(kCli + " gen --turns 1 --axis 0,0,1 --output " + path_file.path, nullptr);
    std::string out;
    int code = run_command(kCli + " extract --input " + path_file.path, &out);
    CHECK(code == 0);
    json word = json::parse(out);
    CHECK(word["n"] == 3);
    CHECK(word["word"].is_array());
    json schema = testutil::load_schema("braid_word.schema.json");
    CHECK_FALSE(testutil::schema_error(schema, word).has_value());
  }

  TEST_CASE("reduce") {
    std::string out;
    int code = run_command(kCli + " reduce \"1 1 1 1\"", &out);
    CHECK(code == 0);
    json r = json::parse(out);
    CHECK(r["canonical_text"] == "");
    CHECK(r["class"] == "trivial");
    CHECK(r["exponent_sum_mod4"] == 0);

    code = run_command(kCli + " reduce \"2 1 1 -2\"", &out);
    CHECK(code == 0);
    r = json::parse(out);
    CHECK(r["class"] == "nontrivial");
    CHECK(r["canonical"] == json::array({1, 1}));

    // non-pure word: no z2 class, canonical still reported
    code = run_command(kCli + " reduce \"1\"", &out);
    CHECK(code == 0);
    r = json::parse(out);
    CHECK_FALSE(r.contains("class"));
    CHECK(r["canonical"] == json::array({1}));

    CHECK(run_command(kCli + " reduce \"1 x\"", &out) == 2);
  }

  TEST_CASE("reduce emits a replayable certificate") {
    TempFile cert("cert");
    std::string out;
    int code =
        run_command(kCli + " reduce \"1 1 1 1\" --certificate " + cert.path, &out);
    CHECK(code == 0);
    json schema = testutil::load_schema("certificate.schema.json");
    std::ifstream in(cert.path);
    json jc = json::parse(in);
    CHECK_FALSE(testutil::schema_error(schema, jc).has_value());

    code = run_command(kCli + " verify-cert --input " + cert.path, &out);
    CHECK(code == 0);
    CHECK(out.find("replays exactly") != std::string::npos);

    // corrupted certificate fails replay with exit 3
    jc["end"] = json::array({1});
    write_file(cert.path, jc.dump());
    CHECK(run_command(kCli + " verify-cert --input " + cert.path, &out) == 3);
  }

  TEST_CASE("verify suites") {
    std::string out;
    CHECK(run_command(kCli + " verify lemma1", &out) == 0);
    CHECK(out.find("10/10") != std::string::npos);

    CHECK(run_command(kCli + " verify lemma1p --n 5", &out) == 0);
    CHECK(run_command(kCli + " verify prop1", &out) == 0);
    CHECK(run_command(kCli + " verify prop1p --n 3", &out) == 0);

    // n = 4 is best effort: inconclusive is exit 4 (tiny budget keeps it fast)
    CHECK(run_command(kCli + " verify prop1p --n 4 --budget 2000", &out) == 4);
    CHECK(out.find("INCONCLUSIVE") != std::string::npos);

    CHECK(run_command(kCli + " verify nosuch", &out) == 2);
    CHECK(run_command(kCli + " verify prop1p --n 7", &out) == 2);
  }

  TEST_CASE("diagram") {
    std::string out;
    CHECK(run_command(kCli + " diagram \"1 2 2 1\" --format ascii", &out) == 0);
    CHECK(out.find('|') != std::string::npos);
    CHECK(run_command(kCli + " diagram \"1 2 2 1\" --format svg", &out) == 0);
    CHECK(out.rfind("<svg", 0) == 0);
    CHECK(run_command(kCli + " diagram \"5\" --format ascii", &out) == 2);
  }
}
