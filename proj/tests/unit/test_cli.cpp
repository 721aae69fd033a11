#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "strew/cli.hpp"

using namespace strew;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("strew_test_" + std::to_string(++counter) + ".srs");
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string strip_timing(std::string text) {
  return std::regex_replace(text, std::regex(R"("timing_ms": [0-9.e+-]+)"),
                            "\"timing_ms\": 0");
}

} // namespace

TEST_CASE("lm command on the documented examples") {
  TempFile two("alphabet: a b c\nrules:\nab -> c\n");
  auto ok = run({"lm", two.str()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("LM-system: yes") != std::string::npos);

  TempFile idem("alphabet: a b\nrules:\naa -> a\n");
  auto fail = run({"lm", idem.str()});
  CHECK(fail.code == 1);
}

TEST_CASE("collapse command and exit codes") {
  TempFile idem("alphabet: a b\nrules:\naa -> a\n");
  auto verdict = run({"collapse", idem.str()});
  CHECK(verdict.code == 1);
  CHECK(verdict.out.find("witness: rhs 'a'") != std::string::npos);

  TempFile two("alphabet: a b c\nrules:\nab -> c\n");
  CHECK(run({"collapse", two.str()}).code == 0);
}

TEST_CASE("cap command") {
  TempFile two("alphabet: a b c\nrules:\nab -> c\n");
  auto yes = run({"cap", two.str(), "-u", "a", "-v", "c"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("cap term: b") != std::string::npos);
  CHECK(run({"cap", two.str(), "-u", "b", "-v", "c"}).code == 1);
  // Reducible u is a precondition error.
  CHECK(run({"cap", two.str(), "-u", "ab", "-v", "c"}).code == 2);
}

TEST_CASE("normalize command") {
  TempFile idem("alphabet: a b\nrules:\naa -> a\n");
  auto result = run({"normalize", idem.str(), "baaa", "--term"});
  CHECK(result.code == 0);
  CHECK(result.out.find("ba\n") != std::string::npos);
  CHECK(result.out.find("a(b(x))") != std::string::npos);
}

TEST_CASE("explain command") {
  TempFile two("alphabet: a b c\nrules:\nab -> c\n");
  auto result = run({"explain", two.str(), "-u", "a", "-v", "c", "-w", "b"});
  CHECK(result.code == 0);
  CHECK(result.out.find("stack $c") != std::string::npos);
  CHECK(result.out.find("accepted") != std::string::npos);
  CHECK(run({"explain", two.str(), "-u", "a", "-v", "c", "-w", "a"}).code == 1);
}

TEST_CASE("inconclusive termination yields exit 3 and the flag overrides it") {
  TempFile swap("alphabet: a b\nrules:\nab -> ba\n");
  CHECK(run({"lm", swap.str()}).code == 3);
  CHECK(run({"normalize", swap.str(), "ab"}).code == 3);
  auto assumed = run({"normalize", swap.str(), "ab", "--assume-terminating"});
  CHECK(assumed.code == 0);
  CHECK(assumed.out == "ba\n");
}

TEST_CASE("file assumptions work like the flag") {
  TempFile swap("alphabet: a b\nrules:\nab -> ba\nassume: terminating\n");
  CHECK(run({"normalize", swap.str(), "ab"}).code == 0);
}

TEST_CASE("parse and usage errors exit with code 2") {
  TempFile bad("alphabet: a b\nrules:\nab -> c\n");
  auto parse_error = run({"lm", bad.str()});
  CHECK(parse_error.code == 2);
  CHECK(parse_error.err.find("line 3") != std::string::npos);

  CHECK(run({"lm", "/nonexistent/file.srs"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("json reports are stable modulo timing and match the schema shape") {
  TempFile two("alphabet: a b c\nrules:\nab -> c\n");
  auto first = run({"lm", two.str(), "--json"});
  auto second = run({"lm", two.str(), "--json"});
  CHECK(first.code == 0);
  CHECK(strip_timing(first.out) == strip_timing(second.out));
  for (const char* key :
       {"\"schema\"", "\"tool\"", "\"command\"", "\"input\"", "\"digest\"",
        "\"assumptions\"", "\"verdict\"", "\"timing_ms\"", "strew-report/1"}) {
    CHECK(first.out.find(key) != std::string::npos);
  }
}

TEST_CASE("json verdicts carry the stage payloads") {
  TempFile idem("alphabet: a b\nrules:\naa -> a\n");
  auto collapse = run({"collapse", idem.str(), "--json"});
  CHECK(collapse.out.find("\"collapsing\": true") != std::string::npos);
  CHECK(collapse.out.find("\"rhs\": \"a\"") != std::string::npos);

  TempFile two("alphabet: a b c\nrules:\nab -> c\n");
  auto cap = run({"cap", two.str(), "-u", "a", "-v", "c", "--json"});
  CHECK(cap.out.find("\"cap_term\": \"b\"") != std::string::npos);
}

TEST_CASE("oracle cross-checks pass on consistent systems") {
  TempFile idem("alphabet: a b\nrules:\naa -> a\n");
  CHECK(run({"collapse", idem.str(), "--oracle", "4"}).code == 1);
  TempFile two("alphabet: a b c\nrules:\nab -> c\n");
  CHECK(run({"collapse", two.str(), "--oracle", "5"}).code == 0);
  CHECK(run({"cap", two.str(), "-u", "a", "-v", "c", "--oracle", "5"}).code == 0);
}

TEST_CASE("check command reports convergence plus forward closure") {
  TempFile two("alphabet: a b c\nrules:\nab -> c\n");
  CHECK(run({"check", two.str()}).code == 0);
  TempFile not_fc("alphabet: a b\nrules:\nab -> b\n");
  CHECK(run({"check", not_fc.str()}).code == 1);
}
