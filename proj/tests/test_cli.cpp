#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli_runner.hpp"

using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("check prints a judgement") {
  auto r = cli::run({"check", "zero"});
  CHECK(r.code == 0);
  CHECK(r.out == "zero : [] |- N\n");
  auto annotated = cli::run({"check", "(\\ # : N -> N)"});
  CHECK(annotated.code == 0);
  CHECK(annotated.out == "\\ # : [] |- N -> N\n");
}

TEST_CASE("check validates substitutions") {
  auto r = cli::run({"check", "--subst", "id , zero", "--ctx", "[]"});
  CHECK(r.code == 0);
  CHECK(r.out == "id , zero : [] |= [N]\n");
}

TEST_CASE("subst applies and its output re-parses") {
  auto r = cli::run({"subst", "\\ (#^ (#^ #))", "id , (\\ suc #)"});
  CHECK(r.code == 0);
  CHECK(r.out == "\\ ((\\ suc #)^ ((\\ suc #)^ #))\n");
  std::string printed = r.out.substr(0, r.out.size() - 1);
  auto recheck = cli::run({"check", printed, "--ty", "N -> N"});
  CHECK(recheck.code == 0);
}

TEST_CASE("subst with a chain equals fused evaluation") {
  std::vector<std::string> base = {"subst", "#", "id , suc # ; id , zero", "--ctx", "[]",
                                   "--ty", "N"};
  auto plain = cli::run(base);
  std::vector<std::string> fused = base;
  fused.push_back("--fuse");
  auto with_fuse = cli::run(fused);
  CHECK(plain.code == 0);
  CHECK(plain.out == "suc zero\n");
  CHECK(with_fuse.code == 0);
  CHECK(with_fuse.out == plain.out);
}

TEST_CASE("compose evaluates chains") {
  auto r = cli::run({"compose", "(id , zero)^ , # ; id , suc zero", "--ctx", "[N]"});
  CHECK(r.code == 0);
  CHECK(r.out == "id , zero , suc zero\n");
  auto two_args = cli::run({"compose", "(id , zero)^ , #", "id , suc zero", "--ctx", "[N]"});
  CHECK(two_args.code == 0);
  CHECK(two_args.out == r.out);
}

TEST_CASE("normalize prints the canonical normal form") {
  auto r = cli::run({"normalize", "(\\ (\\ (#^ (#^ #)))) (\\ suc #)"});
  CHECK(r.code == 0);
  CHECK(r.out == "\\ suc (suc #)\n");
}

TEST_CASE("compose and normalize output is pipe-safe") {
  auto composed = cli::run({"compose", "(id , zero)^ , #", "id , suc zero", "--ctx", "[N]"});
  REQUIRE(composed.code == 0);
  std::string subst_text = composed.out.substr(0, composed.out.size() - 1);
  auto recheck = cli::run({"check", "--subst", subst_text, "--ctx", "[]"});
  CHECK(recheck.code == 0);

  auto normalized = cli::run({"normalize", "(\\ (\\ (#^ (#^ #)))) (\\ suc #)"});
  REQUIRE(normalized.code == 0);
  std::string term_text = normalized.out.substr(0, normalized.out.size() - 1);
  auto recheck_term = cli::run({"check", term_text, "--ty", "N -> N"});
  CHECK(recheck_term.code == 0);
}

TEST_CASE("trace emits json lines and the final term") {
  auto r = cli::run({"trace", "\\ (#^ (#^ #))", "id , (\\ suc #)"});
  REQUIRE(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 11);
  std::vector<std::string> rules;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    json step = json::parse(lines[i]);
    REQUIRE(step.contains("rule"));
    REQUIRE(step.contains("before"));
    REQUIRE(step.contains("after"));
    rules.push_back(step["rule"].get<std::string>());
  }
  CHECK(rules == std::vector<std::string>{"inst-5", "inst-6", "inst-4", "inst-2", "inst-3",
                                          "inst-6", "inst-4", "inst-2", "inst-3", "inst-3"});
  CHECK(lines.back() == "\\ ((\\ suc #)^ ((\\ suc #)^ #))");
}

TEST_CASE("trace --json bundles the steps") {
  auto r = cli::run({"trace", "#", "id , zero", "--json"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc.contains("steps"));
  CHECK(doc["steps"].size() == 1);
  CHECK(doc["steps"][0]["rule"] == "inst-3");
  CHECK(doc["result"] == "zero");
}

TEST_CASE("erase and embed translate both ways") {
  auto erased = cli::run({"erase", "\\ (\\ (#^ (#^ #)))", "--ty", "(N -> N) -> N -> N"});
  CHECK(erased.code == 0);
  CHECK(erased.out == "λ. λ. 1 (1 0)\n");
  auto embedded = cli::run({"embed", "λ. λ. 1 (1 0)", "--ty", "(N -> N) -> N -> N"});
  CHECK(embedded.code == 0);
  CHECK(embedded.out == "\\ (\\ (#^ (#^ #)))\n");
  auto missing_ty = cli::run({"embed", "zero"});
  CHECK(missing_ty.code == 1);
}

TEST_CASE("equiv golden pair") {
  auto same = cli::run({"equiv", "#^^ (#^) #", "(#^ #)^ #", "--ctx", "[N -> N -> N, N, N]",
                        "--ty", "N"});
  CHECK(same.code == 0);
  CHECK(same.out == "equivalent\n");
  auto different = cli::run({"equiv", "zero", "suc zero"});
  CHECK(different.code == 1);
  CHECK(different.out == "distinct\n");
}

TEST_CASE("json output is a stable document") {
  auto r = cli::run({"normalize", "(\\ #) zero", "--json"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["term"] == "zero");
  CHECK(doc["ctx"] == "[]");
  CHECK(doc["ty"] == "N");
}

TEST_CASE("unicode aliases are accepted") {
  auto r = cli::run({"check", "ƛ suc ●"});
  CHECK(r.code == 0);
  CHECK(r.out == "\\ suc # : [] |- N -> N\n");
  auto s = cli::run({"subst", "●", "id ▷ zero"});
  CHECK(s.code == 0);
  CHECK(s.out == "zero\n");
}

TEST_CASE("exit codes") {
  CHECK(cli::run({"check", "("}).code == 1);          // syntax error
  CHECK(cli::run({"check", "#"}).code == 1);          // empty context
  CHECK(cli::run({"frobnicate"}).code == 2);          // unknown command
  CHECK(cli::run({"check"}).code == 2);               // missing argument
  CHECK(cli::run({"props", "--cases", "5"}).code == 0);
}

TEST_CASE("term files are read with an at prefix") {
  std::string path = "/tmp/lamup_cli_term.txt";
  {
    std::ofstream out(path);
    out << "suc zero\n";
  }
  auto r = cli::run({"check", "@" + path});
  CHECK(r.code == 0);
  CHECK(r.out == "suc zero : [] |- N\n");
  std::remove(path.c_str());
}
