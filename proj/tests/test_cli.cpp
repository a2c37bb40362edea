#include "qx/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "support/golden.hpp"

using namespace qx;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result qx_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Golden arguments are relative to the fixture directory.
struct InFixtureDir {
  fs::path saved = fs::current_path();
  InFixtureDir() { fs::current_path(QX_FIXTURE_DIR); }
  ~InFixtureDir() { fs::current_path(saved); }
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("golden cases") {
  InFixtureDir here;
  const auto cases = qx::testing::golden_cases();
  CHECK(cases.size() >= 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto first = qx_run(c.args);
    auto second = qx_run(c.args);
    CHECK(first.code == c.exit_code);
    CHECK(first.out == c.expected_stdout);
    CHECK(second.out == first.out);
    CHECK(second.err == first.err);
    if (c.exit_code == cli::kExitInput) CHECK(contains(first.err, "qx: error: "));
    else CHECK(first.err.empty());
  }
}

TEST_CASE("parse errors name the file and line") {
  InFixtureDir here;
  auto r = qx_run({"validate", "malformed.qxa", "meetings.tsv"});
  CHECK(r.code == cli::kExitInput);
  CHECK(contains(r.err, "malformed.qxa: line 3"));

  r = qx_run({"synth", "conflict.tsv"});
  CHECK(contains(r.err, "conflict.tsv: line 2"));
  CHECK(contains(r.err, "conflicting answers"));

  r = qx_run({"complexity", "no_such_file.qxa"});
  CHECK(r.code == cli::kExitInput);
  CHECK(contains(r.err, "no_such_file.qxa"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(qx_run({}).code == cli::kExitInput);
  CHECK(qx_run({"frobnicate"}).code == cli::kExitInput);
  CHECK(qx_run({"--format", "json", "estimate", "x"}).code == cli::kExitInput);
  CHECK(qx_run({"--level", "E", "estimate", "x"}).code == cli::kExitInput);
  CHECK(qx_run({"complexity", "a.qxa", "--measure", "size"}).code == cli::kExitInput);
  CHECK(qx_run({"zipf", "a.txt", "--coverage", "0"}).code == cli::kExitInput);
  CHECK(qx_run({"zipf", "a.txt", "--coverage", "1.5"}).code == cli::kExitInput);
  CHECK(qx_run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("synth --out writes a machine that parses back and answers the table") {
  InFixtureDir here;
  const fs::path out = fs::temp_directory_path() / "qx_test_cli_synth.qxa";
  for (const char* table : {"singleton.tsv", "mergeable.tsv", "meetings.tsv"}) {
    CAPTURE(table);
    auto r = qx_run({"synth", table, "--out", out.string()});
    REQUIRE(r.code == cli::kExitOk);
    auto m = parse_automaton(read_file(out));
    auto t = parse_qa_table(qx::testing::read_fixture(table));
    CHECK(verify(m, t).empty());
    auto v = qx_run({"validate", out.string(), table});
    CHECK(v.code == cli::kExitOk);
  }
  fs::remove(out);
}

TEST_CASE("the shipped meetings machine is what synth produces") {
  InFixtureDir here;
  const fs::path out = fs::temp_directory_path() / "qx_test_cli_meetings.qxa";
  REQUIRE(qx_run({"synth", "meetings.tsv", "--out", out.string()}).code == cli::kExitOk);
  CHECK(parse_automaton(read_file(out)) == parse_automaton(qx::testing::read_fixture("meetings.qxa")));
  fs::remove(out);
}

TEST_CASE("zipf --export writes the rank table") {
  InFixtureDir here;
  const fs::path out = fs::temp_directory_path() / "qx_test_cli_ranks.tsv";
  REQUIRE(qx_run({"zipf", "zipf_corpus.txt", "--export", out.string()}).code == cli::kExitOk);
  std::ifstream in(out);
  std::string line;
  std::size_t lines = 0;
  std::getline(in, line);
  CHECK(line.rfind("1\t", 0) == 0);
  CHECK(contains(line, "\t1000"));
  for (++lines; std::getline(in, line);) ++lines;
  CHECK(lines == 100);
  fs::remove(out);
}

TEST_CASE("kv output is metric<TAB>value throughout") {
  InFixtureDir here;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "kv", "estimate", "boris.profile"},
           {"--format", "kv", "iterate", "help_graph.tsv", "help_init.txt"},
           {"--format", "kv", "validate", "meetings.qxa", "meetings_flipped.tsv"}}) {
    auto r = qx_run(args);
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
      CAPTURE(line);
      const auto tab = line.find('\t');
      REQUIRE(tab != std::string::npos);
      CHECK(tab > 0);
      CHECK(line.find('\t', tab + 1) == std::string::npos);
    }
  }
}

TEST_CASE("render") {
  cli::Report r{"demo", {{"file", "x.qxa"}}, {}, {"a note"}, AbstractionLevel::B_engine};
  r.add("t_rule", "12");
  CHECK(cli::render(r, cli::Format::text) == "qx demo\nlevel: B (engine)\ninput file: x.qxa\nt_rule: 12\nnote: a note\n");
  CHECK(cli::render(r, cli::Format::kv) == "command\tdemo\nlevel\tB\ninput.file\tx.qxa\nt_rule\t12\nnote\ta note\n");
  CHECK(contains(cli::render(r, cli::Format::text, true), "\033[1m"));
  CHECK(!contains(cli::render(r, cli::Format::kv, true), "\033["));
}

TEST_CASE("number formatting") {
  CHECK(cli::format_real(1.0001864) == "1.000186");
  CHECK(cli::format_real(-1e-9) == "0.000000");
  CHECK(cli::format_scientific(0) == "0");
  CHECK(cli::format_scientific(7) == "7.0e0");
  CHECK(cli::format_scientific(1000) == "1.0e3");
  CHECK(cli::format_scientific(112000) == "1.1e5");
  CHECK(cli::format_scientific(10937500) == "1.1e7");
  CHECK(cli::format_scientific(999999) == "1.0e6");
  CHECK(cli::format_scientific(150000) == "1.5e5");
}
