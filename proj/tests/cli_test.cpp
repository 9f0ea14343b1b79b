#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "pdc/pqseq.hpp"
#include "pdc/replacement.hpp"
#include "pdc/structure.hpp"
#include "test_util.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = pdc::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("sequence command") {
  const CliResult text = run_cli({"sequence", "-p", "8", "-q", "3"});
  CHECK(text.code == 0);
  CHECK(text.out == pdc::test::read_golden("sequence_8_3.txt"));
  CHECK(text.err.empty());

  const CliResult json = run_cli({"sequence", "-p", "8", "-q", "3", "--format", "structured"});
  CHECK(json.code == 0);
  CHECK(json.out == pdc::test::read_golden("sequence_8_3.json"));

  const CliResult bad = run_cli({"sequence", "-p", "8", "-q", "4"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err == "error: gcd(p,q) must be 1 (got gcd(8,4)=4)\n");
}

TEST_CASE("primitive command") {
  const CliResult yes = run_cli({"primitive", "zyyzyyzy"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "primitive\n");

  const CliResult no = run_cli({"primitive", "zz"});
  CHECK(no.code == 1);
  CHECK(no.out == "not primitive\n");

  const CliResult mixed_alphabet = run_cli({"primitive", "zx"});
  CHECK(mixed_alphabet.code == 2);
  CHECK(contains(mixed_alphabet.err, "error: "));

  const CliResult traced = run_cli({"primitive", "zy", "--trace"});
  CHECK(traced.code == 0);
  CHECK(traced.out ==
        "start    zy  (length 2)\n"
        "step 1   z->zY  z  (length 1)\n"
        "verdict  primitive\n");

  const CliResult structured = run_cli({"primitive", "zz", "--format", "structured"});
  CHECK(structured.code == 1);
  const auto j = nlohmann::json::parse(structured.out);
  CHECK(j["schema"] == "pdc.trace.v1");
  CHECK(j["verdict"] == "not-primitive");
}

TEST_CASE("canonical command") {
  const CliResult ok = run_cli({"canonical", "-m", "3", "-n", "5"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "zyyzyyzy\n");

  const CliResult structured = run_cli({"canonical", "-m", "3", "-n", "5", "--format", "structured"});
  CHECK(structured.code == 0);
  const auto j = nlohmann::json::parse(structured.out);
  CHECK(j["schema"] == "pdc.canonical.v1");
  CHECK(j["word"] == "zyyzyyzy");

  const CliResult bad = run_cli({"canonical", "-m", "5", "-n", "3"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "canonical_primitive needs 1 <= m <= n"));
}

TEST_CASE("classify command") {
  const CliResult nc = run_cli({"classify", "-p", "12", "-q", "5"});
  CHECK(nc.code == 1);
  CHECK(nc.out == "L(12,5): not contractible (case nc)\n");

  const CliResult yes = run_cli({"classify", "-p", "8", "-q", "3"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "L(8,3): contractible (case 1c)\n");

  const CliResult structured = run_cli({"classify", "-p", "17", "-q", "7", "--format", "structured"});
  CHECK(structured.code == 1);
  const auto j = nlohmann::json::parse(structured.out);
  CHECK(j["schema"] == "pdc.classify.v1");
  CHECK(j["contractible"] == false);
  CHECK(j["case_id"] == "nc");
  CHECK(j["q_prime"] == 5);
}

TEST_CASE("report command") {
  const CliResult text = run_cli({"report", "-p", "12", "-q", "5"});
  CHECK(text.code == 0);
  CHECK(text.out == pdc::test::read_golden("report_12_5.txt"));

  const CliResult structured = run_cli({"report", "-p", "7", "-q", "2", "--format", "structured"});
  CHECK(structured.code == 0);
  const pdc::StructureReport rep = pdc::report_from_record(structured.out);
  CHECK(rep.case_id == "2c");
  CHECK(pdc::report_to_record(rep) == structured.out);
}

TEST_CASE("witness command") {
  const CliResult dot = run_cli({"witness", "-p", "12", "-q", "5", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out == pdc::test::read_golden("witness_12_5.dot"));
  CHECK(run_cli({"witness", "-p", "12", "-q", "5", "--dot"}).out == dot.out);

  const CliResult structured = run_cli({"witness", "-p", "12", "-q", "5", "--format", "structured"});
  CHECK(structured.code == 0);
  CHECK(structured.out == pdc::test::read_golden("witness_12_5.json"));
  CHECK(pdc::strip_from_record(structured.out) == pdc::witness(pdc::make_params(12, 5)));

  const CliResult text = run_cli({"witness", "-p", "12", "-q", "5"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "witness strip for L(12,5)  r=2  s=3  t=0  cf=[3]"));
  CHECK(contains(text.out, "separation  true"));

  const CliResult contractible = run_cli({"witness", "-p", "7", "-q", "2"});
  CHECK(contractible.code == 3);
  CHECK(contractible.err == "error: P(V) is contractible; no witness exists\n");
}

TEST_CASE("sweep command") {
  const CliResult sweep = run_cli({"sweep", "--pmax", "10", "--samples", "50"});
  CHECK(sweep.code == 0);
  CHECK(contains(sweep.out, "sweep  pmax=10"));
  CHECK(contains(sweep.out, "seed=12345"));
  CHECK(contains(sweep.out, "samples=50"));
  CHECK_FALSE(contains(sweep.out, "FAIL"));
  int ok_lines = 0;
  std::istringstream lines(sweep.out);
  for (std::string line; std::getline(lines, line);) {
    if (line.size() >= 2 && line.substr(line.size() - 2) == "ok") ++ok_lines;
  }
  CHECK(ok_lines == 6);

  CHECK(run_cli({"sweep", "--pmax", "1"}).code == 2);
  CHECK(run_cli({"sweep", "--pmax", "6", "--samples", "-3"}).code == 2);
}

TEST_CASE("four-primitives command") {
  const CliResult text = run_cli({"four-primitives", "-p", "8", "-q", "3"});
  CHECK(text.code == 0);
  CHECK(text.out == "L(8,3): primitive indices {1, 3, 5, 7}\n");

  const CliResult structured =
      run_cli({"four-primitives", "-p", "2", "-q", "1", "--format", "structured"});
  CHECK(structured.code == 0);
  const auto j = nlohmann::json::parse(structured.out);
  CHECK(j["schema"] == "pdc.four-primitives.v1");
  CHECK(j["indices"] == nlohmann::json::array({1}));
}

TEST_CASE("argument errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"sequence", "-p", "8"}).code == 2);
  CHECK(run_cli({"sequence", "-p", "8", "-q", "3", "--format", "xml"}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"primitive", "zy", "--bogus"}).code == 2);

  const CliResult dot_rejected = run_cli({"sequence", "-p", "8", "-q", "3", "--format", "dot"});
  CHECK(dot_rejected.code == 2);
  CHECK(dot_rejected.err == "error: dot output is only available for the witness command\n");
}

TEST_CASE("help exits cleanly") {
  const CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "sequence"));
  CHECK(contains(help.out, "witness"));

  const CliResult sub_help = run_cli({"witness", "--help"});
  CHECK(sub_help.code == 0);
  CHECK(contains(sub_help.out, "--format"));
}
