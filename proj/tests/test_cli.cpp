#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "mincover/cli.hpp"
#include "mincover/countable.hpp"
#include "mincover/covers.hpp"
#include "mincover/io.hpp"

using namespace mincover;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, const std::string& input, int expect_code) {
  args.insert(args.begin(), "--json");
  const auto r = run(args, input);
  CHECK(r.code == expect_code);
  const json doc = json::parse(r.out);
  for (const char* key : {"command", "argv", "input_digest", "result", "verdict", "exit_code"}) {
    CHECK_MESSAGE(doc.contains(key), key);
  }
  CHECK(doc["exit_code"] == expect_code);
  return doc;
}

const std::string kPath = "0 1\n1 2\n";
const std::string kTriangle = "0 1\n1 2\n0 2\n";

}  // namespace

TEST_CASE("sha256 digest") {
  CHECK(cli::sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(cli::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("check-cover") {
  CHECK(run({"check-cover", "--indices", "0,1"}, kPath).code == cli::kOk);
  CHECK(run({"check-cover", "--indices", "0"}, kPath).code == cli::kNegative);
  CHECK(run({"check-cover", "--indices", "0,1"}, "0 empty\n").code == cli::kUsage);
  CHECK(run({"check-cover", "--indices", "7"}, kPath).code == cli::kUsage);
  CHECK(run({"check-cover", "--indices", "x"}, kPath).code == cli::kUsage);
  CHECK(run({"check-cover", "missing-file.txt", "--indices", "0"}).code == cli::kUsage);

  const json doc = run_json({"check-cover", "--indices", "0,1"}, kPath, 0);
  CHECK(doc["command"] == "check-cover");
  CHECK(doc["result"]["selected"] == json::array({0, 1}));
  CHECK(doc["result"]["private_vertex"]["0"] == "0");
  CHECK(doc["result"]["private_vertex"]["1"] == "2");
  CHECK(doc["input_digest"] == "sha256:" + cli::sha256_hex(kPath));

  const json bad = run_json({"check-cover", "--indices", "0,1,2"}, kTriangle, 1);
  CHECK(bad["result"]["violating_edge"] == 0);
  const json miss = run_json({"check-cover", "--indices", "0"}, kPath, 1);
  CHECK(miss["result"]["uncovered"] == json::array({"2"}));
}

TEST_CASE("minimalize") {
  const json greedy = run_json({"minimalize", "--algorithm", "greedy"}, kTriangle, 0);
  CHECK(greedy["result"]["selected"] == json::array({1, 2}));

  const json local = run_json({"minimalize", "--algorithm", "local"}, kTriangle, 0);
  CHECK(local["result"]["selected"] == json::array({0, 1}));
  REQUIRE(local["result"]["trace"].size() == 2);
  CHECK(local["result"]["trace"][0]["pivot"] == "0");
  CHECK(local["result"]["trace"][1]["pivot"] == "2");

  const json bw = run_json({"minimalize", "--algorithm", "bounded-width"}, "a\nb\na\nc\n", 0);
  CHECK(bw["result"]["selected"] == json::array({0, 1, 3}));

  const json pf = run_json({"minimalize", "--algorithm", "point-finite"}, "0 1\n2\n1 2\n", 0);
  CHECK(pf["result"]["selected"] == json::array({0, 2}));

  const json start =
      run_json({"minimalize", "--indices", "1,2"}, "0 1 2\n0\n1\n2\n0 1\n", 1);
  CHECK(start["verdict"] == "precondition-failed");

  CHECK(run({"minimalize", "--algorithm", "magic"}, kTriangle).code == cli::kUsage);
  CHECK(run({"minimalize", "--algorithm", "local", "--indices", "0"}, kTriangle).code ==
        cli::kUsage);

  const auto text = run({"minimalize"}, kTriangle);
  CHECK(text.code == 0);
  CHECK(text.out.find("selected: 1,2") != std::string::npos);
  CHECK(text.out.find("verdict: minimal-cover") != std::string::npos);
}

TEST_CASE("delete-lift, enumerate, check-nm and stats") {
  const json dl = run_json({"delete-lift", "--edge", "0"}, kPath, 0);
  CHECK(dl["result"]["selected"] == json::array({0, 1}));
  CHECK(run({"delete-lift", "--edge", "9"}, kPath).code == cli::kUsage);

  const json en = run_json({"enumerate"}, kTriangle, 0);
  CHECK(en["result"]["count"] == 3);
  CHECK(en["result"]["covers"][2] == json::array({1, 2}));
  CHECK(run({"enumerate", "--max-edges", "2"}, kTriangle).code == cli::kNegative);

  CHECK(run({"check-nm"}, kTriangle).code == cli::kOk);
  const json nm = run_json({"check-nm"}, "0 1 2\n0 1 3\n", 1);
  CHECK(nm["result"]["subfamily"] == json::array({0, 1}));
  CHECK(run({"check-nm", "-n", "0"}, kTriangle).code == cli::kUsage);

  const json st = run_json({"stats", "--bound", "1"}, kTriangle, 1);
  CHECK(st["result"]["max_degree"] == 2);
  CHECK(run({"stats", "--bound", "2"}, kTriangle).code == cli::kOk);
}

TEST_CASE("find-omega") {
  std::ostringstream dom;
  const auto d = gen_domotor();
  write_truncation(dom, d, truncate(d, 40));
  const json w = run_json({"find-omega", "--depth", "20"}, dom.str(), 0);
  CHECK(w["result"]["omega"].size() == 20);
  CHECK(w["result"]["edge_indices"].size() == 20);

  // The report alone re-verifies the witness.
  const auto h = parse_hypergraph(dom.str());
  OmegaWitness re;
  for (const auto& label : w["result"]["omega"]) {
    const auto& labels = h.labels();
    const auto it = std::find(labels.begin(), labels.end(), label.get<std::string>());
    REQUIRE(it != labels.end());
    re.omega.push_back(static_cast<Vertex>(it - labels.begin()));
  }
  re.edge_indices = w["result"]["edge_indices"].get<IndexSet>();
  CHECK(validate_witness(h, re).empty());

  const json none = run_json({"find-omega", "--depth", "4"}, "0 1\n1 2\n2 3\n3 0\n0 2\n", 1);
  CHECK(none["result"]["found"] == false);
  CHECK(run({"find-omega", "--depth", "0"}, kPath).code == cli::kUsage);
  CHECK(run({"find-omega"}, kPath).code == cli::kUsage);
}

TEST_CASE("gen") {
  const auto omega = run({"gen", "omega", "--count", "4"});
  CHECK(omega.code == 0);
  const auto h = parse_hypergraph(omega.out);
  CHECK(h.edges() ==
        std::vector<Edge>{VertexSet{}, VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 1, 2}});

  const auto dom = run({"gen", "domotor", "--count", "2"});
  CHECK(dom.out.find("\n0 1 3 4\n0 2 3 4\n") != std::string::npos);

  const auto lines = parse_hypergraph(run({"gen", "lines", "--radius", "1"}).out);
  CHECK(lines.size() == 20);

  const auto r1 = run({"gen", "random", "--count", "5", "--seed", "9"});
  const auto r2 = run({"gen", "random", "--count", "5", "--seed", "9"});
  CHECK(r1.out == r2.out);
  CHECK(parse_hypergraph(r1.out).size() == 5);

  CHECK(run({"gen", "lines", "--radius", "0"}).code == cli::kUsage);
  CHECK(run({"gen", "lines", "--radius", "99"}).code == cli::kUsage);
  CHECK(run({"gen", "nothing"}).code == cli::kUsage);
  const json j = run_json({"gen", "omega", "--count", "3"}, "", 0);
  CHECK(j["result"]["edges"] == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"check-cover"}, kPath).code == cli::kUsage);
}
