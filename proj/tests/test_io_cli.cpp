#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "transys/cli.hpp"
#include "transys/dot.hpp"
#include "transys/group_lattice.hpp"
#include "transys/json_io.hpp"

using namespace transys;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path("transys_test_" + name) {
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("poset spec parsing") {
  CHECK(parse_poset_spec("chain:3")->size() == 4);
  CHECK(parse_poset_spec("boolean:3")->size() == 8);
  CHECK(parse_poset_spec("divisors:12")->size() == 6);
  CHECK(parse_poset_spec("grid:2x1")->size() == 6);
  CHECK(parse_poset_spec("grid:1x1x1")->size() == 8);
  CHECK(parse_poset_spec("abelian:2,2")->size() == 5);
  CHECK(parse_poset_spec("op:chain:3")->leq(3, 0));
  CHECK_THROWS_AS(parse_poset_spec("chain"), Error);
  CHECK_THROWS_AS(parse_poset_spec("ring:3"), Error);
  CHECK_THROWS_AS(parse_poset_spec("chain:x"), Error);

  CHECK(poset_spec_string(*parse_poset_spec("grid:2x1x3")) == "grid:2x1x3");
  CHECK(poset_spec_string(*parse_poset_spec("abelian:2,2")) == "abelian:2,2");
}

TEST_CASE("poset JSON round trip") {
  for (const char* spec : {"chain:3", "boolean:2", "divisors:12", "grid:2x1"}) {
    PosetPtr p = parse_poset_spec(spec);
    PosetPtr back = poset_from_json(poset_to_json(*p));
    CHECK(back->same_order_as(*p));
    CHECK(back->labels() == p->labels());
  }
  CHECK_THROWS_AS(poset_from_json(json{{"size", 2}, {"leq", {{0, 1}, {1, 0}}}}), Error);
}

TEST_CASE("transfer system JSON round trip") {
  PosetPtr c2 = Poset::chain(2);
  TransferSystem r = validate(c2, {{0, 1}, {0, 2}});
  json j = ts_to_json(r);
  CHECK(j.at("poset") == "chain:2");
  TransferSystem back = ts_from_json(j);
  CHECK(back == r);

  // invalid edge sets are rejected at load time
  json bad = {{"poset", "chain:2"}, {"edges", {{0, 2}}}};
  CHECK_THROWS_AS(ts_from_json(bad), ValidationError);
}

TEST_CASE("partition JSON round trip") {
  SetPartition pi = make_partition(6, {{0, 1, 2}, {3, 5}, {4}});
  CHECK(partition_from_json(partition_to_json(pi)) == pi);
}

TEST_CASE("duality JSON") {
  PosetPtr c3 = Poset::chain(3);
  Duality d = *canonical_duality(c3);
  Duality back = duality_from_json(duality_to_json(d), nullptr);
  CHECK(back.forward == d.forward);
  CHECK_THROWS_AS(duality_from_json(json{{"forward", {0, 1, 2, 3}}}, c3), Error);
}

TEST_CASE("DOT export") {
  PosetPtr b2 = Poset::boolean_lattice(2);
  std::string hasse = poset_to_dot(*b2);
  CHECK(hasse.find("v0 -> v1") != std::string::npos);
  CHECK(hasse.find("v0 -> v3") == std::string::npos);  // covers only
  CHECK(hasse.find("rank=same") != std::string::npos);

  std::string full = ts_to_dot(complete_system(b2));
  CHECK(full.find("v0 -> v3") != std::string::npos);  // non-cover edge drawn
}

TEST_CASE("cli: poset and enumerate") {
  CHECK(run({"poset", "chain:3"}).out == "chain:3: 4 elements, 6 strict pairs, 3 cover edges, lattice\n");
  CHECK(run({"enumerate", "chain:3", "--count"}).out == "14\n");
  CHECK(run({"enumerate", "chain:1"}).out == "[]\n[[0,1]]\n");

  CliRun dot = run({"poset", "boolean:2", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") == 0);

  CliRun json_out = run({"poset", "grid:2x1", "--json"});
  CHECK(json_out.code == 0);
  CHECK(poset_from_json(json::parse(json_out.out))->size() == 6);
}

TEST_CASE("cli: determinism") {
  auto a = run({"enumerate", "boolean:2"});
  auto b = run({"enumerate", "boolean:2"});
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
}

TEST_CASE("cli: dualize") {
  CHECK(ts_from_json(json::parse(run({"dualize", "chain:1", "--ts", "trivial"}).out)) ==
        complete_system(Poset::chain(1)));

  // all three methods agree on a Boolean input
  TempFile ts_file("b2.json", ts_to_json(validate(Poset::boolean_lattice(2), {{0, 1}})).dump());
  auto de = run({"dualize", "boolean:2", "--ts", ts_file.path, "--method", "de"});
  auto lifting = run({"dualize", "boolean:2", "--ts", ts_file.path, "--method", "lifting"});
  auto bbpr = run({"dualize", "boolean:2", "--ts", ts_file.path, "--method", "bbpr"});
  CHECK(de.code == 0);
  CHECK(de.out == lifting.out);
  CHECK(de.out == bbpr.out);

  // annihilator duality through the CLI
  auto ann = run({"dualize", "abelian:2,2", "--ts", "trivial", "--duality", "annihilator"});
  CHECK(ann.code == 0);
  CHECK(ts_from_json(json::parse(ann.out)).edges.count() == 7);

  CHECK(run({"dualize", "abelian:2,2", "--ts", "trivial"}).code == 2);  // no canonical duality
}

TEST_CASE("cli: wfs") {
  TempFile ts_file("wfs.json", ts_to_json(validate(Poset::chain(2), {{1, 2}})).dump());
  CliRun r = run({"wfs", "chain:2", "--ts", ts_file.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("L: {0->1 (0->1)}") != std::string::npos);
  CHECK(r.out.find("R: {1->2 (1->2)}") != std::string::npos);
  CHECK(r.out.find("wfs: yes") != std::string::npos);
}

TEST_CASE("cli: nc") {
  CHECK(run({"nc", "4", "--list"}).out.substr(0, 18) == "[[0],[1],[2],[3]]\n");
  CHECK(run({"nc", "3"}).out.find("|NC_3| = 5") != std::string::npos);

  CliRun to_ts = run({"nc", "6", "--to-ts", "[[0,1,2],[3,5],[4]]"});
  CHECK(to_ts.code == 0);
  CHECK(ts_from_json(json::parse(to_ts.out)) ==
        validate(Poset::chain(5), {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}}));

  TempFile ts_file("nc.json",
                   ts_to_json(validate(Poset::chain(5), {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}}))
                       .dump());
  CliRun from_ts = run({"nc", "6", "--from-ts", ts_file.path});
  CHECK(from_ts.code == 0);
  CHECK(partition_from_json(json::parse(from_ts.out)) ==
        make_partition(6, {{0, 1, 2}, {3, 5}, {4}}));
}

TEST_CASE("cli: slats census") {
  CliRun r = run({"slats", "grid:1x1"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 8) == "k,count\n");
  // matches the enumeration total for [1]x[1]
  long long total = 0;
  std::istringstream lines(r.out.substr(8));
  std::string line;
  while (std::getline(lines, line)) total += std::stoll(line.substr(line.find(',') + 1));
  CHECK(total == 10);
  CHECK(run({"slats", "chain:3"}).code == 2);
}

TEST_CASE("cli: verify") {
  CHECK(run({"verify", "catalan", "--max", "4"}).code == 0);
  CHECK(run({"verify", "narayana", "--max", "3"}).code == 0);
  CHECK(run({"verify", "bbpr", "--max", "2"}).code == 0);
  CHECK(run({"verify", "slats", "--max", "2"}).code == 0);
  CHECK(run({"verify", "abelian", "--max", "16"}).code == 0);
}

TEST_CASE("cli: malformed input exits 2") {
  CHECK(run({"poset", "chain:notanumber"}).code == 2);
  CHECK(run({"noexist"}).code == 2);
  CHECK(run({"dualize", "chain:2", "--ts", "missing_file.json"}).code == 2);
  CHECK(run({"nc", "0"}).code == 2);
  CHECK(run({"enumerate", "boolean:3", "--max-pairs", "3"}).code == 2);
}

TEST_CASE("cli: enumerate census flags and --out") {
  CliRun bygen = run({"enumerate", "chain:2", "--by-generators"});
  CHECK(bygen.code == 0);
  CHECK(bygen.out == "k,count\n0,1\n1,3\n2,1\n");
  CHECK(run({"enumerate", "boolean:2", "--by-generators"}).code == 2);  // not a chain

  CliRun slats = run({"enumerate", "grid:1x1", "--slats"});
  CHECK(slats.code == 0);
  CHECK(slats.out.substr(0, 8) == "k,count\n");
  CHECK(run({"enumerate", "chain:2", "--slats"}).code == 2);

  CliRun out_file = run({"enumerate", "chain:2", "--out", "transys_test_out.json"});
  CHECK(out_file.code == 0);
  {
    std::ifstream f("transys_test_out.json");
    json doc;
    f >> doc;
    CHECK(doc.at("poset") == "chain:2");
    CHECK(doc.at("systems").size() == 5);
  }
  std::remove("transys_test_out.json");
}

TEST_CASE("cli: abelian order bound flag") {
  CHECK(run({"poset", "abelian:257"}).code == 2);
  CHECK(run({"poset", "abelian:257", "--max-order", "300"}).code == 0);
}

TEST_CASE("transfer system JSON with an embedded poset object") {
  PosetPtr p = Poset::from_relation(3, {{0, 1}, {0, 2}});
  TransferSystem r = validate(p, {{0, 1}});
  json j = ts_to_json(r);
  CHECK(j.at("poset").is_object());  // no spec string for hand-built posets
  CHECK(ts_from_json(j) == r);
}

TEST_CASE("enumeration bound comes from the environment") {
  setenv("TRANSYS_MAX_PAIRS", "3", 1);
  CHECK(default_enumeration_bound() == 3);
  CHECK_THROWS_AS(enumerate_transfer_systems(Poset::chain(3)), Error);
  unsetenv("TRANSYS_MAX_PAIRS");
  CHECK(default_enumeration_bound() == 40);
  CHECK(enumerate_transfer_systems(Poset::chain(3)).size() == 14);
}

TEST_CASE("annihilator duality JSON round trip") {
  SubgroupLattice lat = subgroup_lattice(make_group({2, 2}));
  Duality d = annihilator_duality(lat);
  Duality back = duality_from_json(duality_to_json(d), nullptr);
  CHECK(back.forward == d.forward);
  CHECK(back.poset->same_order_as(*lat.poset));
}

TEST_CASE("cli: dualize with a duality file") {
  PosetPtr c3 = Poset::chain(3);
  TempFile dual_file("dual.json", duality_to_json(*canonical_duality(c3)).dump());
  CliRun r = run({"dualize", "chain:3", "--ts", "trivial", "--duality", dual_file.path});
  CHECK(r.code == 0);
  CHECK(ts_from_json(json::parse(r.out)) == complete_system(c3));
}

TEST_CASE("cli: remaining verify suites") {
  CHECK(run({"verify", "bijection", "--max", "3"}).code == 0);
  CHECK(run({"verify", "wfs"}).code == 0);
  CHECK(run({"verify", "duality"}).code == 0);
}
