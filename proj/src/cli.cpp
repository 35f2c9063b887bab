#include "transys/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "transys/dot.hpp"
#include "transys/duality.hpp"
#include "transys/group_lattice.hpp"
#include "transys/json_io.hpp"
#include "transys/noncrossing.hpp"
#include "transys/verify.hpp"
#include "transys/wfs.hpp"

namespace transys {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("cannot parse JSON from '" + path + "': " + e.what());
  }
  return j;
}

// --ts accepts the built-in names alongside a JSON file.
TransferSystem load_transfer_system(const std::string& what, const PosetPtr& p) {
  if (what == "trivial") return trivial_system(p);
  if (what == "complete") return complete_system(p);
  json j = read_json_file(what);
  if (j.contains("poset")) {
    PosetPtr file_poset = poset_from_json(j.at("poset"));
    if (!file_poset->same_order_as(*p))
      throw Error("transfer system in '" + what + "' lives on a different poset");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  return validate(p, edges);
}

Duality load_duality(const std::string& what, const PosetPtr& p) {
  if (what == "canonical") {
    auto d = canonical_duality(p);
    if (!d)
      throw Error("this poset has no canonical duality; use --duality annihilator or a file");
    return *d;
  }
  if (what == "annihilator") return annihilator_duality(p);
  return duality_from_json(read_json_file(what), p);
}

std::string edge_set_text(const Poset& p, const Bitset& pairs) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  pairs.for_each([&](int k) {
    auto [a, b] = p.pair_at(k);
    os << (first ? "" : ", ") << a << "->" << b << " (" << p.label(a) << "->" << p.label(b)
       << ")";
    first = false;
  });
  os << "}";
  return os.str();
}

void print_slat_census(std::ostream& out, const std::map<int, long long>& census) {
  out << "k,count\n";
  for (const auto& [k, count] : census) out << k << "," << count << "\n";
}

int run_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  bool all_pass = true;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.seconds << "s): " << c.detail
        << "\n";
    for (const auto& f : c.failures) out << "  counterexample: " << f << "\n";
    all_pass = all_pass && c.pass;
  }
  if (!all_pass) {
    json report = json::array();
    for (const auto& c : checks)
      report.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"failures", c.failures}});
    out << json{{"pass", false}, {"checks", report}}.dump() << "\n";
    return 1;
  }
  return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"transfer systems on finite posets: enumeration, weak factorization "
               "systems, self-duality, noncrossing partitions"};
  app.require_subcommand(1);

  // poset
  auto* cmd_poset = app.add_subcommand("poset", "construct a poset and print it");
  std::string poset_spec;
  bool as_dot = false, as_json = false;
  cmd_poset->add_option("spec", poset_spec, "poset spec, e.g. chain:3 or grid:2x1")->required();
  cmd_poset->add_flag("--dot", as_dot, "emit the Hasse diagram as DOT");
  cmd_poset->add_flag("--json", as_json, "emit the poset as JSON");
  int poset_max_order = 256;
  cmd_poset->add_option("--max-order", poset_max_order, "bound on abelian group order");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "enumerate all transfer systems");
  std::string enum_spec, enum_out;
  bool enum_count = false, enum_slats = false, enum_bygen = false;
  int max_pairs = -1;
  cmd_enum->add_option("spec", enum_spec, "poset spec")->required();
  cmd_enum->add_flag("--count", enum_count, "print only the number of systems");
  cmd_enum->add_flag("--slats", enum_slats, "print the top-slat census (grids [n]x[1])");
  cmd_enum->add_flag("--by-generators", enum_bygen,
                     "print the census by minimal generating number (chains)");
  cmd_enum->add_option("--out", enum_out, "write all systems to a JSON file");
  cmd_enum->add_option("--max-pairs", max_pairs, "override the enumeration bound");
  int enum_max_order = 256;
  cmd_enum->add_option("--max-order", enum_max_order, "bound on abelian group order");

  // dualize
  auto* cmd_dual = app.add_subcommand("dualize", "apply the self-duality to a transfer system");
  std::string dual_spec, dual_ts, dual_method = "de", dual_duality = "canonical";
  cmd_dual->add_option("spec", dual_spec, "poset spec")->required();
  cmd_dual->add_option("--ts", dual_ts, "transfer system: JSON file, 'trivial' or 'complete'")
      ->required();
  cmd_dual->add_option("--method", dual_method, "de | lifting | bbpr")
      ->check(CLI::IsMember({"de", "lifting", "bbpr"}));
  cmd_dual->add_option("--duality", dual_duality, "canonical | annihilator | duality JSON file");
  int dual_max_order = 256;
  cmd_dual->add_option("--max-order", dual_max_order, "bound on abelian group order");

  // wfs
  auto* cmd_wfs = app.add_subcommand("wfs", "print the weak factorization system of a transfer system");
  std::string wfs_spec, wfs_ts;
  cmd_wfs->add_option("spec", wfs_spec, "poset spec")->required();
  cmd_wfs->add_option("--ts", wfs_ts, "transfer system: JSON file, 'trivial' or 'complete'")
      ->required();
  int wfs_max_order = 256;
  cmd_wfs->add_option("--max-order", wfs_max_order, "bound on abelian group order");

  // nc
  auto* cmd_nc = app.add_subcommand("nc", "noncrossing partitions of {0..N-1}");
  int nc_ground = 0;
  bool nc_list = false;
  std::string nc_to_ts, nc_from_ts;
  cmd_nc->add_option("N", nc_ground, "ground set size")->required();
  cmd_nc->add_flag("--list", nc_list, "list every noncrossing partition");
  cmd_nc->add_option("--to-ts", nc_to_ts, "blocks as JSON, e.g. [[0,1,2],[3,5],[4]]");
  cmd_nc->add_option("--from-ts", nc_from_ts, "transfer system JSON file to map back");

  // slats
  auto* cmd_slats = app.add_subcommand("slats", "top-slat census of Trans([n]x[1]) as CSV");
  std::string slats_spec;
  int slats_max_pairs = -1;
  cmd_slats->add_option("spec", slats_spec, "grid spec grid:Nx1")->required();
  cmd_slats->add_option("--max-pairs", slats_max_pairs, "override the enumeration bound");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a reproducibility suite");
  std::string suite;
  int verify_max = -1;
  cmd_verify
      ->add_option("suite", suite,
                   "catalan | narayana | bijection | wfs | duality | bbpr | slats | abelian")
      ->required()
      ->check(CLI::IsMember(
          {"catalan", "narayana", "bijection", "wfs", "duality", "bbpr", "slats", "abelian"}));
  cmd_verify->add_option("--max", verify_max, "largest size to test, where applicable");

  std::vector<const char*> argv;
  argv.push_back("transys");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    throw Error(e.what());
  }

  if (*cmd_poset) {
    PosetPtr p = parse_poset_spec(poset_spec, poset_max_order);
    if (as_dot && as_json) throw Error("choose one of --dot and --json");
    if (as_dot) {
      out << poset_to_dot(*p);
    } else if (as_json) {
      out << poset_to_json(*p).dump(2) << "\n";
    } else {
      out << poset_spec << ": " << p->size() << " elements, " << p->pair_count()
          << " strict pairs, " << p->cover_pairs().size() << " cover edges, "
          << (is_lattice(*p) ? "lattice" : "not a lattice") << "\n";
    }
    return 0;
  }

  if (*cmd_enum) {
    PosetPtr p = parse_poset_spec(enum_spec, enum_max_order);
    if (enum_count) {
      long long count = 0;
      for_each_transfer_system(p, [&](const Bitset&) { ++count; }, max_pairs);
      out << count << "\n";
      return 0;
    }
    if (enum_slats) {
      const Provenance& prov = p->provenance();
      if (prov.kind != Provenance::Kind::Product ||
          prov.factor_a->provenance().kind != Provenance::Kind::Chain ||
          prov.factor_b->provenance().kind != Provenance::Kind::Chain ||
          prov.factor_b->provenance().n != 1)
        throw Error("--slats requires a grid:Nx1 poset");
      print_slat_census(out,
                        slat_census(static_cast<int>(prov.factor_a->provenance().n), max_pairs));
      return 0;
    }
    if (enum_bygen) {
      if (!is_chain(*p)) throw Error("--by-generators requires a chain");
      std::map<int, long long> census;
      for_each_transfer_system(
          p, [&](const Bitset& edges) { ++census[min_generating_number({p, edges})]; },
          max_pairs);
      out << "k,count\n";
      for (const auto& [k, count] : census) out << k << "," << count << "\n";
      return 0;
    }
    if (!enum_out.empty()) {
      json systems = json::array();
      for_each_transfer_system(
          p,
          [&](const Bitset& edges) {
            json sys = json::array();
            edges.for_each([&](int k) {
              auto [a, b] = p->pair_at(k);
              sys.push_back({a, b});
            });
            systems.push_back(std::move(sys));
          },
          max_pairs);
      std::string spec = poset_spec_string(*p);
      json doc{{"poset", spec.empty() ? poset_to_json(*p) : json(spec)},
               {"systems", systems}};
      std::ofstream f(enum_out);
      if (!f) throw Error("cannot write '" + enum_out + "'");
      f << doc.dump(2) << "\n";
      out << systems.size() << " systems written to " << enum_out << "\n";
      return 0;
    }
    for_each_transfer_system(
        p,
        [&](const Bitset& edges) {
          json sys = json::array();
          edges.for_each([&](int k) {
            auto [a, b] = p->pair_at(k);
            sys.push_back({a, b});
          });
          out << sys.dump() << "\n";
        },
        max_pairs);
    return 0;
  }

  if (*cmd_dual) {
    PosetPtr p = parse_poset_spec(dual_spec, dual_max_order);
    TransferSystem r = load_transfer_system(dual_ts, p);
    TransferSystem image = [&] {
      if (dual_method == "bbpr") return bbpr_phi(r);
      Duality d = load_duality(dual_duality, p);
      return phi(d, r,
                 dual_method == "lifting" ? PhiMethod::Lifting : PhiMethod::DownwardExtension);
    }();
    out << ts_to_json(image).dump() << "\n";
    return 0;
  }

  if (*cmd_wfs) {
    PosetPtr p = parse_poset_spec(wfs_spec, wfs_max_order);
    TransferSystem r = load_transfer_system(wfs_ts, p);
    MorphismClass left = left_class(r);
    out << "L: " << edge_set_text(*p, left.pairs) << "\n";
    out << "R: " << edge_set_text(*p, r.edges) << "\n";
    bool verdict = is_wfs(left, class_of(r));
    out << "wfs: " << (verdict ? "yes" : "no") << "\n";
    return verdict ? 0 : 1;
  }

  if (*cmd_nc) {
    if (nc_ground < 1) throw Error("N must be at least 1");
    if (!nc_to_ts.empty()) {
      json blocks = json::parse(nc_to_ts, nullptr, false);
      if (blocks.is_discarded()) throw Error("--to-ts expects JSON blocks");
      SetPartition pi = make_partition(nc_ground, blocks.get<std::vector<std::vector<int>>>());
      out << ts_to_json(chi(pi)).dump() << "\n";
      return 0;
    }
    if (!nc_from_ts.empty()) {
      PosetPtr chain = Poset::chain(nc_ground - 1);
      TransferSystem r = load_transfer_system(nc_from_ts, chain);
      out << partition_to_json(psi(r)).dump() << "\n";
      return 0;
    }
    auto partitions = enumerate_noncrossing(nc_ground);
    if (nc_list) {
      for (const auto& pi : partitions) out << json(pi.blocks).dump() << "\n";
      return 0;
    }
    out << "|NC_" << nc_ground << "| = " << partitions.size() << "\n";
    std::map<int, long long> by_rank;
    for (const auto& pi : partitions) ++by_rank[nc_rank(pi)];
    out << "rank,count,narayana\n";
    for (const auto& [rank, count] : by_rank)
      out << rank << "," << count << "," << narayana(nc_ground, rank + 1) << "\n";
    return 0;
  }

  if (*cmd_slats) {
    PosetPtr p = parse_poset_spec(slats_spec);
    const Provenance& prov = p->provenance();
    if (prov.kind != Provenance::Kind::Product ||
        prov.factor_a->provenance().kind != Provenance::Kind::Chain ||
        prov.factor_b->provenance().kind != Provenance::Kind::Chain ||
        prov.factor_b->provenance().n != 1)
      throw Error("slats requires a grid:Nx1 poset");
    print_slat_census(
        out, slat_census(static_cast<int>(prov.factor_a->provenance().n), slats_max_pairs));
    return 0;
  }

  if (*cmd_verify) {
    std::vector<CheckResult> checks;
    int m = verify_max;
    if (suite == "catalan") {
      checks.push_back(verify_catalan(m > 0 ? m : 7));
      checks.push_back(verify_oracle());
    } else if (suite == "narayana") {
      checks.push_back(verify_narayana(m > 0 ? m : 6));
    } else if (suite == "bijection") {
      checks.push_back(verify_bijection(m > 0 ? m : 6));
    } else if (suite == "wfs") {
      checks.push_back(verify_wfs());
      checks.push_back(verify_factorization());
    } else if (suite == "duality") {
      checks.push_back(verify_duality());
    } else if (suite == "bbpr") {
      checks.push_back(verify_bbpr(m > 0 ? m : 3));
    } else if (suite == "slats") {
      checks.push_back(verify_slats(m > 0 ? m : 5));
    } else if (suite == "abelian") {
      checks.push_back(verify_abelian(m > 0 ? m : 64));
    }
    return run_checks(checks, out);
  }

  throw Error("no subcommand selected");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace transys
