#include "transys/json_io.hpp"

#include <algorithm>

namespace transys {

using nlohmann::json;

namespace {

long long parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw Error("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error("cannot parse " + what + " from '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

PosetPtr parse_poset_spec(const std::string& spec, int max_order) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw Error("poset spec '" + spec + "' has no ':'");
  std::string kind = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  if (kind == "chain") return Poset::chain(static_cast<int>(parse_count(arg, "chain length")));
  if (kind == "boolean")
    return Poset::boolean_lattice(static_cast<int>(parse_count(arg, "dimension")));
  if (kind == "divisors") return Poset::divisor_lattice(parse_count(arg, "divisor argument"));
  if (kind == "grid") {
    auto parts = split(arg, 'x');
    if (parts.empty()) throw Error("grid spec needs at least one factor");
    PosetPtr p = Poset::chain(static_cast<int>(parse_count(parts[0], "grid factor")));
    for (std::size_t i = 1; i < parts.size(); ++i)
      p = Poset::product(p, Poset::chain(static_cast<int>(parse_count(parts[i], "grid factor"))));
    return p;
  }
  if (kind == "abelian") {
    std::vector<int> factors;
    for (const auto& part : split(arg, ','))
      factors.push_back(static_cast<int>(parse_count(part, "cyclic factor")));
    return subgroup_lattice(make_group(factors), max_order).poset;
  }
  if (kind == "op") return Poset::opposite(parse_poset_spec(arg, max_order));
  throw Error("unknown poset spec kind '" + kind + "'");
}

std::string poset_spec_string(const Poset& p) {
  const Provenance& prov = p.provenance();
  switch (prov.kind) {
    case Provenance::Kind::Chain:
      return "chain:" + std::to_string(prov.n);
    case Provenance::Kind::Boolean:
      return "boolean:" + std::to_string(prov.n);
    case Provenance::Kind::Divisors:
      return "divisors:" + std::to_string(prov.n);
    case Provenance::Kind::Product: {
      // flatten nested chain products into grid:AxB[xC...]
      std::string right;
      if (prov.factor_b->provenance().kind == Provenance::Kind::Chain)
        right = std::to_string(prov.factor_b->provenance().n);
      else
        return "";
      std::string left = poset_spec_string(*prov.factor_a);
      if (left.rfind("chain:", 0) == 0) return "grid:" + left.substr(6) + "x" + right;
      if (left.rfind("grid:", 0) == 0) return left + "x" + right;
      return "";
    }
    case Provenance::Kind::Opposite: {
      std::string inner = poset_spec_string(*prov.inner);
      return inner.empty() ? "" : "op:" + inner;
    }
    case Provenance::Kind::SubgroupLattice: {
      std::string s = "abelian:";
      for (std::size_t i = 0; i < prov.group_factors.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(prov.group_factors[i]);
      }
      return s;
    }
    default:
      return "";
  }
}

json poset_to_json(const Poset& p) {
  json leq = json::array();
  for (auto [a, b] : p.pairs()) leq.push_back({a, b});
  return json{{"size", p.size()}, {"labels", p.labels()}, {"leq", leq}};
}

PosetPtr poset_from_json(const json& j) {
  if (j.is_string()) return parse_poset_spec(j.get<std::string>());
  if (!j.is_object() || !j.contains("size") || !j.contains("leq"))
    throw Error("poset JSON needs 'size' and 'leq'");
  int size = j.at("size").get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j.at("leq")) {
    if (!e.is_array() || e.size() != 2) throw Error("'leq' entries must be pairs");
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Poset::from_relation(size, pairs, std::move(labels));
}

json ts_to_json(const TransferSystem& r) {
  std::string spec = poset_spec_string(*r.poset);
  json edges = json::array();
  for (auto [a, b] : r.edge_list()) edges.push_back({a, b});
  json poset = spec.empty() ? poset_to_json(*r.poset) : json(spec);
  return json{{"poset", poset}, {"edges", edges}};
}

TransferSystem ts_from_json(const json& j) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("edges"))
    throw Error("transfer system JSON needs 'poset' and 'edges'");
  PosetPtr p = poset_from_json(j.at("poset"));
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("'edges' entries must be pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return validate(std::move(p), edges);
}

json partition_to_json(const SetPartition& pi) {
  return json{{"n", pi.ground_size - 1}, {"blocks", pi.blocks}};
}

SetPartition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
    throw Error("partition JSON needs 'n' and 'blocks'");
  return make_partition(j.at("n").get<int>() + 1,
                        j.at("blocks").get<std::vector<std::vector<int>>>());
}

json duality_to_json(const Duality& d) {
  std::string spec = poset_spec_string(*d.poset);
  json poset = spec.empty() ? poset_to_json(*d.poset) : json(spec);
  return json{{"poset", poset}, {"forward", d.forward}};
}

Duality duality_from_json(const json& j, PosetPtr fallback_poset) {
  if (!j.is_object() || !j.contains("forward")) throw Error("duality JSON needs 'forward'");
  PosetPtr p = j.contains("poset") ? poset_from_json(j.at("poset")) : std::move(fallback_poset);
  if (!p) throw Error("duality JSON needs a poset");
  return make_duality(std::move(p), j.at("forward").get<std::vector<int>>());
}

}  // namespace transys
