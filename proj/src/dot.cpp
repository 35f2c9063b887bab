#include "transys/dot.hpp"

#include <map>
#include <sstream>

namespace transys {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit_nodes(std::ostringstream& os, const Poset& p) {
  for (int v = 0; v < p.size(); ++v)
    os << "  v" << v << " [label=" << quoted(p.label(v)) << "];\n";
  std::map<int, std::vector<int>> by_rank;
  std::vector<int> rank = p.ranks();
  for (int v = 0; v < p.size(); ++v) by_rank[rank[v]].push_back(v);
  for (const auto& [r, vs] : by_rank) {
    os << "  { rank=same;";
    for (int v : vs) os << " v" << v << ";";
    os << " }\n";
  }
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n";
  emit_nodes(os, p);
  for (auto [a, b] : p.cover_pairs()) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string ts_to_dot(const TransferSystem& r) {
  std::ostringstream os;
  os << "digraph transfer_system {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  emit_nodes(os, *r.poset);
  for (auto [a, b] : r.edge_list()) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace transys
