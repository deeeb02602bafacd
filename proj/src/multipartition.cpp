#include "cybmw/multipartition.hpp"

#include <algorithm>

namespace cybmw {

bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Multipartition::Multipartition(std::vector<Partition> parts) : comp(std::move(parts)) {
  if (comp.empty()) throw Error(Code::InvalidArgument, "multipartition needs at least one component");
  for (const auto& p : comp)
    if (!is_valid_partition(p))
      throw Error(Code::InvalidArgument, "component rows must be weakly decreasing and positive");
}

long Multipartition::size() const {
  long total = 0;
  for (const auto& p : comp)
    for (int row : p) total += row;
  return total;
}

namespace {

// Reverse-lexicographic comparison of partitions: larger rows first, missing
// rows count as zero.  Returns <0, 0, >0 like a three-way compare where
// "smaller" means "earlier in the canonical order".
int part_cmp(const Partition& a, const Partition& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int ai = i < a.size() ? a[i] : 0;
    int bi = i < b.size() ? b[i] : 0;
    if (ai != bi) return ai > bi ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool Multipartition::operator<(const Multipartition& o) const {
  if (comp.size() != o.comp.size())
    throw Error(Code::ParameterMismatch, "comparing multipartitions with different ranks");
  if (size() != o.size()) return size() < o.size();
  for (size_t j = 0; j < comp.size(); ++j) {
    int c = part_cmp(comp[j], o.comp[j]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Multipartition::str() const {
  std::string out = "[";
  for (size_t j = 0; j < comp.size(); ++j) {
    if (j) out += ",";
    out += "[";
    for (size_t i = 0; i < comp[j].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(comp[j][i]);
    }
    out += "]";
  }
  return out + "]";
}

std::vector<Node> addable_nodes(const Multipartition& lam) {
  std::vector<Node> out;
  for (int j = 1; j <= lam.r(); ++j) {
    const Partition& p = lam.comp[static_cast<size_t>(j - 1)];
    for (int x = 1; x <= static_cast<int>(p.size()) + 1; ++x) {
      int len = x <= static_cast<int>(p.size()) ? p[static_cast<size_t>(x - 1)] : 0;
      int above = x == 1 ? 1 << 30 : p[static_cast<size_t>(x - 2)];
      if (len < above) out.push_back(Node{j, x, len + 1});
    }
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& lam) {
  std::vector<Node> out;
  for (int j = 1; j <= lam.r(); ++j) {
    const Partition& p = lam.comp[static_cast<size_t>(j - 1)];
    for (int x = 1; x <= static_cast<int>(p.size()); ++x) {
      int len = p[static_cast<size_t>(x - 1)];
      int below = x < static_cast<int>(p.size()) ? p[static_cast<size_t>(x)] : 0;
      if (len > below) out.push_back(Node{j, x, len});
    }
  }
  return out;
}

Multipartition add_node(const Multipartition& lam, const Node& n) {
  auto nodes = addable_nodes(lam);
  if (std::find(nodes.begin(), nodes.end(), n) == nodes.end())
    throw Error(Code::NodeNotIncident, "node " + n.str() + " is not addable for " + lam.str());
  Multipartition out = lam;
  Partition& p = out.comp[static_cast<size_t>(n.j - 1)];
  if (n.x == static_cast<int>(p.size()) + 1)
    p.push_back(1);
  else
    ++p[static_cast<size_t>(n.x - 1)];
  return out;
}

Multipartition remove_node(const Multipartition& lam, const Node& n) {
  auto nodes = removable_nodes(lam);
  if (std::find(nodes.begin(), nodes.end(), n) == nodes.end())
    throw Error(Code::NodeNotIncident, "node " + n.str() + " is not removable for " + lam.str());
  Multipartition out = lam;
  Partition& p = out.comp[static_cast<size_t>(n.j - 1)];
  if (--p[static_cast<size_t>(n.x - 1)] == 0) p.pop_back();
  return out;
}

bool differ_by_one_node(const Multipartition& a, const Multipartition& b) {
  if (a.r() != b.r()) return false;
  long diff = a.size() - b.size();
  if (diff != 1 && diff != -1) return false;
  const Multipartition& big = diff > 0 ? a : b;
  const Multipartition& small = diff > 0 ? b : a;
  for (const Node& n : removable_nodes(big))
    if (remove_node(big, n) == small) return true;
  return false;
}

Node connecting_node(const Multipartition& from, const Multipartition& to) {
  if (from.r() == to.r()) {
    if (to.size() == from.size() + 1) {
      for (const Node& n : addable_nodes(from))
        if (add_node(from, n) == to) return n;
    } else if (to.size() + 1 == from.size()) {
      for (const Node& n : removable_nodes(from))
        if (remove_node(from, n) == to) return n;
    }
  }
  throw Error(Code::NodeNotIncident,
              "shapes " + from.str() + " and " + to.str() + " are not joined by one node");
}

UpDownTableau::UpDownTableau(std::vector<Multipartition> s) : shapes(std::move(s)) {
  if (shapes.empty()) throw Error(Code::InvalidArgument, "tableau needs at least the empty shape");
  if (!shapes.front().empty())
    throw Error(Code::ShapeInconsistency, "tableau must start at the empty multipartition");
  for (size_t k = 1; k < shapes.size(); ++k)
    if (!differ_by_one_node(shapes[k - 1], shapes[k]))
      throw Error(Code::ShapeInconsistency,
                  "consecutive tableau shapes must differ by exactly one node");
}

std::pair<Node, int> UpDownTableau::step(int k) const {
  if (k < 1 || k > length()) throw Error(Code::IndexOutOfRange, "tableau step out of range");
  const Multipartition& prev = shapes[static_cast<size_t>(k - 1)];
  const Multipartition& next = shapes[static_cast<size_t>(k)];
  bool added = next.size() > prev.size();
  const Multipartition& big = added ? next : prev;
  const Multipartition& small = added ? prev : next;
  for (const Node& n : removable_nodes(big))
    if (remove_node(big, n) == small) return {n, added ? 1 : -1};
  throw Error(Code::ShapeInconsistency, "tableau steps do not differ by one node");
}

bool UpDownTableau::operator<(const UpDownTableau& o) const {
  return std::lexicographical_compare(shapes.begin(), shapes.end(), o.shapes.begin(),
                                      o.shapes.end());
}

std::string UpDownTableau::str() const {
  std::string out = "[";
  for (size_t k = 0; k < shapes.size(); ++k) {
    if (k) out += ",";
    out += shapes[k].str();
  }
  return out + "]";
}

BranchingGraph branching_graph(int n, int r) {
  if (n < 0 || r < 1) throw Error(Code::InvalidArgument, "branching graph needs n >= 0, r >= 1");
  BranchingGraph g;
  g.levels.push_back({Multipartition(r)});
  for (int m = 0; m < n; ++m) {
    // Collect every neighbor of the current level, dedupe, and sort into the
    // canonical order.
    std::vector<Multipartition> next;
    for (const Multipartition& lam : g.levels.back()) {
      for (const Node& a : addable_nodes(lam)) next.push_back(add_node(lam, a));
      for (const Node& rm : removable_nodes(lam)) next.push_back(remove_node(lam, rm));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    std::vector<std::pair<int, int>> level_edges;
    const auto& cur = g.levels.back();
    for (int i = 0; i < static_cast<int>(cur.size()); ++i)
      for (int k = 0; k < static_cast<int>(next.size()); ++k)
        if (differ_by_one_node(cur[static_cast<size_t>(i)], next[static_cast<size_t>(k)]))
          level_edges.emplace_back(i, k);
    g.levels.push_back(std::move(next));
    g.edges.push_back(std::move(level_edges));
  }
  return g;
}

std::vector<Multipartition> gamma_level(int n, int r) { return branching_graph(n, r).levels.back(); }

namespace {

void tableau_dfs(std::vector<Multipartition>& path, int depth,
                 std::vector<UpDownTableau>& out) {
  if (depth == 0) {
    out.push_back(UpDownTableau(path));
    return;
  }
  const Multipartition lam = path.back();
  for (const Node& a : addable_nodes(lam)) {
    path.push_back(add_node(lam, a));
    tableau_dfs(path, depth - 1, out);
    path.pop_back();
  }
  for (const Node& rm : removable_nodes(lam)) {
    path.push_back(remove_node(lam, rm));
    tableau_dfs(path, depth - 1, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<UpDownTableau> enumerate_tableaux(int n, int r) {
  if (n < 0 || r < 1) throw Error(Code::InvalidArgument, "enumeration needs n >= 0, r >= 1");
  std::vector<Multipartition> path = {Multipartition(r)};
  std::vector<UpDownTableau> out;
  tableau_dfs(path, n, out);
  return out;
}

std::vector<UpDownTableau> enumerate_tableaux(int n, const Multipartition& lam) {
  std::vector<UpDownTableau> out;
  for (auto& t : enumerate_tableaux(n, lam.r()))
    if (t.shape() == lam) out.push_back(std::move(t));
  return out;
}

std::map<Multipartition, Int> count_tableaux_level(int n, int r) {
  BranchingGraph g = branching_graph(n, r);
  std::vector<Int> cur = {Int(1)};
  for (int m = 0; m < n; ++m) {
    std::vector<Int> next(g.levels[static_cast<size_t>(m + 1)].size(), Int(0));
    for (const auto& [i, k] : g.edges[static_cast<size_t>(m)])
      next[static_cast<size_t>(k)] += cur[static_cast<size_t>(i)];
    cur = std::move(next);
  }
  std::map<Multipartition, Int> out;
  const auto& top = g.levels.back();
  for (size_t i = 0; i < top.size(); ++i) out.emplace(top[i], cur[i]);
  return out;
}

Int count_tableaux(int n, const Multipartition& lam) {
  auto counts = count_tableaux_level(n, lam.r());
  auto it = counts.find(lam);
  if (it == counts.end())
    throw Error(Code::ShapeNotInLevel,
                "shape " + lam.str() + " is not in level " + std::to_string(n));
  return it->second;
}

std::pair<Int, Int> dimension_identity(int n, int r) {
  Int lhs = 0;
  for (const auto& [lam, c] : count_tableaux_level(n, r)) lhs += c * c;
  Int rhs = 1;
  for (int k = 0; k < n; ++k) rhs *= r;
  for (int k = 1; k <= n; ++k) rhs *= 2 * k - 1;
  return {lhs, rhs};
}

std::string ascii_diagram(const Multipartition& lam) {
  std::string out;
  for (int j = 1; j <= lam.r(); ++j) {
    out += "c" + std::to_string(j) + ":";
    const Partition& p = lam.comp[static_cast<size_t>(j - 1)];
    if (p.empty()) {
      out += " (empty)\n";
      continue;
    }
    out += "\n";
    for (int row : p) {
      out += "  ";
      for (int i = 0; i < row; ++i) out += "#";
      out += "\n";
    }
  }
  return out;
}

}  // namespace cybmw
