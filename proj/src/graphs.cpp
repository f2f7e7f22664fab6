#include "dd/graphs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dd {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> weak_components_of(const Eigen::MatrixXi& adj) {
  const int n = static_cast<int>(adj.rows());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adj(i, j) != 0) uf.unite(i, j);
  std::vector<std::vector<int>> comps;
  std::vector<int> root_to_comp(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[root_to_comp[r]].push_back(i);
  }
  return comps;
}

}  // namespace

FusionGraph fusion_graph(const ModularData& md, const FusionData& fd, int i) {
  if (i < 0 || i >= md.rank()) throw std::out_of_range("irrep index out of range");
  FusionGraph g;
  g.irrep_index = i;
  g.adjacency = fd.full_tensor ? fd.tensor[i].dense(md.rank()) : verlinde_matrix(md, i);
  g.weak_components = weak_components_of(g.adjacency);
  g.oriented = g.adjacency != g.adjacency.transpose();
  return g;
}

EmbeddingSelection embedding_irreps(const GroupData& g, const SubgroupView& whole,
                                    const CharacterTable& t, EmbeddingTarget target) {
  EmbeddingSelection sel;
  const int l = t.irrep_count();
  // cyclic groups of SU(2) get the reducible faithful pair of linear characters
  bool abelian = static_cast<int>(g.center().size()) == g.order();
  bool cyclic = abelian && g.exponent() == g.order();
  if (target == EmbeddingTarget::SU2 && cyclic && g.order() > 1) {
    for (int s = 0; s < l; ++s) {
      if (t.degrees[s] != 1 || !is_faithful(whole, t, s)) continue;
      sel.composite = true;
      sel.composite_pair = {s, t.conjugate_row[s]};
      sel.candidates = {s, t.conjugate_row[s]};
      if (sel.candidates[0] == sel.candidates[1]) sel.candidates.pop_back();
      return sel;
    }
    return sel;
  }
  int want_dim = target == EmbeddingTarget::SU2 ? 2 : 3;
  for (int s = 0; s < l; ++s) {
    if (t.degrees[s] != want_dim) continue;
    if (!is_faithful(whole, t, s)) continue;
    if (target == EmbeddingTarget::SU2 && t.fs_indicators[s] != -1) continue;
    sel.candidates.push_back(s);
  }
  return sel;
}

ConnectivityResult connectivity_conjecture(const ModularData& md, const FusionData& fd,
                                           const EmbeddingSelection& sel) {
  ConnectivityResult res;
  const int l = md.group->class_count();
  const int r = md.rank();
  std::vector<Eigen::MatrixXi> graphs;
  if (sel.composite) {
    Eigen::MatrixXi adj =
        (fd.full_tensor ? fd.tensor[sel.composite_pair.first].dense(r)
                        : verlinde_matrix(md, sel.composite_pair.first));
    if (sel.composite_pair.second != sel.composite_pair.first)
      adj += fd.full_tensor ? fd.tensor[sel.composite_pair.second].dense(r)
                            : verlinde_matrix(md, sel.composite_pair.second);
    graphs.push_back(std::move(adj));
  } else {
    for (int s : sel.candidates)
      graphs.push_back(fd.full_tensor ? fd.tensor[s].dense(r) : verlinde_matrix(md, s));
  }
  res.conjecture_holds = !graphs.empty();
  res.components_are_blocks = !graphs.empty();
  for (const auto& adj : graphs) {
    auto comps = weak_components_of(adj);
    res.component_counts.push_back(static_cast<int>(comps.size()));
    if (static_cast<int>(comps.size()) != l) res.conjecture_holds = false;
    // each component must be exactly one class block
    for (const auto& comp : comps) {
      int c = md.irreps[comp.front()].class_index;
      bool block = static_cast<int>(comp.size()) == md.block_sizes[c];
      for (int v : comp)
        if (md.irreps[v].class_index != c) block = false;
      if (!block) res.components_are_blocks = false;
    }
  }
  return res;
}

FusionGraph embedding_graph(const ModularData& md, const FusionData& fd,
                            const EmbeddingSelection& sel) {
  const int r = md.rank();
  FusionGraph g;
  if (sel.composite) {
    g.irrep_index = sel.composite_pair.first;
    g.adjacency = fd.full_tensor ? fd.tensor[sel.composite_pair.first].dense(r)
                                 : verlinde_matrix(md, sel.composite_pair.first);
    if (sel.composite_pair.second != sel.composite_pair.first)
      g.adjacency += fd.full_tensor ? fd.tensor[sel.composite_pair.second].dense(r)
                                    : verlinde_matrix(md, sel.composite_pair.second);
    g.weak_components = weak_components_of(g.adjacency);
    g.oriented = g.adjacency != g.adjacency.transpose();
    return g;
  }
  if (sel.candidates.empty()) throw std::logic_error("no embedding irrep");
  return fusion_graph(md, fd, sel.candidates.front());
}

Eigen::MatrixXi affine_diagram(char family, int n) {
  auto from_edges = [](int verts, std::initializer_list<std::pair<int, int>> edges,
                       int multiplicity = 1) {
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(verts, verts);
    for (auto [a, b] : edges) {
      m(a, b) += multiplicity;
      m(b, a) += multiplicity;
    }
    return m;
  };
  if (family == 'A') {
    // cycle on n+1 vertices; A_1^(1) degenerates to a double bond
    int v = n + 1;
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(v, v);
    if (n == 1) {
      m(0, 1) = m(1, 0) = 2;
      return m;
    }
    for (int i = 0; i < v; ++i) {
      m(i, (i + 1) % v) += 1;
      m((i + 1) % v, i) += 1;
    }
    return m;
  }
  if (family == 'D') {
    if (n < 4) throw std::invalid_argument("affine D needs n >= 4");
    int v = n + 1;
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(v, v);
    auto link = [&](int a, int b) { m(a, b) += 1; m(b, a) += 1; };
    link(0, 2);
    link(1, 2);
    for (int i = 2; i < n - 2; ++i) link(i, i + 1);
    link(n - 2, n - 1);
    link(n - 2, n);
    return m;
  }
  if (family == 'E') {
    if (n == 6)
      return from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
    if (n == 7)
      return from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
    if (n == 8)
      return from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}});
  }
  throw std::invalid_argument("unknown affine diagram");
}

bool graphs_isomorphic(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  const int n = static_cast<int>(a.rows());
  if (b.rows() != n) return false;
  // degree multiset pruning
  auto degrees = [](const Eigen::MatrixXi& m) {
    std::vector<int> d;
    for (int i = 0; i < m.rows(); ++i) d.push_back(m.row(i).sum());
    return d;
  };
  auto da = degrees(a), db = degrees(b);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w] || a(v, v) != b(w, w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (a(v, u) != b(w, map[u]) || a(u, v) != b(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (place(v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return place(0);
}

std::string mckay_check(const ModularData& md, const FusionData& fd,
                        const EmbeddingSelection& sel) {
  const int l = md.group->class_count();
  const int r = md.rank();
  Eigen::MatrixXi adj;
  if (sel.composite) {
    adj = fd.full_tensor ? fd.tensor[sel.composite_pair.first].dense(r)
                         : verlinde_matrix(md, sel.composite_pair.first);
    if (sel.composite_pair.second != sel.composite_pair.first)
      adj += fd.full_tensor ? fd.tensor[sel.composite_pair.second].dense(r)
                            : verlinde_matrix(md, sel.composite_pair.second);
  } else if (!sel.candidates.empty()) {
    adj = fd.full_tensor ? fd.tensor[sel.candidates[0]].dense(r)
                         : verlinde_matrix(md, sel.candidates[0]);
  } else {
    throw std::logic_error("McKay failure");
  }
  Eigen::MatrixXi classical = adj.topLeftCorner(l, l);
  // candidates with the right vertex count
  std::vector<std::pair<std::string, Eigen::MatrixXi>> diagrams;
  if (l >= 2) diagrams.emplace_back("A" + std::to_string(l - 1) + "(1)", affine_diagram('A', l - 1));
  if (l >= 5) diagrams.emplace_back("D" + std::to_string(l - 1) + "(1)", affine_diagram('D', l - 1));
  if (l == 7) diagrams.emplace_back("E6(1)", affine_diagram('E', 6));
  if (l == 8) diagrams.emplace_back("E7(1)", affine_diagram('E', 7));
  if (l == 9) diagrams.emplace_back("E8(1)", affine_diagram('E', 8));
  for (const auto& [name, diag] : diagrams)
    if (graphs_isomorphic(classical, diag)) return name;
  throw std::logic_error("McKay failure");
}

std::string dot_export(const FusionGraph& graph, const ModularData& md) {
  std::ostringstream os;
  const int r = static_cast<int>(graph.adjacency.rows());
  const bool digraph = graph.oriented;
  os << (digraph ? "digraph" : "graph") << " fusion_N" << (graph.irrep_index + 1) << " {\n";
  for (int v = 0; v < r; ++v)
    os << "  v" << v << " [label=\"" << md.irrep_label(v) << "\"];\n";
  const char* arrow = digraph ? " -> " : " -- ";
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      if (!digraph && k < j) continue;  // undirected edges once
      for (int m = 0; m < graph.adjacency(j, k); ++m)
        os << "  v" << j << arrow << "v" << k << ";\n";
    }
  os << "}\n";
  return os.str();
}

Eigen::MatrixXi dot_parse_adjacency(const std::string& dot, int rank) {
  Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(rank, rank);
  bool digraph = dot.find("digraph") != std::string::npos;
  std::istringstream is(dot);
  std::string line;
  while (std::getline(is, line)) {
    auto arrow = line.find(digraph ? "->" : "--");
    if (arrow == std::string::npos) continue;
    auto v1pos = line.find('v');
    int a = std::stoi(line.substr(v1pos + 1));
    auto v2pos = line.find('v', arrow);
    int b = std::stoi(line.substr(v2pos + 1));
    adj(a, b) += 1;
    if (!digraph && a != b) adj(b, a) += 1;
  }
  return adj;
}

}  // namespace dd
