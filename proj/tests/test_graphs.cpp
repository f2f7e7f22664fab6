#include <doctest.h>

#include "dd/graphs.hpp"
#include "dd/report.hpp"

using namespace dd;

TEST_CASE("N_1 gives isolated self-loops") {
  auto gc = compute_group("Z6");
  auto graph = fusion_graph(gc.md, gc.fd, 0);
  CHECK(graph.weak_components.size() == 36);
  CHECK(!graph.oriented);
  for (int v = 0; v < 36; ++v) CHECK(graph.adjacency(v, v) == 1);
}

TEST_CASE("embedding selection") {
  auto s168z3 = compute_group("Sigma168xZ3");
  CHECK(s168z3.embedding.candidates.size() == 4);  // the faithful pairs only
  CHECK(!s168z3.embedding.composite);

  auto octa = compute_group("binary_octahedral");
  CHECK(octa.embedding.candidates.size() == 2);  // both quaternionic faithful 2-dims
  for (int s : octa.embedding.candidates) {
    CHECK(octa.table.degrees[s] == 2);
    CHECK(octa.table.fs_indicators[s] == -1);
  }
  // one 2-dim irrep is real and not faithful, hence excluded
  int twodim = 0;
  for (int d : octa.table.degrees) twodim += (d == 2);
  CHECK(twodim == 3);

  auto z6 = compute_group("Z6");
  CHECK(z6.embedding.composite);
  CHECK(z6.embedding.composite_pair.first !=
        z6.embedding.composite_pair.second);
}

TEST_CASE("connectivity conjecture on small groups") {
  auto d3 = compute_group("Dhat3");
  for (int c : d3.report.embedding_component_counts) CHECK(c == 6);
  CHECK(d3.report.connectivity_holds);
  CHECK(d3.report.components_are_blocks);

  auto tr = compute_group("trivial");
  CHECK(tr.report.rank == 1);  // no embedding check for the trivial group

  auto s168 = compute_group("Sigma168");
  CHECK(s168.report.connectivity_holds);
  for (int c : s168.report.embedding_component_counts) CHECK(c == 6);
}

TEST_CASE("McKay labels for the SU(2) chain") {
  CHECK(compute_group("Z6").report.mckay == "A5(1)");
  CHECK(compute_group("Dhat2").report.mckay == "D4(1)");
  CHECK(compute_group("binary_tetrahedral").report.mckay == "E6(1)");
  CHECK(compute_group("binary_icosahedral").report.mckay == "E8(1)");
}

TEST_CASE("affine diagrams and isomorphism testing") {
  auto a1 = affine_diagram('A', 1);
  CHECK(a1(0, 1) == 2);
  auto d4 = affine_diagram('D', 4);
  CHECK(d4.row(2).sum() == 4);  // the hub of the star
  CHECK(graphs_isomorphic(affine_diagram('E', 6), affine_diagram('E', 6)));
  CHECK(!graphs_isomorphic(affine_diagram('E', 6), affine_diagram('A', 6)));
  // isomorphism must survive relabeling
  auto e8 = affine_diagram('E', 8);
  Eigen::MatrixXi perm = Eigen::MatrixXi::Zero(9, 9);
  std::vector<int> p = {3, 1, 4, 0, 5, 2, 8, 6, 7};
  Eigen::MatrixXi shuffled(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) shuffled(p[i], p[j]) = e8(i, j);
  CHECK(graphs_isomorphic(e8, shuffled));
}

TEST_CASE("DOT export round-trips the adjacency") {
  auto gc = compute_group("Dhat2");
  for (int i : {0, 2, 5}) {
    auto graph = fusion_graph(gc.md, gc.fd, i);
    auto dot = dot_export(graph, gc.md);
    auto adj = dot_parse_adjacency(dot, gc.md.rank());
    CHECK(adj == graph.adjacency);
  }
}

TEST_CASE("unit relabeling is a graph automorphism") {
  auto gc = compute_group("Dhat3");
  const int r = gc.md.rank();
  for (std::size_t ui = 0; ui < gc.units.unit_indices.size(); ++ui) {
    const auto& J = gc.units.permutations[ui];
    for (int i : {1, 4, 9}) {
      auto graph = fusion_graph(gc.md, gc.fd, i);
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          CHECK(graph.adjacency(J[j], J[k]) == graph.adjacency(j, k));
    }
  }
}

TEST_CASE("the classical graph repeats once per central element") {
  // center Z3: the class-0 block graph appears three times among the
  // components of the embedding graph
  auto gc = compute_group("Sigma36x3");
  REQUIRE(!gc.embedding.candidates.empty());
  auto graph = fusion_graph(gc.md, gc.fd, gc.embedding.candidates[0]);
  const int l = gc.report.ell;
  std::vector<Eigen::MatrixXi> big;
  for (const auto& comp : graph.weak_components) {
    if (static_cast<int>(comp.size()) != l) continue;
    Eigen::MatrixXi sub(l, l);
    for (int a = 0; a < l; ++a)
      for (int b = 0; b < l; ++b) sub(a, b) = graph.adjacency(comp[a], comp[b]);
    big.push_back(std::move(sub));
  }
  REQUIRE(big.size() == 3);
  // pairwise isomorphic as undirected multigraphs
  auto undirect = [](const Eigen::MatrixXi& m) {
    return Eigen::MatrixXi(m + m.transpose());
  };
  CHECK(graphs_isomorphic(undirect(big[0]), undirect(big[1])));
  CHECK(graphs_isomorphic(undirect(big[0]), undirect(big[2])));
}

TEST_CASE("the trivial double has one component, equal to the class number") {
  auto gc = compute_group("trivial");
  auto graph = fusion_graph(gc.md, gc.fd, 0);
  CHECK(graph.weak_components.size() == 1);
  CHECK(gc.report.ell == 1);
}

TEST_CASE("quantum-dimension run-length strings round-trip and cover the rank") {
  for (const char* name : {"Dhat5", "F21", "Sigma168"}) {
    auto gc = compute_group(name);
    // parse "a_b,c_d;..." back and check the multiset against fd.qdims
    std::vector<long> decoded;
    std::string s = gc.report.qdims_rle;
    for (auto& ch : s)
      if (ch == ';' || ch == ',') ch = ' ';
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      auto us = tok.find('_');
      long val = std::stol(tok.substr(0, us));
      int rep = std::stoi(tok.substr(us + 1));
      for (int k = 0; k < rep; ++k) decoded.push_back(val);
    }
    CHECK(decoded == gc.fd.qdims);
  }
}

TEST_CASE("classical block of the double matches the group-level fusion graph") {
  auto gc = compute_group("binary_tetrahedral");
  REQUIRE(!gc.embedding.candidates.empty());
  int emb = gc.embedding.candidates[0];
  auto graph = fusion_graph(gc.md, gc.fd, emb);
  const int l = gc.report.ell;
  Eigen::MatrixXi classical = graph.adjacency.topLeftCorner(l, l);
  auto N = group_tensor_multiplicities(gc.table);
  Eigen::MatrixXi group_level(l, l);
  for (int j = 0; j < l; ++j)
    for (int k = 0; k < l; ++k) group_level(j, k) = N[emb][j][k];
  CHECK(classical == group_level);
}
