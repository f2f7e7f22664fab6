#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dd/fusion.hpp"

namespace dd {

struct FusionGraph {
  int irrep_index = 0;
  Eigen::MatrixXi adjacency;                 // N_i
  std::vector<std::vector<int>> weak_components;  // sorted vertex sets
  bool oriented = false;                     // false iff N_i symmetric
};

FusionGraph fusion_graph(const ModularData& md, const FusionData& fd, int i);

struct EmbeddingSelection {
  std::vector<int> candidates;     // classical irrep indices (block 0 rows)
  bool composite = false;          // cyclic case: a conjugate pair standing in
  std::pair<int, int> composite_pair{-1, -1};
};

enum class EmbeddingTarget { SU2, SU3 };

/// embedding representations of G: faithful irreps of dimension 2 (SU(2),
/// quaternionic) or 3 (SU(3)); for cyclic groups the faithful conjugate pair
/// of linear characters, flagged composite
EmbeddingSelection embedding_irreps(const GroupData& g, const SubgroupView& whole,
                                    const CharacterTable& t, EmbeddingTarget target);

struct ConnectivityResult {
  std::vector<int> component_counts;  // per candidate graph
  bool conjecture_holds = false;      // every count == class number
  bool components_are_blocks = false; // each component is exactly one class block
};

/// weak components of each lifted embedding graph ([e], rho); a composite
/// selection sums the adjacency of the pair
ConnectivityResult connectivity_conjecture(const ModularData& md, const FusionData& fd,
                                           const EmbeddingSelection& sel);

/// the graph of the first embedding candidate; for a composite selection the
/// adjacency is the sum over the pair (the unoriented cyclic-group embedding)
FusionGraph embedding_graph(const ModularData& md, const FusionData& fd,
                            const EmbeddingSelection& sel);

/// classical-block subgraph of the embedding fusion graph tested against the
/// affine ADE diagrams; returns e.g. "A5(1)", "D7(1)", "E8(1)".
/// Throws std::logic_error("McKay failure") when no diagram matches.
std::string mckay_check(const ModularData& md, const FusionData& fd,
                        const EmbeddingSelection& sel);

/// DOT digraph (or graph when unoriented); multi-edges repeated;
/// vertices named "(class:sigma)"
std::string dot_export(const FusionGraph& graph, const ModularData& md);

/// rebuild the adjacency matrix from dot_export output (round-trip check)
Eigen::MatrixXi dot_parse_adjacency(const std::string& dot, int rank);

/// undirected multigraph isomorphism by brute-force permutation search with
/// degree pruning; intended for <= 11 vertices
bool graphs_isomorphic(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b);

/// adjacency of the affine diagrams A_n^(1) (n>=1), D_n^(1) (n>=4), E_{6,7,8}^(1)
Eigen::MatrixXi affine_diagram(char family, int n);

}  // namespace dd
