#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "dd/characters.hpp"
#include "dd/groups.hpp"

namespace dd {

struct DoubleIrrep {
  int class_index = 0;      // conjugacy class of G, in the fixed class order
  int cent_irrep = 0;       // row of that centralizer's character table
  long quantum_dimension = 1;  // |[c]| * d_sigma
};

/// Modular data of the Drinfeld double D(G): the S matrix, T phases, charge
/// conjugation C and the block layout of irreps (one block per conjugacy
/// class). Centralizer tables are kept for label/character queries.
struct ModularData {
  const GroupData* group = nullptr;
  std::vector<DoubleIrrep> irreps;
  std::vector<int> block_sizes;    // N_c per class
  std::vector<int> block_offsets;  // prefix sums, size l+1
  Eigen::MatrixXcd S;
  Eigen::VectorXcd T;
  std::vector<int> conjugate_map;  // i -> ibar, from ([c],sigma) -> ([c^-1], conj sigma)

  // per class: centralizer subgroup view, its character table, and a lookup
  // from parent element index to centralizer class index (-1 if outside)
  std::vector<std::shared_ptr<const SubgroupView>> cent_views;
  std::vector<std::shared_ptr<const CharacterTable>> cent_tables;
  std::vector<std::vector<int>> cent_class_lookup;

  int rank() const { return static_cast<int>(irreps.size()); }
  /// multiplicative order of the T diagonal
  int t_order() const;
  std::string irrep_label(int i) const;  // "(class:sigma)" 1-based
};

/// Full modular data: centralizer tables, irrep blocks, S (coset-pair sum) and
/// T. Throws std::runtime_error("modular data inconsistent") if S fails its
/// symmetry/unitarity residuals at 1e-9, "non-unitary T" for bad T entries.
ModularData build_modular_data(const GroupData& g, std::uint64_t seed = kDefaultSeed);

/// Direct evaluation of the double-sum definition of S (the slow oracle):
/// S = 1/(|C(c)||C(d)|) * sum over g in G with [c, g d g^-1] = 1.
Eigen::MatrixXcd s_matrix_direct(const GroupData& g, const ModularData& md);

struct ModularVerification {
  double sym_residual = 0;       // S - S^T
  double unitarity_residual = 0; // S S^dag - I
  double s4_residual = 0;        // S^4 - I
  double st3_residual = 0;       // (ST)^3 - S^2
  double c_residual = 0;         // S^2 vs rounded permutation
  bool c_is_permutation = false;
  bool c_matches_conjugation = false;  // rounded S^2 == group-theoretic conjugate map
  bool t_order_is_exponent = false;
  bool first_column_positive = false;
  bool ok() const {
    return sym_residual < 1e-9 && unitarity_residual < 1e-9 && s4_residual < 1e-9 &&
           st3_residual < 1e-9 && c_residual < 1e-9 && c_is_permutation &&
           c_matches_conjugation && t_order_is_exponent && first_column_positive;
  }
};

ModularVerification verify_modular(const ModularData& md);

/// JSON export of {"rank", "blocks", "S", "T"}; values as [re, im] pairs that
/// round-trip bit-exactly through the decimal shortest representation
std::string modular_data_json(const ModularData& md);

}  // namespace dd
