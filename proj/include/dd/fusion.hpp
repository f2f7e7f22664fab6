#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "dd/modular.hpp"

namespace dd {

/// One fusion matrix N_i in sparse row form: entries (j, k, N_ij^k)
struct SparseFusionMatrix {
  int irrep = 0;
  std::vector<std::array<int, 3>> entries;  // (j, k, multiplicity)
  Eigen::MatrixXi dense(int r) const;
  long row_sum(int j, int r) const;
};

struct FusionData {
  int rank = 0;
  bool full_tensor = false;
  std::vector<SparseFusionMatrix> tensor;  // per i, present iff full_tensor
  std::vector<long> qdims;                 // mu_i
  Eigen::MatrixXcd phi;                    // phi_i(l) = S_il / S_1l
  Eigen::MatrixXi X;                       // sum_i N_i
  Eigen::MatrixXi row_sums;                // R_ij = sum_k N_ij^k
  std::vector<long> row_totals;            // sum_{n,p} N_in^p
  mpz_class d_B;
  mpz_class global_dimension;              // sum mu^2 = |G|^2
};

/// Fusion data from verified modular data. With full_tensor the whole
/// N_mn^p tensor is computed (one dense product per i, then sparsified);
/// otherwise only the aggregates (X, row sums, d_B). `jobs` threads.
/// Throws std::runtime_error("Verlinde integrality failure") when an entry
/// strays from a non-negative integer by more than 1e-6, and
/// "qdim inconsistency" when S-derived dimensions disagree with |[c]|*d_sigma.
FusionData build_fusion(const ModularData& md, bool full_tensor = true, int jobs = 1);

/// single fusion matrix N_i (dense), straight from the Verlinde formula
Eigen::MatrixXi verlinde_matrix(const ModularData& md, int i);

struct UnitsData {
  std::vector<int> unit_indices;
  std::vector<std::vector<int>> permutations;  // J_u per unit
  long expected_count = 0;                     // |Z(G)| * |G/G'|
};

/// invertible irreps; throws std::runtime_error("unit-group anomaly") if the
/// count differs from |Z(G)|*|G/G'|
UnitsData find_units(const ModularData& md, const FusionData& fd);

enum class IrrepType { Real, Complex, Quaternionic };

struct TypeClassification {
  std::vector<IrrepType> types;
  int n_real = 0, n_complex = 0, n_quaternionic = 0;
};

/// complex iff i != ibar; self-dual irreps split by the modular
/// Frobenius-Schur indicator nu_i = sum_{j,k} N_jk^i S_1j S_1k (T_j/T_k)^2
TypeClassification classify_types(const ModularData& md, const FusionData& fd);

struct SumRuleReport {
  Eigen::VectorXcd sigma;              // Sigma_j = sum_i S_ij
  std::vector<bool> vanishing;         // |Sigma_j| < 1e-8
  std::vector<bool> unit_explained;    // exists unit u with phi_u(j) != 1
  std::vector<bool> accidental;        // vanishing but not unit-explained
  bool eq7_holds = false;
  std::vector<int> eq7_violators;      // i with some j failing
  int satisfying_non_self_conjugate = 0;  // # of i != ibar with eq7 for all j
  int violating_non_self_conjugate = 0;
  bool eq9_holds = false;              // X == X.C
  // per-type counts: {total, vanishing, accidental}
  std::array<int, 3> complex_counts{}, real_counts{}, quaternionic_counts{};
};

/// Sum-rule analysis; Propositions 1 and 3 are theorems for doubles and
/// violations throw std::logic_error.
SumRuleReport sum_rules(const ModularData& md, const FusionData& fd, const UnitsData& units,
                        const TypeClassification& types);

/// factored form "2^5*3*13*599" by trial division
std::string factored(const mpz_class& v);

}  // namespace dd
