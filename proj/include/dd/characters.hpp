#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "dd/groups.hpp"

namespace dd {

constexpr std::uint64_t kDefaultSeed = 0xD0B1E;

/// Complex character table of a finite group (usually a centralizer subgroup),
/// computed numerically from the class-algebra structure constants. Rows are
/// irreps, columns conjugacy classes in the group's fixed class order. Row 0
/// is always the trivial character; rows are sorted by increasing degree with
/// a deterministic value-vector tie-break.
struct CharacterTable {
  std::vector<int> degrees;
  Eigen::MatrixXcd values;             // l x l
  std::vector<int> class_sizes;
  std::vector<int> inverse_class_map;  // c -> [c^{-1}]
  std::vector<std::vector<int>> power_maps;  // power_maps[k][c] = [c^k], k = 0..exponent
  std::vector<int> fs_indicators;      // +1 real / 0 complex / -1 quaternionic
  std::vector<int> conjugate_row;      // irrep -> index of the conjugate irrep
  int group_order = 1;
  int exponent = 1;

  int irrep_count() const { return static_cast<int>(degrees.size()); }
};

/// Character table via common eigenvectors of the class multiplication
/// matrices, diagonalized through a seeded random linear combination.
/// Retries with successive seeds if the spectrum clusters badly; throws
/// std::runtime_error("character recovery failed") after exhausting retries.
CharacterTable character_table(const SubgroupView& h, std::uint64_t seed = kDefaultSeed);

int fs_indicator(const CharacterTable& t, int irrep);

/// element indices (local to the subgroup) whose classes have chi = chi(1)
std::vector<int> kernel(const SubgroupView& h, const CharacterTable& t, int irrep);
bool is_faithful(const SubgroupView& h, const CharacterTable& t, int irrep);

/// N_rs^t = sum_c (|c|/|G|) chi_c^r chi_c^s conj(chi_c^t), rounded;
/// throws std::runtime_error("non-integral multiplicity") past 1e-6
std::vector<std::vector<std::vector<int>>> group_tensor_multiplicities(const CharacterTable& t);

struct GroupSumruleResult {
  bool holds = true;
  std::vector<int> violating_irreps;  // i with some j failing sum_k N_ij^k = N_{ibar j}^k
};

/// Eq.(7) at the group level, evaluated on the plain tensor multiplicities
GroupSumruleResult group_sumrule(const CharacterTable& t);

/// CSV export: one row per class, one column per irrep, complex values "a+bi"
std::string character_table_csv(const CharacterTable& t);

}  // namespace dd
