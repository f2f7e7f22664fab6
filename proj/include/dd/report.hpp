#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dd/fusion.hpp"
#include "dd/graphs.hpp"

namespace dd {

/// Everything the per-group dossier and the summary-table row need.
struct ReportBundle {
  std::string name;
  int order = 0;
  int ell = 0;
  int rank = 0;
  std::vector<int> block_sizes;
  std::string qdims_rle;      // "1_4,2_4;1_4,2_4;..." blocks ; separated
  std::string d_B;            // decimal
  std::string d_B_factored;   // "2^8*4363"
  int exponent = 0;
  int t_order = 0;
  std::vector<int> classical_degrees;
  std::string embedding_labels;  // "4,5" or "4+6" for a composite pair
  // table row
  bool eq7_before = false;
  bool eq7_double = false;
  int col4_satisfying = 0;  // # of i != ibar with eq7 holding for all j
  int col4_violating = 0;
  std::array<int, 3> complex_counts{}, quaternionic_counts{}, real_counts{};
  int units = 0;
  // graphs
  std::vector<int> embedding_component_counts;
  bool connectivity_holds = false;
  bool components_are_blocks = false;
  std::optional<std::string> mckay;  // SU(2) rows
};

struct GroupComputation {
  // heap-held so ModularData/SubgroupView parent pointers survive moves
  std::shared_ptr<GroupData> group;
  SubgroupView whole;
  CharacterTable table;  // of G itself
  ModularData md;
  FusionData fd;
  UnitsData units;
  TypeClassification types;
  SumRuleReport sums;
  EmbeddingSelection embedding;
  ReportBundle report;
};

enum class SuFamily { SU2, SU3, None };
SuFamily su_family_of(const std::string& catalog_name);

/// Full pipeline for one group. `full_tensor` false computes aggregates only
/// (type counts and sum rules still available).
GroupComputation compute_group(const std::string& name, std::uint64_t seed = kDefaultSeed,
                               bool full_tensor = true, int jobs = 1);
GroupComputation compute_group(GroupData g, SuFamily family, std::uint64_t seed = kDefaultSeed,
                               bool full_tensor = true, int jobs = 1);

std::string report_json(const ReportBundle& r);
std::string report_csv(const ReportBundle& r);

/// run-length encoding of the quantum dimensions per block: "1_4,2_4;5_4"
std::string qdims_run_length(const ModularData& md, const std::vector<long>& qdims);

// ---- fixtures ----

struct FixtureMismatch {
  std::string field;
  std::string expected;
  std::string actual;
};

struct FixtureResult {
  std::string name;
  bool found = false;
  bool passed = false;
  std::vector<FixtureMismatch> mismatches;
  std::optional<double> exact_s_residual;
};

/// Compare a computed group against its fixture file <dir>/<name>.jsonc.
FixtureResult verify_against_fixture(const GroupComputation& gc, const std::string& fixtures_dir);

/// Exact S-matrix fixture: evaluates the alpha expressions in
/// Q(zeta_7) via the cyclotomic module and matches all entries of 168*S
/// against the computed matrix, allowing the block-respecting relabeling
/// freedom of tied irreps. Returns the max entry residual.
double exact_s_check(const ModularData& md, const std::string& fixture_path);

std::vector<std::string> fixture_group_names(const std::string& fixtures_dir);

}  // namespace dd
