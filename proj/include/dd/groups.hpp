#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "dd/cyclotomic.hpp"

namespace dd {

/// Lookup-table arithmetic for GF(p^k), q = p^k <= 16. Elements are integers
/// 0..q-1 encoding coordinate vectors over F_p in the polynomial basis.
class GFTable {
 public:
  /// shared instance for a supported field (p prime, p^k <= 16)
  static std::shared_ptr<const GFTable> get(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }
  /// image of the integer c in the prime subfield
  int scalar(int c) const;
  /// the polynomial generator x (primitive element)
  int gen() const { return k_ == 1 ? gen1_ : p_; }

 private:
  GFTable(int p, int k);
  int p_, k_, q_, gen1_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

struct PermElem {
  std::vector<std::uint16_t> img;  // point i -> img[i]
  bool operator==(const PermElem&) const = default;
};

struct MatGFElem {
  std::shared_ptr<const GFTable> field;
  int dim = 0;
  std::vector<std::uint8_t> a;  // row-major dim*dim
  bool operator==(const MatGFElem& o) const { return dim == o.dim && a == o.a; }
};

struct MatCycElem {
  int dim = 0;
  std::vector<Cyclotomic> a;  // row-major dim*dim, shared conductor
  bool operator==(const MatCycElem& o) const { return dim == o.dim && a == o.a; }
};

using GroupElement = std::variant<PermElem, MatGFElem, MatCycElem>;

GroupElement element_mul(const GroupElement& x, const GroupElement& y);
GroupElement element_identity(const GroupElement& like);
/// throws std::invalid_argument("invalid generator") for singular matrices
void check_invertible(const GroupElement& g);
std::string element_to_string(const GroupElement& g);

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const;
};

struct ConjugacyClass {
  int representative = 0;        // minimal element index in the class
  std::vector<int> members;      // sorted element indices
  std::vector<int> centralizer;  // sorted element indices of C_G(representative)
  int rep_order = 1;             // smallest p with rep^p = identity
};

/// A fully enumerated finite group. Immutable after construction; all queries
/// are const.
class GroupData {
 public:
  int order() const { return n_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  int identity() const { return 0; }

  int mul(int a, int b) const { return mt_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// index of an element payload, or -1
  int index_of(const GroupElement& g) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_of(int element) const { return cls_of_[element]; }
  /// witness w with w * rep * w^{-1} = element, rep the class representative
  int witness(int element) const { return witness_[element]; }
  int element_order(int element) const;

  int exponent() const { return exponent_; }
  const std::vector<int>& center() const { return center_; }
  const std::vector<int>& derived_subgroup() const { return derived_; }
  long abelianization_order() const { return n_ / static_cast<long>(derived_.size()); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// class index containing the inverses of class c's members
  int inverse_class(int c) const { return inverse_class_[c]; }
  /// class index containing rep_c^k
  int power_class(int c, long k) const;

  friend GroupData enumerate(std::vector<GroupElement> generators, int limit);

 private:
  int n_ = 1;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, int, ElementHash> index_;
  std::vector<std::int32_t> mt_;  // full multiplication table, 4*n^2 bytes
  std::vector<int> inv_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> cls_of_, witness_, inverse_class_;
  std::vector<int> center_, derived_;
  int exponent_ = 1;
  std::string name_;
};

/// Breadth-first closure of the generators; deterministic element order
/// (identity first, then discovery order). Throws std::runtime_error
/// ("order overflow") if the closure exceeds `limit` or the engine's hard
/// cap of 16384 elements (the multiplication table is dense, 4*n^2 bytes).
GroupData enumerate(std::vector<GroupElement> generators, int limit = 10000);

/// {h : hx = xh}; throws std::invalid_argument("foreign element") if x is not in g
std::vector<int> centralizer(const GroupData& g, const GroupElement& x);
std::vector<int> centralizer(const GroupData& g, int element);

/// one representative per left coset aH, the least element index in each;
/// throws std::invalid_argument("not a subgroup") if the set is not closed
std::vector<int> coset_representatives(const GroupData& g, const std::vector<int>& subgroup);

struct StructureInvariants {
  std::vector<int> center;
  std::vector<int> derived_subgroup;
  int exponent = 1;
  long abelianization_order = 1;
};

StructureInvariants structure_invariants(const GroupData& g);

/// A subgroup materialized with its own index space, multiplication table and
/// conjugacy classes; elems maps local indices to parent element indices.
struct SubgroupView {
  const GroupData* parent = nullptr;
  std::vector<int> elems;   // local -> parent index, elems[0] = identity
  std::vector<int> local;   // local index keyed by parent index (-1 elsewhere)
  std::vector<std::int32_t> mt;
  std::vector<int> inv;
  std::vector<ConjugacyClass> classes;  // member/centralizer lists in local indices
  std::vector<int> cls_of;
  int exponent = 1;

  int order() const { return static_cast<int>(elems.size()); }
  int mul(int a, int b) const { return mt[static_cast<std::size_t>(a) * elems.size() + b]; }
  int class_count() const { return static_cast<int>(classes.size()); }
  int local_of(int parent_index) const { return local[parent_index]; }
  int element_order(int a) const;
  int inverse_class(int c) const;
  int power_class(int c, long k) const;
};

SubgroupView make_subgroup(const GroupData& g, std::vector<int> elements);
/// the whole group as a SubgroupView (shares no state, same ordering)
SubgroupView whole_group_view(const GroupData& g);

// ---- catalog ----

/// Concrete realization of a named group from the series and exceptional
/// subgroups of SU(2) and SU(3). Throws std::invalid_argument("not in catalog").
GroupData catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// parse permutation generators in cycle notation, one per line, e.g.
/// "(1 2 3)(4 5)"; points are 1-based; returns the enumerated group
GroupData group_from_cycles_text(const std::string& text, int limit = 10000);

}  // namespace dd
