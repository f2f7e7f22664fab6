#include <doctest.h>

#include <algorithm>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "dd/groups.hpp"

using namespace dd;

namespace {

PermElem cycle_perm(int degree, std::vector<std::vector<int>> cycles) {
  PermElem p;
  p.img.resize(degree);
  std::iota(p.img.begin(), p.img.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      p.img[c[i]] = static_cast<std::uint16_t>(c[(i + 1) % c.size()]);
  return p;
}

// brute-force conjugacy classes straight from the definition, on raw payloads
int brute_class_count(const GroupData& g) {
  int n = g.order();
  std::vector<int> cls(n, -1);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    for (int h = 0; h < n; ++h) cls[g.mul(g.mul(h, x), g.inv(h))] = count;
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("enumerate Z6 from a single 6-cycle") {
  auto g = enumerate({cycle_perm(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(g.order() == 6);
  CHECK(g.class_count() == 6);
  CHECK(g.exponent() == 6);
}

TEST_CASE("empty generator list gives the trivial group") {
  auto g = enumerate({});
  CHECK(g.order() == 1);
  CHECK(g.class_count() == 1);
  CHECK(g.classes()[0].members == std::vector<int>{0});
}

TEST_CASE("S3 from transposition and 3-cycle") {
  auto g = enumerate({cycle_perm(3, {{0, 1}}), cycle_perm(3, {{0, 1, 2}})});
  CHECK(g.order() == 6);
  CHECK(g.class_count() == 3);
  CHECK(brute_class_count(g) == 3);
}

TEST_CASE("class data invariants across realizations") {
  for (const char* name : {"Z6", "Dhat3", "binary_tetrahedral", "F21", "Sigma60", "Sigma36x3"}) {
    auto g = catalog(name);
    CAPTURE(name);
    long total = 0;
    for (const auto& cls : g.classes()) {
      total += cls.members.size();
      CHECK(cls.members.size() * cls.centralizer.size() == static_cast<std::size_t>(g.order()));
      CHECK(std::find(cls.centralizer.begin(), cls.centralizer.end(), cls.representative) !=
            cls.centralizer.end());
      CHECK(cls.centralizer[0] == 0);
      CHECK(cls.representative == cls.members[0]);
      // witnesses conjugate the representative onto each member
      for (int m : cls.members) {
        int w = g.witness(m);
        CHECK(g.mul(g.mul(w, cls.representative), g.inv(w)) == m);
      }
    }
    CHECK(total == g.order());
    CHECK(g.classes()[0].rep_order == 1);
  }
}

TEST_CASE("binary tetrahedral has 7 classes") {
  auto g = catalog("binary_tetrahedral");
  CHECK(g.order() == 24);
  CHECK(g.class_count() == 7);
}

TEST_CASE("Sigma168 centralizer orders match the block structure") {
  auto g = catalog("Sigma168");
  REQUIRE(g.class_count() == 6);
  std::vector<int> cent_orders;
  for (const auto& cls : g.classes()) cent_orders.push_back(static_cast<int>(cls.centralizer.size()));
  CHECK(cent_orders == std::vector<int>{168, 8, 3, 4, 7, 7});
}

TEST_CASE("centralizer queries") {
  auto g = catalog("Sigma36x3");
  // identity: whole group
  CHECK(centralizer(g, 0).size() == static_cast<std::size_t>(g.order()));
  // a non-central element of order 12 has cyclic centralizer of order 12
  bool found = false;
  for (const auto& cls : g.classes()) {
    if (cls.rep_order != 12) continue;
    auto c = centralizer(g, cls.representative);
    CHECK(c.size() == 12);
    // cyclic: some element of the centralizer has order 12
    bool cyc = false;
    for (int x : c)
      if (g.element_order(x) == 12) cyc = true;
    CHECK(cyc);
    found = true;
  }
  CHECK(found);
  // abelian group: every centralizer is everything
  auto z = catalog("Z6");
  for (int x = 0; x < z.order(); ++x) CHECK(centralizer(z, x).size() == 6);
  // foreign element
  PermElem alien;
  alien.img = {1, 0};
  CHECK_THROWS_WITH(centralizer(g, GroupElement{alien}), "foreign element");
}

TEST_CASE("coset representatives") {
  auto g = catalog("F21");
  std::vector<int> whole(g.order());
  std::iota(whole.begin(), whole.end(), 0);
  CHECK(coset_representatives(g, whole) == std::vector<int>{0});
  CHECK(coset_representatives(g, {0}).size() == 21);
  // index-7 centralizer: 7 representatives, one per coset (brute-force check)
  const auto& cent = g.classes()[1].centralizer;  // order-3 element's centralizer
  REQUIRE(cent.size() == 3);
  auto reps = coset_representatives(g, cent);
  CHECK(reps.size() == 7);
  std::set<int> covered;
  for (int rep : reps)
    for (int h : cent) covered.insert(g.mul(rep, h));
  CHECK(covered.size() == 21);
  CHECK_THROWS_WITH(coset_representatives(g, {0, 1}), "not a subgroup");
}

TEST_CASE("structure invariants") {
  auto s = structure_invariants(catalog("Sigma72x3"));
  CHECK(s.center.size() == 3);
  CHECK(s.abelianization_order == 4);
  CHECK(structure_invariants(catalog("Sigma36x3")).exponent == 12);
  auto a = structure_invariants(catalog("Z6"));
  CHECK(a.center.size() == 6);
  CHECK(a.derived_subgroup == std::vector<int>{0});
}

TEST_CASE("catalog spot checks") {
  auto o = catalog("binary_octahedral");
  CHECK(o.order() == 48);
  CHECK(o.class_count() == 8);
  auto f = catalog("F21");
  CHECK(f.order() == 21);
  CHECK(f.class_count() == 5);
  auto v = catalog("Sigma360x3");
  CHECK(v.order() == 1080);
  CHECK(v.class_count() == 17);
  CHECK_THROWS_WITH(catalog("nonsense"), "not in catalog");
}

TEST_CASE("catalog orders and class numbers for every named group") {
  const std::map<std::string, std::pair<int, int>> expected = {
      {"trivial", {1, 1}},        {"Z5", {5, 5}},
      {"Z6", {6, 6}},             {"Dhat2", {8, 5}},
      {"Dhat3", {12, 6}},         {"Dhat4", {16, 7}},
      {"Dhat5", {20, 8}},         {"binary_tetrahedral", {24, 7}},
      {"binary_octahedral", {48, 8}}, {"binary_icosahedral", {120, 9}},
      {"Delta3_2", {12, 4}},      {"Delta6_2", {24, 5}},
      {"F21", {21, 5}},           {"Sigma60", {60, 5}},
      {"Sigma36x3", {108, 14}},   {"Sigma168", {168, 6}},
      {"Sigma60xZ3", {180, 15}},  {"Sigma72x3", {216, 16}},
      {"Sigma168xZ3", {504, 18}}, {"Sigma216x3", {648, 24}},
      {"Sigma360x3", {1080, 17}},
  };
  for (const auto& [name, oc] : expected) {
    CAPTURE(name);
    auto g = catalog(name);
    CHECK(g.order() == oc.first);
    CHECK(g.class_count() == oc.second);
  }
}

TEST_CASE("enumeration is deterministic") {
  auto a = catalog("binary_octahedral");
  auto b = catalog("binary_octahedral");
  REQUIRE(a.order() == b.order());
  for (int i = 0; i < a.order(); ++i) {
    CHECK(a.elements()[i] == b.elements()[i]);
    CHECK(a.class_of(i) == b.class_of(i));
  }
}

TEST_CASE("abelian groups have singleton classes") {
  auto g = catalog("Z6");
  for (const auto& cls : g.classes()) CHECK(cls.members.size() == 1);
  CHECK(g.center().size() == 6);
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_WITH(enumerate({cycle_perm(6, {{0, 1, 2, 3, 4, 5}})}, 3), "order overflow");
  auto F3 = GFTable::get(3, 1);
  MatGFElem singular{F3, 2, {1, 2, 2, 1}};  // det = 1 - 4 = 0 mod 3
  CHECK_THROWS_WITH(enumerate({GroupElement{singular}}), "invalid generator");
}

TEST_CASE("cycle-notation parsing") {
  auto g = group_from_cycles_text("(1 2 3 4 5 6 7)\n(2 3 5)(4 7 6)\n");
  CHECK(g.order() == 21);
  CHECK(g.class_count() == 5);
  auto t = group_from_cycles_text("# comment only\n()\n");
  CHECK(t.order() == 1);
}

TEST_CASE("Delta series orders") {
  CHECK(catalog("Delta3_3").order() == 27);
  CHECK(catalog("Delta6_3").order() == 54);
  CHECK(catalog("Delta3_4").order() == 48);
  CHECK(catalog("Delta6_4").order() == 96);
}

TEST_CASE("large cyclic enumeration stays tractable") {
  // above the old dense-vs-word threshold; exercises the table path at scale
  const int n = 5000;
  PermElem big;
  big.img.resize(n);
  for (int i = 0; i < n; ++i) big.img[i] = static_cast<std::uint16_t>((i + 1) % n);
  auto g = enumerate({GroupElement{big}}, 6000);
  CHECK(g.order() == n);
  CHECK(g.class_count() == n);
  CHECK(g.exponent() == n);
  CHECK(g.inv(1) == n - 1);
}
