#include <doctest.h>

#include <array>
#include <numeric>

#include "dd/fusion.hpp"
#include "s3_exact_oracle.hpp"

using namespace dd;

namespace {

struct Pipeline {
  GroupData g;
  ModularData md;
  FusionData fd;
  UnitsData units;
  TypeClassification types;
  SumRuleReport sums;
  explicit Pipeline(const char* name, bool full = true)
      : g(catalog(name)),
        md(build_modular_data(g)),
        fd(build_fusion(md, full)),
        units(find_units(md, fd)),
        types(classify_types(md, fd)),
        sums(sum_rules(md, fd, units, types)) {}
};

}  // namespace

TEST_CASE("N_1 is the identity") {
  Pipeline p("Dhat3");
  auto N1 = p.fd.tensor[0].dense(p.md.rank());
  CHECK(N1 == Eigen::MatrixXi::Identity(p.md.rank(), p.md.rank()));
}

TEST_CASE("exact-rational brute force for the D(S3) fusion tensor") {
  // production pipeline on S3 given by permutation generators
  PermElem t, c3;
  t.img = {1, 0, 2};
  c3.img = {1, 2, 0};
  auto g = enumerate({GroupElement{t}, GroupElement{c3}});
  REQUIRE(g.order() == 6);
  auto md = build_modular_data(g);
  auto fd = build_fusion(md, true);
  REQUIRE(md.rank() == 8);

  auto oracle = dd_test::s3_exact_oracle(g);
  CHECK((oracle.S - md.S).cwiseAbs().maxCoeff() < 1e-12);
  for (int m = 0; m < 8; ++m) CHECK(fd.tensor[m].dense(8) == oracle.N[m]);
}

TEST_CASE("d_B values from the dossiers") {
  CHECK(Pipeline("Z6").fd.d_B == 46656);           // 2^6 3^6
  CHECK(Pipeline("Dhat5").fd.d_B == 1116928);      // 2^8 4363
  CHECK(Pipeline("binary_icosahedral").fd.d_B == mpz_class(32) * 61 * 89 * 263);
  CHECK(factored(mpz_class(1116928)) == "2^8*4363");
}

TEST_CASE("quantum dimensions") {
  Pipeline p("binary_tetrahedral");
  // per-block run-length multisets match the dossier
  std::vector<long> block0(p.fd.qdims.begin(), p.fd.qdims.begin() + 7);
  CHECK(block0 == std::vector<long>{1, 1, 1, 2, 2, 2, 3});
  CHECK(p.fd.qdims[0] == 1);
  mpz_class sum = 0;
  for (long q : p.fd.qdims) sum += mpz_class(q) * q;
  CHECK(sum == mpz_class(24) * 24);  // |D(G)| = |G|^2
}

TEST_CASE("units") {
  CHECK(Pipeline("Dhat5").units.unit_indices.size() == 8);
  CHECK(Pipeline("F21").units.unit_indices.size() == 3);
  Pipeline p("Sigma36x3");
  CHECK(p.units.unit_indices.size() == 12);
  // units form a group: J_u composition lands on another unit's permutation
  const auto& J = p.units.permutations;
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = 0; b < J.size(); ++b) {
      std::vector<int> comp(p.md.rank());
      for (int i = 0; i < p.md.rank(); ++i) comp[i] = J[a][J[b][i]];
      CHECK(std::find(J.begin(), J.end(), comp) != J.end());
    }
  // phi_u are roots of unity on every column
  for (int u : p.units.unit_indices)
    for (int l = 0; l < p.md.rank(); ++l)
      CHECK(std::abs(std::abs(p.fd.phi(u, l)) - 1.0) < 1e-9);
}

TEST_CASE("sum rules against the tables") {
  Pipeline ico("binary_icosahedral");
  CHECK(ico.sums.eq7_holds);
  CHECK(ico.sums.real_counts == std::array<int, 3>{38, 16, 16});
  CHECK(ico.sums.quaternionic_counts == std::array<int, 3>{36, 36, 0});

  Pipeline f21("F21");
  CHECK(!f21.sums.eq7_holds);
  CHECK(f21.sums.complex_counts == std::array<int, 3>{24, 6, 0});
  CHECK(f21.sums.satisfying_non_self_conjugate == 2);

  // odd prime cyclic: only the vacuum has a non-vanishing column sum
  Pipeline z5("Z5");
  CHECK(z5.sums.eq7_holds);
  int nonvanishing = 0;
  for (int j = 0; j < z5.md.rank(); ++j)
    if (!z5.sums.vanishing[j]) ++nonvanishing;
  CHECK(nonvanishing == 1);
  CHECK(!z5.sums.vanishing[0]);
}

TEST_CASE("type classification") {
  Pipeline o("binary_octahedral");
  CHECK(o.types.n_complex == 0);
  CHECK(o.types.n_quaternionic == 26);
  CHECK(o.types.n_real == 30);
  Pipeline t("trivial");
  CHECK(t.types.n_real == 1);
}

TEST_CASE("fusion ring identities") {
  Pipeline p("binary_tetrahedral");
  const int r = p.md.rank();
  // associativity N_i N_j = sum_k N_ij^k N_k on sampled pairs
  std::vector<Eigen::MatrixXi> N;
  for (int i = 0; i < r; ++i) N.push_back(p.fd.tensor[i].dense(r));
  for (int i : {1, 5, 17, 40})
    for (int j : {2, 9, 33}) {
      Eigen::MatrixXi lhs = N[i] * N[j];
      Eigen::MatrixXi rhs = Eigen::MatrixXi::Zero(r, r);
      for (int k = 0; k < r; ++k)
        if (N[i](j, k) != 0) rhs += N[i](j, k) * N[k];
      CHECK(lhs == rhs);
    }
  // conjugation: N_ibar = N_i^T = C N_i C
  Eigen::MatrixXi C = Eigen::MatrixXi::Zero(r, r);
  for (int i = 0; i < r; ++i) C(i, p.md.conjugate_map[i]) = 1;
  for (int i = 0; i < r; ++i) {
    Eigen::MatrixXi tr = N[i].transpose();
    CHECK(N[p.md.conjugate_map[i]] == tr);
    Eigen::MatrixXi conj = C * N[i] * C;
    CHECK(N[p.md.conjugate_map[i]] == conj);
  }
  // unit permutations are fusion automorphisms: N_{i,J(j)}^{J(k)} = N_ij^k
  for (std::size_t ui = 0; ui < p.units.unit_indices.size(); ++ui) {
    const auto& J = p.units.permutations[ui];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) CHECK(N[i](J[j], J[k]) == N[i](j, k));
  }
  // X commutes with C, and eq9 iff X = XC
  Eigen::MatrixXi XC = p.fd.X * C, CX = C * p.fd.X;
  CHECK(XC == CX);
  CHECK(p.sums.eq9_holds == (XC == p.fd.X));
  CHECK(p.sums.eq9_holds == p.sums.eq7_holds);
}

TEST_CASE("aggregates-only mode matches the full tensor") {
  auto g = catalog("Dhat4");
  auto md = build_modular_data(g);
  auto full = build_fusion(md, true);
  auto aggr = build_fusion(md, false);
  CHECK(full.d_B == aggr.d_B);
  CHECK(full.X == aggr.X);
  CHECK(full.row_sums == aggr.row_sums);
  CHECK(full.qdims == aggr.qdims);
  CHECK(aggr.tensor.empty());
  // row sums really are the tensor's row sums
  for (int i = 0; i < md.rank(); ++i)
    for (int j = 0; j < md.rank(); ++j)
      CHECK(full.row_sums(i, j) == full.tensor[i].dense(md.rank()).row(j).sum());
}
