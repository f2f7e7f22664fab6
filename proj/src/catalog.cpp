#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "dd/groups.hpp"

namespace dd {

namespace {

GroupElement perm(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  PermElem p;
  p.img.resize(degree);
  std::iota(p.img.begin(), p.img.end(), 0);
  for (const auto& cyc : cycles) {
    std::vector<int> c(cyc);
    for (std::size_t i = 0; i < c.size(); ++i)
      p.img[c[i]] = static_cast<std::uint16_t>(c[(i + 1) % c.size()]);
  }
  return p;
}

GroupElement matgf(std::shared_ptr<const GFTable> F, std::initializer_list<int> entries) {
  MatGFElem m;
  m.field = std::move(F);
  int dim = entries.size() == 4 ? 2 : 3;
  m.dim = dim;
  for (int v : entries) m.a.push_back(static_cast<std::uint8_t>(v));
  return m;
}

GroupElement matcyc(int dim, std::vector<Cyclotomic> entries) {
  MatCycElem m;
  m.dim = dim;
  m.a = std::move(entries);
  return m;
}

GroupData cyclic(int n) {
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  PermElem p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<std::uint16_t>((i + 1) % n);
  return enumerate({p});
}

GroupData binary_dihedral(int n) {
  // dicyclic of order 4n: a = diag(z, z^-1) with z = zeta_{2n}, b = [[0,1],[-1,0]]
  int m = 2 * n;
  auto z = Cyclotomic::zeta(m, 1);
  auto zi = Cyclotomic::zeta(m, -1);
  auto o = Cyclotomic::one(m), O = Cyclotomic::zero(m);
  auto a = matcyc(2, {z, O, O, zi});
  auto b = matcyc(2, {O, o, -o, O});
  return enumerate({a, b});
}

GroupData delta_series(int n, bool with_s3) {
  // Delta(3n^2) = <diag torus, cyclic shift>; Delta(6n^2) adds -P_(13)
  int cond = n;
  auto z = Cyclotomic::zeta(cond, 1);
  auto zi = Cyclotomic::zeta(cond, -1);
  auto o = Cyclotomic::one(cond), O = Cyclotomic::zero(cond);
  auto d1 = matcyc(3, {z, O, O, O, o, O, O, O, zi});
  auto d2 = matcyc(3, {o, O, O, O, z, O, O, O, zi});
  auto E = matcyc(3, {O, o, O, O, O, o, o, O, O});
  std::vector<GroupElement> gens{d1, d2, E};
  if (with_s3) gens.push_back(matcyc(3, {O, O, -o, O, -o, O, -o, O, O}));
  return enumerate(std::move(gens), std::max(64, 8 * n * n));
}

// generators C = diag(1,w,w^2), E = cyclic shift, V = Fourier-type matrix,
// shared by the Sigma(36x3)/Sigma(72x3)/Sigma(216x3) family
std::vector<GroupElement> hessian_base(int cond) {
  auto w = Cyclotomic::zeta(cond, cond / 3);
  auto w2 = w * w;
  auto o = Cyclotomic::one(cond), O = Cyclotomic::zero(cond);
  auto f = (w - w2).inverse();  // 1/(w - w^2) = 1/(i sqrt 3)
  auto C = matcyc(3, {o, O, O, O, w, O, O, O, w2});
  auto E = matcyc(3, {O, o, O, O, O, o, o, O, O});
  auto V = matcyc(3, {f, f, f, f, f * w, f * w2, f, f * w2, f * w});
  return {C, E, V};
}

GroupData sigma36x3() { return enumerate(hessian_base(3)); }

GroupData sigma72x3() {
  int cond = 3;
  auto w = Cyclotomic::zeta(cond, 1);
  auto w2 = w * w;
  auto o = Cyclotomic::one(cond), O = Cyclotomic::zero(cond);
  auto f = (w - w2).inverse();
  auto gens = hessian_base(cond);
  gens.push_back(matcyc(3, {f, f, f * w2, f, f * w, f * w, f * w, f, f * w}));
  return enumerate(std::move(gens));
}

GroupData sigma216x3() {
  auto gens = hessian_base(9);
  auto eps = Cyclotomic::zeta(9, 2);  // exp(4 pi i / 9)
  auto w = Cyclotomic::zeta(9, 3);
  auto O = Cyclotomic::zero(9);
  gens.push_back(matcyc(3, {eps, O, O, O, eps, O, O, O, eps * w}));
  return enumerate(std::move(gens));
}

GroupData sigma168() {
  auto F2 = GFTable::get(2, 1);
  auto a = matgf(F2, {1, 1, 0, 0, 1, 0, 0, 0, 1});
  auto b = matgf(F2, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  return enumerate({a, b});
}

// permutation action of a GF(2) 3x3 matrix on the 7 nonzero vectors of F_2^3
PermElem fano_perm(const MatGFElem& m, int extra_points) {
  PermElem p;
  p.img.resize(7 + extra_points);
  std::iota(p.img.begin(), p.img.end(), 0);
  for (int v = 1; v <= 7; ++v) {
    int bits[3] = {v & 1, (v >> 1) & 1, (v >> 2) & 1};
    int w = 0;
    for (int i = 0; i < 3; ++i) {
      int s = 0;
      for (int j = 0; j < 3; ++j) s ^= m.a[i * 3 + j] & bits[j];
      w |= s << i;
    }
    p.img[v - 1] = static_cast<std::uint16_t>(w - 1);
  }
  return p;
}

GroupData sigma168xZ3() {
  auto F2 = GFTable::get(2, 1);
  auto a = std::get<MatGFElem>(matgf(F2, {1, 1, 0, 0, 1, 0, 0, 0, 1}));
  auto b = std::get<MatGFElem>(matgf(F2, {0, 0, 1, 1, 0, 0, 0, 1, 0}));
  GroupElement pa = fano_perm(a, 3);
  GroupElement pb = fano_perm(b, 3);
  GroupElement z3 = perm(10, {{7, 8, 9}});
  return enumerate({pa, pb, z3});
}

GroupData sigma360x3() {
  // 3.A6 realized inside SL(3,4); 2 = x, 3 = x+1 in GF(4) = F2[x]/(x^2+x+1)
  auto F4 = GFTable::get(2, 2);
  auto a = matgf(F4, {2, 3, 0, 3, 3, 1, 1, 1, 0});
  auto b = matgf(F4, {2, 0, 0, 3, 1, 1, 1, 1, 2});
  return enumerate({a, b}, 1200);
}

bool parse_suffix_int(const std::string& name, const std::string& prefix, int& out) {
  if (!name.starts_with(prefix)) return false;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && out >= 1;
}

}  // namespace

GroupData catalog(const std::string& name) {
  GroupData g;
  int n = 0;
  if (name == "trivial") {
    g = enumerate({});
  } else if (parse_suffix_int(name, "Z", n)) {
    if (n > 168) throw std::invalid_argument("not in catalog");
    g = cyclic(n);
  } else if (parse_suffix_int(name, "Dhat", n)) {
    if (n < 1 || n > 84) throw std::invalid_argument("not in catalog");
    g = binary_dihedral(n);
  } else if (name == "binary_tetrahedral") {
    auto F3 = GFTable::get(3, 1);
    g = enumerate({matgf(F3, {1, 1, 0, 1}), matgf(F3, {1, 0, 1, 1})});
  } else if (name == "binary_octahedral") {
    // 2x2 over F_9 = F_3[w], w^2 = w + 1; u = w^2 satisfies u^2 = -1
    auto F9 = GFTable::get(3, 2);
    int w = F9->gen();
    int u = F9->mul(w, w);
    int m1 = F9->neg(F9->scalar(1));
    int nu = F9->neg(u);
    g = enumerate({matgf(F9, {m1, F9->scalar(1), 0, m1}), matgf(F9, {nu, nu, nu, 0})});
  } else if (name == "binary_icosahedral") {
    auto F5 = GFTable::get(5, 1);
    g = enumerate({matgf(F5, {1, 1, 0, 1}), matgf(F5, {1, 0, 1, 1})});
  } else if (parse_suffix_int(name, "Delta3_", n)) {
    if (n > 24) throw std::invalid_argument("not in catalog");
    g = delta_series(n, false);
  } else if (parse_suffix_int(name, "Delta6_", n)) {
    if (n > 24) throw std::invalid_argument("not in catalog");
    g = delta_series(n, true);
  } else if (name == "F21") {
    g = enumerate({perm(7, {{0, 1, 2, 3, 4, 5, 6}}), perm(7, {{1, 2, 4}, {3, 6, 5}})});
  } else if (name == "Sigma60") {
    g = enumerate({perm(5, {{0, 1, 2, 3, 4}}), perm(5, {{0, 1, 2}})});
  } else if (name == "Sigma36x3") {
    g = sigma36x3();
  } else if (name == "Sigma168") {
    g = sigma168();
  } else if (name == "Sigma60xZ3") {
    g = enumerate({perm(8, {{0, 1, 2, 3, 4}}), perm(8, {{0, 1, 2}}), perm(8, {{5, 6, 7}})});
  } else if (name == "Sigma72x3") {
    g = sigma72x3();
  } else if (name == "Sigma168xZ3") {
    g = sigma168xZ3();
  } else if (name == "Sigma216x3") {
    g = sigma216x3();
  } else if (name == "Sigma360x3") {
    g = sigma360x3();
  } else {
    throw std::invalid_argument("not in catalog");
  }
  g.set_name(name);
  return g;
}

std::vector<std::string> catalog_names() {
  return {"trivial",          "Z<n>",
          "Dhat<n>",          "binary_tetrahedral",
          "binary_octahedral", "binary_icosahedral",
          "Delta3_<n>",       "Delta6_<n>",
          "F21",              "Sigma60",
          "Sigma36x3",        "Sigma168",
          "Sigma60xZ3",       "Sigma72x3",
          "Sigma168xZ3",      "Sigma216x3",
          "Sigma360x3"};
}

}  // namespace dd
