#include "dd/modular.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dd {

namespace {

constexpr double kModularTol = 1e-9;

}  // namespace

int ModularData::t_order() const {
  int m = 1;
  for (int i = 0; i < rank(); ++i) {
    // T entries are roots of unity of order dividing exponent(G)
    int order = 0;
    std::complex<double> t = T(i), acc = 1.0;
    for (int k = 1; k <= 4096; ++k) {
      acc *= t;
      if (std::abs(acc - 1.0) < 1e-8) {
        order = k;
        break;
      }
    }
    if (order == 0) throw std::runtime_error("non-unitary T");
    m = static_cast<int>(std::lcm(m, order));
  }
  return m;
}

std::string ModularData::irrep_label(int i) const {
  std::ostringstream os;
  os << "(" << (irreps[i].class_index + 1) << ":" << (irreps[i].cent_irrep + 1) << ")";
  return os.str();
}

ModularData build_modular_data(const GroupData& g, std::uint64_t seed) {
  ModularData md;
  md.group = &g;
  const int l = g.class_count();
  const int n = g.order();

  // centralizer views and tables, deduplicated by element set
  std::map<std::vector<int>, std::pair<std::shared_ptr<const SubgroupView>,
                                       std::shared_ptr<const CharacterTable>>>
      cache;
  for (int c = 0; c < l; ++c) {
    const auto& cent = g.classes()[c].centralizer;
    auto it = cache.find(cent);
    if (it == cache.end()) {
      auto view = std::make_shared<SubgroupView>(make_subgroup(g, cent));
      auto table = std::make_shared<CharacterTable>(character_table(*view, seed));
      it = cache.emplace(cent, std::make_pair(view, table)).first;
    }
    md.cent_views.push_back(it->second.first);
    md.cent_tables.push_back(it->second.second);
    std::vector<int> lookup(n, -1);
    const auto& view = *it->second.first;
    for (int a = 0; a < view.order(); ++a) lookup[view.elems[a]] = view.cls_of[a];
    md.cent_class_lookup.push_back(std::move(lookup));
  }

  // irrep blocks
  md.block_offsets.push_back(0);
  for (int c = 0; c < l; ++c) {
    int nc = md.cent_tables[c]->irrep_count();
    md.block_sizes.push_back(nc);
    long class_size = static_cast<long>(g.classes()[c].members.size());
    for (int s = 0; s < nc; ++s)
      md.irreps.push_back({c, s, class_size * md.cent_tables[c]->degrees[s]});
    md.block_offsets.push_back(md.block_offsets.back() + nc);
  }
  const int r = md.rank();

  // T: chi_sigma(c) / chi_sigma(e), c evaluated in its own centralizer
  md.T.resize(r);
  for (int i = 0; i < r; ++i) {
    const auto& irr = md.irreps[i];
    const auto& view = *md.cent_views[irr.class_index];
    const auto& table = *md.cent_tables[irr.class_index];
    int rep_local = view.local_of(g.classes()[irr.class_index].representative);
    int kc = view.cls_of[rep_local];
    std::complex<double> t =
        table.values(irr.cent_irrep, kc) / static_cast<double>(table.degrees[irr.cent_irrep]);
    if (std::abs(std::abs(t) - 1.0) > kModularTol) throw std::runtime_error("non-unitary T");
    md.T(i) = t;
  }

  // S via the coset-representative pair sum. Pairs of right cosets
  // (C(c) a, C(d) b) biject with pairs of class elements
  // (x, y) = (a^-1 c a, b^-1 d b); the primed commutation condition is
  // [x, y] = 1 and the witnesses recorded by the class enumeration conjugate
  // each argument back into the representative's centralizer.
  md.S.setZero(r, r);
  for (int ci = 0; ci < l; ++ci) {
    const auto& tc = *md.cent_tables[ci];
    const auto& lkc = md.cent_class_lookup[ci];
    int lc = tc.irrep_count();
    for (int di = ci; di < l; ++di) {
      const auto& td = *md.cent_tables[di];
      const auto& lkd = md.cent_class_lookup[di];
      int ld = td.irrep_count();
      Eigen::MatrixXd cnt = Eigen::MatrixXd::Zero(lc, ld);
      for (int x : g.classes()[ci].members) {
        int wx = g.witness(x);     // wx * rep_c * wx^-1 = x
        int wxi = g.inv(wx);
        for (int y : g.classes()[di].members) {
          if (g.mul(x, y) != g.mul(y, x)) continue;
          int wy = g.witness(y);
          // arguments wx^-1 y wx in C(rep_c), wy^-1 x wy in C(rep_d)
          int arg1 = g.mul(g.mul(wxi, y), wx);
          int arg2 = g.mul(g.mul(g.inv(wy), x), wy);
          int k1 = lkc[arg1], k2 = lkd[arg2];
          if (k1 < 0 || k2 < 0) throw std::runtime_error("modular data inconsistent");
          cnt(k1, k2) += 1.0;
        }
      }
      // block_{s,t} = sum_{k1,k2} conj(chi_s(k1)) cnt(k1,k2) conj(chi_t(k2))
      Eigen::MatrixXcd block = tc.values.conjugate() * cnt * td.values.transpose().conjugate();
      block /= static_cast<double>(n);
      md.S.block(md.block_offsets[ci], md.block_offsets[di], lc, ld) = block;
      if (di != ci)
        md.S.block(md.block_offsets[di], md.block_offsets[ci], ld, lc) = block.transpose();
    }
  }

  // conjugate map ([c], sigma) -> ([c^-1], sigma-bar through the witness iso)
  md.conjugate_map.assign(r, -1);
  for (int ci = 0; ci < l; ++ci) {
    int cbar = g.inverse_class(ci);
    const auto& view = *md.cent_views[ci];
    const auto& table = *md.cent_tables[ci];
    const auto& viewb = *md.cent_views[cbar];
    const auto& tableb = *md.cent_tables[cbar];
    // u conjugates rep(cbar) to rep(ci)^-1: u rep_b u^-1 = inv(rep_c)
    int inv_rep = g.inv(g.classes()[ci].representative);
    int u = g.witness(inv_rep);
    int ui = g.inv(u);
    // class map psi: classes of C(rep_b) -> classes of C(rep_c), x -> u x u^-1
    std::vector<int> psi(tableb.irrep_count());
    for (int cb = 0; cb < viewb.class_count(); ++cb) {
      int xb = viewb.elems[viewb.classes[cb].representative];
      int mapped = g.mul(g.mul(u, xb), ui);
      int local = view.local_of(mapped);
      if (local < 0) throw std::runtime_error("modular data inconsistent");
      psi[cb] = view.cls_of[local];
    }
    // sigma-bar = row of table(cbar) with chi_bar(x) = conj(chi_sigma(psi(x)))
    for (int s = 0; s < table.irrep_count(); ++s) {
      int found = -1;
      for (int sb = 0; sb < tableb.irrep_count() && found < 0; ++sb) {
        bool match = true;
        for (int cb = 0; cb < tableb.irrep_count() && match; ++cb)
          if (std::abs(tableb.values(sb, cb) - std::conj(table.values(s, psi[cb]))) > 1e-6)
            match = false;
        if (match) found = sb;
      }
      if (found < 0) throw std::runtime_error("modular data inconsistent");
      md.conjugate_map[md.block_offsets[ci] + s] = md.block_offsets[cbar] + found;
    }
  }

  // fail fast on gross inconsistency; full residual report via verify_modular
  double sym = (md.S - md.S.transpose()).cwiseAbs().maxCoeff();
  double unit = (md.S * md.S.adjoint() - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
  if (sym > kModularTol || unit > kModularTol)
    throw std::runtime_error("modular data inconsistent");
  return md;
}

Eigen::MatrixXcd s_matrix_direct(const GroupData& g, const ModularData& md) {
  const int l = g.class_count();
  const int n = g.order();
  const int r = md.rank();
  Eigen::MatrixXcd S(r, r);
  for (int ci = 0; ci < l; ++ci) {
    const auto& tc = *md.cent_tables[ci];
    const auto& lkc = md.cent_class_lookup[ci];
    int c = g.classes()[ci].representative;
    int lc = tc.irrep_count();
    for (int di = 0; di < l; ++di) {
      const auto& td = *md.cent_tables[di];
      const auto& lkd = md.cent_class_lookup[di];
      int d = g.classes()[di].representative;
      int ld = td.irrep_count();
      Eigen::MatrixXd cnt = Eigen::MatrixXd::Zero(lc, ld);
      for (int x = 0; x < n; ++x) {
        int xi = g.inv(x);
        int gdg = g.mul(g.mul(x, d), xi);
        if (g.mul(c, gdg) != g.mul(gdg, c)) continue;
        int gcg = g.mul(g.mul(xi, c), x);
        cnt(lkc[gdg], lkd[gcg]) += 1.0;
      }
      Eigen::MatrixXcd block = tc.values.conjugate() * cnt * td.values.transpose().conjugate();
      block /= static_cast<double>(g.classes()[ci].centralizer.size()) *
               static_cast<double>(g.classes()[di].centralizer.size());
      S.block(md.block_offsets[ci], md.block_offsets[di], lc, ld) = block;
    }
  }
  return S;
}

ModularVerification verify_modular(const ModularData& md) {
  const int r = md.rank();
  ModularVerification v;
  const auto& S = md.S;
  v.sym_residual = (S - S.transpose()).cwiseAbs().maxCoeff();
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(r, r);
  v.unitarity_residual = (S * S.adjoint() - I).cwiseAbs().maxCoeff();
  Eigen::MatrixXcd C = S * S;
  v.s4_residual = (C * C - I).cwiseAbs().maxCoeff();
  Eigen::MatrixXcd ST = S * md.T.asDiagonal();
  v.st3_residual = (ST * ST * ST - C).cwiseAbs().maxCoeff();
  // C as a rounded permutation
  double cres = 0;
  bool perm_ok = true, conj_ok = true;
  std::vector<int> colcount(r, 0);
  for (int i = 0; i < r; ++i) {
    int ones = 0, where = -1;
    for (int j = 0; j < r; ++j) {
      double rounded = std::round(C(i, j).real());
      cres = std::max(cres, std::abs(C(i, j) - rounded));
      if (rounded == 1.0) {
        ++ones;
        where = j;
      } else if (rounded != 0.0) {
        perm_ok = false;
      }
    }
    if (ones != 1) perm_ok = false;
    if (where >= 0) ++colcount[where];
    if (where != md.conjugate_map[i]) conj_ok = false;
  }
  for (int j = 0; j < r; ++j)
    if (colcount[j] != 1) perm_ok = false;
  v.c_residual = cres;
  v.c_is_permutation = perm_ok;
  v.c_matches_conjugation = conj_ok;
  v.t_order_is_exponent = md.t_order() == md.group->exponent();
  v.first_column_positive = true;
  for (int i = 0; i < r; ++i)
    if (S(i, 0).real() <= 0 || std::abs(S(i, 0).imag()) > kModularTol)
      v.first_column_positive = false;
  return v;
}

std::string modular_data_json(const ModularData& md) {
  nlohmann::json j;
  j["rank"] = md.rank();
  j["blocks"] = md.block_sizes;
  nlohmann::json labels = nlohmann::json::array();
  for (int i = 0; i < md.rank(); ++i)
    labels.push_back({{"class", md.irreps[i].class_index + 1},
                      {"sigma", md.irreps[i].cent_irrep + 1},
                      {"qdim", md.irreps[i].quantum_dimension}});
  j["irreps"] = std::move(labels);
  nlohmann::json S = nlohmann::json::array();
  for (int i = 0; i < md.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < md.rank(); ++k)
      row.push_back({md.S(i, k).real(), md.S(i, k).imag()});
    S.push_back(std::move(row));
  }
  j["S"] = std::move(S);
  nlohmann::json T = nlohmann::json::array();
  for (int i = 0; i < md.rank(); ++i) T.push_back({md.T(i).real(), md.T(i).imag()});
  j["T"] = std::move(T);
  return j.dump();
}

}  // namespace dd
