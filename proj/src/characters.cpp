#include "dd/characters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dd {

namespace {

// deterministic uniform doubles in (0,1), independent of libstdc++ distributions
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double next() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }
};

constexpr double kClusterTol = 1e-6;
constexpr double kOrthoTol = 1e-8;

struct Attempt {
  std::vector<int> degrees;
  Eigen::MatrixXcd values;
};

bool try_table(const SubgroupView& h, std::uint64_t seed, Attempt& out) {
  const int l = h.class_count();
  const int n = h.order();
  // structure constants a_{ij}^k of the class algebra: K_i K_j = sum_k a K_k
  std::vector<double> A(static_cast<std::size_t>(l) * l * l, 0.0);
  for (int k = 0; k < l; ++k) {
    int zk = h.classes[k].representative;
    for (int x = 0; x < n; ++x) {
      int y = h.mul(h.inv[x], zk);
      A[(static_cast<std::size_t>(h.cls_of[x]) * l + h.cls_of[y]) * l + k] += 1.0;
    }
  }
  SplitMix rng(seed);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(l, l);
  for (int i = 0; i < l; ++i) {
    double th = rng.next() * 2.0 - 1.0;
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) M(j, k) += th * A[(static_cast<std::size_t>(i) * l + j) * l + k];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M.cast<std::complex<double>>());
  if (es.info() != Eigen::Success) return false;
  // eigenvalue separation gate ("degenerate spectrum: reseed")
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b)
      if (std::abs(es.eigenvalues()(a) - es.eigenvalues()(b)) < kClusterTol) return false;

  std::vector<std::pair<int, Eigen::VectorXcd>> rows;  // (degree, character row)
  for (int t = 0; t < l; ++t) {
    Eigen::VectorXcd v = es.eigenvectors().col(t);
    if (std::abs(v(0)) < 1e-9) return false;
    v /= v(0);  // omega(K_identity) = 1
    double ssum = 0.0;
    for (int c = 0; c < l; ++c) ssum += std::norm(v(c)) / h.classes[c].members.size();
    double d = std::sqrt(static_cast<double>(n) / ssum);
    if (std::abs(d - std::round(d)) > 1e-6) return false;  // degree must be integral
    Eigen::VectorXcd chi(l);
    for (int c = 0; c < l; ++c) chi(c) = d * v(c) / static_cast<double>(h.classes[c].members.size());
    rows.emplace_back(static_cast<int>(std::lround(d)), std::move(chi));
  }
  // order: degree ascending, then entrywise (Re desc, Im desc); this places
  // the trivial character first among the linear ones
  auto snap = [](double x) { return std::round(x * 1e6) / 1e6; };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    for (int c = 0; c < a.second.size(); ++c) {
      double ar = snap(a.second(c).real()), br = snap(b.second(c).real());
      if (ar != br) return ar > br;
      double ai = snap(a.second(c).imag()), bi = snap(b.second(c).imag());
      if (ai != bi) return ai > bi;
    }
    return false;
  });
  long sum_sq = 0;
  out.degrees.clear();
  out.values.resize(l, l);
  for (int r = 0; r < l; ++r) {
    out.degrees.push_back(rows[r].first);
    out.values.row(r) = rows[r].second.transpose();
    sum_sq += static_cast<long>(rows[r].first) * rows[r].first;
  }
  if (sum_sq != n) return false;
  // orthogonality gate
  for (int r = 0; r < l; ++r)
    for (int s = 0; s < l; ++s) {
      std::complex<double> acc = 0.0;
      for (int c = 0; c < l; ++c)
        acc += static_cast<double>(h.classes[c].members.size()) * out.values(r, c) *
               std::conj(out.values(s, c));
      acc /= static_cast<double>(n);
      if (std::abs(acc - (r == s ? 1.0 : 0.0)) > kOrthoTol) return false;
    }
  return true;
}

}  // namespace

CharacterTable character_table(const SubgroupView& h, std::uint64_t seed) {
  const int l = h.class_count();
  Attempt at;
  bool ok = false;
  for (int retry = 0; retry < 40 && !ok; ++retry) ok = try_table(h, seed + retry, at);
  if (!ok) throw std::runtime_error("character recovery failed");

  CharacterTable t;
  t.group_order = h.order();
  t.exponent = h.exponent;
  t.degrees = std::move(at.degrees);
  t.values = std::move(at.values);
  for (int c = 0; c < l; ++c)
    t.class_sizes.push_back(static_cast<int>(h.classes[c].members.size()));
  for (int c = 0; c < l; ++c) t.inverse_class_map.push_back(h.inverse_class(c));
  t.power_maps.resize(h.exponent + 1);
  for (int k = 0; k <= h.exponent; ++k) {
    t.power_maps[k].resize(l);
    for (int c = 0; c < l; ++c) t.power_maps[k][c] = h.power_class(c, k);
  }
  // Frobenius-Schur: (1/|H|) sum_g chi(g^2) = (1/|H|) sum_c |c| chi([c^2])
  for (int r = 0; r < l; ++r) {
    std::complex<double> acc = 0.0;
    for (int c = 0; c < l; ++c)
      acc += static_cast<double>(t.class_sizes[c]) * t.values(r, h.power_class(c, 2));
    acc /= static_cast<double>(t.group_order);
    double re = acc.real();
    if (std::abs(acc.imag()) > 1e-8 ||
        (std::abs(re - 1) > 1e-8 && std::abs(re) > 1e-8 && std::abs(re + 1) > 1e-8))
      throw std::runtime_error("indicator anomaly");
    t.fs_indicators.push_back(static_cast<int>(std::lround(re)));
  }
  // conjugate rows: chi_bar(c) = conj(chi([c^{-1}]))... matched by value
  t.conjugate_row.assign(l, -1);
  for (int r = 0; r < l; ++r) {
    for (int s = 0; s < l; ++s) {
      bool match = true;
      for (int c = 0; c < l && match; ++c)
        if (std::abs(std::conj(t.values(r, c)) - t.values(s, c)) > 1e-6) match = false;
      if (match) {
        t.conjugate_row[r] = s;
        break;
      }
    }
    if (t.conjugate_row[r] < 0) throw std::runtime_error("character recovery failed");
  }
  return t;
}

int fs_indicator(const CharacterTable& t, int irrep) { return t.fs_indicators.at(irrep); }

std::vector<int> kernel(const SubgroupView& h, const CharacterTable& t, int irrep) {
  std::vector<int> out;
  const double d = t.degrees[irrep];
  for (int c = 0; c < t.irrep_count(); ++c)
    if (std::abs(t.values(irrep, c) - d) < 1e-8)
      for (int x : h.classes[c].members) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_faithful(const SubgroupView& h, const CharacterTable& t, int irrep) {
  return kernel(h, t, irrep).size() == 1;
}

std::vector<std::vector<std::vector<int>>> group_tensor_multiplicities(const CharacterTable& t) {
  const int l = t.irrep_count();
  std::vector<std::vector<std::vector<int>>> N(
      l, std::vector<std::vector<int>>(l, std::vector<int>(l, 0)));
  for (int r = 0; r < l; ++r)
    for (int s = 0; s < l; ++s)
      for (int u = 0; u < l; ++u) {
        std::complex<double> acc = 0.0;
        for (int c = 0; c < l; ++c)
          acc += static_cast<double>(t.class_sizes[c]) / t.group_order * t.values(r, c) *
                 t.values(s, c) * std::conj(t.values(u, c));
        double rounded = std::round(acc.real());
        if (std::abs(acc - rounded) > 1e-6 || rounded < -0.5)
          throw std::runtime_error("non-integral multiplicity");
        N[r][s][u] = static_cast<int>(rounded);
      }
  return N;
}

GroupSumruleResult group_sumrule(const CharacterTable& t) {
  auto N = group_tensor_multiplicities(t);
  const int l = t.irrep_count();
  GroupSumruleResult res;
  for (int i = 0; i < l; ++i) {
    int ibar = t.conjugate_row[i];
    bool ok = true;
    for (int j = 0; j < l && ok; ++j) {
      long si = 0, sbar = 0;
      for (int k = 0; k < l; ++k) {
        si += N[i][j][k];
        sbar += N[ibar][j][k];
      }
      if (si != sbar) ok = false;
    }
    if (!ok) {
      res.holds = false;
      res.violating_irreps.push_back(i);
    }
  }
  return res;
}

std::string character_table_csv(const CharacterTable& t) {
  std::ostringstream os;
  os << "class_size";
  for (int r = 0; r < t.irrep_count(); ++r) os << ",chi_" << (r + 1);
  os << "\n";
  for (int c = 0; c < t.irrep_count(); ++c) {
    os << t.class_sizes[c];
    for (int r = 0; r < t.irrep_count(); ++r) {
      auto v = t.values(r, c);
      os << "," << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace dd
