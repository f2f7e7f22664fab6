#include "dd/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dd {

namespace {

constexpr double kIntegralityTol = 1e-6;
constexpr double kVanishTol = 1e-8;

Eigen::MatrixXi round_integral(const Eigen::MatrixXcd& m, const char* what) {
  Eigen::MatrixXi out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      double rounded = std::round(m(i, j).real());
      if (std::abs(m(i, j) - rounded) > kIntegralityTol || rounded < -0.5)
        throw std::runtime_error(what);
      out(i, j) = static_cast<int>(rounded);
    }
  return out;
}

}  // namespace

Eigen::MatrixXi SparseFusionMatrix::dense(int r) const {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(r, r);
  for (const auto& e : entries) m(e[0], e[1]) = e[2];
  return m;
}

long SparseFusionMatrix::row_sum(int j, int) const {
  long s = 0;
  for (const auto& e : entries)
    if (e[0] == j) s += e[2];
  return s;
}

Eigen::MatrixXi verlinde_matrix(const ModularData& md, int i) {
  const int r = md.rank();
  Eigen::VectorXcd diag(r);
  for (int l = 0; l < r; ++l) diag(l) = md.S(i, l) / md.S(0, l);
  Eigen::MatrixXcd Ni = md.S * diag.asDiagonal() * md.S.adjoint();
  return round_integral(Ni, "Verlinde integrality failure");
}

FusionData build_fusion(const ModularData& md, bool full_tensor, int jobs) {
  const int r = md.rank();
  FusionData fd;
  fd.rank = r;
  fd.full_tensor = full_tensor;
  // quantum dimensions, checked against the structural value |[c]| * d_sigma
  for (int i = 0; i < r; ++i) {
    double mu = (md.S(i, 0) / md.S(0, 0)).real();
    double imag = (md.S(i, 0) / md.S(0, 0)).imag();
    long rounded = std::lround(mu);
    if (std::abs(mu - rounded) > kVanishTol || std::abs(imag) > kVanishTol ||
        rounded != md.irreps[i].quantum_dimension)
      throw std::runtime_error("qdim inconsistency");
    fd.qdims.push_back(rounded);
    fd.global_dimension += mpz_class(rounded) * rounded;
  }
  // |D(G)| = |G|^2
  long order = md.group->order();
  if (fd.global_dimension != mpz_class(order) * order)
    throw std::runtime_error("qdim inconsistency");
  fd.phi.resize(r, r);
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < r; ++l) fd.phi(i, l) = md.S(i, l) / md.S(0, l);

  // aggregates from single sandwich products
  Eigen::VectorXcd col_sums = md.S.colwise().sum();
  {
    Eigen::VectorXcd t(r), x(r), w(r);
    for (int l = 0; l < r; ++l) {
      t(l) = std::conj(col_sums(l)) / md.S(0, l);
      x(l) = col_sums(l) / md.S(0, l);
      w(l) = std::norm(col_sums(l)) / md.S(0, l);
    }
    fd.row_sums = round_integral(md.S * t.asDiagonal() * md.S.transpose(),
                                 "Verlinde integrality failure");
    fd.X = round_integral(md.S * x.asDiagonal() * md.S.adjoint(),
                          "Verlinde integrality failure");
    Eigen::VectorXcd totals = md.S * w;
    for (int i = 0; i < r; ++i) {
      double v = totals(i).real();
      long rounded = std::lround(v);
      if (std::abs(totals(i) - static_cast<double>(rounded)) > 1e-5)
        throw std::runtime_error("Verlinde integrality failure");
      fd.row_totals.push_back(rounded);
      fd.d_B += mpz_class(rounded) * rounded;
    }
  }

  if (full_tensor) {
    fd.tensor.resize(r);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= r || failed.load()) return;
        try {
          Eigen::MatrixXi Ni = verlinde_matrix(md, i);
          SparseFusionMatrix sm;
          sm.irrep = i;
          for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
              if (Ni(j, k) != 0) sm.entries.push_back({j, k, Ni(j, k)});
          fd.tensor[i] = std::move(sm);
        } catch (...) {
          failed.store(true);
          return;
        }
      }
    };
    int nt = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failed.load()) throw std::runtime_error("Verlinde integrality failure");
  }
  return fd;
}

UnitsData find_units(const ModularData& md, const FusionData& fd) {
  const int r = md.rank();
  UnitsData u;
  for (int i = 0; i < r; ++i) {
    if (fd.qdims[i] != 1) continue;
    Eigen::MatrixXi Ni = fd.full_tensor ? fd.tensor[i].dense(r) : verlinde_matrix(md, i);
    bool perm = true;
    std::vector<int> J(r, -1);
    for (int j = 0; j < r && perm; ++j) {
      int ones = 0;
      for (int k = 0; k < r; ++k) {
        if (Ni(j, k) == 1) {
          ++ones;
          J[j] = k;
        } else if (Ni(j, k) != 0) {
          perm = false;
        }
      }
      if (ones != 1) perm = false;
    }
    if (perm) {
      u.unit_indices.push_back(i);
      u.permutations.push_back(std::move(J));
    }
  }
  const GroupData& g = *md.group;
  u.expected_count = static_cast<long>(g.center().size()) * g.abelianization_order();
  if (static_cast<long>(u.unit_indices.size()) != u.expected_count)
    throw std::runtime_error("unit-group anomaly");
  return u;
}

TypeClassification classify_types(const ModularData& md, const FusionData&) {
  const int r = md.rank();
  TypeClassification tc;
  tc.types.assign(r, IrrepType::Complex);
  // nu_i = a^T M^{(i)} b with M^{(i)}_{jk} = N_jk^i, a_j = S_1j T_j^2, b_k = S_1k / T_k^2
  Eigen::VectorXcd a(r), b(r);
  for (int j = 0; j < r; ++j) {
    a(j) = md.S(0, j) * md.T(j) * md.T(j);
    b(j) = md.S(0, j) / (md.T(j) * md.T(j));
  }
  for (int i = 0; i < r; ++i) {
    if (md.conjugate_map[i] != i) {
      ++tc.n_complex;
      continue;
    }
    Eigen::VectorXcd diag(r);
    for (int l = 0; l < r; ++l) diag(l) = std::conj(md.S(i, l)) / md.S(0, l);
    // M^{(i)} = S diag S^T   (N_jk^i as a matrix in (j,k))
    std::complex<double> nu = a.transpose() * (md.S * diag.asDiagonal() * md.S.transpose()) * b;
    double re = nu.real();
    if (std::abs(nu.imag()) > kIntegralityTol ||
        (std::abs(re - 1) > kIntegralityTol && std::abs(re + 1) > kIntegralityTol))
      throw std::runtime_error("indicator failure");
    if (re > 0) {
      tc.types[i] = IrrepType::Real;
      ++tc.n_real;
    } else {
      tc.types[i] = IrrepType::Quaternionic;
      ++tc.n_quaternionic;
    }
  }
  return tc;
}

SumRuleReport sum_rules(const ModularData& md, const FusionData& fd, const UnitsData& units,
                        const TypeClassification& types) {
  const int r = md.rank();
  SumRuleReport rep;
  rep.sigma = md.S.colwise().sum();
  rep.vanishing.resize(r);
  rep.unit_explained.assign(r, false);
  rep.accidental.assign(r, false);
  for (int j = 0; j < r; ++j) {
    rep.vanishing[j] = std::abs(rep.sigma(j)) < kVanishTol;
    for (int u : units.unit_indices)
      if (std::abs(fd.phi(u, j) - 1.0) > kVanishTol) {
        rep.unit_explained[j] = true;
        break;
      }
    rep.accidental[j] = rep.vanishing[j] && !rep.unit_explained[j];
    // Proposition 3 is a theorem: unit-explained forces a vanishing Sigma
    if (rep.unit_explained[j] && !rep.vanishing[j])
      throw std::logic_error("Proposition 3 violated");
  }
  // Eq.(7) through the integral row sums
  rep.eq7_holds = true;
  for (int i = 0; i < r; ++i) {
    int ibar = md.conjugate_map[i];
    bool ok = true;
    for (int j = 0; j < r && ok; ++j)
      if (fd.row_sums(i, j) != fd.row_sums(ibar, j)) ok = false;
    if (!ok) {
      rep.eq7_holds = false;
      rep.eq7_violators.push_back(i);
    }
    if (i != ibar) {
      if (ok)
        ++rep.satisfying_non_self_conjugate;
      else
        ++rep.violating_non_self_conjugate;
    }
  }
  // Eq.(9): X = X.C
  Eigen::MatrixXi XC(r, r);
  for (int j = 0; j < r; ++j) XC.col(md.conjugate_map[j]) = fd.X.col(j);
  rep.eq9_holds = (XC == fd.X);
  // Proposition 1: eq7 <=> every non-self-conjugate j has Sigma_j = 0
  bool rhs = true;
  for (int j = 0; j < r; ++j)
    if (md.conjugate_map[j] != j && !rep.vanishing[j]) rhs = false;
  if (rep.eq7_holds != rhs) throw std::logic_error("Proposition 1 violated");

  auto tally = [&](IrrepType t, std::array<int, 3>& out) {
    for (int j = 0; j < r; ++j) {
      if (types.types[j] != t) continue;
      ++out[0];
      if (rep.vanishing[j]) ++out[1];
      if (rep.accidental[j]) ++out[2];
    }
  };
  tally(IrrepType::Complex, rep.complex_counts);
  tally(IrrepType::Real, rep.real_counts);
  tally(IrrepType::Quaternionic, rep.quaternionic_counts);
  return rep;
}

std::string factored(const mpz_class& v) {
  mpz_class n = v;
  if (n <= 1) return n.get_str();
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const mpz_class& p, int e) {
    if (!first) os << "*";
    os << p.get_str();
    if (e > 1) os << "^" << e;
    first = false;
  };
  for (mpz_class p = 2; p * p <= n;) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      emit(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) emit(n, 1);
  return os.str();
}

}  // namespace dd
