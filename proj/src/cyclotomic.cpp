#include "dd/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dd {

namespace {

constexpr int kMaxConductor = 168;

void check_conductor(int n) {
  if (n < 1 || n > kMaxConductor)
    throw std::invalid_argument("conductor out of range [1,168]: " + std::to_string(n));
}

// exact division of integer polynomials, lowest degree first
std::vector<mpz_class> polydiv_exact(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> q(a.size() - b.size() + 1);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    mpz_class c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (std::size_t j = 0; j + 1 < b.size(); ++j)
    if (a[j] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

struct ReductionRows {
  // rows[k] = coefficients of x^{phi(n)+k} mod Phi_n, k = 0..phi(n)-2
  std::vector<std::vector<mpz_class>> rows;
};

std::mutex rows_mutex;

const ReductionRows& reduction_rows(int n) {
  const auto& phi = cyclotomic_polynomial(n);  // fetched before taking rows_mutex
  static std::map<int, ReductionRows> cache;
  std::lock_guard<std::mutex> lock(rows_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  int d = static_cast<int>(phi.size()) - 1;
  ReductionRows rr;
  // rows[k] = x^{d+k} mod Phi_n, enough for raw zeta powers and products
  int max_rows = std::max(2 * n, 2 * d) + 2;
  std::vector<mpz_class> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -phi[i];  // x^d
  for (int k = 0; k < max_rows; ++k) {
    rr.rows.push_back(cur);
    std::vector<mpz_class> nxt(d);
    mpz_class top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) nxt[i] -= top * phi[i];
    cur = std::move(nxt);
  }
  return cache.emplace(n, std::move(rr)).first->second;
}

int pdeg(const std::vector<mpq_class>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  check_conductor(n);
  static std::map<int, std::vector<mpz_class>> cache;
  static std::mutex poly_mutex;
  std::lock_guard<std::mutex> lock(poly_mutex);
  // compute iteratively so recursion does not re-lock
  for (int m = 1; m <= n; ++m) {
    if (cache.count(m)) continue;
    if (n % m != 0) continue;
    std::vector<mpz_class> poly(m + 1);
    poly[0] = -1;
    poly[m] = 1;
    for (int dd_ = 1; dd_ < m; ++dd_)
      if (m % dd_ == 0) poly = polydiv_exact(std::move(poly), cache.at(dd_));
    cache.emplace(m, std::move(poly));
  }
  return cache.at(n);
}

void Cyclotomic::reduce(int n, std::vector<mpq_class>& c) {
  int d = euler_phi(n);
  if (static_cast<int>(c.size()) > d) {
    const auto& rr = reduction_rows(n);
    for (int k = static_cast<int>(c.size()) - 1; k >= d; --k) {
      if (c[k] != 0) {
        const auto& row = rr.rows.at(k - d);
        for (int i = 0; i < d; ++i)
          if (row[i] != 0) c[i] += c[k] * row[i];
      }
    }
  }
  c.resize(d);
  for (auto& x : c) x.canonicalize();
}

Cyclotomic Cyclotomic::zero(int conductor) {
  check_conductor(conductor);
  return Cyclotomic(conductor, std::vector<mpq_class>(euler_phi(conductor)));
}

Cyclotomic Cyclotomic::one(int conductor) { return integer(1, conductor); }

Cyclotomic Cyclotomic::integer(long v, int conductor) {
  check_conductor(conductor);
  std::vector<mpq_class> c(euler_phi(conductor));
  c[0] = v;
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::rational(const mpq_class& v, int conductor) {
  check_conductor(conductor);
  std::vector<mpq_class> c(euler_phi(conductor));
  c[0] = v;
  c[0].canonicalize();
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::zeta(int conductor, long power) {
  check_conductor(conductor);
  long k = ((power % conductor) + conductor) % conductor;
  std::vector<mpq_class> c(k + 1);
  c[k] = 1;
  reduce(conductor, c);
  return Cyclotomic(conductor, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    int m = lcm_int(n_, o.n_);
    return lifted(m) + o.lifted(m);
  }
  std::vector<mpq_class> c(c_);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] += o.c_[i];
    c[i].canonicalize();
  }
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  std::vector<mpq_class> c(c_);
  for (auto& x : c) x = -x;
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    int m = lcm_int(n_, o.n_);
    return lifted(m) * o.lifted(m);
  }
  std::vector<mpq_class> prod(2 * c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce(n_, prod);
  return Cyclotomic(n_, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
  // extended Euclid against Phi_n over Q[x]
  const auto& phi_z = cyclotomic_polynomial(n_);
  std::vector<mpq_class> r0(phi_z.begin(), phi_z.end());
  std::vector<mpq_class> r1(c_);
  std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
  while (pdeg(r1) > 0) {
    int d0 = pdeg(r0), d1 = pdeg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    std::vector<mpq_class> rem = r0;
    std::vector<mpq_class> q(d0 - d1 + 1);
    for (int i = d0 - d1; i >= 0; --i) {
      mpq_class c = rem[i + d1] / r1[d1];
      c.canonicalize();
      q[i] = c;
      if (c != 0)
        for (int j = 0; j <= d1; ++j) {
          rem[i + j] -= c * r1[j];
          rem[i + j].canonicalize();
        }
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    std::vector<mpq_class> qs(q.size() + s1.size() - 1);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    std::vector<mpq_class> ns(std::max(s0.size(), qs.size()));
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (i < s0.size()) ns[i] += s0[i];
      if (i < qs.size()) ns[i] -= qs[i];
      ns[i].canonicalize();
    }
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  int d = pdeg(r1);
  if (d != 0) throw std::domain_error("division by zero in Q(zeta)");
  mpq_class lead = r1[0];
  std::vector<mpq_class> out(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    out[i] = s1[i] / lead;
    out[i].canonicalize();
  }
  reduce(n_, out);
  return Cyclotomic(n_, std::move(out));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    int m = lcm_int(n_, o.n_);
    return lifted(m) / o.lifted(m);
  }
  return *this * o.inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  int m = lcm_int(n_, o.n_);
  return lifted(m).c_ == o.lifted(m).c_;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic out = zero(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Cyclotomic t = zeta(n_, -static_cast<long>(i));
    for (auto& x : t.c_) x *= c_[i];
    out = out + t;
  }
  return out;
}

std::complex<double> Cyclotomic::embed() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double a = c_[k].get_d();
    double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / n_;
    acc += a * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return acc;
}

Cyclotomic Cyclotomic::lifted(int m) const {
  check_conductor(m);
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("conductor lift must be a multiple");
  long step = m / n_;
  std::vector<mpq_class> c(static_cast<std::size_t>(step) * (c_.size() - 1) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
  reduce(m, c);
  return Cyclotomic(m, std::move(c));
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (any) os << " + ";
    os << c_[k].get_str();
    if (k >= 1) os << "*z";
    if (k >= 2) os << "^" << k;
    any = true;
  }
  if (!any) os << "0";
  os << "@" << n_;
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  auto at = text.rfind('@');
  if (at == std::string::npos) throw std::invalid_argument("missing @conductor: " + text);
  int n = std::stoi(text.substr(at + 1));
  check_conductor(n);
  std::vector<mpq_class> c(euler_phi(n));
  std::string body = text.substr(0, at);
  // terms separated by " + "; coefficient sign lives inside the coefficient
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(" + ", pos);
    std::string term = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? body.size() : next + 3;
    if (term.empty()) continue;
    std::string coeff = term;
    long power = 0;
    auto star = term.find("*z");
    if (star != std::string::npos) {
      coeff = term.substr(0, star);
      std::string rest = term.substr(star + 2);
      power = rest.empty() ? 1 : std::stol(rest.substr(1));  // rest = "" or "^k"
    } else if (term == "z" || term.starts_with("z^")) {
      coeff = "1";
      power = term == "z" ? 1 : std::stol(term.substr(2));
    }
    mpq_class q(coeff);
    q.canonicalize();
    std::vector<mpq_class> t(static_cast<std::size_t>(power % n) + 1);
    t[power % n] = q;
    reduce(n, t);
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] += t[i];
      c[i].canonicalize();
    }
  }
  return Cyclotomic(n, std::move(c));
}

std::size_t Cyclotomic::hash() const {
  // stable mix of the canonical coefficients
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& x : c_) {
    mix(mpz_fdiv_ui(x.get_num().get_mpz_t(), 0xfffffffbULL));
    mix(mpz_fdiv_ui(x.get_den().get_mpz_t(), 0xfffffffbULL));
    mix(static_cast<std::uint64_t>(sgn(x) + 1));
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dd
