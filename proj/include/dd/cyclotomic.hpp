#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dd {

int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial Phi_n, lowest degree first,
/// length phi(n)+1, monic. Cached; n must be in [1, 168].
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

/// An element of Q(zeta_n), stored in the power basis 1, z, ..., z^{phi(n)-1}
/// modulo Phi_n. Coefficients are exact rationals in lowest terms (mpq invariant),
/// so equality of canonical forms is componentwise.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}

  static Cyclotomic zero(int conductor);
  static Cyclotomic one(int conductor);
  static Cyclotomic integer(long v, int conductor = 1);
  static Cyclotomic rational(const mpq_class& v, int conductor = 1);
  /// zeta_n^power
  static Cyclotomic zeta(int conductor, long power = 1);

  int conductor() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  /// true iff the value lies in Q (all basis coefficients beyond 1 vanish)
  bool is_rational() const;
  mpq_class rational_part() const { return c_[0]; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  /// exact division; throws std::domain_error on division by zero
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// complex conjugate (zeta -> zeta^{-1})
  Cyclotomic conj() const;
  Cyclotomic inverse() const;

  /// numeric value, sum of coeff_k * exp(2*pi*i*k/n)
  std::complex<double> embed() const;

  /// same value expressed in Q(zeta_m); m must be a multiple of the conductor
  Cyclotomic lifted(int m) const;

  /// "c0 + c1*z + c2*z^2 + ...@n"; inverse of parse()
  std::string to_string() const;
  static Cyclotomic parse(const std::string& text);

  std::size_t hash() const;

 private:
  Cyclotomic(int n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}
  static void reduce(int n, std::vector<mpq_class>& c);

  int n_;
  std::vector<mpq_class> c_;  // size phi(n_)
};

}  // namespace dd

template <>
struct std::hash<dd::Cyclotomic> {
  std::size_t operator()(const dd::Cyclotomic& c) const { return c.hash(); }
};
