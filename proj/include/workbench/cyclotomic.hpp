#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/zlinalg.hpp"

namespace workbench {

/// Polynomial in Z[z], lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly monomial(const Int& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

  IntPoly derivative() const;
  /// Quotient by a monic divisor; throws Internal if the division leaves a remainder.
  IntPoly exact_div(const IntPoly& monic) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// k-th cyclotomic polynomial, computed as (z^k - 1) / prod_{d | k, d < k} Phi_d
/// and cached. Safe to call concurrently.
const IntPoly& cyclotomic(unsigned k);

/// Reduces a coefficient vector modulo the monic Phi_k in place, leaving phi(k) entries.
void reduce_mod_cyclotomic(std::vector<Int>& coeffs, unsigned k);

/// Element of Z[1/N][z]/(z^n - 1), stored as num / den with den a product of
/// primes dividing N and no such prime dividing den and every entry of num.
class CycPoly {
 public:
  /// Coefficients beyond degree n-1 are folded with z^n = 1.
  CycPoly(unsigned n, Int localization, std::vector<Int> num, Int den = 1);
  static CycPoly zero(unsigned n, const Int& localization);
  static CycPoly one(unsigned n, const Int& localization);
  static CycPoly monomial(unsigned n, const Int& localization, unsigned power, const Int& c = 1);

  unsigned n() const noexcept { return n_; }
  const Int& localization() const noexcept { return big_n_; }
  const std::vector<Int>& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }
  Rat coeff(std::size_t i) const { return Rat(num_.at(i), den_); }
  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }

  CycPoly scaled(const Int& factor) const;

  friend CycPoly operator+(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator-(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  CycPoly operator-() const;
  friend bool operator==(const CycPoly&, const CycPoly&) = default;

  std::string to_string() const;

 private:
  unsigned n_;
  Int big_n_;
  std::vector<Int> num_;
  Int den_;
};

/// Element of Z[theta_n, 1/N] = Z[1/N][z]/(Phi_n), num has phi(n) entries.
class CycEltN {
 public:
  /// Coefficients of any length are reduced modulo Phi_n.
  CycEltN(unsigned n, Int localization, std::vector<Int> num, Int den = 1);
  static CycEltN zero(unsigned n, const Int& localization);
  static CycEltN one(unsigned n, const Int& localization);
  static CycEltN from_int(unsigned n, const Int& localization, const Int& c);

  unsigned n() const noexcept { return n_; }
  const Int& localization() const noexcept { return big_n_; }
  const std::vector<Int>& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }
  bool is_zero() const;

  CycEltN scaled(const Int& factor) const;

  friend CycEltN operator+(const CycEltN& a, const CycEltN& b);
  friend CycEltN operator-(const CycEltN& a, const CycEltN& b);
  friend CycEltN operator*(const CycEltN& a, const CycEltN& b);
  CycEltN operator-() const;
  friend bool operator==(const CycEltN&, const CycEltN&) = default;

  std::string to_string() const;

 private:
  unsigned n_;
  Int big_n_;
  std::vector<Int> num_;
  Int den_;
};

CycPoly cyc_add(const CycPoly& a, const CycPoly& b);
CycPoly cyc_sub(const CycPoly& a, const CycPoly& b);
CycPoly cyc_mul(const CycPoly& a, const CycPoly& b);

/// psi_{n,k} = (z/n) Phi_k'(z) prod_{d | n, d != k} Phi_d(z) mod z^n - 1, over
/// Z[1/N]. N defaults to n and must be divisible by every prime of n.
CycPoly psi(unsigned n, unsigned k, const Int& localization = 0);

/// Image under z -> theta_n^j, kept in Z[theta_n, 1/N].
CycEltN evaluate_at_root(const CycPoly& a, long long j);

/// Components a mod Phi_k for the divisors k of n, increasing.
std::vector<CycEltN> crt_split(const CycPoly& a);
/// Inverse of crt_split: sum_k psi_{n,k} * lift(part_k).
CycPoly crt_join(unsigned n, const std::vector<CycEltN>& parts);

/// Galois automorphism z -> z^k of Z[theta_n, 1/N]; k must be a unit mod n.
CycEltN galois(const CycEltN& a, long long k);

/// Inclusion Z[theta_k] -> Z[theta_n] (z -> z^{n/k}) for k | n.
CycEltN embed(const CycEltN& a, unsigned n);
/// Preimage of a under embed into Z[theta_k, 1/N], if one exists.
std::optional<CycEltN> descend(const CycEltN& a, unsigned k);

}  // namespace workbench
