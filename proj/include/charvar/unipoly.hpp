#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "charvar/common.hpp"

namespace charvar {

// Dense univariate polynomial over the integers, little-endian coefficients.
// The zero polynomial has degree -1 and prints as "0".
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(long v) : c_{mpz_class(v)} { trim(); }
  UniPoly(mpz_class v) : c_{std::move(v)} { trim(); }
  explicit UniPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly T() { return monomial(1); }
  static UniPoly monomial(int deg, mpz_class coeff = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpz_class coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpz_class(0);
  }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const mpz_class& k) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  // Substitutes -T for T (flips the sign of odd-degree coefficients).
  UniPoly at_negT() const;

  // Exact division; throws std::logic_error if the remainder is nonzero or a
  // quotient step does not divide.
  UniPoly divexact(const UniPoly& divisor) const;

  double eval(double t) const;
  std::complex<double> eval(std::complex<double> t) const;

  std::string to_string(const std::string& var = "T") const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

// Generic three-term family: P_0 = c0, P_1 = c1, P_k = T*P_{k-1} - P_{k-2}.
// k must be nonnegative.
UniPoly fam_general(const UniPoly& c0, const UniPoly& c1, long k);

// f_k: f_0 = 2, f_1 = T, extended to negative k by f_{-k} = f_k.
// f_k(u + 1/u) = u^k + u^-k.
UniPoly fam_f(long k);

// h_k: h_0 = 0, h_1 = 1, extended by h_{-k} = -h_k.
UniPoly fam_h(long k);

// s_k: s_0 = 0, s_1 = s_2 = 1, s_3 = T+1, s_k = T*s_{k-2} - s_{k-4};
// extended by s_{-k} = -s_k.
UniPoly fam_s(long k);

// sigma_k: same recursion as s_k with sigma_3 = T-1;
// extended by sigma_{-k} = (-1)^{k-1} sigma_k.
UniPoly fam_sigma(long k);

// The n-th cyclotomic polynomial, computed by exact division of T^n - 1 by
// the cyclotomic polynomials of the proper divisors of n. n >= 1.
UniPoly cyclotomic(long n);

// r_n: the irreducible factors of T^k + 1, indexed so that the product of
// r_n over n | k with k/n odd equals T^k + 1. Normalized monic.
UniPoly r_poly(long n);

// q_n: for n >= 3, the monic integer polynomial with
// cyclotomic(n)(T) = T^(phi(n)/2) * q_n(T + 1/T); q_1 = T-2, q_2 = T+2.
UniPoly q_poly(long n);

enum class FamilyKind { F, S, Sigma };

// Irreducible factorization of the family polynomial at |k|:
//   f_k     = prod q_{4l} over l | k with k/l odd          -> pairs (4l, q_{4l})
//   s_k     = prod q_l over l | k, l not in {1,2}          -> pairs (l, q_l)
//   sigma_k = sign * prod q_l(-T) over the same index set  -> pairs (l, q_l(-T))
// where sign = (-1)^floor((|k|-1)/2). k must be nonzero.
std::vector<std::pair<long, UniPoly>> factor_family(FamilyKind kind, long k);

} // namespace charvar
