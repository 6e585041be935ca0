#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include <gmpxx.h>

#include "charvar/unipoly.hpp"

namespace charvar {

using Mono = std::array<int, 3>; // exponents of X, Y, Z

// Graded lexicographic order with X > Y > Z.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da < db;
    return a < b; // array lex on (i,j,k) = lex with X > Y > Z
  }
};

// Sparse integer polynomial in the trace coordinates X, Y, Z.
// No zero coefficients are stored; equality is structural.
class TriPoly {
public:
  TriPoly() = default;
  TriPoly(long v) { add_term({0, 0, 0}, mpz_class(v)); }
  TriPoly(mpz_class v) { add_term({0, 0, 0}, std::move(v)); }

  static TriPoly var_x() { return monomial({1, 0, 0}); }
  static TriPoly var_y() { return monomial({0, 1, 0}); }
  static TriPoly var_z() { return monomial({0, 0, 1}); }
  static TriPoly monomial(Mono m, mpz_class coeff = 1);

  bool is_zero() const { return t_.empty(); }
  int total_degree() const; // -1 for zero
  size_t term_count() const { return t_.size(); }
  mpz_class coeff(const Mono& m) const;
  const std::map<Mono, mpz_class, GrlexLess>& terms() const { return t_; }

  TriPoly operator-() const;
  TriPoly operator+(const TriPoly& o) const;
  TriPoly operator-(const TriPoly& o) const;
  TriPoly operator*(const TriPoly& o) const;
  TriPoly scaled(const mpz_class& k) const;
  bool operator==(const TriPoly& o) const { return t_ == o.t_; }
  bool operator!=(const TriPoly& o) const { return t_ != o.t_; }

  // (X, Y, Z) -> (-X, -Y, Z): flips the sign of terms with i + j odd.
  TriPoly kappa() const;

  // Swaps X and Y.
  TriPoly swap_xy() const;

  // (X, Y, Z) -> (X, Y, XY - Z). An involution.
  TriPoly mirror() const;

  std::complex<double> eval(std::complex<double> x, std::complex<double> y,
                            std::complex<double> z) const;

  std::string to_string() const;

private:
  void add_term(Mono m, mpz_class c);
  std::map<Mono, mpz_class, GrlexLess> t_;
};

// Substitutes X (resp. Y, Z) for the variable of a univariate polynomial.
TriPoly lift_x(const UniPoly& p);
TriPoly lift_y(const UniPoly& p);
TriPoly lift_z(const UniPoly& p);

// D = X^2 + Y^2 + Z^2 - XYZ - 4; tr of the commutator minus 2.
TriPoly poly_D();

// F(a,b): the unique polynomial with F(tr A, tr B, tr AB) = tr(A^a B^-b).
// Satisfies F(a+1,b) = X*F(a,b) - F(a-1,b) and F(j,b+1) = Y*F(j,b) - F(j,b-1),
// with F(0,b) = f_b(Y), F(1,0) = X, F(1,1) = XY - Z.
TriPoly F(long a, long b);

} // namespace charvar
