#include "charvar/unipoly.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace charvar {

UniPoly UniPoly::monomial(int deg, mpz_class coeff) {
  if (coeff == 0) return UniPoly();
  std::vector<mpz_class> c(deg + 1);
  c[deg] = std::move(coeff);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  std::vector<mpz_class> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<mpz_class> c(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const mpz_class& k) const {
  if (k == 0) return UniPoly();
  std::vector<mpz_class> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * k;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::at_negT() const {
  std::vector<mpz_class> c = c_;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::divexact(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("divexact: division by zero polynomial");
  if (is_zero()) return UniPoly();
  if (degree() < divisor.degree()) throw std::logic_error("divexact: degree underflow");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quot(degree() - divisor.degree() + 1, mpz_class(0));
  const mpz_class& lead = divisor.c_.back();
  for (int i = degree() - divisor.degree(); i >= 0; --i) {
    mpz_class& top = rem[i + divisor.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("divexact: leading coefficient does not divide");
    mpz_class q = top / lead;
    for (int j = 0; j <= divisor.degree(); ++j) rem[i + j] -= q * divisor.c_[j];
    quot[i] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("divexact: nonzero remainder");
  return UniPoly(std::move(quot));
}

double UniPoly::eval(double t) const {
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i].get_d();
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i].get_d();
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    mpz_class a = c_[i];
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

UniPoly fam_general(const UniPoly& c0, const UniPoly& c1, long k) {
  if (k < 0) throw std::invalid_argument("fam_general: k must be nonnegative");
  if (k == 0) return c0;
  UniPoly prev = c0, cur = c1;
  const UniPoly t = UniPoly::T();
  for (long i = 1; i < k; ++i) {
    UniPoly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly fam_f(long k) { return fam_general(UniPoly(2), UniPoly::T(), std::labs(k)); }

UniPoly fam_h(long k) {
  UniPoly h = fam_general(UniPoly(0), UniPoly(1), std::labs(k));
  return k < 0 ? -h : h;
}

namespace {

// s and sigma share the recursion P_k = T*P_{k-2} - P_{k-4}; they differ in P_3.
UniPoly s_like(long k, const UniPoly& p3) {
  // P_0..P_3 seed the two interleaved strands.
  UniPoly p[4] = {UniPoly(0), UniPoly(1), UniPoly(1), p3};
  if (k <= 3) return p[k];
  const UniPoly t = UniPoly::T();
  UniPoly a = p[k % 2], b = p[k % 2 + 2]; // values at parity-matched indices
  for (long i = k % 2 + 2; i < k; i += 2) {
    UniPoly next = t * b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

} // namespace

UniPoly fam_s(long k) {
  UniPoly s = s_like(std::labs(k), UniPoly(std::vector<mpz_class>{1, 1}));
  return k < 0 ? -s : s;
}

UniPoly fam_sigma(long k) {
  long a = std::labs(k);
  UniPoly sig = s_like(a, UniPoly(std::vector<mpz_class>{-1, 1}));
  if (k < 0 && a % 2 == 0) return -sig; // sigma_{-k} = (-1)^(k-1) sigma_k
  return sig;
}

UniPoly cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
  // Bottom-up over the divisors of n: c_d = (T^d - 1) / prod of c_e, e | d, e < d.
  std::vector<long> divs;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::map<long, UniPoly> table;
  for (long d : divs) {
    UniPoly num = UniPoly::monomial(static_cast<int>(d)) - UniPoly(1);
    for (long e : divs) {
      if (e >= d) break;
      if (d % e == 0) num = num.divexact(table.at(e));
    }
    table.emplace(d, std::move(num));
  }
  return table.at(n);
}

UniPoly r_poly(long n) {
  if (n < 1) throw std::invalid_argument("r_poly: n must be >= 1");
  if (n % 2 == 1) {
    UniPoly r = cyclotomic(n).at_negT();
    if (r.leading() < 0) r = -r;
    return r;
  }
  return cyclotomic(2 * n);
}

UniPoly q_poly(long n) {
  if (n < 1) throw std::invalid_argument("q_poly: n must be >= 1");
  if (n == 1) return UniPoly(std::vector<mpz_class>{-2, 1});
  if (n == 2) return UniPoly(std::vector<mpz_class>{2, 1});
  UniPoly c = cyclotomic(n);
  int deg = c.degree(); // phi(n), even for n >= 3
  if (deg % 2 != 0) throw std::logic_error("q_poly: odd cyclotomic degree");
  int half = deg / 2;
  for (int j = 0; j <= deg; ++j)
    if (c.coeff(j) != c.coeff(deg - j))
      throw std::logic_error("q_poly: cyclotomic polynomial not palindromic");
  // c(T)/T^half = a_half + sum_j a_{half+j} (T^j + T^-j), and T^j + T^-j = f_j(S).
  UniPoly q(c.coeff(half));
  for (int j = 1; j <= half; ++j) q = q + fam_f(j).scaled(c.coeff(half + j));
  return q;
}

std::vector<std::pair<long, UniPoly>> factor_family(FamilyKind kind, long k) {
  if (k == 0) throw std::invalid_argument("factor_family: k must be nonzero");
  long a = std::labs(k);
  std::vector<std::pair<long, UniPoly>> out;
  if (kind == FamilyKind::F) {
    for (long l = 1; l <= a; ++l)
      if (a % l == 0 && (a / l) % 2 == 1) out.emplace_back(4 * l, q_poly(4 * l));
    return out;
  }
  for (long l = 3; l <= a; ++l) {
    if (a % l != 0) continue;
    UniPoly q = q_poly(l);
    out.emplace_back(l, kind == FamilyKind::Sigma ? q.at_negT() : q);
  }
  return out;
}

} // namespace charvar
