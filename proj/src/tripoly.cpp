#include "charvar/tripoly.hpp"

#include <sstream>
#include <vector>

namespace charvar {

TriPoly TriPoly::monomial(Mono m, mpz_class coeff) {
  TriPoly p;
  p.add_term(m, std::move(coeff));
  return p;
}

void TriPoly::add_term(Mono m, mpz_class c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, std::move(c));
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

int TriPoly::total_degree() const {
  if (t_.empty()) return -1;
  const Mono& m = t_.rbegin()->first; // grlex max has maximal total degree
  return m[0] + m[1] + m[2];
}

mpz_class TriPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? mpz_class(0) : it->second;
}

TriPoly TriPoly::operator-() const {
  TriPoly p;
  for (auto& [m, c] : t_) p.t_.emplace(m, -c);
  return p;
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
  TriPoly p = *this;
  for (auto& [m, c] : o.t_) p.add_term(m, c);
  return p;
}

TriPoly TriPoly::operator-(const TriPoly& o) const {
  TriPoly p = *this;
  for (auto& [m, c] : o.t_) p.add_term(m, -c);
  return p;
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
  TriPoly p;
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_)
      p.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
  return p;
}

TriPoly TriPoly::scaled(const mpz_class& k) const {
  TriPoly p;
  if (k == 0) return p;
  for (auto& [m, c] : t_) p.t_.emplace(m, c * k);
  return p;
}

TriPoly TriPoly::kappa() const {
  TriPoly p;
  for (auto& [m, c] : t_) p.t_.emplace(m, (m[0] + m[1]) % 2 != 0 ? -c : c);
  return p;
}

TriPoly TriPoly::swap_xy() const {
  TriPoly p;
  for (auto& [m, c] : t_) p.add_term({m[1], m[0], m[2]}, c);
  return p;
}

TriPoly TriPoly::mirror() const {
  // Z^k expands to sum_t C(k,t) (-1)^(k-t) X^t Y^t Z^(k-t).
  TriPoly p;
  for (auto& [m, c] : t_) {
    int k = m[2];
    mpz_class binom = 1;
    for (int t = 0; t <= k; ++t) {
      mpz_class term = c * binom;
      if ((k - t) % 2 != 0) term = -term;
      p.add_term({m[0] + t, m[1] + t, k - t}, std::move(term));
      binom = binom * (k - t) / (t + 1);
    }
  }
  return p;
}

std::complex<double> TriPoly::eval(std::complex<double> x, std::complex<double> y,
                                   std::complex<double> z) const {
  int dx = 0, dy = 0, dz = 0;
  for (auto& [m, c] : t_) {
    dx = std::max(dx, m[0]);
    dy = std::max(dy, m[1]);
    dz = std::max(dz, m[2]);
  }
  auto powers = [](std::complex<double> v, int n) {
    std::vector<std::complex<double>> pw(n + 1);
    pw[0] = 1.0;
    for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * v;
    return pw;
  };
  auto px = powers(x, dx), py = powers(y, dy), pz = powers(z, dz);
  std::complex<double> acc = 0.0;
  for (auto& [m, c] : t_) acc += c.get_d() * px[m[0]] * py[m[1]] * pz[m[2]];
  return acc;
}

std::string TriPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    mpz_class a = it->second;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const Mono& m = it->first;
    bool any_var = m[0] + m[1] + m[2] > 0;
    if (!any_var) {
      out << a.get_str();
      continue;
    }
    bool lead = true;
    if (a != 1) {
      out << a.get_str();
      lead = false;
    }
    const char* names[3] = {"X", "Y", "Z"};
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      if (!lead) out << "*";
      lead = false;
      out << names[v];
      if (m[v] > 1) out << "^" << m[v];
    }
  }
  return out.str();
}

namespace {

TriPoly lift(const UniPoly& p, int var) {
  TriPoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    mpz_class c = p.coeff(i);
    if (c == 0) continue;
    Mono m = {0, 0, 0};
    m[var] = i;
    out = out + TriPoly::monomial(m, c);
  }
  return out;
}

} // namespace

TriPoly lift_x(const UniPoly& p) { return lift(p, 0); }
TriPoly lift_y(const UniPoly& p) { return lift(p, 1); }
TriPoly lift_z(const UniPoly& p) { return lift(p, 2); }

TriPoly poly_D() {
  return TriPoly::monomial({2, 0, 0}) + TriPoly::monomial({0, 2, 0}) +
         TriPoly::monomial({0, 0, 2}) - TriPoly::monomial({1, 1, 1}) - TriPoly(4);
}

TriPoly F(long a, long b) {
  const TriPoly X = TriPoly::var_x(), Y = TriPoly::var_y(), Z = TriPoly::var_z();
  // Walk b first along the a=1 row, then walk a with the row pair (F(0,b), F(1,b)).
  TriPoly f1b_prev = X;                // F(1,0)
  TriPoly f1b = X * Y - Z;             // F(1,1)
  if (b == 0) {
    f1b = f1b_prev;
  } else if (b > 0) {
    for (long j = 1; j < b; ++j) {
      TriPoly next = Y * f1b - f1b_prev;
      f1b_prev = std::move(f1b);
      f1b = std::move(next);
    }
  } else {
    // F(1,b-1) = Y*F(1,b) - F(1,b+1), moving down from (F(1,1), F(1,0)).
    TriPoly hi = std::move(f1b); // F(1, j+1)
    TriPoly lo = f1b_prev;       // F(1, j), j = 0
    for (long j = 0; j > b; --j) {
      TriPoly next = Y * lo - hi;
      hi = std::move(lo);
      lo = std::move(next);
    }
    f1b = std::move(lo);
  }
  TriPoly f0b = lift_y(fam_f(b));
  if (a == 0) return f0b;
  if (a > 0) {
    TriPoly prev = std::move(f0b), cur = std::move(f1b);
    for (long i = 1; i < a; ++i) {
      TriPoly next = X * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // F(a-1,b) = X*F(a,b) - F(a+1,b), moving down from (F(1,b), F(0,b)).
  TriPoly hi = std::move(f1b); // F(i+1, b)
  TriPoly lo = std::move(f0b); // F(i, b), i = 0
  for (long i = 0; i > a; --i) {
    TriPoly next = X * lo - hi;
    hi = std::move(lo);
    lo = std::move(next);
  }
  return lo;
}

} // namespace charvar
