// Acceptance suite: ten numbered criteria, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "charvar/common.hpp"
#include "charvar/recover.hpp"
#include "charvar/repvar.hpp"
#include "charvar/traceword.hpp"
#include "charvar/tripoly.hpp"
#include "charvar/unipoly.hpp"
#include "charvar/unit_rational.hpp"
#include "charvar/variety.hpp"

using namespace charvar;

namespace {

// Pinned tolerances. Residuals are scaled_residual values: |P(point)| divided
// by the sum of the evaluated term magnitudes, so they measure cancellation
// against the conditioning of the evaluation itself.
constexpr double kGeometryTol = 1e-8; // criterion 7
constexpr double kPlanarTol = 1e-7;   // criterion 9

// Runtime budgets in seconds.
constexpr double kBudgetCounts = 5.0;    // criterion 1
constexpr double kBudgetMatrices = 30.0; // criterion 2
constexpr double kBudgetFamilies = 10.0; // criterion 4
constexpr double kBudgetIdentities = 60.0; // criterion 6

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::scientific;
  ss.precision(2);
  ss << v;
  return ss.str();
}

std::string fmt_fixed(double v) {
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << v;
  return ss.str();
}

const std::array<std::pair<long, long>, 4> kSigns = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  if (count_components(3, 2).total != 2) return {false, "(3,2) total is not 2"};
  if (count_components(3, 3).total != 4) return {false, "(3,3) total is not 4"};
  if (count_components(4, 2).total != 4) return {false, "(4,2) total is not 4"};

  long pairs = 0;
  for (long m = 1; m <= 20; ++m)
    for (long n = 1; n <= m; ++n)
      for (const auto& [sm, sn] : kSigns) {
        VarietyCounts c = count_components(sm * m, sn * n);
        long d = std::gcd(m, n);
        std::set<long> orbits;
        for (long i = 0; i < d; ++i) orbits.insert(std::min(i, d - i));
        long enumerated = static_cast<long>(enumerate_lines(sm * m, sn * n).size()) +
                          static_cast<long>(orbits.size());
        if (enumerated != c.total) {
          std::ostringstream ss;
          ss << "enumeration " << enumerated << " vs closed form " << c.total << " at ("
             << sm * m << "," << sn * n << ")";
          return {false, ss.str()};
        }
        ++pairs;
      }
  double sec = seconds_since(t0);
  if (sec >= kBudgetCounts) return {false, "runtime " + fmt_fixed(sec) + "s exceeds 5s"};
  return {true, "(3,2)->2 (3,3)->4 (4,2)->4; closed form = enumeration on " +
                    std::to_string(pairs) + " signed pairs in " + fmt_fixed(sec) + "s"};
}

Outcome criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  long built = 0;
  for (long m = 2; m <= 16; ++m)
    for (long n = 2; n <= m; ++n) {
      try {
        intersection_matrix(m, n); // throws on any cell or count disagreement
        ++built;
      } catch (const invariant_violation& e) {
        return {false, e.what()};
      }
    }
  std::vector<std::vector<long>> big;
  try {
    big = intersection_matrix(42, 30).matrix;
  } catch (const invariant_violation& e) {
    return {false, std::string("(42,30): ") + e.what()};
  }
  bool cells = big.size() == 4 && big[0][0] == 12 && big[1][1] == 12 && big[2][2] == 58 &&
               big[0][1] == 35 && big[0][2] == 70 && big[1][2] == 70 && big[2][3] == 140;
  if (!cells) return {false, "(42,30) cells differ from (12, 12, 58, 35, 70, 70, 140)"};
  double sec = seconds_since(t0);
  if (sec >= kBudgetMatrices) return {false, "runtime " + fmt_fixed(sec) + "s exceeds 30s"};
  return {true, std::to_string(built) +
                    " matrices cross-checked cell by cell; (42,30) cells reproduced in " +
                    fmt_fixed(sec) + "s"};
}

Outcome criterion3() {
  long unique_hits = 0;
  for (long m = 2; m <= 16; ++m)
    for (long n = 2; n <= m; ++n) {
      if (std::gcd(m, n) < 2) continue;
      RecoveryResult r = recover(intersection_matrix(m, n).matrix);
      bool is_ambiguous_pair = (m == 3 && n == 3) || (m == 4 && n == 2);
      if (is_ambiguous_pair) {
        std::vector<std::pair<long, long>> want = {{3, 3}, {4, 2}};
        if (r.verdict != RecoveryVerdict::Ambiguous || r.pairs != want)
          return {false, "ambiguity pair not reported for (" + std::to_string(m) + "," +
                             std::to_string(n) + ")"};
      } else {
        if (r.verdict != RecoveryVerdict::Unique || r.pairs.size() != 1 ||
            r.pairs[0] != std::make_pair(m, n))
          return {false, "round trip failed at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")"};
        ++unique_hits;
      }
    }
  std::vector<std::pair<long, long>> want18 = {{37, 2}, {19, 3}, {13, 4}};
  if (candidates_from_line_count(18) != want18)
    return {false, "[[18]] candidates differ from {(37,2),(19,3),(13,4)}"};
  RecoveryResult r18 = recover({{18}});
  if (r18.verdict != RecoveryVerdict::Underdetermined || r18.pairs != want18)
    return {false, "[[18]] verdict is not underdetermined with the three candidates"};
  return {true, std::to_string(unique_hits) +
                    " unique round trips; {(3,3),(4,2)} ambiguous both ways; [[18]] -> "
                    "{(37,2),(19,3),(13,4)}"};
}

Outcome criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  UniPoly t = UniPoly::T();

  for (long k = 2; k <= 50; ++k) {
    if (fam_f(k) != t * fam_f(k - 1) - fam_f(k - 2)) return {false, "f recurrence fails"};
    if (fam_h(k) != t * fam_h(k - 1) - fam_h(k - 2)) return {false, "h recurrence fails"};
    if (k >= 4 && fam_s(k) != t * fam_s(k - 2) - fam_s(k - 4)) return {false, "s recurrence fails"};
    if (k >= 4 && fam_sigma(k) != t * fam_sigma(k - 2) - fam_sigma(k - 4))
      return {false, "sigma recurrence fails"};
  }
  for (long i = -25; i <= 25; ++i)
    for (long j = -25; j <= 25; ++j)
      if (fam_f(i) * fam_f(j) != fam_f(i + j) + fam_f(i - j))
        return {false, "product rule fails at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
  for (long k = 0; 2 * k + 1 <= 50; ++k) {
    if (fam_h(2 * k + 1) != fam_s(2 * k + 1) * fam_sigma(2 * k + 1))
      return {false, "odd h split fails"};
    if (fam_h(2 * k) != fam_s(2 * k) * fam_f(k)) return {false, "even h split fails"};
  }
  for (long k = 0; k <= 50; ++k) {
    UniPoly f = fam_f(k);
    if (f.at_negT() != (k % 2 == 0 ? f : -f)) return {false, "f parity fails"};
    UniPoly expect = fam_sigma(k);
    if (((k >= 1 ? k - 1 : 0) / 2) % 2 != 0) expect = -expect;
    if (fam_s(k).at_negT() != expect) return {false, "s/sigma parity fails"};
  }
  for (long m = 1; m <= 50; ++m) {
    if (m % 2 != 0) {
      UniPoly acc(1), alt(1), hacc(1);
      for (long i = 1; i <= (m - 1) / 2; ++i) {
        acc = acc + fam_f(i);
        alt = i % 2 == 1 ? alt - fam_f(i) : alt + fam_f(i);
        hacc = hacc + fam_f(2 * i);
      }
      UniPoly sig = fam_sigma(m);
      if (fam_s(m) != acc || (((m - 1) / 2) % 2 == 1 ? -sig : sig) != alt || fam_h(m) != hacc)
        return {false, "odd summation form fails at m=" + std::to_string(m)};
    } else {
      UniPoly hacc(0);
      for (long i = 1; i <= m / 2; ++i) hacc = hacc + fam_f(2 * i - 1);
      if (fam_h(m) != hacc) return {false, "even h summation form fails"};
      UniPoly acc = m % 4 == 0 ? UniPoly(0) : UniPoly(1);
      if (m % 4 == 0)
        for (long i = 1; i <= m / 4; ++i) acc = acc + fam_f(2 * i - 1);
      else
        for (long i = 1; i <= (m - 2) / 4; ++i) acc = acc + fam_f(2 * i);
      if (fam_s(m) != acc) return {false, "even s summation form fails"};
    }
  }

  for (long k = 1; k <= 60; ++k) {
    for (FamilyKind kind : {FamilyKind::F, FamilyKind::S, FamilyKind::Sigma}) {
      UniPoly prod(1);
      for (const auto& [q, p] : factor_family(kind, k)) prod = prod * p;
      if (kind == FamilyKind::Sigma && ((k - 1) / 2) % 2 != 0) prod = -prod;
      UniPoly target = kind == FamilyKind::F   ? fam_f(k)
                       : kind == FamilyKind::S ? fam_s(k)
                                               : fam_sigma(k);
      if (prod != target) return {false, "factor product fails at k=" + std::to_string(k)};
    }
    UniPoly cprod(1);
    for (long l = 1; l <= k; ++l)
      if (k % l == 0) cprod = cprod * cyclotomic(l);
    if (cprod != UniPoly::monomial(static_cast<int>(k)) - UniPoly(1))
      return {false, "cyclotomic product fails at k=" + std::to_string(k)};
  }
  double sec = seconds_since(t0);
  if (sec >= kBudgetFamilies) return {false, "runtime " + fmt_fixed(sec) + "s exceeds 10s"};
  return {true, "identities at k<=50, |i|,|j|<=25; factor and cyclotomic products at k<=60 in " +
                    fmt_fixed(sec) + "s"};
}

Outcome criterion5() {
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b) {
      Word w;
      if (a != 0) w.push_back({'x', a});
      if (b != 0) w.push_back({'y', -b});
      if (reduce_trace(w) != F(a, b))
        return {false, "reduce_trace(x^a y^-b) differs from F at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")"};
    }

  std::mt19937_64 rng(20240817);
  Mat2 A = random_sl2(101, 0.8);
  Mat2 B = random_sl2(202, 0.8);
  std::complex<double> x = A.trace(), y = B.trace(), z = (A * B).trace();
  double worst = 0.0;
  for (int tcase = 0; tcase < 500; ++tcase) {
    std::size_t len = 1 + rng() % 10;
    Word w;
    char gen = rng() % 2 ? 'x' : 'y';
    for (std::size_t i = 0; i < len; ++i) {
      long e = 1 + static_cast<long>(rng() % 4);
      if (rng() % 2) e = -e;
      w.push_back({gen, e});
      gen = gen == 'x' ? 'y' : 'x';
    }
    std::complex<double> expect = eval_word(w, A, B);
    std::complex<double> got = reduce_trace(w).eval(x, y, z);
    double rel = std::abs(got - expect) / std::max(1.0, std::abs(expect));
    worst = std::max(worst, rel);
    if (rel > 1e-9)
      return {false, "random word relative error " + fmt(rel) + " exceeds 1e-9"};
  }
  if (reduce_trace(parse_word("x y x^-1 y^-1")) != poly_D() + TriPoly(2))
    return {false, "commutator trace is not D + 2"};
  return {true, "F agreement for |a|,|b|<=8; 500 random words worst relative error " +
                    fmt(worst) + "; commutator trace = D + 2"};
}

// tr(x^a y x^-1 y^-1) via word reduction; swap exchanges the generator roles.
TriPoly pct(long a, bool swap) {
  Word w;
  char g = swap ? 'y' : 'x', h = swap ? 'x' : 'y';
  if (a != 0) w.push_back({g, a});
  w.push_back({h, 1});
  w.push_back({g, -1});
  w.push_back({h, -1});
  return reduce_trace(w);
}

// The four parity-matched bracket combinations equal to s_m(X)*g(Y)*D, where g
// is sigma_n for odd n and f_{n/2} for even n. Every bracket F(i,k) - F(j,l)
// satisfies i + j = m, k + l = n.
TriPoly bracket_combo(long m, long n) {
  if (m % 2 != 0 && n % 2 != 0) {
    TriPoly head = (F((m + 3) / 2, (n - 1) / 2) - F((m - 3) / 2, (n + 1) / 2)) +
                   (F((m + 1) / 2, (n - 1) / 2) - F((m - 1) / 2, (n + 1) / 2)) +
                   (F((m - 1) / 2, (n + 3) / 2) - F((m + 1) / 2, (n - 3) / 2)) +
                   (F((m - 3) / 2, (n + 3) / 2) - F((m + 3) / 2, (n - 3) / 2));
    TriPoly tail = (F((m + 1) / 2, (n - 1) / 2) - F((m - 1) / 2, (n + 1) / 2)) +
                   (F((m - 1) / 2, (n - 1) / 2) - F((m + 1) / 2, (n + 1) / 2));
    return head + F(1, -1) * tail;
  }
  if (m % 2 == 0 && n % 2 != 0) {
    TriPoly head = (F((m + 2) / 2, (n + 1) / 2) - F((m - 2) / 2, (n - 1) / 2)) +
                   (F((m - 2) / 2, (n - 3) / 2) - F((m + 2) / 2, (n + 3) / 2));
    TriPoly tail = F(m / 2, (n + 1) / 2) - F(m / 2, (n - 1) / 2);
    return head + F(1, 1) * tail;
  }
  if (m % 2 != 0 && n % 2 == 0) {
    TriPoly head = (F((m + 3) / 2, n / 2) - F((m - 3) / 2, n / 2)) +
                   (F((m + 1) / 2, n / 2) - F((m - 1) / 2, n / 2)) +
                   (F((m - 1) / 2, (n - 4) / 2) - F((m + 1) / 2, (n + 4) / 2)) +
                   (F((m - 3) / 2, (n - 4) / 2) - F((m + 3) / 2, (n + 4) / 2));
    TriPoly tail = (F((m + 1) / 2, (n + 2) / 2) - F((m - 1) / 2, (n - 2) / 2)) +
                   (F((m - 1) / 2, (n + 2) / 2) - F((m + 1) / 2, (n - 2) / 2));
    return head + F(1, 1) * tail;
  }
  TriPoly head = (F((m + 2) / 2, n / 2) - F((m - 2) / 2, n / 2)) +
                 (F((m - 2) / 2, (n - 4) / 2) - F((m + 2) / 2, (n + 4) / 2));
  TriPoly tail = F(m / 2, (n + 2) / 2) - F(m / 2, (n - 2) / 2);
  return head + F(1, 1) * tail;
}

Outcome criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  TriPoly D = poly_D();

  for (long m = 1; m <= 15; ++m)
    if (lift_x(fam_h(m)) * D != pct(m, false) - lift_x(fam_f(m - 1)))
      return {false, "h identity fails at m=" + std::to_string(m)};

  for (long m = 1; m <= 14; ++m) {
    TriPoly rhs = m % 2 != 0 ? pct((m + 1) / 2, false) + pct((m - 1) / 2, false) -
                                   lift_x(fam_f((m - 3) / 2)) - lift_x(fam_f((m - 1) / 2))
                             : pct(m / 2, false) - lift_x(fam_f((m - 2) / 2));
    if (lift_x(fam_s(m)) * D != rhs) return {false, "s identity fails at m=" + std::to_string(m)};
  }

  for (long m = 1; m <= 13; m += 2)
    for (long n = 2; n <= 12; n += 2)
      if (lift_x(fam_s(m)) * lift_y(fam_f(n / 2)) * D != bracket_combo(m, n))
        return {false, "odd-even lemma fails at (" + std::to_string(m) + "," + std::to_string(n) + ")"};

  for (long m = 1; m <= 13; m += 2)
    for (long n = 1; n <= 13; n += 2)
      if (lift_x(fam_s(m)) * lift_y(fam_sigma(n)) * D != bracket_combo(m, n))
        return {false, "odd-odd lemma fails at (" + std::to_string(m) + "," + std::to_string(n) + ")"};

  for (long m = 2; m <= 14; m += 2)
    for (long n = 1; n <= 13; n += 2)
      if (lift_x(fam_s(m)) * lift_y(fam_sigma(n)) * D != bracket_combo(m, n))
        return {false, "even-odd lemma fails at (" + std::to_string(m) + "," + std::to_string(n) + ")"};

  for (long m = 2; m <= 14; m += 2)
    for (long n = 2; n <= 14; n += 2)
      if (lift_x(fam_s(m)) * lift_y(fam_f(n / 2)) * D != bracket_combo(m, n))
        return {false, "even-even lemma fails at (" + std::to_string(m) + "," + std::to_string(n) + ")"};

  double sec = seconds_since(t0);
  if (sec >= kBudgetIdentities) return {false, "runtime " + fmt_fixed(sec) + "s exceeds 60s"};
  return {true, "h, s and all four parity product lemmas exact over the full ranges in " +
                    fmt_fixed(sec) + "s"};
}

Outcome criterion7() {
  const std::array<std::pair<long, long>, 6> pairs = {
      {{3, 2}, {5, 3}, {4, 2}, {4, 6}, {6, 4}, {9, 6}}};
  double worst = 0.0;
  for (const auto& [m, n] : pairs) {
    long d = std::gcd(m, n), mp = m / d, np = n / d;
    IdealGenerators gens = ideal_generators(m, n, 2);
    std::mt19937_64 rng(1234 + static_cast<std::uint64_t>(m * 100 + n));
    std::uniform_real_distribution<double> box(-2.0, 2.0);

    for (const Line& ln : enumerate_lines(m, n)) {
      double a = ln.x_angle.trace_value(), b = ln.y_angle.trace_value();
      for (int c = 0; c < 100; ++c) {
        std::array<std::complex<double>, 3> at = {a, b,
                                                  std::complex<double>(box(rng), box(rng))};
        for (const TriPoly& g : gens.J) worst = std::max(worst, scaled_residual(g, at));
      }
      auto [c1, c2] = line_components(ln, m, n);
      // Membership through the defining equation u^m' = zeta^i v^n', exact:
      // the sum point is witnessed by (lambda, mu), the difference point by
      // (lambda, 1/mu); the canonical index allows i or d - i.
      UnitRational xm = ln.x_angle.pow(mp), yn = ln.y_angle.pow(np);
      auto member = [d](const UnitRational& lhs, const UnitRational& rhs, ComponentId id) {
        return lhs == UnitRational(id, d) * rhs ||
               lhs == UnitRational((d - id) % d, d) * rhs;
      };
      if (!member(xm, yn, c1))
        return {false, "sum point off its component on a line of (" + std::to_string(m) + "," +
                           std::to_string(n) + ")"};
      if (!member(xm, yn.inverse(), c2))
        return {false, "difference point off its component on a line of (" + std::to_string(m) +
                           "," + std::to_string(n) + ")"};
      bool real_power = xm.is_one() || xm.is_minus_one() || yn.is_one() || yn.is_minus_one();
      if ((c1 == c2) != real_power)
        return {false, "coincidence dichotomy fails on a line of (" + std::to_string(m) + "," +
                           std::to_string(n) + ")"};
    }
    for (ComponentId id = 0; id <= d / 2; ++id)
      for (const auto& at : abelian_samples(m, n, id, 100, 7 + static_cast<std::uint64_t>(id)))
        for (const TriPoly& g : gens.J) worst = std::max(worst, scaled_residual(g, at));
  }
  if (worst > kGeometryTol)
    return {false, "max scaled residual " + fmt(worst) + " exceeds 1e-8"};
  return {true, "window residuals <= " + fmt(worst) +
                    " at 100 points per line and abelian set; all component predictions exact"};
}

Outcome criterion8() {
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 50; ++t) {
    TriPoly p;
    int terms = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < terms; ++i) {
      Mono mono = {static_cast<int>(rng() % 5), static_cast<int>(rng() % 5),
                   static_cast<int>(rng() % 5)};
      long c = 1 + static_cast<long>(rng() % 9);
      if (rng() % 2) c = -c;
      p = p + TriPoly::monomial(mono, c);
    }
    if (p.mirror().mirror() != p) return {false, "mirror is not an involution"};
  }

  if (mirror_intersection_count(3, 2) != 7) return {false, "(3,2) count is not 7"};

  long checked = 0;
  std::vector<std::string> defects;
  for (long m = 1; m <= 12; ++m)
    for (long n = 1; n <= m; ++n) {
      try {
        if (mirror_intersection_count(m, n) != m * n + 1)
          return {false, "count differs from mn+1 at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")"};
        ++checked;
      } catch (const invariant_violation&) {
        defects.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");
      }
    }
  if (!defects.empty()) {
    std::ostringstream ss;
    ss << "mirror involution exact on 50 polynomials and mn+1 holds on " << checked
       << " pairs, but enumeration gives mn+2 on the " << defects.size()
       << " pairs with both exponents even (first " << defects.front()
       << ": 6 points against the closed form 5); the stated count is wrong there";
    return {false, ss.str()};
  }
  return {true, "mirror involution exact on 50 polynomials; counts equal mn+1 on " +
                    std::to_string(checked) + " pairs; (3,2) -> 7"};
}

Outcome criterion9() {
  double worst = 0.0;
  for (long m : {3, 5, 7, 9}) {
    TriPoly plane = planar_model_m2(m);
    auto [first, second] = char_map_m2(m);
    std::mt19937_64 rng(9000 + static_cast<std::uint64_t>(m));
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    auto visit = [&](const std::array<std::complex<double>, 3>& at) {
      std::complex<double> u = first.eval(at[0], at[1], at[2]);
      std::complex<double> v = second.eval(at[0], at[1], at[2]);
      worst = std::max(worst, scaled_residual(plane, {u, v, 0.0}));
    };
    for (const Line& ln : enumerate_lines(m, 2))
      for (int c = 0; c < 100; ++c)
        visit({ln.x_angle.trace_value(), ln.y_angle.trace_value(),
               std::complex<double>(box(rng), box(rng))});
    for (const auto& at : abelian_samples(m, 2, 0, 100, 17)) visit(at);
  }
  if (worst > kPlanarTol)
    return {false, "max scaled residual " + fmt(worst) + " exceeds 1e-7"};
  return {true, "mapped samples zero the plane polynomial, max scaled residual " + fmt(worst)};
}

Outcome criterion10() {
  long pairs = 0;
  for (long m = 1; m <= 20; ++m)
    for (long n = 1; n <= m; ++n)
      for (const auto& [sm, sn] : kSigns) {
        long mm = sm * m, nn = sn * n;
        RepVarReport r = count_repvar(mm, nn);
        VarietyCounts c = count_components(mm, nn);
        if (r.irreducible != c.lines || r.abelian != c.abelian || r.total != c.total)
          return {false, "totals differ at (" + std::to_string(mm) + "," + std::to_string(nn) + ")"};
        long d = std::gcd(m, n);
        long closed = d % 2 != 0 ? 2 * (m - 1) * (n - 1) : 2 * ((m - 1) * (n - 1) + 1);
        if (r.metabelian != closed ||
            static_cast<long>(r.metabelian_labels.size()) != closed)
          return {false, "metabelian count differs at (" + std::to_string(mm) + "," +
                             std::to_string(nn) + ")"};

        std::vector<Line> lines = enumerate_lines(mm, nn);
        std::vector<MetabelianImage> images = metabelian_images(mm, nn);
        if (static_cast<long>(images.size()) != closed)
          return {false, "one image per label fails at (" + std::to_string(mm) + "," +
                             std::to_string(nn) + ")"};
        std::set<std::array<std::string, 3>> points;
        for (const MetabelianImage& im : images) {
          points.insert({im.xi.conj_class().to_string(), im.eta.conj_class().to_string(),
                         (im.xi * im.eta).conj_class().to_string()});
          const Line& ln = lines.at(im.line_index);
          auto [c1, c2] = line_components(ln, mm, nn);
          if ((im.component != c1 && im.component != c2) ||
              ln.x_angle != im.xi.conj_class() || ln.y_angle != im.eta.conj_class())
            return {false, "image off the enumerated incidences at (" + std::to_string(mm) + "," +
                               std::to_string(nn) + ")"};
        }
        if (2 * static_cast<long>(points.size()) != closed)
          return {false, "distinct images are not half the labels at (" + std::to_string(mm) +
                             "," + std::to_string(nn) + ")"};
        ++pairs;
      }
  return {true, "totals, metabelian formula, half-count images and incidences verified on " +
                    std::to_string(pairs) + " signed pairs"};
}

} // namespace

int main() {
  const std::array<std::pair<const char*, Outcome (*)()>, 10> criteria = {{
      {"component-count reproduction", criterion1},
      {"intersection-matrix reproduction", criterion2},
      {"recovery round-trip", criterion3},
      {"symbolic family suite", criterion4},
      {"trace calculus", criterion5},
      {"trace identity suite", criterion6},
      {"numeric ideal geometry", criterion7},
      {"mirror results", criterion8},
      {"planar n=2 model", criterion9},
      {"representation-variety consistency", criterion10},
  }};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = criteria[i].second();
    if (!o.pass) ++failures;
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].first << "): "
              << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
