#include "charvar/variety.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "charvar/common.hpp"
#include "charvar/traceword.hpp"

namespace charvar {

namespace {

struct Split {
  long am, an, d, mp, np;
};

Split split_mn(long m, long n) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be nonzero");
  long am = std::labs(m), an = std::labs(n);
  long d = std::gcd(am, an);
  return {am, an, d, am / d, an / d};
}

// Index of the component hit by the angle i/d (must be exactly integral).
ComponentId canonical_component(const UnitRational& angle, long d) {
  if (d % angle.den() != 0)
    throw std::logic_error("component angle " + angle.to_string() +
                           " is not a multiple of 1/" + std::to_string(d));
  long i = angle.num() * (d / angle.den()) % d;
  return std::min(i, d - i);
}

// Matrix row for a component index: C_1 first, C_{-1} second when d is even.
long row_of(ComponentId id, long d) {
  if (id == 0) return 0;
  if (d % 2 == 0) return id == d / 2 ? 1 : id + 1;
  return id;
}

std::vector<std::vector<long>> closed_form_matrix(long d, long mp, long np) {
  long k = d / 2 + 1;
  std::vector<std::vector<long>> a(k, std::vector<long>(k, 0));
  long diag_one = (mp - 1) * (np - 1) / 2;          // C_1 (and C_{-1} when present)
  long diag_zeta = (mp - 1) * np + mp * (np - 1);   // every other component
  long prod = mp * np;
  if (d % 2 == 1) {
    a[0][0] = diag_one;
    for (long i = 1; i < k; ++i) {
      a[i][i] = diag_zeta;
      a[0][i] = a[i][0] = 2 * prod;
      for (long j = i + 1; j < k; ++j) a[i][j] = a[j][i] = 4 * prod;
    }
  } else {
    a[0][0] = a[1][1] = diag_one;
    a[0][1] = a[1][0] = prod;
    for (long i = 2; i < k; ++i) {
      a[i][i] = diag_zeta;
      a[0][i] = a[i][0] = 2 * prod;
      a[1][i] = a[i][1] = 2 * prod;
      for (long j = i + 1; j < k; ++j) a[i][j] = a[j][i] = 4 * prod;
    }
  }
  return a;
}

} // namespace

IdealGenerators ideal_generators(long m, long n, long window) {
  Split sp = split_mn(m, n);
  if (window < 0) throw std::invalid_argument("window must be nonnegative");

  IdealGenerators out;
  out.J.push_back(F(m, n) - TriPoly(2));
  out.J.push_back(F(m + 1, n) - TriPoly::var_x());
  out.J.push_back(F(m, n - 1) - TriPoly::var_y());

  // F(i,k) - F(i-m,k-n) over the index box; (i,k) and (m-i,n-k) give the same
  // generator up to sign, and three pairs repeat the base generators.
  long bound = window + std::max(sp.am, sp.an);
  auto in_box = [bound](long i, long k) {
    return std::labs(i) <= bound && std::labs(k) <= bound;
  };
  auto is_base = [m, n](long i, long k) {
    return (i == m && k == n) || (i == 0 && k == 0) ||
           (i == m + 1 && k == n) || (i == -1 && k == 0) ||
           (i == m && k == n - 1) || (i == 0 && k == 1);
  };
  for (long i = -bound; i <= bound; ++i)
    for (long k = -bound; k <= bound; ++k) {
      if (2 * i == m && 2 * k == n) continue; // identically zero
      long pi = m - i, pk = n - k;
      if (in_box(pi, pk) && std::make_pair(pi, pk) < std::make_pair(i, k)) continue;
      if (is_base(i, k)) continue;
      out.J.push_back(F(i, k) - F(i - m, k - n));
    }

  out.I1.push_back(lift_x(fam_s(sp.am)));
  out.I1.push_back(lift_y(fam_s(sp.an)));
  out.I2.push_back(sp.am % 2 == 1 ? lift_x(fam_sigma(sp.am)) : lift_x(fam_f(sp.am / 2)));
  out.I2.push_back(sp.an % 2 == 1 ? lift_y(fam_sigma(sp.an)) : lift_y(fam_f(sp.an / 2)));
  out.I3_extra = poly_D();
  return out;
}

std::vector<Line> enumerate_lines(long m, long n) {
  Split sp = split_mn(m, n);
  std::vector<Line> out;
  for (long p = 1; 2 * p < sp.am; ++p)
    for (long q = 1; 2 * q < sp.an; ++q)
      out.push_back({UnitRational(p, sp.am), UnitRational(q, sp.an), LineFamily::I1});
  for (long p = 0; 2 * p + 1 < sp.am; ++p)
    for (long q = 0; 2 * q + 1 < sp.an; ++q)
      out.push_back({UnitRational(2 * p + 1, 2 * sp.am), UnitRational(2 * q + 1, 2 * sp.an),
                     LineFamily::I2});
  return out;
}

ComponentId component_of_angles(const UnitRational& ru, const UnitRational& rv, long m, long n) {
  Split sp = split_mn(m, n);
  return canonical_component(ru.pow(sp.mp) * rv.pow(sp.np).inverse(), sp.d);
}

std::pair<ComponentId, ComponentId> line_components(const Line& line, long m, long n) {
  // The point with z-angle x_angle + y_angle comes from (u,v) = (lambda,mu),
  // whose component test is lambda^{m'} = zeta^i mu^{n'}; the difference point
  // uses (lambda, mu^{-1}) and picks up the sum index instead.
  ComponentId at_sum = component_of_angles(line.x_angle, line.y_angle, m, n);
  ComponentId at_diff = component_of_angles(line.x_angle, line.y_angle.inverse(), m, n);
  return {at_sum, at_diff};
}

VarietyCounts count_components(long m, long n) {
  Split sp = split_mn(m, n);
  VarietyCounts c;
  long prod = (sp.am - 1) * (sp.an - 1);
  c.lines = sp.d % 2 == 1 ? prod / 2 : (prod + 1) / 2;
  c.abelian = sp.d / 2 + 1;
  c.total = c.lines + c.abelian;
  return c;
}

std::string component_label(ComponentId id, long d) {
  if (id == 0) return "C_1";
  if (d % 2 == 0 && id == d / 2) return "C_-1";
  return "C_zeta^" + std::to_string(id);
}

ComponentId component_of_row(long row, long d) {
  if (row == 0) return 0;
  if (d % 2 == 0) return row == 1 ? d / 2 : row - 1;
  return row;
}

VarietyReport intersection_matrix(long m, long n) {
  Split sp = split_mn(m, n);
  VarietyReport r;
  r.m = m;
  r.n = n;
  r.d = sp.d;
  r.mp = sp.mp;
  r.np = sp.np;
  r.lines = enumerate_lines(m, n);

  long k = sp.d / 2 + 1;
  for (long i = 0; i < k; ++i) r.components.push_back(i);

  std::vector<std::vector<long>> mat(k, std::vector<long>(k, 0));
  for (const Line& line : r.lines) {
    auto inc = line_components(line, m, n);
    r.incidence.push_back(inc);
    long r1 = row_of(inc.first, sp.d), r2 = row_of(inc.second, sp.d);
    mat[r1][r2] += 1;
    if (r1 != r2) mat[r2][r1] += 1;
  }

  auto expect = closed_form_matrix(sp.d, sp.mp, sp.np);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      if (mat[i][j] != expect[i][j])
        throw invariant_violation(
            "intersection matrix mismatch at (" + std::to_string(m) + "," +
            std::to_string(n) + ") cell (" + std::to_string(i) + "," + std::to_string(j) +
            "): enumerated " + std::to_string(mat[i][j]) + ", closed form " +
            std::to_string(expect[i][j]));

  r.counts = count_components(m, n);
  if (static_cast<long>(r.lines.size()) != r.counts.lines)
    throw invariant_violation(
        "line count mismatch at (" + std::to_string(m) + "," + std::to_string(n) +
        "): enumerated " + std::to_string(r.lines.size()) + ", closed form " +
        std::to_string(r.counts.lines));
  r.matrix = std::move(mat);
  return r;
}

std::array<UniPoly, 3> abelian_param(long m, long n) {
  Split sp = split_mn(m, n);
  // Signed cofactors keep the parametrized curve inside x^m = y^n for any signs;
  // f is even, so the first two coordinates match the positive case.
  long mps = m / sp.d, nps = n / sp.d;
  return {fam_f(nps), fam_f(mps), fam_f(nps + mps)};
}

std::vector<std::array<std::complex<double>, 3>>
abelian_samples(long m, long n, ComponentId id, int count, std::uint64_t seed) {
  Split sp = split_mn(m, n);
  if (id < 0 || id > sp.d / 2) throw std::invalid_argument("component index out of range");
  if (count < 0) throw std::invalid_argument("sample count must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> lograd(std::log(0.5), std::log(2.0));
  std::complex<double> zeta = std::polar(1.0, 2.0 * M_PI * static_cast<double>(id) /
                                                  static_cast<double>(sp.d));
  // Signed cofactors: solving u^{m/d} = zeta^i v^{n/d} puts the pair on x^m = y^n
  // whatever the signs of m and n.
  long mps = m / sp.d, nps = n / sp.d;
  std::vector<std::array<std::complex<double>, 3>> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    std::complex<double> v = std::polar(std::exp(lograd(rng)), angle(rng));
    std::complex<double> u = std::pow(zeta * std::pow(v, static_cast<double>(nps)),
                                      1.0 / static_cast<double>(mps));
    out.push_back({u + 1.0 / u, v + 1.0 / v, u * v + 1.0 / (u * v)});
  }
  return out;
}

long mirror_intersection_count(long m, long n) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("mirror count requires positive m, n");
  // Points (u + 1/u, v + 1/v, uv + 1/uv) with u^m = v^n = 1 or u^m = v^n = -1;
  // the class triple (u, v, uv) up to simultaneous inversion is the point.
  std::set<std::array<std::pair<long long, long long>, 3>> keys;
  auto add = [&keys](const UnitRational& u, const UnitRational& v) {
    UnitRational cu = u.conj_class(), cv = v.conj_class(), cuv = (u * v).conj_class();
    keys.insert({std::make_pair(cu.num(), cu.den()),
                 std::make_pair(cv.num(), cv.den()),
                 std::make_pair(cuv.num(), cuv.den())});
  };
  for (long p = 0; p < m; ++p)
    for (long q = 0; q < n; ++q) {
      add(UnitRational(p, m), UnitRational(q, n));
      add(UnitRational(2 * p + 1, 2 * m), UnitRational(2 * q + 1, 2 * n));
    }
  long enumerated = static_cast<long>(keys.size());
  long closed = m * n + 1;
  if (enumerated != closed)
    throw invariant_violation("mirror intersection count mismatch at (" + std::to_string(m) +
                              "," + std::to_string(n) + "): enumerated " +
                              std::to_string(enumerated) + ", closed form " +
                              std::to_string(closed));
  return enumerated;
}

TriPoly planar_model_m2(long m) {
  long am = std::labs(m);
  if (am % 2 == 0 || am < 3)
    throw std::invalid_argument("planar model requires odd m with |m| >= 3");
  TriPoly x = TriPoly::var_x(), y = TriPoly::var_y();
  return (x * x - y - TriPoly(2)) * lift_y(fam_sigma(am));
}

std::pair<TriPoly, TriPoly> char_map_m2(long m) {
  long am = std::labs(m);
  if (am % 2 == 0 || am < 3)
    throw std::invalid_argument("planar model requires odd m with |m| >= 3");
  return {F((am + 1) / 2, 1), TriPoly::var_x()};
}

double scaled_residual(const TriPoly& p, const std::array<std::complex<double>, 3>& at) {
  if (p.is_zero()) return 0.0;
  int deg = p.total_degree();
  std::vector<std::complex<double>> xp(deg + 1, 1.0), yp(deg + 1, 1.0), zp(deg + 1, 1.0);
  for (int i = 1; i <= deg; ++i) {
    xp[i] = xp[i - 1] * at[0];
    yp[i] = yp[i - 1] * at[1];
    zp[i] = zp[i - 1] * at[2];
  }
  std::complex<double> val = 0.0;
  double scale = 1.0;
  for (const auto& [mono, coeff] : p.terms()) {
    std::complex<double> term = xp[mono[0]] * yp[mono[1]] * zp[mono[2]];
    double c = coeff.get_d();
    val += c * term;
    scale += std::abs(c) * std::abs(term);
  }
  return std::abs(val) / scale;
}

namespace {

// tr(x^a y x^-1 y^-1) as a trace polynomial; swap = true builds y^a x y^-1 x^-1.
TriPoly power_commutator_trace(long a, bool swap) {
  Word w;
  char g = swap ? 'y' : 'x', h = swap ? 'x' : 'y';
  if (a != 0) w.push_back({g, a});
  w.push_back({h, 1});
  w.push_back({g, -1});
  w.push_back({h, -1});
  return reduce_trace(w);
}

// The bracket combination equal to s_m(X) * {sigma_n or f_{n/2}}(Y) * D.
// Each bracket F(i,k) - F(j,l) has i + j = m and k + l = n.
TriPoly product_bracket_combo(long m, long n) {
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

// s_m(X) * D as traces; the x/y roles flip when swap is set.
TriPoly half_power_commutator_form(long m, bool swap) {
  auto lift = [swap](const UniPoly& p) { return swap ? lift_y(p) : lift_x(p); };
  if (m % 2 != 0)
    return power_commutator_trace((m + 1) / 2, swap) + power_commutator_trace((m - 1) / 2, swap) -
           lift(fam_f((m - 3) / 2)) - lift(fam_f((m - 1) / 2));
  return power_commutator_trace(m / 2, swap) - lift(fam_f((m - 2) / 2));
}

} // namespace

TraceIdentityReport verify_trace_identities(long m, long n, int samples, std::uint64_t seed,
                                            double tol) {
  Split sp = split_mn(m, n);
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  TraceIdentityReport rep;
  rep.m = m;
  rep.n = n;

  auto exact = [&rep](const std::string& name, const TriPoly& lhs, const TriPoly& rhs) {
    rep.checks.push_back({name, lhs == rhs, 0.0});
  };
  TriPoly D = poly_D();

  exact("h(m)*D equals the power-commutator trace form in x",
        lift_x(fam_h(sp.am)) * D,
        power_commutator_trace(sp.am, false) - lift_x(fam_f(sp.am - 1)));
  exact("h(n)*D equals the power-commutator trace form in y",
        lift_y(fam_h(sp.an)) * D,
        power_commutator_trace(sp.an, true) - lift_y(fam_f(sp.an - 1)));
  exact("s(m)*D equals the half-power commutator trace form in x",
        lift_x(fam_s(sp.am)) * D, half_power_commutator_form(sp.am, false));
  exact("s(n)*D equals the half-power commutator trace form in y",
        lift_y(fam_s(sp.an)) * D, half_power_commutator_form(sp.an, true));

  TriPoly gx = sp.an % 2 != 0 ? lift_y(fam_sigma(sp.an)) : lift_y(fam_f(sp.an / 2));
  exact("s(m)*D times the odd-part factor in y matches its bracket combination",
        lift_x(fam_s(sp.am)) * gx * D, product_bracket_combo(sp.am, sp.an));
  TriPoly gy = sp.am % 2 != 0 ? lift_x(fam_sigma(sp.am)) : lift_x(fam_f(sp.am / 2));
  exact("s(n)*D times the odd-part factor in x matches its bracket combination",
        lift_y(fam_s(sp.an)) * gy * D, product_bracket_combo(sp.an, sp.am).swap_xy());

  // Numeric vanishing of the relation ideal window on the variety itself.
  IdealGenerators gens = ideal_generators(m, n, 2);
  std::vector<TriPoly> window = gens.J;
  auto lines = enumerate_lines(m, n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);

  double worst_line = 0.0;
  for (const Line& line : lines) {
    double a = line.x_angle.trace_value(), b = line.y_angle.trace_value();
    for (int c = 0; c < samples; ++c) {
      std::array<std::complex<double>, 3> at = {a, b, std::complex<double>(box(rng), box(rng))};
      for (const TriPoly& g : window) worst_line = std::max(worst_line, scaled_residual(g, at));
    }
  }
  rep.checks.push_back(
      {"relation window vanishes on every double line", worst_line <= tol, worst_line});

  double worst_pt = 0.0;
  for (const Line& line : lines) {
    double a = line.x_angle.trace_value(), b = line.y_angle.trace_value();
    UnitRational zsum = line.x_angle * line.y_angle;
    UnitRational zdiff = line.x_angle * line.y_angle.inverse();
    for (UnitRational zr : {zsum, zdiff}) {
      std::array<std::complex<double>, 3> at = {a, b, zr.trace_value()};
      worst_pt = std::max(worst_pt, scaled_residual(gens.I3_extra, at));
      for (const TriPoly& g : window) worst_pt = std::max(worst_pt, scaled_residual(g, at));
    }
  }
  rep.checks.push_back({"relation window and the commutator polynomial vanish at the singular points",
                        worst_pt <= tol, worst_pt});

  double worst_ab = 0.0;
  for (ComponentId id = 0; id <= sp.d / 2; ++id) {
    auto pts = abelian_samples(m, n, id, samples, seed + static_cast<std::uint64_t>(id) + 1);
    for (const auto& at : pts) {
      worst_ab = std::max(worst_ab, scaled_residual(gens.I3_extra, at));
      for (const TriPoly& g : window) worst_ab = std::max(worst_ab, scaled_residual(g, at));
    }
  }
  rep.checks.push_back({"relation window and the commutator polynomial vanish on abelian samples",
                        worst_ab <= tol, worst_ab});

  rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const CheckResult& c) { return c.pass; });
  return rep;
}

} // namespace charvar
