#include "charvar/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "charvar/common.hpp"
#include "charvar/recover.hpp"
#include "charvar/repvar.hpp"
#include "charvar/traceword.hpp"
#include "charvar/tripoly.hpp"
#include "charvar/unipoly.hpp"
#include "charvar/unit_rational.hpp"
#include "charvar/variety.hpp"

namespace charvar {
namespace {

using nlohmann::ordered_json;

// Exact integers are rendered as strings in JSON; only floating samples and
// residuals are emitted as JSON numbers.
std::string istr(long v) { return std::to_string(v); }

ordered_json unipoly_json(const UniPoly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const mpz_class& c : p.coeffs()) coeffs.push_back(c.get_str());
  ordered_json j;
  j["text"] = p.to_string();
  j["degree"] = istr(p.degree());
  j["coeffs"] = coeffs;
  return j;
}

ordered_json tripoly_json(const TriPoly& p) {
  ordered_json terms = ordered_json::array();
  const auto& m = p.terms();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    ordered_json t;
    t["x"] = istr(it->first[0]);
    t["y"] = istr(it->first[1]);
    t["z"] = istr(it->first[2]);
    t["coeff"] = it->second.get_str();
    terms.push_back(t);
  }
  ordered_json j;
  j["text"] = p.to_string();
  j["terms"] = terms;
  return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// Inverse of component_of_row: matrix row index of a component id.
long row_of_component(ComponentId id, long d) {
  if (id == 0) return 0;
  if (d % 2 == 0) return id == d / 2 ? 1 : id + 1;
  return id;
}

const char* family_name(LineFamily f) { return f == LineFamily::I1 ? "I1" : "I2"; }

long sigma_factor_sign(long k) { return ((k - 1) / 2) % 2 != 0 ? -1 : 1; }

struct Opts {
  long m = 0, n = 0, window = 2;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::string format = "text";
  std::string section = "all";
  bool all_sections = false;
  std::string matrix_text, kind, word;
  long k = 0, a = 0, b = 0;
};

int cmd_family(const Opts& o, std::ostream& out) {
  UniPoly value;
  if (o.kind == "f") value = fam_f(o.k);
  else if (o.kind == "h") value = fam_h(o.k);
  else if (o.kind == "s") value = fam_s(o.k);
  else if (o.kind == "sigma") value = fam_sigma(o.k);
  else if (o.kind == "c") value = cyclotomic(o.k);
  else if (o.kind == "r") value = r_poly(o.k);
  else value = q_poly(o.k);

  bool factored = (o.kind == "f" || o.kind == "s" || o.kind == "sigma") && o.k >= 1;
  std::vector<std::pair<long, UniPoly>> factors;
  long sign = 1;
  if (factored) {
    FamilyKind fk = o.kind == "f"   ? FamilyKind::F
                    : o.kind == "s" ? FamilyKind::S
                                    : FamilyKind::Sigma;
    factors = factor_family(fk, o.k);
    if (o.kind == "sigma") sign = sigma_factor_sign(o.k);
  }

  if (o.format == "json") {
    ordered_json j;
    j["kind"] = o.kind;
    j["k"] = istr(o.k);
    j["value"] = unipoly_json(value);
    if (factored) {
      j["sign"] = istr(sign);
      ordered_json fs = ordered_json::array();
      for (const auto& [q, poly] : factors) {
        ordered_json f;
        f["q"] = istr(q);
        f["poly"] = unipoly_json(poly);
        fs.push_back(f);
      }
      j["factors"] = fs;
    }
    emit(out, j);
  } else {
    out << o.kind << "_" << o.k << " = " << value.to_string() << "\n";
    if (factored) {
      out << "sign: " << sign << "\n";
      for (const auto& [q, poly] : factors)
        out << "factor q_" << q << (o.kind == "sigma" ? "(-T)" : "") << " = "
            << poly.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_trace_poly(const Opts& o, std::ostream& out) {
  TriPoly p = F(o.a, o.b);
  if (o.format == "json") {
    ordered_json j;
    j["a"] = istr(o.a);
    j["b"] = istr(o.b);
    j["value"] = tripoly_json(p);
    emit(out, j);
  } else {
    out << "F(" << o.a << "," << o.b << ") = " << p.to_string() << "\n";
  }
  return 0;
}

int cmd_reduce(const Opts& o, std::ostream& out) {
  Word w = parse_word(o.word);
  TriPoly p = reduce_trace(w);
  if (o.format == "json") {
    ordered_json j;
    j["word"] = word_to_string(w);
    j["value"] = tripoly_json(p);
    emit(out, j);
  } else {
    out << p.to_string() << "\n";
  }
  return 0;
}

int cmd_ideal(const Opts& o, std::ostream& out) {
  IdealGenerators g = ideal_generators(o.m, o.n, o.window);
  if (o.format == "json") {
    ordered_json j;
    j["m"] = istr(o.m);
    j["n"] = istr(o.n);
    j["window"] = istr(o.window);
    auto arr = [](const std::vector<TriPoly>& v) {
      ordered_json a = ordered_json::array();
      for (const TriPoly& p : v) a.push_back(tripoly_json(p));
      return a;
    };
    j["J"] = arr(g.J);
    j["I1"] = arr(g.I1);
    j["I2"] = arr(g.I2);
    j["I3_extra"] = tripoly_json(g.I3_extra);
    emit(out, j);
  } else {
    out << "ideal m=" << o.m << " n=" << o.n << " window=" << o.window << "\n";
    for (std::size_t i = 0; i < g.J.size(); ++i)
      out << "J[" << i << "] = " << g.J[i].to_string() << "\n";
    for (std::size_t i = 0; i < g.I1.size(); ++i)
      out << "I1[" << i << "] = " << g.I1[i].to_string() << "\n";
    for (std::size_t i = 0; i < g.I2.size(); ++i)
      out << "I2[" << i << "] = " << g.I2[i].to_string() << "\n";
    out << "I3_extra = " << g.I3_extra.to_string() << "\n";
  }
  return 0;
}

int cmd_variety(const Opts& o, std::ostream& out) {
  VarietyReport r = intersection_matrix(o.m, o.n);
  long rows = static_cast<long>(r.matrix.size());
  std::vector<std::string> row_labels;
  for (long row = 0; row < rows; ++row)
    row_labels.push_back(component_label(component_of_row(row, r.d), r.d));

  if (o.format == "json") {
    ordered_json j;
    j["m"] = istr(r.m);
    j["n"] = istr(r.n);
    j["d"] = istr(r.d);
    j["m_prime"] = istr(r.mp);
    j["n_prime"] = istr(r.np);
    j["components"] = row_labels;
    j["counts"] = ordered_json{{"lines", istr(r.counts.lines)},
                               {"abelian", istr(r.counts.abelian)},
                               {"total", istr(r.counts.total)}};
    ordered_json mat = ordered_json::array();
    for (const auto& row : r.matrix) {
      ordered_json jr = ordered_json::array();
      for (long v : row) jr.push_back(istr(v));
      mat.push_back(jr);
    }
    j["matrix"] = mat;
    ordered_json lines = ordered_json::array();
    for (std::size_t i = 0; i < r.lines.size(); ++i) {
      const Line& ln = r.lines[i];
      ordered_json jl;
      jl["index"] = istr(static_cast<long>(i));
      jl["family"] = family_name(ln.family);
      jl["x_angle"] = ln.x_angle.to_string();
      jl["y_angle"] = ln.y_angle.to_string();
      jl["points"] = ordered_json::array({component_label(r.incidence[i].first, r.d),
                                          component_label(r.incidence[i].second, r.d)});
      lines.push_back(jl);
    }
    j["lines"] = lines;
    emit(out, j);
  } else if (o.format == "dot") {
    out << "graph character_variety {\n";
    out << "  label=\"m=" << r.m << " n=" << r.n << "\";\n";
    for (long row = 0; row < rows; ++row)
      out << "  c" << row << " [label=\"" << row_labels[row] << "\"];\n";
    for (std::size_t i = 0; i < r.lines.size(); ++i) {
      const Line& ln = r.lines[i];
      out << "  c" << row_of_component(r.incidence[i].first, r.d) << " -- c"
          << row_of_component(r.incidence[i].second, r.d) << " [label=\""
          << family_name(ln.family) << " " << ln.x_angle.to_string() << " "
          << ln.y_angle.to_string() << "\"];\n";
    }
    out << "}\n";
  } else {
    out << "variety m=" << r.m << " n=" << r.n << "\n";
    out << "d=" << r.d << " m'=" << r.mp << " n'=" << r.np << "\n";
    out << "components:";
    for (const std::string& s : row_labels) out << " " << s;
    out << "\n";
    out << "counts: lines=" << r.counts.lines << " abelian=" << r.counts.abelian
        << " total=" << r.counts.total << "\n";
    for (long row = 0; row < rows; ++row) {
      out << "row " << row_labels[row] << ":";
      for (long v : r.matrix[row]) out << " " << v;
      out << "\n";
    }
    for (std::size_t i = 0; i < r.lines.size(); ++i) {
      const Line& ln = r.lines[i];
      out << "line " << i << ": " << family_name(ln.family) << " x="
          << ln.x_angle.to_string() << " y=" << ln.y_angle.to_string() << " points "
          << component_label(r.incidence[i].first, r.d) << " "
          << component_label(r.incidence[i].second, r.d) << "\n";
    }
  }
  return 0;
}

std::vector<std::vector<long>> parse_matrix(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of arrays");
  std::vector<std::vector<long>> mt;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix must be a JSON array of arrays");
    std::vector<long> r;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        r.push_back(v.get<long>());
      } else if (v.is_string()) {
        try {
          std::size_t used = 0;
          long parsed = std::stol(v.get<std::string>(), &used);
          if (used != v.get<std::string>().size()) throw std::invalid_argument("trailing text");
          r.push_back(parsed);
        } catch (const std::exception&) {
          throw std::invalid_argument("matrix entries must be integers");
        }
      } else {
        throw std::invalid_argument("matrix entries must be integers");
      }
    }
    mt.push_back(std::move(r));
  }
  return mt;
}

const char* verdict_name(RecoveryVerdict v) {
  switch (v) {
    case RecoveryVerdict::Unique: return "unique";
    case RecoveryVerdict::Ambiguous: return "ambiguous";
    case RecoveryVerdict::Underdetermined: return "underdetermined";
    default: return "invalid";
  }
}

int cmd_recover(const Opts& o, std::ostream& out) {
  RecoveryResult r = recover(parse_matrix(o.matrix_text));
  if (o.format == "json") {
    ordered_json j;
    j["verdict"] = verdict_name(r.verdict);
    ordered_json ps = ordered_json::array();
    for (const auto& [m, n] : r.pairs) ps.push_back(ordered_json::array({istr(m), istr(n)}));
    j["pairs"] = ps;
    j["note"] = r.note;
    emit(out, j);
  } else {
    out << "verdict: " << verdict_name(r.verdict) << "\n";
    for (const auto& [m, n] : r.pairs) out << "pair: (" << m << "," << n << ")\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
  }
  return 0;
}

int cmd_repvar(const Opts& o, std::ostream& out) {
  RepVarReport r = count_repvar(o.m, o.n);
  std::vector<MetabelianImage> images = metabelian_images(o.m, o.n);
  if (o.format == "json") {
    ordered_json j;
    j["m"] = istr(r.m);
    j["n"] = istr(r.n);
    j["d"] = istr(r.d);
    j["irreducible"] = istr(r.irreducible);
    j["abelian"] = istr(r.abelian);
    j["total"] = istr(r.total);
    j["metabelian"] = istr(r.metabelian);
    j["dimensions"] = ordered_json{{"irreducible", istr(r.dimensions[0])},
                                   {"abelian", istr(r.dimensions[1])},
                                   {"metabelian", istr(r.dimensions[2])}};
    ordered_json labels = ordered_json::array();
    for (const auto& [xi, eta] : r.metabelian_labels)
      labels.push_back(ordered_json::array({xi.to_string(), eta.to_string()}));
    j["labels"] = labels;
    ordered_json ims = ordered_json::array();
    for (const MetabelianImage& im : images) {
      ordered_json ji;
      ji["xi"] = im.xi.to_string();
      ji["eta"] = im.eta.to_string();
      ji["line"] = istr(static_cast<long>(im.line_index));
      ji["component"] = component_label(im.component, r.d);
      ji["point"] = ordered_json::array(
          {im.image[0].real(), im.image[1].real(), im.image[2].real()});
      ims.push_back(ji);
    }
    j["images"] = ims;
    emit(out, j);
  } else {
    out << "repvar m=" << r.m << " n=" << r.n << " d=" << r.d << "\n";
    out << "irreducible: " << r.irreducible << " (dim " << r.dimensions[0] << ")\n";
    out << "abelian: " << r.abelian << " (dim " << r.dimensions[1] << ")\n";
    out << "total: " << r.total << "\n";
    out << "metabelian: " << r.metabelian << " (dim " << r.dimensions[2] << ")\n";
    for (const auto& [xi, eta] : r.metabelian_labels)
      out << "label: xi=" << xi.to_string() << " eta=" << eta.to_string() << "\n";
    for (const MetabelianImage& im : images)
      out << "image: xi=" << im.xi.to_string() << " eta=" << im.eta.to_string()
          << " line=" << im.line_index << " component="
          << component_label(im.component, r.d) << "\n";
  }
  return 0;
}

int cmd_mirror(const Opts& o, std::ostream& out) {
  long am = std::abs(o.m), an = std::abs(o.n);
  long count = mirror_intersection_count(am, an);
  IdealGenerators g = ideal_generators(o.m, o.n, 0);
  std::vector<TriPoly> base(g.J.begin(), g.J.begin() + std::min<std::size_t>(3, g.J.size()));
  if (o.format == "json") {
    ordered_json j;
    j["m"] = istr(o.m);
    j["n"] = istr(o.n);
    ordered_json imgs = ordered_json::array();
    for (const TriPoly& p : base) imgs.push_back(tripoly_json(p.mirror()));
    j["psi_images"] = imgs;
    j["intersection"] = istr(count);
    emit(out, j);
  } else {
    out << "mirror m=" << o.m << " n=" << o.n << "\n";
    for (std::size_t i = 0; i < base.size(); ++i)
      out << "psi(J[" << i << "]) = " << base[i].mirror().to_string() << "\n";
    out << "intersection: " << count << "\n";
  }
  return 0;
}

int cmd_planar(const Opts& o, std::ostream& out) {
  TriPoly plane = planar_model_m2(o.m);
  auto [first, second] = char_map_m2(o.m);
  if (o.format == "json") {
    ordered_json j;
    j["m"] = istr(o.m);
    j["plane"] = tripoly_json(plane);
    j["map_first"] = tripoly_json(first);
    j["map_second"] = tripoly_json(second);
    emit(out, j);
  } else {
    out << "planar m=" << o.m << "\n";
    out << "plane = " << plane.to_string() << "\n";
    out << "map first = " << first.to_string() << "\n";
    out << "map second = " << second.to_string() << "\n";
  }
  return 0;
}

struct VCheck {
  std::string section;
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

void section_families(std::vector<VCheck>& cs) {
  UniPoly t = UniPoly::T();
  bool rec = true;
  for (long k = 2; k <= 30; ++k) {
    rec = rec && fam_f(k) == t * fam_f(k - 1) - fam_f(k - 2);
    rec = rec && fam_h(k) == t * fam_h(k - 1) - fam_h(k - 2);
    if (k >= 4) rec = rec && fam_s(k) == t * fam_s(k - 2) - fam_s(k - 4);
    if (k >= 4) rec = rec && fam_sigma(k) == t * fam_sigma(k - 2) - fam_sigma(k - 4);
  }
  cs.push_back({"2", "three-term recurrences hold for f, h, s, sigma", rec, 0.0});

  bool neg = true;
  for (long k = 0; k <= 30; ++k) {
    neg = neg && fam_f(-k) == fam_f(k) && fam_h(-k) == -fam_h(k) && fam_s(-k) == -fam_s(k);
    UniPoly sg = fam_sigma(k);
    neg = neg && fam_sigma(-k) == (k % 2 == 0 ? -sg : sg);
  }
  cs.push_back({"2", "negative-index rules hold for f, h, s, sigma", neg, 0.0});

  bool prod = true;
  for (long i = -12; i <= 12; ++i)
    for (long j = -12; j <= 12; ++j)
      prod = prod && fam_f(i) * fam_f(j) == fam_f(i + j) + fam_f(i - j);
  cs.push_back({"2", "product rule f(i)f(j) = f(i+j) + f(i-j)", prod, 0.0});

  bool split = true;
  for (long k = 1; k <= 15; ++k) {
    split = split && fam_h(2 * k + 1) == fam_s(2 * k + 1) * fam_sigma(2 * k + 1);
    split = split && fam_h(2 * k) == fam_s(2 * k) * fam_f(k);
  }
  cs.push_back({"2", "h splits as s*sigma at odd and s*f at even index", split, 0.0});

  bool flip = true;
  for (long k = 1; k <= 30; ++k) {
    UniPoly lhs = fam_s(k).at_negT(), rhs = fam_sigma(k);
    flip = flip && (lhs == rhs || lhs == -rhs);
  }
  cs.push_back({"2", "substituting -T turns s into sigma up to sign", flip, 0.0});
}

void section_trace_identities(long m, long n, std::uint64_t seed, double tol,
                              std::vector<VCheck>& cs) {
  TraceIdentityReport rep = verify_trace_identities(m, n, 25, seed, tol);
  for (const CheckResult& c : rep.checks) cs.push_back({"3", c.name, c.pass, c.residual});
}

void section_factorizations(long m, long n, std::vector<VCheck>& cs) {
  long am = std::abs(m), an = std::abs(n);
  bool fact = true;
  for (long k : {am, an}) {
    for (FamilyKind kind : {FamilyKind::F, FamilyKind::S, FamilyKind::Sigma}) {
      UniPoly prod(1);
      for (const auto& [q, p] : factor_family(kind, k)) prod = prod * p;
      if (kind == FamilyKind::Sigma && sigma_factor_sign(k) < 0) prod = -prod;
      UniPoly target = kind == FamilyKind::F   ? fam_f(k)
                       : kind == FamilyKind::S ? fam_s(k)
                                               : fam_sigma(k);
      fact = fact && prod == target;
    }
  }
  cs.push_back({"4", "factor products rebuild f, s, sigma at |m| and |n|", fact, 0.0});

  bool cyc = true;
  for (long k : {am, an}) {
    UniPoly cprod(1), rprod(1);
    for (long l = 1; l <= k; ++l) {
      if (k % l != 0) continue;
      cprod = cprod * cyclotomic(l);
      if ((k / l) % 2 != 0) rprod = rprod * r_poly(l);
    }
    cyc = cyc && cprod == UniPoly::monomial(static_cast<int>(k)) - UniPoly(1) &&
          rprod == UniPoly::monomial(static_cast<int>(k)) + UniPoly(1);
  }
  cs.push_back({"4", "cyclotomic and r products rebuild T^k - 1 and T^k + 1", cyc, 0.0});

  VarietyCounts c = count_components(m, n);
  long enumerated = static_cast<long>(enumerate_lines(m, n).size());
  cs.push_back({"4", "line enumeration matches the closed-form count", enumerated == c.lines, 0.0});
}

void section_geometry(long m, long n, long window, int samples, std::uint64_t seed, double tol,
                      std::vector<VCheck>& cs) {
  long am = std::abs(m), an = std::abs(n);
  long d = std::gcd(am, an), mp = am / d, np = an / d;
  std::vector<Line> lines = enumerate_lines(m, n);
  IdealGenerators gens = ideal_generators(m, n, window);

  bool in_range = true, distinct = true, dichotomy = true;
  double worst_pt = 0.0;
  for (const Line& ln : lines) {
    auto [c1, c2] = line_components(ln, m, n);
    in_range = in_range && c1 >= 0 && c1 <= d / 2 && c2 >= 0 && c2 <= d / 2;
    UnitRational zsum = ln.x_angle * ln.y_angle;
    UnitRational zdiff = ln.x_angle * ln.y_angle.inverse();
    distinct = distinct && !(zsum.conj_class() == zdiff.conj_class());
    UnitRational xm = ln.x_angle.pow(mp), yn = ln.y_angle.pow(np);
    bool real_power = xm.is_one() || xm.is_minus_one() || yn.is_one() || yn.is_minus_one();
    dichotomy = dichotomy && ((c1 == c2) == real_power);
    for (const UnitRational& zr : {zsum, zdiff}) {
      std::array<std::complex<double>, 3> at = {ln.x_angle.trace_value(),
                                                ln.y_angle.trace_value(), zr.trace_value()};
      worst_pt = std::max(worst_pt, scaled_residual(gens.I3_extra, at));
      for (const TriPoly& g : gens.J) worst_pt = std::max(worst_pt, scaled_residual(g, at));
    }
  }
  cs.push_back({"5", "singular-point component indices are integral and in range", in_range, 0.0});
  cs.push_back({"5", "the two singular points of each line are distinct", distinct, 0.0});
  cs.push_back({"5", "line endpoints coincide exactly when an angle power is real", dichotomy, 0.0});
  cs.push_back({"5", "relation window vanishes at the singular points", worst_pt <= tol, worst_pt});

  double worst_ab = 0.0;
  for (ComponentId id = 0; id <= d / 2; ++id) {
    auto pts = abelian_samples(m, n, id, samples, seed + static_cast<std::uint64_t>(id) + 1);
    for (const auto& at : pts) {
      worst_ab = std::max(worst_ab, scaled_residual(gens.I3_extra, at));
      for (const TriPoly& g : gens.J) worst_ab = std::max(worst_ab, scaled_residual(g, at));
    }
  }
  cs.push_back({"5", "relation window vanishes on abelian samples", worst_ab <= tol, worst_ab});
}

void section_matrix_recovery(long m, long n, std::vector<VCheck>& cs) {
  long am = std::abs(m), an = std::abs(n);
  try {
    VarietyReport r = intersection_matrix(m, n);
    cs.push_back({"6", "enumerated intersection matrix equals the closed form", true, 0.0});

    bool sym = true;
    long upper = 0;
    for (std::size_t i = 0; i < r.matrix.size(); ++i)
      for (std::size_t j = 0; j < r.matrix.size(); ++j) {
        sym = sym && r.matrix[i][j] == r.matrix[j][i];
        if (j >= i) upper += r.matrix[i][j];
      }
    cs.push_back({"6", "matrix cells are symmetric and partition the lines",
                  sym && upper == r.counts.lines, 0.0});

    if (am >= 2 && an >= 2) {
      RecoveryResult rec = recover(r.matrix);
      std::pair<long, long> want{std::max(am, an), std::min(am, an)};
      bool found = rec.verdict != RecoveryVerdict::Invalid &&
                   std::find(rec.pairs.begin(), rec.pairs.end(), want) != rec.pairs.end();
      cs.push_back({"6", "matrix recovery returns the source exponent pair", found, 0.0});
    }
  } catch (const invariant_violation& e) {
    cs.push_back({"6", std::string("intersection matrix construction: ") + e.what(), false, 0.0});
  }
}

void section_repvar(long m, long n, std::vector<VCheck>& cs) {
  try {
    RepVarReport r = count_repvar(m, n);
    cs.push_back({"7", "metabelian label count matches the closed form", true, 0.0});

    VarietyCounts c = count_components(m, n);
    cs.push_back({"7", "representation and character variety component totals agree",
                  r.total == c.total && r.irreducible == c.lines && r.abelian == c.abelian, 0.0});

    std::vector<Line> lines = enumerate_lines(m, n);
    std::vector<MetabelianImage> images = metabelian_images(m, n);
    std::set<std::array<std::string, 3>> points;
    bool incidence_ok = images.size() == r.metabelian_labels.size();
    for (const MetabelianImage& im : images) {
      points.insert({im.xi.conj_class().to_string(), im.eta.conj_class().to_string(),
                     (im.xi * im.eta).conj_class().to_string()});
      const Line& ln = lines.at(im.line_index);
      auto [c1, c2] = line_components(ln, m, n);
      incidence_ok = incidence_ok && (im.component == c1 || im.component == c2) &&
                     ln.x_angle == im.xi.conj_class() && ln.y_angle == im.eta.conj_class();
    }
    cs.push_back({"7", "metabelian images pair up two to one",
                  2 * static_cast<long>(points.size()) == r.metabelian, 0.0});
    cs.push_back({"7", "every metabelian image lies on an enumerated incidence", incidence_ok, 0.0});
  } catch (const invariant_violation& e) {
    cs.push_back({"7", std::string("metabelian label count: ") + e.what(), false, 0.0});
  }
}

void section_mirror(long m, long n, long window, int samples, std::uint64_t seed, double tol,
                    std::vector<VCheck>& cs) {
  long am = std::abs(m), an = std::abs(n);
  IdealGenerators g = ideal_generators(m, n, window);

  bool invol = poly_D().mirror() == poly_D();
  for (const TriPoly& p : g.J) invol = invol && p.mirror().mirror() == p;
  cs.push_back({"8", "the mirror substitution is an involution on the relation window", invol, 0.0});

  auto canon = [](const TriPoly& p) {
    if (p.is_zero()) return std::string("0");
    return (p.terms().rbegin()->second < 0 ? -p : p).to_string();
  };
  std::multiset<std::string> mirrored, flipped;
  for (const TriPoly& p : g.J) mirrored.insert(canon(p.mirror()));
  for (const TriPoly& p : ideal_generators(m, -n, window).J) flipped.insert(canon(p));
  cs.push_back({"8", "the mirrored window equals the window of the opposite sign pair",
                mirrored == flipped, 0.0});

  try {
    long count = mirror_intersection_count(am, an);
    cs.push_back({"8", "mirror intersection count matches the closed form",
                  count == am * an + 1, 0.0});
  } catch (const invariant_violation& e) {
    cs.push_back({"8", std::string("mirror intersection count: ") + e.what(), false, 0.0});
  }

  if (an == 2 && am % 2 != 0 && am >= 3) {
    TriPoly plane = planar_model_m2(am);
    auto [first, second] = char_map_m2(am);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    double worst = 0.0;
    auto visit = [&](const std::array<std::complex<double>, 3>& at) {
      std::complex<double> u = first.eval(at[0], at[1], at[2]);
      std::complex<double> v = second.eval(at[0], at[1], at[2]);
      worst = std::max(worst, scaled_residual(plane, {u, v, 0.0}));
    };
    for (const Line& ln : enumerate_lines(am, 2)) {
      for (int c = 0; c < samples; ++c)
        visit({ln.x_angle.trace_value(), ln.y_angle.trace_value(),
               std::complex<double>(box(rng), box(rng))});
    }
    for (ComponentId id = 0; id <= 0; ++id)
      for (const auto& at : abelian_samples(am, 2, id, samples, seed + 1)) visit(at);
    cs.push_back({"8", "planar model vanishes on mapped samples", worst <= tol, worst});
  }
}

void section_appendix(long m, long n, std::uint64_t seed, double tol, std::vector<VCheck>& cs) {
  TraceIdentityReport rep = verify_trace_identities(m, n, 1, seed, tol);
  for (const CheckResult& c : rep.checks)
    if (c.name.find("bracket combination") != std::string::npos)
      cs.push_back({"appendix", c.name, c.pass, c.residual});
}

int cmd_verify(const Opts& o, std::ostream& out) {
  std::vector<std::string> sections;
  if (o.all_sections || o.section == "all")
    sections = {"2", "3", "4", "5", "6", "7", "8", "appendix"};
  else
    sections = {o.section};

  std::vector<VCheck> checks;
  for (const std::string& s : sections) {
    if (s == "2") section_families(checks);
    else if (s == "3") section_trace_identities(o.m, o.n, o.seed, o.tol, checks);
    else if (s == "4") section_factorizations(o.m, o.n, checks);
    else if (s == "5") section_geometry(o.m, o.n, o.window, 25, o.seed, o.tol, checks);
    else if (s == "6") section_matrix_recovery(o.m, o.n, checks);
    else if (s == "7") section_repvar(o.m, o.n, checks);
    else if (s == "8") section_mirror(o.m, o.n, o.window, 25, o.seed, o.tol, checks);
    else section_appendix(o.m, o.n, o.seed, o.tol, checks);
  }

  long passed = static_cast<long>(
      std::count_if(checks.begin(), checks.end(), [](const VCheck& c) { return c.pass; }));
  long total = static_cast<long>(checks.size());

  if (o.format == "json") {
    ordered_json j;
    j["m"] = istr(o.m);
    j["n"] = istr(o.n);
    j["sections"] = sections;
    j["seed"] = std::to_string(o.seed);
    j["tol"] = o.tol;
    ordered_json cj = ordered_json::array();
    for (const VCheck& c : checks) {
      ordered_json one;
      one["section"] = c.section;
      one["name"] = c.name;
      one["pass"] = c.pass;
      one["residual"] = c.residual;
      cj.push_back(one);
    }
    j["checks"] = cj;
    j["passed"] = istr(passed);
    j["total"] = istr(total);
    j["all_pass"] = passed == total;
    emit(out, j);
  } else {
    out << "verify m=" << o.m << " n=" << o.n << " sections=";
    for (std::size_t i = 0; i < sections.size(); ++i) out << (i ? "," : "") << sections[i];
    out << " seed=" << o.seed << " tol=" << o.tol << "\n";
    for (const VCheck& c : checks) {
      out << (c.pass ? "[pass] " : "[fail] ") << c.section << ": " << c.name;
      if (c.residual > 0.0) {
        std::ostringstream ss;
        ss << std::scientific << std::setprecision(3) << c.residual;
        out << " (residual " << ss.str() << ")";
      }
      out << "\n";
    }
    out << "passed " << passed << "/" << total << "\n";
  }
  return passed == total ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"exact computations on the character varieties of the groups <x,y | x^m = y^n>"};
  app.name("charvar");
  app.require_subcommand(1);

  auto add_mn = [&o](CLI::App* s) {
    s->add_option("-m", o.m, "first exponent (nonzero, may be negative)")->required();
    s->add_option("-n", o.n, "second exponent (nonzero, may be negative)")->required();
  };
  auto add_format = [&o](CLI::App* s, bool with_dot = false) {
    std::vector<std::string> allowed = {"text", "json"};
    if (with_dot) allowed.push_back("dot");
    s->add_option("--format", o.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember(allowed));
  };
  auto add_window = [&o](CLI::App* s) {
    s->add_option("--window", o.window, "extra index margin of the relation window")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* sub_family =
      app.add_subcommand("family", "print a recurrence family polynomial and its factorization");
  sub_family->add_option("kind", o.kind, "one of f|h|s|sigma|c|r|q")
      ->required()
      ->check(CLI::IsMember({"f", "h", "s", "sigma", "c", "r", "q"}));
  sub_family->add_option("k", o.k, "index")->required();
  add_format(sub_family);

  CLI::App* sub_trace =
      app.add_subcommand("trace-poly", "print the trace polynomial F(a,b) of x^a y^-b");
  sub_trace->add_option("a", o.a, "power of x")->required();
  sub_trace->add_option("b", o.b, "inverted power of y")->required();
  add_format(sub_trace);

  CLI::App* sub_reduce =
      app.add_subcommand("reduce", "reduce the trace of a word in x, y to trace coordinates");
  sub_reduce->add_option("word", o.word, "word such as \"x y x^-1 y^-1\"")->required();
  add_format(sub_reduce);

  CLI::App* sub_ideal = app.add_subcommand("ideal", "list the defining ideal generators");
  add_mn(sub_ideal);
  add_window(sub_ideal);
  add_format(sub_ideal);

  CLI::App* sub_variety =
      app.add_subcommand("variety", "component report with the line intersection matrix");
  add_mn(sub_variety);
  add_format(sub_variety, true);

  CLI::App* sub_recover =
      app.add_subcommand("recover", "read the exponent pair back from an intersection matrix");
  sub_recover->add_option("--matrix", o.matrix_text, "matrix as JSON, e.g. '[[1,6],[6,1]]'")
      ->required();
  add_format(sub_recover);

  CLI::App* sub_repvar =
      app.add_subcommand("repvar", "representation variety counts and metabelian images");
  add_mn(sub_repvar);
  add_format(sub_repvar);

  CLI::App* sub_mirror = app.add_subcommand(
      "mirror", "mirror images of the relation generators and the intersection count");
  add_mn(sub_mirror);
  add_format(sub_mirror);

  CLI::App* sub_planar =
      app.add_subcommand("planar", "planar model of the n = 2 quotient for odd m");
  sub_planar->add_option("-m", o.m, "odd exponent, |m| >= 3")->required();
  add_format(sub_planar);

  CLI::App* sub_verify = app.add_subcommand("verify", "run the identity and numeric suites");
  add_mn(sub_verify);
  add_window(sub_verify);
  sub_verify->add_option("--seed", o.seed, "seed for numeric sampling")->capture_default_str();
  sub_verify->add_option("--tol", o.tol, "tolerance for scaled residuals")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub_verify->add_option("--section", o.section, "one of 2|3|4|5|6|7|8|appendix|all")
      ->capture_default_str()
      ->check(CLI::IsMember({"2", "3", "4", "5", "6", "7", "8", "appendix", "all"}));
  sub_verify->add_flag("--all", o.all_sections, "run every section (same as --section all)");
  add_format(sub_verify);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("charvar");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*sub_family) return cmd_family(o, out);
    if (*sub_trace) return cmd_trace_poly(o, out);
    if (*sub_reduce) return cmd_reduce(o, out);
    if (*sub_ideal) return cmd_ideal(o, out);
    if (*sub_variety) return cmd_variety(o, out);
    if (*sub_recover) return cmd_recover(o, out);
    if (*sub_repvar) return cmd_repvar(o, out);
    if (*sub_mirror) return cmd_mirror(o, out);
    if (*sub_planar) return cmd_planar(o, out);
    if (*sub_verify) return cmd_verify(o, out);
  } catch (const invariant_violation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

} // namespace charvar
