#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "charvar/tripoly.hpp"
#include "charvar/unipoly.hpp"
#include "charvar/unit_rational.hpp"

namespace charvar {

// Which pair of defining polynomials a double line comes from:
// I1 cuts out trace pairs of roots of unity, I2 the odd (x^m = y^n = -1) pairs.
enum class LineFamily { I1, I2 };

// Double line {x = 2cos(2 pi x_angle), y = 2cos(2 pi y_angle)} in (x,y,z) space,
// z free. Angles are stored in canonical form 0 < angle < 1/2.
struct Line {
  UnitRational x_angle;
  UnitRational y_angle;
  LineFamily family;
};

// Canonical index i of the surface component C_i, 0 <= i <= d/2.
// Index 0 is C_1; when d is even, index d/2 is C_{-1}.
using ComponentId = long;

struct IdealGenerators {
  std::vector<TriPoly> J;  // three base generators first, then the window differences
  std::vector<TriPoly> I1; // s_m(x), s_n(y)
  std::vector<TriPoly> I2; // parity-dependent pair in x and y
  TriPoly I3_extra;        // commutator trace polynomial; I3 = J + <I3_extra>
};

struct VarietyCounts {
  long lines = 0;
  long abelian = 0;
  long total = 0;
};

struct VarietyReport {
  long m = 0, n = 0;   // as given
  long d = 0;          // gcd(|m|, |n|)
  long mp = 0, np = 0; // |m| = mp*d, |n| = np*d
  std::vector<Line> lines;
  std::vector<ComponentId> components; // 0 .. floor(d/2)
  // incidence[i]: components of the two singular points of lines[i];
  // first is the point with z-angle x_angle + y_angle, second x_angle - y_angle.
  std::vector<std::pair<ComponentId, ComponentId>> incidence;
  // Symmetric matrix, rows ordered C_1, then C_{-1} when d is even, then
  // C_{zeta^i} for i = 1, 2, ...: entry (i,j) counts lines meeting both rows'
  // components (diagonal: both singular points on that component).
  std::vector<std::vector<long>> matrix;
  VarietyCounts counts;
};

// Generators of the defining ideals. The window widens the J family
// F(i,k) - F(i-m,k-n) to |i|,|k| <= window + max(|m|,|n|), deduplicated.
IdealGenerators ideal_generators(long m, long n, long window = 2);

// All double lines of the character variety, I1 block first, each block in
// increasing (p,q) order. Uses |m| and |n|; m = 0 or n = 0 is rejected.
std::vector<Line> enumerate_lines(long m, long n);

// Exact component indices of the two singular points of a line.
// first  <- point with z = 2cos(2 pi (x_angle + y_angle))
// second <- point with z = 2cos(2 pi (x_angle - y_angle))
// The index arithmetic must land on integers; failure is a construction bug.
std::pair<ComponentId, ComponentId> line_components(const Line& line, long m, long n);

// Component holding the reducible character with parameter angles (ru, rv):
// the exact index i with u^{m'} = zeta^i v^{n'}. Uses |m|, |n|.
ComponentId component_of_angles(const UnitRational& ru, const UnitRational& rv, long m, long n);

// Component counts from the closed forms (no enumeration).
VarietyCounts count_components(long m, long n);

// Full enumeration cross-checked cell by cell against the closed-form matrix;
// any disagreement (matrix, counts) throws invariant_violation.
VarietyReport intersection_matrix(long m, long n);

// Label "C_1", "C_-1" or "C_zeta^i" for a component index.
std::string component_label(ComponentId id, long d);

// Component index sitting in a given matrix row (inverse of the row order).
ComponentId component_of_row(long row, long d);

// Parametrization of C_1 by one trace variable t: (f_{n'}(t), f_{m'}(t), f_{n'+m'}(t)).
std::array<UniPoly, 3> abelian_param(long m, long n);

// Random points of C_i: v on the annulus 0.5 <= |v| <= 2, u an m'-th root of
// zeta^i v^{n'}, returned as (u + 1/u, v + 1/v, uv + 1/(uv)).
std::vector<std::array<std::complex<double>, 3>>
abelian_samples(long m, long n, ComponentId id, int count, std::uint64_t seed);

// Cardinality of the intersection of the abelian character sets of (m,n) and
// (m,-n), counted by enumerating canonical angle triples. The closed form
// m*n + 1 must agree or invariant_violation is thrown. Requires m, n > 0.
long mirror_intersection_count(long m, long n);

// Defining polynomial of the planar model of the two-bridge quotient for odd m:
// (x^2 - y - 2) * sigma_m(y). Even m (or |m| < 3) is rejected.
TriPoly planar_model_m2(long m);

// Coordinates of the map onto the planar model: a point (x,y,z) lands on
// (first(x,y,z), second(x,y,z)) in the plane.
std::pair<TriPoly, TriPoly> char_map_m2(long m);

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0; // max scaled residual for numeric checks, 0 for exact ones
};

struct TraceIdentityReport {
  long m = 0, n = 0;
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

// Exact verification of the commutator trace identities (h_m, s_m and the four
// parity-matched product lemmas, both variable orders) plus numeric vanishing
// of the J window on sampled line and abelian points. Residuals are measured
// relative to the evaluated term magnitudes; tol applies to that ratio.
TraceIdentityReport verify_trace_identities(long m, long n, int samples = 25,
                                            std::uint64_t seed = 1, double tol = 1e-8);

// |P(at)| / max(1, sum of |term| evaluations): conditioning-aware residual used
// by every numeric vanishing check.
double scaled_residual(const TriPoly& p, const std::array<std::complex<double>, 3>& at);

} // namespace charvar
