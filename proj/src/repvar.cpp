#include "charvar/repvar.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "charvar/common.hpp"

namespace charvar {

namespace {

// Label angle sets: the plus block solves t^k = 1 (t != +-1), the minus block
// t^k = -1 (t != -1). Both are closed under inversion.
std::vector<UnitRational> unit_roots(long k, bool minus) {
  std::vector<UnitRational> out;
  if (minus) {
    for (long p = 0; p < k; ++p)
      if (2 * p + 1 != k) out.push_back(UnitRational(2 * p + 1, 2 * k));
  } else {
    for (long p = 1; p < k; ++p)
      if (2 * p != k) out.push_back(UnitRational(p, k));
  }
  return out;
}

std::vector<std::pair<UnitRational, UnitRational>> label_set(long am, long an) {
  std::vector<std::pair<UnitRational, UnitRational>> labels;
  for (bool minus : {false, true}) {
    auto xs = unit_roots(am, minus);
    auto ys = unit_roots(an, minus);
    for (const auto& x : xs)
      for (const auto& y : ys) labels.emplace_back(x, y);
  }
  return labels;
}

} // namespace

RepVarReport count_repvar(long m, long n) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be nonzero");
  long am = std::labs(m), an = std::labs(n);
  long d = std::gcd(am, an);
  RepVarReport r;
  r.m = m;
  r.n = n;
  r.d = d;
  VarietyCounts c = count_components(m, n);
  r.irreducible = c.lines;
  r.abelian = c.abelian;
  r.total = c.total;
  long prod = (am - 1) * (an - 1);
  r.metabelian = d % 2 == 1 ? 2 * prod : 2 * (prod + 1);
  r.metabelian_labels = label_set(am, an);
  if (static_cast<long>(r.metabelian_labels.size()) != r.metabelian)
    throw invariant_violation("metabelian label count mismatch at (" + std::to_string(m) +
                              "," + std::to_string(n) + "): enumerated " +
                              std::to_string(r.metabelian_labels.size()) + ", closed form " +
                              std::to_string(r.metabelian));
  return r;
}

std::vector<MetabelianImage> metabelian_images(long m, long n) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be nonzero");
  long am = std::labs(m), an = std::labs(n);

  auto lines = enumerate_lines(m, n);
  std::map<std::tuple<long long, long long, long long, long long, bool>, std::size_t> index;
  for (std::size_t i = 0; i < lines.size(); ++i)
    index[{lines[i].x_angle.num(), lines[i].x_angle.den(), lines[i].y_angle.num(),
           lines[i].y_angle.den(), lines[i].family == LineFamily::I2}] = i;

  std::vector<MetabelianImage> out;
  for (bool minus : {false, true}) {
    auto xs = unit_roots(am, minus);
    auto ys = unit_roots(an, minus);
    for (const auto& xi : xs)
      for (const auto& eta : ys) {
        MetabelianImage img;
        img.xi = xi;
        img.eta = eta;
        img.image = {xi.trace_value(), eta.trace_value(), (xi * eta).trace_value()};
        UnitRational cx = xi.conj_class(), cy = eta.conj_class();
        auto it = index.find({cx.num(), cx.den(), cy.num(), cy.den(), minus});
        if (it == index.end())
          throw std::logic_error("metabelian image misses the line grid at (" +
                                 xi.to_string() + "," + eta.to_string() + ")");
        img.line_index = it->second;
        img.component = component_of_angles(xi, eta, m, n);
        out.push_back(img);
      }
  }
  return out;
}

} // namespace charvar
