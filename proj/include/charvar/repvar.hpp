#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "charvar/unit_rational.hpp"
#include "charvar/variety.hpp"

namespace charvar {

struct RepVarReport {
  long m = 0, n = 0, d = 0;
  long irreducible = 0; // one component per double line
  long abelian = 0;     // one per abelian surface
  long total = 0;       // matches the character variety component count
  long metabelian = 0;  // closed form, equal to the label count
  // stated dimensions of the (irreducible, abelian, metabelian) components
  std::array<int, 3> dimensions = {4, 3, 3};
  // (xi, eta) with xi^m = eta^n = 1 (both != +-1) or xi^m = eta^n = -1 (xi,
  // eta != -1); one metabelian component per label
  std::vector<std::pair<UnitRational, UnitRational>> metabelian_labels;
};

RepVarReport count_repvar(long m, long n);

struct MetabelianImage {
  UnitRational xi, eta;                      // label angles
  std::array<std::complex<double>, 3> image; // its character in trace coordinates
  std::size_t line_index;                    // enumerate_lines position the image lies on
  ComponentId component;                     // surface component through the image
};

// Character of every metabelian label, located exactly on the double-line
// grid: labels come in inverse pairs with equal characters, so the images
// cover half the label count.
std::vector<MetabelianImage> metabelian_images(long m, long n);

} // namespace charvar
