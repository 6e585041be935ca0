#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "charvar/tripoly.hpp"

namespace charvar {

// One syllable of a word in the free group on x, y.
struct Syllable {
  char gen; // 'x' or 'y'
  long exp; // nonzero
  bool operator==(const Syllable&) const = default;
};

// Freely reduced word: adjacent syllables use distinct generators, no zero
// exponents.
using Word = std::vector<Syllable>;

// Parses "x^3 y^-2 x y" style input (whitespace separated syllables, optional
// ^exponent). The result is freely reduced. Throws std::invalid_argument on
// malformed syllables.
Word parse_word(const std::string& text);

std::string word_to_string(const Word& w);

Word word_inverse(const Word& w);

// The trace polynomial: reduce_trace(w)(tr A, tr B, tr AB) = tr w(A, B) for
// every pair A, B in SL(2, C). Exact integer coefficients.
//
// Reduction order: exponents are first lowered to +-1 through the h-family
// solution of the three-term power recurrence, then words are shortened with
// tr(UV) = tr U tr V - tr(UV^-1) applied at a repeated-generator split.
// Results are memoized on a canonical key (minimum over cyclic rotations of
// the word and of its inverse).
TriPoly reduce_trace(const Word& w);

// Numeric 2x2 complex matrix with unit determinant expected.
struct Mat2 {
  std::complex<double> a, b, c, d;
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const; // adjugate; exact for det = 1
  std::complex<double> trace() const { return a + d; }
  std::complex<double> det() const { return a * d - b * c; }
  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  Mat2 pow(long e) const; // repeated squaring, negative via inverse
};

// Deterministic pseudorandom SL(2, C) matrix. Entries have magnitude about
// `scale`; draws with near-singular upper-left entry or an oversized derived
// entry are redrawn internally. scale must lie in (0, 2].
Mat2 random_sl2(std::uint64_t seed, double scale);

// Evaluates the word at (A, B) using repeated-squaring powers.
std::complex<double> eval_word(const Word& w, const Mat2& A, const Mat2& B);

// True when tr(ABA^-1B^-1) is within tol of 2, the reducibility criterion.
bool is_reducible_pair(const Mat2& A, const Mat2& B, double tol);

} // namespace charvar
