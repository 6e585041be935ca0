#include "charvar/recover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "charvar/variety.hpp"

namespace charvar {

namespace {

using Matrix = std::vector<std::vector<long>>;

void check_shape(const Matrix& m) {
  if (m.empty()) throw std::invalid_argument("matrix must be nonempty");
  size_t k = m.size();
  for (const auto& row : m) {
    if (row.size() != k) throw std::invalid_argument("matrix must be square");
    for (long v : row)
      if (v < 0) throw std::invalid_argument("matrix entries must be nonnegative");
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix must be symmetric");
}

// Simultaneous row/column sort by (diagonal, sorted row). Rows of a genuine
// matrix that share this key are interchangeable, so equality of layouts is
// equivalence up to permutation whenever one side is genuine.
Matrix canonical_layout(const Matrix& m) {
  size_t k = m.size();
  std::vector<size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&m](size_t i) {
    std::vector<long> row = m[i];
    std::sort(row.begin(), row.end());
    return std::make_pair(m[i][i], row);
  };
  std::sort(order.begin(), order.end(),
            [&key](size_t a, size_t b) { return key(a) < key(b); });
  Matrix out(k, std::vector<long>(k));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) out[a][b] = m[order[a]][order[b]];
  return out;
}

bool matches_group(const Matrix& input, long m, long n) {
  if (m < n || n < 2) return false;
  return canonical_layout(input) == canonical_layout(intersection_matrix(m, n).matrix);
}

RecoveryResult invalid(std::string why) {
  RecoveryResult r;
  r.verdict = RecoveryVerdict::Invalid;
  r.note = std::move(why);
  return r;
}

long isqrt_exact(long v) { // -1 when v is not a perfect square
  if (v < 0) return -1;
  long r = std::lround(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

} // namespace

std::vector<std::pair<long, long>> candidates_from_line_count(long lines) {
  if (lines < 0) throw std::invalid_argument("line count must be nonnegative");
  std::vector<std::pair<long, long>> out;
  if (lines == 0) return out;
  long target = 2 * lines;
  for (long e = 1; e * e <= target; ++e) {
    if (target % e != 0) continue;
    long n = e + 1, m = target / e + 1;
    if (std::gcd(m, n) == 1) out.push_back({m, n});
  }
  return out;
}

RecoveryResult recover(const std::vector<std::vector<long>>& matrix) {
  check_shape(matrix);
  long k = static_cast<long>(matrix.size());
  RecoveryResult r;

  if (k == 1) {
    r.pairs = candidates_from_line_count(matrix[0][0]);
    if (r.pairs.size() == 1) {
      r.verdict = RecoveryVerdict::Unique;
      r.note = "single coprime pair with (m-1)(n-1) = " + std::to_string(2 * matrix[0][0]);
    } else {
      r.verdict = RecoveryVerdict::Underdetermined;
      r.note = r.pairs.empty()
                   ? "no coprime pair m >= n >= 2 has (m-1)(n-1) = " +
                         std::to_string(2 * matrix[0][0])
                   : "a single line count cannot separate the candidates";
    }
    return r;
  }

  // Each component of a genuine matrix carries 2*diag + off-diagonal row sum
  // singular points; the only multi-component matrix where every count is 2
  // belongs to two distinct groups at once.
  bool all_two = true;
  for (long i = 0; i < k && all_two; ++i) {
    long s = matrix[i][i];
    for (long j = 0; j < k; ++j) s += matrix[i][j];
    all_two = s == 2;
  }
  if (all_two && k == 2) {
    if (matches_group(matrix, 3, 3) && matches_group(matrix, 4, 2)) {
      r.verdict = RecoveryVerdict::Ambiguous;
      r.pairs = {{3, 3}, {4, 2}};
      r.note = "two groups share this matrix";
      return r;
    }
    return invalid("no group reproduces this matrix");
  }

  long trace = 0;
  for (long i = 0; i < k; ++i) trace += matrix[i][i];

  long m = 0, n = 0;
  if (trace == 0) {
    if (k == 2) {
      // d = 2 with a single cross cell m'*n' = m'
      if (matrix[0][1] < 1) return invalid("zero matrix matches no group");
      m = 2 * matrix[0][1];
      n = 2;
    } else {
      // all cofactors 1; only the d-even layout contains a cell equal to 1
      bool has_one = false;
      for (long i = 0; i < k && !has_one; ++i)
        for (long j = i + 1; j < k && !has_one; ++j) has_one = matrix[i][j] == 1;
      long d = has_one ? 2 * k - 2 : 2 * k - 1;
      m = n = d;
    }
  } else {
    long min_diag = matrix[0][0];
    for (long i = 1; i < k; ++i) min_diag = std::min(min_diag, matrix[i][i]);
    long occurrences = 0;
    for (long i = 0; i < k; ++i)
      if (matrix[i][i] == min_diag) ++occurrences;
    if (occurrences != 1 && occurrences != 2)
      return invalid("diagonal multiplicities match no component layout");
    long d = occurrences == 1 ? 2 * k - 1 : 2 * k - 2;

    long min_off = matrix[0][1];
    for (long i = 0; i < k; ++i)
      for (long j = i + 1; j < k; ++j) min_off = std::min(min_off, matrix[i][j]);
    long prod = min_off; // m'*n'
    if (d % 2 == 1) {
      if (prod % 2 != 0) return invalid("odd cross cell cannot equal 2*m'*n'");
      prod /= 2;
    }
    // (m'-1)(n'-1) = 2*min_diag and m'*n' = prod give the cofactor pair
    long sum = prod + 1 - 2 * min_diag;
    long root = isqrt_exact(sum * sum - 4 * prod);
    if (root < 0 || (sum + root) % 2 != 0) return invalid("cofactor equations have no integer solution");
    long mp = (sum + root) / 2, np = (sum - root) / 2;
    if (np < 1 || mp * np != prod || std::gcd(mp, np) != 1)
      return invalid("cofactor equations have no admissible solution");
    m = mp * d;
    n = np * d;
  }

  if (m < 2 || n < 2 || !matches_group(matrix, m, n))
    return invalid("no group reproduces this matrix");
  r.verdict = RecoveryVerdict::Unique;
  r.pairs = {{m, n}};
  return r;
}

} // namespace charvar
