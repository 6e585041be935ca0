#pragma once

#include <string>
#include <utility>
#include <vector>

namespace charvar {

enum class RecoveryVerdict { Unique, Ambiguous, Underdetermined, Invalid };

struct RecoveryResult {
  RecoveryVerdict verdict = RecoveryVerdict::Invalid;
  std::vector<std::pair<long, long>> pairs; // candidate (m,n), m >= n
  std::string note;
};

// All (m,n) with m >= n >= 2, gcd(m,n) = 1 and (m-1)(n-1) = 2*lines,
// ordered by decreasing m. Empty for lines = 0; negative counts are rejected.
std::vector<std::pair<long, long>> candidates_from_line_count(long lines);

// Reads (m,n) back from an intersection matrix. The decision tree fixes d from
// the trace and diagonal multiplicities and m', n' from the extreme cells;
// every candidate is validated by rebuilding its matrix and comparing up to
// simultaneous row/column permutation. A 1x1 input is underdetermined unless
// exactly one coprime pair fits its line count; [[0,2],[2,0]] is the known
// two-group ambiguity. Non-symmetric or negative input is a usage error.
RecoveryResult recover(const std::vector<std::vector<long>>& matrix);

} // namespace charvar
