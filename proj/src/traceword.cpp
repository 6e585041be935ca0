#include "charvar/traceword.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

namespace charvar {

namespace {

// Letter codes: x = 0, x^-1 = 1, y = 2, y^-1 = 3.
using Letters = std::vector<std::uint8_t>;

std::uint8_t letter_inv(std::uint8_t l) { return l ^ 1; }
char letter_gen(std::uint8_t l) { return l < 2 ? 'x' : 'y'; }

Letters to_letters(const Word& w) {
  Letters out;
  for (const Syllable& s : w) {
    std::uint8_t base = s.gen == 'x' ? 0 : 2;
    std::uint8_t l = s.exp > 0 ? base : static_cast<std::uint8_t>(base + 1);
    for (long i = 0; i < std::labs(s.exp); ++i) out.push_back(l);
  }
  return out;
}

Letters inverse_letters(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (auto& l : out) l = letter_inv(l);
  return out;
}

void free_reduce(Letters& w) {
  Letters out;
  for (std::uint8_t l : w) {
    if (!out.empty() && out.back() == letter_inv(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

void cyclic_reduce(Letters& w) {
  size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == letter_inv(w[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo > 0) w = Letters(w.begin() + lo, w.begin() + hi);
}

Letters rotated(const Letters& w, size_t r) {
  Letters out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + r, w.end());
  out.insert(out.end(), w.begin(), w.begin() + r);
  return out;
}

// Minimum over all rotations of w and of its inverse; the memo key.
Letters canonical_cyclic(const Letters& w) {
  if (w.empty()) return w;
  Letters best = w;
  Letters inv = inverse_letters(w);
  for (size_t r = 0; r < w.size(); ++r) {
    Letters a = rotated(w, r);
    if (a < best) best = std::move(a);
    Letters b = rotated(inv, r);
    if (b < best) best = std::move(b);
  }
  return best;
}

struct Syl {
  std::uint8_t gen; // 0 = x, 1 = y
  long exp;
};

// Splits a cyclically reduced letter word into cyclic syllables, rotating the
// start to a generator boundary so no syllable wraps around.
std::vector<Syl> cyclic_syllables(const Letters& w) {
  size_t start = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    size_t prev = (i + w.size() - 1) % w.size();
    if (letter_gen(w[prev]) != letter_gen(w[i])) {
      start = i;
      break;
    }
  }
  std::vector<Syl> out;
  for (size_t k = 0; k < w.size(); ++k) {
    std::uint8_t l = w[(start + k) % w.size()];
    std::uint8_t g = l < 2 ? 0 : 1;
    long e = (l & 1) ? -1 : 1;
    if (!out.empty() && out.back().gen == g)
      out.back().exp += e;
    else
      out.push_back({g, e});
  }
  return out;
}

Letters syls_to_letters(const std::vector<Syl>& syls, size_t from, size_t to) {
  Letters out;
  for (size_t i = from; i < to; ++i) {
    const Syl& s = syls[i];
    std::uint8_t base = s.gen == 0 ? 0 : 2;
    std::uint8_t l = s.exp > 0 ? base : static_cast<std::uint8_t>(base + 1);
    for (long k = 0; k < std::labs(s.exp); ++k) out.push_back(l);
  }
  return out;
}

Letters concat(Letters a, const Letters& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string key_of(const Letters& w) { return std::string(w.begin(), w.end()); }

TriPoly lift_gen(const UniPoly& p, std::uint8_t gen) {
  return gen == 0 ? lift_x(p) : lift_y(p);
}

TriPoly reduce_letters(const Letters& raw);

// tr(U^e R) = h_e(t) tr(U R) - h_{e-1}(t) tr(R) with t the trace variable of
// the generator U; valid for every integer e.
TriPoly reduce_power_step(const std::vector<Syl>& syls, size_t big) {
  std::vector<Syl> rot(syls.begin() + big, syls.end());
  rot.insert(rot.end(), syls.begin(), syls.begin() + big);
  long e = rot[0].exp;
  std::uint8_t g = rot[0].gen;
  Letters rest = syls_to_letters(rot, 1, rot.size());
  // tr(U R) anchors the recurrence with exponent +1 whatever the sign of e.
  Letters one{static_cast<std::uint8_t>(g == 0 ? 0 : 2)};
  TriPoly t_ur = reduce_letters(concat(one, rest));
  TriPoly t_r = reduce_letters(rest);
  return lift_gen(fam_h(e), g) * t_ur - lift_gen(fam_h(e - 1), g) * t_r;
}

// tr(g^e A g^e B) = tr(g^e A) tr(g^e B) - tr(A B^-1) for a repeated
// equal-sign generator syllable.
TriPoly reduce_samesign_split(const std::vector<Syl>& syls, size_t p, size_t q) {
  std::vector<Syl> rot(syls.begin() + p, syls.end());
  rot.insert(rot.end(), syls.begin(), syls.begin() + p);
  size_t q2 = q - p;
  Letters head = syls_to_letters(rot, 0, 1);
  Letters mid = syls_to_letters(rot, 1, q2);
  Letters tail = syls_to_letters(rot, q2 + 1, rot.size());
  TriPoly t1 = reduce_letters(concat(head, mid));
  TriPoly t2 = reduce_letters(concat(head, tail));
  TriPoly t3 = reduce_letters(concat(mid, inverse_letters(tail)));
  return t1 * t2 - t3;
}

TriPoly reduce_letters(const Letters& raw) {
  Letters w = raw;
  free_reduce(w);
  cyclic_reduce(w);
  w = canonical_cyclic(w);
  if (w.empty()) return TriPoly(2);

  thread_local std::unordered_map<std::string, TriPoly> memo;
  std::string key = key_of(w);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<Syl> syls = cyclic_syllables(w);
  TriPoly result;
  if (syls.size() == 1) {
    result = lift_gen(fam_f(syls[0].exp), syls[0].gen);
  } else if (syls.size() == 2 && std::labs(syls[0].exp) == 1 &&
             std::labs(syls[1].exp) == 1) {
    // tr(x y) = tr(x^-1 y^-1) = Z; the mixed-sign pairs give XY - Z.
    if (syls[0].exp * syls[1].exp > 0)
      result = TriPoly::var_z();
    else
      result = TriPoly::var_x() * TriPoly::var_y() - TriPoly::var_z();
  } else {
    size_t big = syls.size();
    for (size_t i = 0; i < syls.size(); ++i)
      if (std::labs(syls[i].exp) >= 2 &&
          (big == syls.size() || std::labs(syls[i].exp) > std::labs(syls[big].exp)))
        big = i;
    if (big != syls.size()) {
      result = reduce_power_step(syls, big);
    } else {
      // All exponents +-1; find a generator repeated with equal sign.
      size_t p = syls.size(), q = syls.size();
      for (std::uint8_t g = 0; g < 2 && p == syls.size(); ++g)
        for (int sign = 1; sign >= -1 && p == syls.size(); sign -= 2)
          for (size_t i = 0; i < syls.size(); ++i)
            if (syls[i].gen == g && syls[i].exp == sign) {
              for (size_t j = i + 1; j < syls.size(); ++j)
                if (syls[j].gen == g && syls[j].exp == sign) {
                  p = i;
                  q = j;
                  break;
                }
              break;
            }
      if (p != syls.size()) {
        result = reduce_samesign_split(syls, p, q);
      } else {
        // Commutator shape x^e y^d x^-e y^-d: split off the final syllable.
        Letters pfx = syls_to_letters(syls, 0, syls.size() - 1);
        Letters last = syls_to_letters(syls, syls.size() - 1, syls.size());
        TriPoly t1 = reduce_letters(pfx);
        TriPoly t2 = reduce_letters(last);
        TriPoly t3 = reduce_letters(concat(pfx, inverse_letters(last)));
        result = t1 * t2 - t3;
      }
    }
  }
  memo.emplace(std::move(key), result);
  return result;
}

} // namespace

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] != 'x' && tok[0] != 'y')
      throw std::invalid_argument("parse_word: unknown generator in '" + tok + "'");
    long exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() == 2)
        throw std::invalid_argument("parse_word: malformed syllable '" + tok + "'");
      size_t pos = 0;
      try {
        exp = std::stol(tok.substr(2), &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_word: malformed exponent in '" + tok + "'");
      }
      if (pos != tok.size() - 2)
        throw std::invalid_argument("parse_word: malformed exponent in '" + tok + "'");
    }
    if (exp == 0) continue;
    if (!out.empty() && out.back().gen == tok[0]) {
      out.back().exp += exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back({tok[0], exp});
    }
  }
  // One merge pass is not enough when a cancellation exposes a new pair.
  Word reduced;
  for (const Syllable& s : out) {
    if (!reduced.empty() && reduced.back().gen == s.gen) {
      reduced.back().exp += s.exp;
      if (reduced.back().exp == 0) reduced.pop_back();
    } else {
      reduced.push_back(s);
    }
  }
  return reduced;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Syllable& s : w) {
    if (!first) out << " ";
    first = false;
    out << s.gen;
    if (s.exp != 1) out << "^" << s.exp;
  }
  return out.str();
}

Word word_inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Syllable& s : out) s.exp = -s.exp;
  return out;
}

TriPoly reduce_trace(const Word& w) { return reduce_letters(to_letters(w)); }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const { return {d, -b, -c, a}; }

Mat2 Mat2::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Mat2 base = *this, acc = identity();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Mat2 random_sl2(std::uint64_t seed, double scale) {
  if (!(scale > 0.0) || scale > 2.0)
    throw std::invalid_argument("random_sl2: scale must lie in (0, 2]");
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() {
    // Uniform in [-1, 1), reproducible across platforms.
    return (rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::complex<double> a(scale * unit(), scale * unit());
    std::complex<double> b(scale * unit(), scale * unit());
    std::complex<double> c(scale * unit(), scale * unit());
    if (std::abs(a) < 0.35 * scale) continue;
    std::complex<double> d = (1.0 + b * c) / a;
    if (std::abs(d) > std::max(3.0, 2.0 / scale)) continue;
    return {a, b, c, d};
  }
  throw std::logic_error("random_sl2: rejection loop failed to terminate");
}

std::complex<double> eval_word(const Word& w, const Mat2& A, const Mat2& B) {
  Mat2 acc = Mat2::identity();
  for (const Syllable& s : w) acc = acc * (s.gen == 'x' ? A : B).pow(s.exp);
  return acc.trace();
}

bool is_reducible_pair(const Mat2& A, const Mat2& B, double tol) {
  Mat2 comm = A * B * A.inverse() * B.inverse();
  return std::abs(comm.trace() - 2.0) <= tol;
}

} // namespace charvar
