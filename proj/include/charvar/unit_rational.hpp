#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace charvar {

// Point e^{2*pi*i*p/q} on the unit circle, stored as the reduced angle p/q
// with 0 <= p < q. Multiplication adds angles mod 1, so every comparison
// against a root of unity is an exact integer test.
class UnitRational {
 public:
  UnitRational() : p_(0), q_(1) {}

  UnitRational(long long p, long long q) {
    if (q == 0) throw std::invalid_argument("UnitRational: zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    p %= q;
    if (p < 0) p += q;
    long long g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
  }

  long long num() const { return p_; }
  long long den() const { return q_; }

  bool is_one() const { return p_ == 0; }
  bool is_minus_one() const { return q_ == 2; } // reduced 1/2 is the only half turn

  UnitRational operator*(const UnitRational& o) const {
    long long g = std::gcd(q_, o.q_);
    // common denominator q_/g*o.q_ stays within range for the small orders used here
    return UnitRational(p_ * (o.q_ / g) + o.p_ * (q_ / g), q_ / g * o.q_);
  }

  UnitRational inverse() const { return UnitRational(q_ - p_, q_); }

  UnitRational pow(long long e) const {
    long long r = ((p_ * e) % q_ + q_) % q_;
    return UnitRational(r, q_);
  }

  // Representative of {z, z^-1}; the angle min(p, q-p)/q, which determines
  // and is determined by the trace z + z^-1.
  UnitRational conj_class() const { return p_ * 2 <= q_ ? *this : inverse(); }

  double trace_value() const {
    return 2.0 * std::cos(2.0 * M_PI * static_cast<double>(p_) / static_cast<double>(q_));
  }

  std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  friend bool operator==(const UnitRational& a, const UnitRational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const UnitRational& a, const UnitRational& b) { return !(a == b); }
  friend bool operator<(const UnitRational& a, const UnitRational& b) {
    return a.p_ * b.q_ < b.p_ * a.q_;
  }

 private:
  long long p_, q_;
};

} // namespace charvar
