#pragma once

#include <iosfwd>
#include <string>

#include "ggrad/bigint.hpp"

namespace ggrad {

// Exact rational number, always in lowest terms with positive denominator.
// Every quantity in the library is a Rat; there is no floating point on any
// computation path.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(int n) : num_(n), den_(1) {}        // NOLINT
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }
  Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  // Accepts "p", "p/q", optional leading sign.
  static Rat parse(const std::string& s);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int sgn() const { return num_.sgn(); }
  bool is_integer() const { return den_ == Int(1); }
  // True when 2*this is an odd integer.
  bool is_half_integer() const { return den_ == Int(2); }

  std::string to_string() const;  // "p/q", or "p" when q = 1

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const;
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& v);

 private:
  Int num_;
  Int den_;
  void normalize();
};

}  // namespace ggrad
