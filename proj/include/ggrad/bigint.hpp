#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ggrad {

// Arbitrary-precision signed integer.
//
// Sign-magnitude representation, little-endian base-2^32 limbs, no leading
// zero limbs, zero is sign 0 with empty magnitude. Everything the weight
// arithmetic needs stays exact: the Weyl dimension products and the
// fraction-free eliminations overflow 64-bit integers long before the sweeps
// end.
class Int {
 public:
  Int() = default;
  Int(long long v);  // NOLINT: implicit by design, mirrors built-in ints
  Int(int v) : Int(static_cast<long long>(v)) {}

  static Int from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  int sgn() const { return sign_; }
  bool is_odd() const { return !mag_.empty() && (mag_[0] & 1u); }

  bool fits_int64() const;
  long long to_int64() const;  // throws Error when out of range
  std::string to_string() const;

  Int operator-() const;
  friend Int operator+(const Int& a, const Int& b);
  friend Int operator-(const Int& a, const Int& b);
  friend Int operator*(const Int& a, const Int& b);
  // Truncated division (C semantics): q rounds toward zero, r has a's sign.
  friend Int operator/(const Int& a, const Int& b);
  friend Int operator%(const Int& a, const Int& b);

  Int& operator+=(const Int& b) { return *this = *this + b; }
  Int& operator-=(const Int& b) { return *this = *this - b; }
  Int& operator*=(const Int& b) { return *this = *this * b; }
  Int& operator/=(const Int& b) { return *this = *this / b; }

  static void divmod(const Int& a, const Int& b, Int& q, Int& r);
  static Int abs(const Int& a);
  static Int gcd(Int a, Int b);  // always >= 0, gcd(0,0) = 0

  friend bool operator==(const Int& a, const Int& b);
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b);
  friend bool operator>(const Int& a, const Int& b) { return b < a; }
  friend bool operator<=(const Int& a, const Int& b) { return !(b < a); }
  friend bool operator>=(const Int& a, const Int& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Int& v);

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // little-endian, trimmed

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a,
                         const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace ggrad
