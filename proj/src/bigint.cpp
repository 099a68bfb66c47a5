#include "ggrad/bigint.hpp"

#include <algorithm>
#include <ostream>

#include "ggrad/errors.hpp"

namespace ggrad {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

Int::Int(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid overflow on LLONG_MIN
  uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
  if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void Int::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int Int::cmp_mag(const std::vector<uint32_t>& a,
                 const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> Int::add_mag(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> out(x.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
    out[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  out[x.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> Int::sub_mag(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow -
                (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> Int::mul_mag(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

namespace {

// shift left by s bits (0 <= s < 32), possibly growing by one limb
std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, unsigned s) {
  if (s == 0 || a.empty()) return a;
  std::vector<uint32_t> out(a.size() + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] |= a[i] << s;
    out[i + 1] = a[i] >> (32 - s);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, unsigned s) {
  if (s == 0 || a.empty()) return a;
  std::vector<uint32_t> out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] >> s;
    if (i + 1 < a.size()) out[i] |= a[i + 1] << (32 - s);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

unsigned leading_zeros(uint32_t x) {
  unsigned c = 0;
  while (!(x & 0x80000000u)) {
    x <<= 1;
    ++c;
  }
  return c;
}

}  // namespace

// Knuth algorithm D on base-2^32 limbs; single-limb divisor fast path.
void Int::divmod_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b, std::vector<uint32_t>& q,
                     std::vector<uint32_t>& r) {
  q.clear();
  r.clear();
  if (b.empty()) throw Error("Int: division by zero");
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    q.assign(a.size(), 0);
    uint64_t d = b[0];
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  unsigned shift = leading_zeros(b.back());
  std::vector<uint32_t> u = shl_bits(a, shift);
  std::vector<uint32_t> v = shl_bits(b, shift);
  size_t n = v.size();
  size_t m = u.size() - n;
  u.resize(u.size() + 1, 0);
  q.assign(m + 1, 0);

  const uint64_t vtop = v[n - 1];
  const uint64_t vnext = v[n - 2];
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / vtop;
    uint64_t rhat = num % vtop;
    if (qhat >= kBase) {
      qhat = kBase - 1;
      rhat = num - qhat * vtop;
    }
    while (rhat < kBase && qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
    }
    // multiply-subtract qhat * v from u[j .. j+n]
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[i + j]) -
                  static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) -
                borrow;
    if (t < 0) {
      // qhat was one too large: add v back
      t += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
      t &= static_cast<int64_t>(kBase) - 1;
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  u.resize(n);
  r = shr_bits(u, shift);
}

Int Int::operator-() const {
  Int out = *this;
  out.sign_ = -out.sign_;
  return out;
}

Int operator+(const Int& a, const Int& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  Int out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.mag_ = Int::add_mag(a.mag_, b.mag_);
  } else {
    int c = Int::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return Int();
    if (c > 0) {
      out.sign_ = a.sign_;
      out.mag_ = Int::sub_mag(a.mag_, b.mag_);
    } else {
      out.sign_ = b.sign_;
      out.mag_ = Int::sub_mag(b.mag_, a.mag_);
    }
  }
  out.trim();
  return out;
}

Int operator-(const Int& a, const Int& b) { return a + (-b); }

Int operator*(const Int& a, const Int& b) {
  Int out;
  if (a.sign_ == 0 || b.sign_ == 0) return out;
  out.sign_ = a.sign_ * b.sign_;
  out.mag_ = Int::mul_mag(a.mag_, b.mag_);
  out.trim();
  return out;
}

void Int::divmod(const Int& a, const Int& b, Int& q, Int& r) {
  if (b.sign_ == 0) throw Error("Int: division by zero");
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  q.trim();
  r.trim();
}

Int operator/(const Int& a, const Int& b) {
  Int q, r;
  Int::divmod(a, b, q, r);
  return q;
}

Int operator%(const Int& a, const Int& b) {
  Int q, r;
  Int::divmod(a, b, q, r);
  return r;
}

Int Int::abs(const Int& a) {
  Int out = a;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

Int Int::gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool operator==(const Int& a, const Int& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const Int& a, const Int& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = Int::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

bool Int::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
  return sign_ > 0 ? u <= 0x7fffffffffffffffull : u <= 0x8000000000000000ull;
}

long long Int::to_int64() const {
  if (!fits_int64()) throw Error("Int: value does not fit in 64 bits");
  uint64_t u = 0;
  if (!mag_.empty()) u = mag_[0];
  if (mag_.size() == 2) u |= static_cast<uint64_t>(mag_[1]) << 32;
  return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
}

std::string Int::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> cur = mag_;
  std::string digits;
  const std::vector<uint32_t> ten9 = {1000000000u};
  while (!cur.empty()) {
    std::vector<uint32_t> q, r;
    divmod_mag(cur, ten9, q, r);
    uint32_t chunk = r.empty() ? 0 : r[0];
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
    cur = std::move(q);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int Int::from_string(const std::string& s) {
  if (s.empty()) throw Error("Int: empty string");
  size_t pos = 0;
  int sign = 1;
  if (s[0] == '-' || s[0] == '+') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  if (pos == s.size()) throw Error("Int: no digits in '" + s + "'");
  Int out;
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9')
      throw Error("Int: invalid digit in '" + s + "'");
    out = out * Int(10) + Int(s[pos] - '0');
  }
  if (sign < 0) out = -out;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Int& v) {
  return os << v.to_string();
}

}  // namespace ggrad
