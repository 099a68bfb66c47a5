#include "ggrad/rational.hpp"

#include <ostream>

#include "ggrad/errors.hpp"

namespace ggrad {

void Rat::normalize() {
  if (den_.is_zero()) throw Error("Rat: zero denominator");
  if (num_.is_zero()) {
    den_ = Int(1);
    return;
  }
  if (den_.sgn() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = Int::gcd(num_, den_);
  if (g != Int(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw Error("Rat: division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

Rat Rat::operator-() const {
  Rat out = *this;
  out.num_ = -out.num_;
  return out;
}

bool operator<(const Rat& a, const Rat& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rat::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rat Rat::parse(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int::from_string(s), Int(1));
  return Rat(Int::from_string(s.substr(0, slash)),
             Int::from_string(s.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rat& v) {
  return os << v.to_string();
}

}  // namespace ggrad
