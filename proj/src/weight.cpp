#include "ggrad/weight.hpp"

#include "ggrad/errors.hpp"

namespace ggrad {

namespace {
void require_same_length(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw LengthError("weight length mismatch: " + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()));
}
}  // namespace

Weight weight_add(const Weight& a, const Weight& b) {
  require_same_length(a, b);
  Weight out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  require_same_length(a, b);
  Weight out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Weight weight_neg(const Weight& a) {
  Weight out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Weight weight_scale(const Rat& c, const Weight& a) {
  Weight out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool is_zero_weight(const Weight& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool lex_less(const Weight& a, const Weight& b) {
  size_t n = a.size() < b.size() ? a.size() : b.size();
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::string format_weight(const Weight& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].to_string();
  }
  out += ")";
  return out;
}

Weight parse_weight_csv(const std::string& s) {
  Weight out;
  size_t pos = 0;
  int index = 1;
  while (true) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos
                                        ? std::string::npos
                                        : comma - pos);
    // trim spaces
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error("weight coordinate " + std::to_string(index) + " is empty");
    tok = tok.substr(b, e - b + 1);
    try {
      out.push_back(Rat::parse(tok));
    } catch (const Error&) {
      throw Error("weight coordinate " + std::to_string(index) +
                  " is not a rational number: '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
    ++index;
  }
  return out;
}

}  // namespace ggrad
