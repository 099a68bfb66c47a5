#include "ggrad/dominance.hpp"

#include "ggrad/errors.hpp"

namespace ggrad {

namespace {

bool all_integral(const Weight& w) {
  for (const Rat& x : w)
    if (!x.is_integer()) return false;
  return true;
}

bool all_half_integral(const Weight& w) {
  for (const Rat& x : w)
    if (!x.is_half_integer()) return false;
  return true;
}

void require_length(const GroupId& id, const Weight& w) {
  const GroupDescriptor& d = descriptor(id);
  if (static_cast<int>(w.size()) != d.rank)
    throw LengthError(group_name(id) + ": expected " +
                      std::to_string(d.rank) + " coordinates, got " +
                      std::to_string(w.size()));
}

// Returns an empty string when fine, otherwise the violated condition.
std::string violation(const GroupId& id, const Weight& w) {
  const int m = static_cast<int>(w.size());
  auto non_increasing = [&](int from, int to) -> std::string {
    for (int i = from; i + 1 <= to; ++i)
      if (w[i] < w[i + 1])
        return "lambda_" + std::to_string(i + 1 - from) +
               " >= lambda_" + std::to_string(i + 2 - from) + " violated";
    return "";
  };
  switch (id.family) {
    case Family::SO:
    case Family::Spin: {
      const bool odd = id.param % 2 != 0;
      if (!all_integral(w)) {
        if (id.family == Family::SO)
          return all_half_integral(w)
                     ? "half-integer coordinates parametrize a representation "
                       "of the spin group Spin(" + std::to_string(id.param) +
                           "), not of SO(" + std::to_string(id.param) + ")"
                     : "coordinates must be all integers";
        if (!all_half_integral(w))
          return "coordinates must be all integers or all half-integers";
      }
      if (odd) {
        std::string v = non_increasing(0, m - 1);
        if (!v.empty()) return v;
        if (w[m - 1] < Rat(0)) return "lambda_m >= 0 violated";
      } else {
        std::string v = non_increasing(0, m - 2);
        if (!v.empty()) return v;
        if (m >= 2) {
          Rat last = w[m - 1].sgn() < 0 ? -w[m - 1] : w[m - 1];
          if (w[m - 2] < last) return "lambda_{m-1} >= |lambda_m| violated";
        }
      }
      return "";
    }
    case Family::U:
    case Family::SU: {
      if (!all_integral(w)) return "coordinates must be integers";
      return non_increasing(0, m - 1);
    }
    case Family::Sp: {
      if (!all_integral(w)) return "coordinates must be integers";
      std::string v = non_increasing(0, m - 1);
      if (!v.empty()) return v;
      if (w[m - 1] < Rat(0)) return "lambda_m >= 0 violated";
      return "";
    }
    case Family::Sp1Sp: {
      if (!all_integral(w)) return "coordinates must be integers";
      if (w[0] < Rat(0)) return "beta >= 0 violated";
      for (int i = 1; i + 1 < m; ++i)
        if (w[i] < w[i + 1])
          return "lambda_" + std::to_string(i) + " >= lambda_" +
                 std::to_string(i + 1) + " violated";
      if (w[m - 1] < Rat(0)) return "lambda_m >= 0 violated";
      return "";
    }
    case Family::G2: {
      if (!all_integral(w)) return "coordinates must be integers";
      if (w[0] < w[1]) return "lambda_1 >= lambda_2 violated";
      if (w[1] < Rat(0)) return "lambda_2 >= 0 violated";
      return "";
    }
    case Family::Spin7: {
      // Targets lambda + eps of integral lambda are half-integral, so the
      // full Spin(7) weight lattice is accepted here; the closed-form table
      // row itself is swept over the integral weights.
      if (!all_integral(w) && !all_half_integral(w))
        return "coordinates must be all integers or all half-integers";
      std::string v = non_increasing(0, m - 1);
      if (!v.empty()) return v;
      if (w[m - 1] < Rat(0)) return "lambda_3 >= 0 violated";
      return "";
    }
  }
  return "unknown group";
}

}  // namespace

Weight su_normal_form(const GroupId& id, const Weight& w) {
  if (id.family != Family::SU || w.empty()) return w;
  Rat last = w.back();
  if (last.is_zero()) return w;
  Weight out = w;
  for (Rat& x : out) x -= last;
  return out;
}

bool is_dominant(const GroupId& id, const Weight& w) {
  require_length(id, w);
  return violation(id, w).empty();
}

DominantWeight certify(const GroupId& id, const Weight& w) {
  require_length(id, w);
  Weight canon = su_normal_form(id, w);
  std::string v = violation(id, canon);
  if (!v.empty())
    throw NotDominantError(group_name(id) + ": " + format_weight(w) +
                           " is not dominant: " + v);
  return DominantWeight(id, std::move(canon));
}

std::string dominance_condition(const GroupId& id) {
  switch (id.family) {
    case Family::SO:
      return id.param % 2 ? "lambda in Z^m, lambda_1 >= ... >= lambda_m >= 0"
                          : "lambda in Z^m, lambda_1 >= ... >= |lambda_m|";
    case Family::Spin:
      return id.param % 2
                 ? "lambda in Z^m or (1/2+Z)^m, lambda_1 >= ... >= lambda_m >= 0"
                 : "lambda in Z^m or (1/2+Z)^m, lambda_1 >= ... >= |lambda_m|";
    case Family::U:
      return "lambda in Z^m, lambda_1 >= ... >= lambda_m";
    case Family::SU:
      return "lambda in Z^m, lambda_1 >= ... >= lambda_m (stored with "
             "lambda_m = 0)";
    case Family::Sp:
      return "lambda in Z^m, lambda_1 >= ... >= lambda_m >= 0";
    case Family::Sp1Sp:
      return "beta in Z, beta >= 0; lambda in Z^m, lambda_1 >= ... >= "
             "lambda_m >= 0";
    case Family::G2:
      return "lambda in Z^2, lambda_1 >= lambda_2 >= 0";
    case Family::Spin7:
      return "lambda in Z^3 (targets also in (1/2+Z)^3), lambda_1 >= "
             "lambda_2 >= lambda_3 >= 0";
  }
  return "";
}

}  // namespace ggrad
