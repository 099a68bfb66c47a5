#include "ggrad/casimir.hpp"

#include "ggrad/errors.hpp"
#include "ggrad/selection.hpp"

namespace ggrad {

namespace {

Rat casimir_raw(const GroupDescriptor& g, const Weight& w) {
  Weight shifted = w;
  for (int i = 0; i < g.rank; ++i) shifted[i] += Rat(2) * g.weyl_vector[i];
  return inner(g, w, shifted);
}

// index of the single nonzero coordinate of +-eps_i, or -1
int axis_index(const Weight& eps, int from, int* sign) {
  int idx = -1;
  for (int i = from; i < static_cast<int>(eps.size()); ++i) {
    if (eps[i].is_zero()) continue;
    if (idx >= 0) return -1;
    idx = i;
    *sign = eps[i].sgn();
    if (eps[i] != Rat(1) && eps[i] != Rat(-1)) return -1;
  }
  return idx;
}

Rat su_trace_shift(const GroupDescriptor& g, const DominantWeight& lambda) {
  Rat s;
  for (const Rat& x : lambda.weight()) s += x;
  return s / Rat(g.rank);
}

}  // namespace

Rat casimir_number(const GroupDescriptor& g, const DominantWeight& lambda) {
  return casimir_raw(g, lambda.weight());
}

Rat casimir_normalized(const GroupDescriptor& g, const DominantWeight& lambda) {
  return g.c2_scale * casimir_number(g, lambda) / g.c_tau;
}

Rat conformal_weight_formula(const GroupDescriptor& g, const Weight& lambda,
                             const Weight& eps) {
  Weight shifted = weight_add(lambda, g.weyl_vector);
  Rat val = inner(g, eps, eps) + Rat(2) * inner(g, shifted, eps) - g.c_tau;
  return g.c2_scale * val / (Rat(2) * g.c_tau);
}

Rat conformal_weight(const GroupDescriptor& g, const DominantWeight& lambda,
                     const Weight& eps) {
  if (!is_relevant(g.id, lambda, eps))
    throw NotRelevantError(group_name(g.id) + ": " + format_weight(eps) +
                           " is not a relevant weight of " +
                           format_weight(lambda.weight()));
  Rat c_mu = casimir_raw(g, weight_add(lambda.weight(), eps));
  Rat c_lam = casimir_raw(g, lambda.weight());
  Rat difference_form =
      g.c2_scale * (c_mu - c_lam - g.c_tau) / (Rat(2) * g.c_tau);
  Rat expanded_form = conformal_weight_formula(g, lambda.weight(), eps);
  if (difference_form != expanded_form)
    throw InternalInconsistencyError(
        group_name(g.id) + ": Casimir-difference and expanded conformal " +
        "weights disagree at lambda = " + format_weight(lambda.weight()) +
        ", eps = " + format_weight(eps) + ": " + difference_form.to_string() +
        " vs " + expanded_form.to_string());
  return difference_form;
}

Rat conformal_weight_closed(const GroupDescriptor& g,
                            const DominantWeight& lambda, const Weight& eps) {
  if (!is_relevant(g.id, lambda, eps))
    throw NotRelevantError(group_name(g.id) + ": " + format_weight(eps) +
                           " is not a relevant weight of " +
                           format_weight(lambda.weight()));
  const Weight& lam = lambda.weight();
  const int m = g.rank;
  switch (g.id.family) {
    case Family::SO:
    case Family::Spin: {
      const int n = g.n;
      if (is_zero_weight(eps)) return Rat(1 - n, 2);
      int sign = 0;
      int i = axis_index(eps, 0, &sign);
      Rat li_minus_i = lam[i] - Rat(i + 1);
      return sign > 0 ? Rat(1) + li_minus_i : Rat(1 - n) - li_minus_i;
    }
    case Family::U:
    case Family::SU: {
      int sign = 0;
      int i = axis_index(eps, 0, &sign);
      Rat li = lam[i];
      if (g.id.family == Family::SU) li -= su_trace_shift(g, lambda);
      return sign > 0 ? li - Rat(i + 1) + Rat(1) : -li + Rat(i + 1) - Rat(m);
    }
    case Family::Sp: {
      int sign = 0;
      int i = axis_index(eps, 0, &sign);
      return sign > 0 ? lam[i] - Rat(i + 1) + Rat(1)
                      : -lam[i] + Rat(i + 1) - Rat(2 * m + 1);
    }
    case Family::Sp1Sp: {
      const int mm = g.rank - 1;
      int s = eps[0].sgn();
      int t = 0;
      int i = axis_index(eps, 1, &t);  // 1-based slot i in (beta; lambda)
      Rat beta_term = Rat(s) * lam[0] / Rat(mm);
      Rat tail = Rat(-1, mm) + Rat(s, mm);
      if (t > 0)
        return (lam[i] + beta_term - Rat(i) + Rat(1) + tail) / Rat(2);
      return (-lam[i] + beta_term + Rat(i) - Rat(2 * mm + 1) + tail) / Rat(2);
    }
    case Family::G2: {
      // Closed forms in (l1, l2); the zero-weight value is the constant
      // -dim(g)/n = -2 forced by the general formula (the table row lists
      // only the six nonzero directions).
      if (is_zero_weight(eps)) return Rat(-2);
      const Rat& l1 = lam[0];
      const Rat& l2 = lam[1];
      struct Row {
        Weight dir;
        Rat form;
      };
      const Rat third(1, 3);
      const std::vector<Row> rows = {
          {{Rat(1), Rat(0)}, third * (Rat(2) * l1 + l2)},
          {{Rat(-1), Rat(0)}, Rat(-10, 3) - third * (Rat(2) * l1 + l2)},
          {{Rat(0), Rat(1)}, Rat(-1, 3) + third * (l1 + Rat(2) * l2)},
          {{Rat(0), Rat(-1)}, Rat(-3) - third * (l1 + Rat(2) * l2)},
          {{Rat(1), Rat(-1)}, Rat(-4, 3) + third * (l1 - l2)},
          {{Rat(-1), Rat(1)}, Rat(-2) - third * (l1 - l2)},
      };
      for (const Row& r : rows)
        if (r.dir == eps) return r.form;
      throw InternalInconsistencyError("G2: unknown tau weight " +
                                       format_weight(eps));
    }
    case Family::Spin7: {
      // w_{k,+-} with k determined by the sign pattern of 2*eps.
      int s1 = eps[0].sgn(), s2 = eps[1].sgn(), s3 = eps[2].sgn();
      const Rat& l1 = lam[0];
      const Rat& l2 = lam[1];
      const Rat& l3 = lam[2];
      const Rat half(1, 2);
      // (combination, offset_plus) per k, for the +-representative s1 = +1
      struct Row {
        int s2, s3;
        Rat comb, base;
      };
      const std::vector<Row> rows = {
          {1, 1, l1 + l2 + l3, Rat(9, 4)},
          {1, -1, l1 + l2 - l3, Rat(7, 4)},
          {-1, 1, l1 - l2 + l3, Rat(3, 4)},
          {-1, -1, l1 - l2 - l3, Rat(1, 4)},
      };
      for (const Row& r : rows) {
        if (s1 > 0 && s2 == r.s2 && s3 == r.s3)
          return -(Rat(9, 4) - r.base) + half * r.comb;
        if (s1 < 0 && s2 == -r.s2 && s3 == -r.s3)
          return -(Rat(9, 4) + r.base) - half * r.comb;
      }
      throw InternalInconsistencyError("Spin(7)-structure: unknown tau weight " +
                                       format_weight(eps));
    }
  }
  throw InternalInconsistencyError("unreachable group family");
}

std::string epsilon_label(const GroupDescriptor& g, const Weight& eps) {
  auto pm = [](int s) { return s > 0 ? "+" : "-"; };
  switch (g.id.family) {
    case Family::SO:
    case Family::Spin:
    case Family::U:
    case Family::SU:
    case Family::Sp: {
      if (is_zero_weight(eps)) return "w_0";
      int sign = 0;
      int i = axis_index(eps, 0, &sign);
      return "w_{" + std::to_string(i + 1) + "," + pm(sign) + "}";
    }
    case Family::Sp1Sp: {
      int s = eps[0].sgn();
      int t = 0;
      int i = axis_index(eps, 1, &t);
      return std::string("w_{") + pm(s) + "," + std::to_string(i) + "," +
             pm(t) + "}";
    }
    case Family::G2: {
      if (is_zero_weight(eps)) return "w_0";
      static const std::vector<std::pair<Weight, std::string>> names = {
          {{Rat(1), Rat(0)}, "w_{1,+}"},  {{Rat(-1), Rat(0)}, "w_{1,-}"},
          {{Rat(0), Rat(1)}, "w_{2,+}"},  {{Rat(0), Rat(-1)}, "w_{2,-}"},
          {{Rat(1), Rat(-1)}, "w_{3,+}"}, {{Rat(-1), Rat(1)}, "w_{3,-}"},
      };
      for (const auto& [dir, name] : names)
        if (dir == eps) return name;
      return "w_?";
    }
    case Family::Spin7: {
      int s1 = eps[0].sgn(), s2 = eps[1].sgn(), s3 = eps[2].sgn();
      int k = s1 > 0 ? (s2 > 0 ? (s3 > 0 ? 1 : 2) : (s3 > 0 ? 3 : 4))
                     : (s2 < 0 ? (s3 < 0 ? 1 : 2) : (s3 < 0 ? 3 : 4));
      return "w_{" + std::to_string(k) + "," + pm(s1) + "}";
    }
  }
  return "w_?";
}

bool ordering_check(const GroupDescriptor& g, const DominantWeight& lambda) {
  if (g.id.family != Family::SO && g.id.family != Family::Spin)
    throw WrongGroupError("ordering_check applies to SO(n)/Spin(n) only, not " +
                          group_name(g.id));
  const Weight& lam = lambda.weight();
  const int m = g.rank;
  const int n = g.n;
  std::vector<Rat> wp(m), wm(m);
  for (int i = 0; i < m; ++i) {
    wp[i] = Rat(1) + lam[i] - Rat(i + 1);
    wm[i] = Rat(1 - n) - (lam[i] - Rat(i + 1));
  }
  for (int i = 0; i + 1 < m; ++i) {
    if (!(wp[i] > wp[i + 1])) return false;
    if (!(wm[i + 1] > wm[i])) return false;
  }
  if (n % 2) {
    Rat w0(1 - n, 2);
    if (!(wp[m - 1] > w0)) return false;
    if (!(w0 >= wm[m - 1])) return false;
    const bool equality = w0 == wm[m - 1];
    if (equality != lam[m - 1].is_zero()) return false;
  } else {
    if (m >= 2) {
      if (!(wp[m - 2] > wp[m - 1]) || !(wp[m - 2] > wm[m - 1])) return false;
      if (!(wp[m - 1] > wm[m - 2]) || !(wm[m - 1] > wm[m - 2])) return false;
    }
    if (wp[m - 1] - wm[m - 1] != Rat(2) * lam[m - 1]) return false;
  }
  return true;
}

}  // namespace ggrad
