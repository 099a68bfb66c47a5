#include "ggrad/catalog.hpp"

#include <algorithm>

#include "ggrad/casimir.hpp"
#include "ggrad/errors.hpp"
#include "ggrad/forms.hpp"

namespace ggrad {

namespace {

Weight axis(int m, int i, int sign) {  // 1-based i
  Weight w(m, Rat(0));
  w[i - 1] = Rat(sign);
  return w;
}

Weight spinor(int m, int last_sign = 1) {
  Weight w(m, Rat(1, 2));
  if (last_sign < 0) w[m - 1] = Rat(-1, 2);
  return w;
}

NamedOperator make(OperatorKind kind, int index, GroupId id, Weight lambda,
                   Weight eps, std::string name) {
  const GroupDescriptor& g = descriptor(id);
  DominantWeight lam = certify(id, lambda);
  Rat w = conformal_weight(g, lam, eps);
  bool endo = is_zero_weight(eps);
  return NamedOperator{kind,          index, id, std::move(lam),
                       std::move(eps), w,     endo, std::move(name)};
}

NamedOperator make_form(OperatorKind kind, int n, int p) {
  if (n < 3) throw OutOfRangeError("form operators require n >= 3");
  if (p < 1 || p > n - 1)
    throw OutOfRangeError("form degree out of range: need 1 <= p <= n-1, got " +
                          std::to_string(p));
  const int m = n / 2;
  if (kind == OperatorKind::FormTwistor) {
    Weight lam = form_rep_weights(n, p)[0];
    if (n % 2 == 0 && p == m)
      throw OutOfRangeError(
          "twistor operator on middle-degree forms of even n splits with the "
          "selfdual decomposition; use decompose on (1,...,1,+-1)");
    return make(kind, p, {Family::SO, n}, lam, axis(m, 1, +1),
                "form twistor operator on " + std::to_string(p) + "-forms");
  }
  const bool is_d = kind == OperatorKind::ExteriorDerivative;
  if (n % 2 == 0) {
    const int lo = is_d ? m - 1 : m;
    if (p == lo || p == lo + 1)
      throw OutOfRangeError(
          std::string(is_d ? "exterior derivative" : "codifferential") +
          " on p = " + std::to_string(p) + "-forms of even n = " +
          std::to_string(n) +
          " meets the selfdual splitting and is not a single generalized "
          "gradient; use decompose");
  }
  auto arrows = is_d ? d_arrows(n, p) : delta_arrows(n, p);
  // outside the even boundaries excluded above there is exactly one arrow
  const FormArrow& a = arrows.front();
  return make(kind, p, {Family::SO, n}, a.source_rep, a.eps,
              std::string(is_d ? "exterior derivative d on " : "codifferential delta on ") +
                  std::to_string(p) + "-forms");
}

NamedOperator make_spin(OperatorKind kind, int n) {
  if (n < 3) throw OutOfRangeError("spin operators require n >= 3");
  const int m = n / 2;
  const bool odd = n % 2 != 0;
  GroupId id{Family::Spin, n};
  switch (kind) {
    case OperatorKind::Dirac: {
      if (odd) return make(kind, 0, id, spinor(m), Weight(m, Rat(0)), "Dirac operator");
      return make(kind, 0, id, spinor(m, +1), axis(m, m, -1),
                  "Dirac operator on positive half-spinors");
    }
    case OperatorKind::PenroseTwistor: {
      Weight lam = odd ? spinor(m) : spinor(m, +1);
      return make(kind, 0, id, std::move(lam), axis(m, 1, +1),
                  "Penrose twistor operator");
    }
    case OperatorKind::RaritaSchwinger: {
      Weight lam = odd ? spinor(m) : spinor(m, +1);
      lam[0] = Rat(3, 2);
      if (odd)
        return make(kind, 0, id, std::move(lam), Weight(m, Rat(0)),
                    "Rarita-Schwinger operator");
      return make(kind, 0, id, std::move(lam), axis(m, m, -1),
                  "Rarita-Schwinger operator on the positive twistor bundle");
    }
    default:
      throw Error("make_spin: not a spin operator");
  }
}

NamedOperator make_kahler(OperatorKind kind, int m, int i) {
  if (m < 1) throw OutOfRangeError("Kaehlerian gradients require m >= 1");
  if (i < 1 || i > m)
    throw OutOfRangeError("Kaehlerian gradient index out of range: need 1 <= i <= m, got " +
                          std::to_string(i));
  Weight lam(m, Rat(0));
  for (int k = 0; k < m; ++k) lam[k] = Rat(m - 1 - k);
  const int sign = kind == OperatorKind::KahlerGradientPlus ? +1 : -1;
  return make(kind, i, {Family::U, m}, std::move(lam), axis(m, i, sign),
              std::string("Kaehlerian gradient w_{") + std::to_string(i) +
                  (sign > 0 ? ",+}" : ",-}") + " on the staircase weight");
}

}  // namespace

NamedOperator lookup(OperatorKind kind, int n_or_m, int index) {
  switch (kind) {
    case OperatorKind::ExteriorDerivative:
    case OperatorKind::Codifferential:
    case OperatorKind::FormTwistor:
      return make_form(kind, n_or_m, index);
    case OperatorKind::Dirac:
    case OperatorKind::PenroseTwistor:
    case OperatorKind::RaritaSchwinger:
      return make_spin(kind, n_or_m);
    case OperatorKind::KahlerGradientPlus:
    case OperatorKind::KahlerGradientMinus:
      return make_kahler(kind, n_or_m, index);
  }
  throw Error("lookup: unknown operator kind");
}

std::vector<std::string> operator_names(const GroupId& id,
                                        const DominantWeight& lambda,
                                        const Weight& eps) {
  std::vector<std::string> out;
  const int m = descriptor(id).rank;
  const Weight& lam = lambda.weight();
  auto is_spinor_like = [&](const Rat& head) {
    if (lam.empty() || lam[0] != head) return false;
    for (int i = 1; i < m; ++i) {
      Rat a = lam[i].sgn() < 0 ? -lam[i] : lam[i];
      if (a != Rat(1, 2)) return false;
      if (i + 1 < m && lam[i].sgn() < 0) return false;
    }
    return true;
  };
  if (id.family == Family::SO || id.family == Family::Spin) {
    const int n = id.param;
    // forms: lambda = (1,...,1,0,...)
    int ones = 0;
    while (ones < m && lam[ones] == Rat(1)) ++ones;
    bool is_form = true;
    for (int i = ones; i < m; ++i)
      if (!lam[i].is_zero()) is_form = false;
    if (ones == m - 1 && lam[m - 1] == Rat(-1)) {  // antiselfdual middle form
      ones = m;
      is_form = true;
    }
    if (is_form && ones <= m) {
      for (int p : {ones, n - ones}) {
        if (p < 1 || p > n - 1) continue;
        for (const FormArrow& a : d_arrows(n, p))
          if (a.source_rep == lam && a.eps == eps)
            out.push_back("exterior derivative d on " + std::to_string(p) +
                          "-forms");
        for (const FormArrow& a : delta_arrows(n, p))
          if (a.source_rep == lam && a.eps == eps)
            out.push_back("codifferential delta on " + std::to_string(p) +
                          "-forms");
        if (!eps.empty() && eps == axis(m, 1, +1) &&
            form_rep_weights(n, p)[0] == lam)
          out.push_back("form twistor operator on " + std::to_string(p) +
                        "-forms");
      }
    }
    if (id.family == Family::Spin) {
      const bool odd = n % 2 != 0;
      if (is_spinor_like(Rat(1, 2))) {
        if ((odd && is_zero_weight(eps)) ||
            (!odd && eps == axis(m, m, -lam[m - 1].sgn())))
          out.push_back("Dirac operator");
        if (eps == axis(m, 1, +1)) out.push_back("Penrose twistor operator");
      }
      if (is_spinor_like(Rat(3, 2))) {
        if ((odd && is_zero_weight(eps)) ||
            (!odd && eps == axis(m, m, -lam[m - 1].sgn())))
          out.push_back("Rarita-Schwinger operator");
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AdjointData adjoint(const GroupDescriptor& g, const DominantWeight& lambda,
                    const Weight& eps) {
  Rat ignored = conformal_weight(g, lambda, eps);  // validates relevance
  (void)ignored;
  DominantWeight mu = certify(g.id, weight_add(lambda.weight(), eps));
  Weight back = weight_neg(eps);
  if (!is_relevant(g.id, mu, back))
    throw InternalInconsistencyError(
        group_name(g.id) + ": -eps not relevant for lambda + eps at lambda = " +
        format_weight(lambda.weight()) + ", eps = " + format_weight(eps));
  Rat w = conformal_weight(g, mu, back);
  return AdjointData{std::move(mu), std::move(back), std::move(w)};
}

bool second_order_invariant(const GroupDescriptor& g,
                            const DominantWeight& lambda, const Weight& eps1,
                            const Weight& eps2) {
  if (!is_relevant(g.id, lambda, eps1))
    throw NotRelevantError(group_name(g.id) + ": eps1 = " +
                           format_weight(eps1) + " is not relevant for " +
                           format_weight(lambda.weight()));
  DominantWeight mid = certify(g.id, weight_add(lambda.weight(), eps1));
  if (!is_relevant(g.id, mid, eps2))
    throw NotRelevantError(group_name(g.id) + ": eps2 = " +
                           format_weight(eps2) + " is not relevant for " +
                           format_weight(mid.weight()));
  return conformal_weight(g, mid, eps2) ==
         conformal_weight(g, lambda, eps1) - Rat(1);
}

}  // namespace ggrad
