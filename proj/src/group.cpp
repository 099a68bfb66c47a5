#include "ggrad/group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "ggrad/errors.hpp"

namespace ggrad {

std::string group_name(const GroupId& id) {
  switch (id.family) {
    case Family::SO:
      return "SO(" + std::to_string(id.param) + ")";
    case Family::Spin:
      return "Spin(" + std::to_string(id.param) + ")";
    case Family::U:
      return "U(" + std::to_string(id.param) + ")";
    case Family::SU:
      return "SU(" + std::to_string(id.param) + ")";
    case Family::Sp:
      return "Sp(" + std::to_string(id.param) + ")";
    case Family::Sp1Sp:
      return "Sp(1)·Sp(" + std::to_string(id.param) + ")";
    case Family::G2:
      return "G2";
    case Family::Spin7:
      return "Spin(7)-structure";
  }
  return "?";
}

Rat inner(const GroupDescriptor& g, const Weight& a, const Weight& b) {
  if (static_cast<int>(a.size()) != g.rank ||
      static_cast<int>(b.size()) != g.rank)
    throw LengthError("inner: weight length does not match rank " +
                      std::to_string(g.rank) + " of " + group_name(g.id));
  Rat out;
  for (int i = 0; i < g.rank; ++i) {
    if (a[i].is_zero()) continue;
    Rat row;
    for (int j = 0; j < g.rank; ++j) {
      if (!b[j].is_zero() && !g.gram[i][j].is_zero())
        row += g.gram[i][j] * b[j];
    }
    out += a[i] * row;
  }
  return out;
}

namespace {

Weight basis_vector(int rank, int i, const Rat& v = Rat(1)) {
  Weight w(rank, Rat(0));
  w[i] = v;
  return w;
}

std::vector<std::vector<Rat>> identity_gram(int rank) {
  std::vector<std::vector<Rat>> g(rank, std::vector<Rat>(rank, Rat(0)));
  for (int i = 0; i < rank; ++i) g[i][i] = Rat(1);
  return g;
}

void sort_tau(std::vector<std::pair<Weight, int>>& tau) {
  std::sort(tau.begin(), tau.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
}

Rat casimir_of(const GroupDescriptor& d, const Weight& w) {
  Weight shifted = w;
  for (int i = 0; i < d.rank; ++i) shifted[i] += Rat(2) * d.weyl_vector[i];
  return inner(d, w, shifted);
}

GroupDescriptor make_so_spin(Family f, int n) {
  if (n < 3)
    throw OutOfRangeError(group_name({f, n}) + ": the orthogonal families require n >= 3");
  const int m = n / 2;
  const bool odd = n % 2 != 0;
  GroupDescriptor d;
  d.id = {f, n};
  d.rank = m;
  d.n = n;
  d.dim_g = static_cast<long long>(n) * (n - 1) / 2;
  d.gram = identity_gram(m);
  d.weyl_vector.resize(m);
  for (int i = 0; i < m; ++i) d.weyl_vector[i] = Rat(n - 2 * (i + 1), 2);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Weight r = basis_vector(m, i);
      r[j] = Rat(-1);
      d.positive_roots.push_back(r);
      r[j] = Rat(1);
      d.positive_roots.push_back(r);
    }
    if (odd) d.positive_roots.push_back(basis_vector(m, i));
  }
  for (int i = 0; i < m; ++i) {
    d.tau_weights.push_back({basis_vector(m, i), 1});
    d.tau_weights.push_back({basis_vector(m, i, Rat(-1)), 1});
  }
  if (odd) d.tau_weights.push_back({Weight(m, Rat(0)), 1});
  sort_tau(d.tau_weights);
  d.tau_highest = basis_vector(m, 0);
  if (odd) d.zero_exception_highest = Weight(m, Rat(1, 2));
  d.c2_scale = Rat(n - 1);
  d.weyl = odd ? WeylKind::TypeB : WeylKind::TypeD;
  d.half_integral_ok = (f == Family::Spin);
  return d;
}

GroupDescriptor make_u(int m) {
  if (m < 1) throw OutOfRangeError("U(m) requires m >= 1");
  GroupDescriptor d;
  d.id = {Family::U, m};
  d.rank = m;
  d.n = 2 * m;
  d.dim_g = static_cast<long long>(m) * m;
  d.gram = identity_gram(m);
  d.weyl_vector.resize(m);
  for (int i = 0; i < m; ++i) d.weyl_vector[i] = Rat(m + 1 - 2 * (i + 1), 2);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Weight r = basis_vector(m, i);
      r[j] = Rat(-1);
      d.positive_roots.push_back(r);
    }
  for (int i = 0; i < m; ++i) {
    d.tau_weights.push_back({basis_vector(m, i), 1});
    d.tau_weights.push_back({basis_vector(m, i, Rat(-1)), 1});
  }
  sort_tau(d.tau_weights);
  d.tau_highest = basis_vector(m, 0);
  d.c2_scale = Rat(m);
  d.weyl = WeylKind::TypeA;
  return d;
}

GroupDescriptor make_su(int m) {
  if (m < 2)
    throw OutOfRangeError(
        "SU(m) requires m >= 2: SU(1) is the trivial group, its tangent "
        "representation is trivial and the conformal-weight normalization "
        "c(tau) vanishes");
  GroupDescriptor d = make_u(m);
  d.id = {Family::SU, m};
  d.dim_g = static_cast<long long>(m) * m - 1;
  // Restriction of the standard product to the traceless hyperplane: weights
  // are functionals on the traceless Cartan, so the form must kill (1,...,1).
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      d.gram[i][j] = (i == j ? Rat(1) : Rat(0)) - Rat(1, m);
  d.c2_scale = Rat(static_cast<long long>(m) * m - 1, m);
  return d;
}

GroupDescriptor make_sp(int m) {
  if (m < 1) throw OutOfRangeError("Sp(m) requires m >= 1");
  GroupDescriptor d;
  d.id = {Family::Sp, m};
  d.rank = m;
  d.n = 4 * m;
  d.dim_g = static_cast<long long>(m) * (2 * m + 1);
  d.gram = identity_gram(m);
  d.weyl_vector.resize(m);
  for (int i = 0; i < m; ++i) d.weyl_vector[i] = Rat(m - i);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Weight r = basis_vector(m, i);
      r[j] = Rat(-1);
      d.positive_roots.push_back(r);
      r[j] = Rat(1);
      d.positive_roots.push_back(r);
    }
    d.positive_roots.push_back(basis_vector(m, i, Rat(2)));
  }
  // The weights of the standard complex representation E, each once; the
  // closed-form table indexes the 2m gradients by these.
  for (int i = 0; i < m; ++i) {
    d.tau_weights.push_back({basis_vector(m, i), 1});
    d.tau_weights.push_back({basis_vector(m, i, Rat(-1)), 1});
  }
  sort_tau(d.tau_weights);
  d.tau_highest = basis_vector(m, 0);
  // Normalized on E (complex dimension 2m) rather than on the real tangent
  // space; this is the scale the closed-form table uses.
  d.c2_scale = Rat(2 * m + 1);
  d.weyl = WeylKind::TypeC;
  return d;
}

GroupDescriptor make_sp1sp(int m) {
  if (m < 1) throw OutOfRangeError("Sp(1)·Sp(m) requires m >= 1");
  GroupDescriptor d;
  d.id = {Family::Sp1Sp, m};
  d.rank = m + 1;  // slot 0 holds beta
  d.n = 4 * m;
  d.dim_g = static_cast<long long>(m) * (2 * m + 1) + 3;
  d.gram = identity_gram(m + 1);
  // Induced scale of the invariant product on each factor inside so(4m):
  // 1/(2m) on the sp(1) slot, 1/2 on the sp(m) slots.
  d.gram[0][0] = Rat(1, 2 * m);
  for (int i = 1; i <= m; ++i) d.gram[i][i] = Rat(1, 2);
  d.weyl_vector.resize(m + 1);
  d.weyl_vector[0] = Rat(1);
  for (int i = 1; i <= m; ++i) d.weyl_vector[i] = Rat(m - i + 1);
  d.positive_roots.push_back(basis_vector(m + 1, 0, Rat(2)));
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      Weight r = basis_vector(m + 1, i);
      r[j] = Rat(-1);
      d.positive_roots.push_back(r);
      r[j] = Rat(1);
      d.positive_roots.push_back(r);
    }
    d.positive_roots.push_back(basis_vector(m + 1, i, Rat(2)));
  }
  // tau_C = H (x) E, weights (+-1; +-eps_i).
  for (int s : {1, -1})
    for (int i = 1; i <= m; ++i)
      for (int t : {1, -1}) {
        Weight w(m + 1, Rat(0));
        w[0] = Rat(s);
        w[i] = Rat(t);
        d.tau_weights.push_back({w, 1});
      }
  sort_tau(d.tau_weights);
  d.tau_highest = Weight(m + 1, Rat(0));
  d.tau_highest[0] = Rat(1);
  d.tau_highest[1] = Rat(1);
  d.c2_scale = Rat(d.dim_g, 2 * m);  // = 2*dim_g/n
  d.weyl = WeylKind::SpinTimesSp;
  return d;
}

GroupDescriptor make_g2() {
  GroupDescriptor d;
  d.id = {Family::G2, 0};
  d.rank = 2;
  d.n = 7;
  d.dim_g = 14;
  // Coordinates (l1, l2) with fundamental weights (1,0) (the 7-dimensional
  // representation) and (1,1) (the adjoint); dominance is l1 >= l2 >= 0.
  // The invariant product in these coordinates, at the scale induced from
  // so(7) acting on R^7:
  d.gram = {{Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(2, 3)}};
  d.weyl_vector = {Rat(2), Rat(1)};
  d.positive_roots = {
      {Rat(1), Rat(-1)}, {Rat(-1), Rat(2)}, {Rat(0), Rat(1)},
      {Rat(1), Rat(0)},  {Rat(2), Rat(-1)}, {Rat(1), Rat(1)},
  };
  d.tau_weights = {
      {{Rat(0), Rat(0)}, 1},  {{Rat(1), Rat(0)}, 1},  {{Rat(-1), Rat(0)}, 1},
      {{Rat(0), Rat(1)}, 1},  {{Rat(0), Rat(-1)}, 1}, {{Rat(1), Rat(-1)}, 1},
      {{Rat(-1), Rat(1)}, 1},
  };
  sort_tau(d.tau_weights);
  d.tau_highest = {Rat(1), Rat(0)};
  d.zero_exception_highest = d.tau_highest;
  d.c2_scale = Rat(4);  // 2*14/7
  d.weyl = WeylKind::DihedralG2;
  return d;
}

GroupDescriptor make_spin7_structure() {
  GroupDescriptor d;
  d.id = {Family::Spin7, 0};
  d.rank = 3;
  d.n = 8;
  d.dim_g = 21;
  d.gram = identity_gram(3);
  d.weyl_vector = {Rat(5, 2), Rat(3, 2), Rat(1, 2)};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Weight r = basis_vector(3, i);
      r[j] = Rat(-1);
      d.positive_roots.push_back(r);
      r[j] = Rat(1);
      d.positive_roots.push_back(r);
    }
    d.positive_roots.push_back(basis_vector(3, i));
  }
  // The tangent representation is the 8-dimensional spin representation.
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        d.tau_weights.push_back({{Rat(s1, 2), Rat(s2, 2), Rat(s3, 2)}, 1});
  sort_tau(d.tau_weights);
  d.tau_highest = {Rat(1, 2), Rat(1, 2), Rat(1, 2)};
  d.c2_scale = Rat(21, 4);  // 2*21/8
  d.weyl = WeylKind::TypeB;
  d.half_integral_ok = true;
  return d;
}

GroupDescriptor build(const GroupId& id) {
  GroupDescriptor d;
  switch (id.family) {
    case Family::SO:
    case Family::Spin:
      d = make_so_spin(id.family, id.param);
      break;
    case Family::U:
      d = make_u(id.param);
      break;
    case Family::SU:
      d = make_su(id.param);
      break;
    case Family::Sp:
      d = make_sp(id.param);
      break;
    case Family::Sp1Sp:
      d = make_sp1sp(id.param);
      break;
    case Family::G2:
      d = make_g2();
      break;
    case Family::Spin7:
      d = make_spin7_structure();
      break;
  }
  d.sum_tau_mult = 0;
  for (const auto& [w, mult] : d.tau_weights) d.sum_tau_mult += mult;
  d.c_tau = casimir_of(d, d.tau_highest);
  if (d.c_tau.sgn() <= 0)
    throw InternalInconsistencyError(group_name(d.id) +
                                     ": c(tau) must be strictly positive");
  return d;
}

}  // namespace

const GroupDescriptor& descriptor(const GroupId& id) {
  GroupId key = id;
  if (key.family == Family::G2 || key.family == Family::Spin7) key.param = 0;
  static std::mutex mu;
  static std::map<GroupId, std::unique_ptr<const GroupDescriptor>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto d = std::make_unique<const GroupDescriptor>(build(key));
    it = cache.emplace(key, std::move(d)).first;
  }
  return *it->second;
}

}  // namespace ggrad
