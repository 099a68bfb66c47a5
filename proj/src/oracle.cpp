#include "ggrad/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ggrad/errors.hpp"

namespace ggrad {

namespace {

// ---- reflection into the dominant chamber, by Weyl-group type ----

// Type A: sort descending; wall iff two entries coincide.
std::optional<SignedWeight> reflect_type_a(Weight x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return x[b] < x[a]; });
  for (int i = 0; i + 1 < n; ++i)
    if (x[idx[i]] == x[idx[i + 1]]) return std::nullopt;
  int sign = 1;
  // parity of the sorting permutation by counting transpositions
  std::vector<int> perm = idx;
  for (int i = 0; i < n; ++i) {
    while (perm[i] != i) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  }
  Weight out(n);
  for (int i = 0; i < n; ++i) out[i] = x[idx[i]];
  return SignedWeight{std::move(out), sign};
}

// Types B and C: sort absolute values descending; wall iff some entry is zero
// or two absolute values coincide; each sign flip contributes det -1.
std::optional<SignedWeight> reflect_type_bc(Weight x) {
  int sign = 1;
  for (Rat& v : x) {
    if (v.is_zero()) return std::nullopt;
    if (v.sgn() < 0) {
      v = -v;
      sign = -sign;
    }
  }
  auto sorted = reflect_type_a(std::move(x));
  if (!sorted) return std::nullopt;
  sorted->sign *= sign;
  return sorted;
}

// Type D: signed permutations with an even number of sign changes. Wall iff
// two absolute values coincide (two zeros included). With all absolute values
// distinct, the strictly dominant representative has the smallest absolute
// value carrying the leftover sign, and the determinant reduces to the
// parity of the sorting permutation: the sign flips can always be chosen as
// an even set (flipping a zero coordinate is free).
std::optional<SignedWeight> reflect_type_d(Weight x) {
  int negatives = 0;
  for (Rat& v : x) {
    if (v.sgn() < 0) {
      v = -v;
      ++negatives;
    }
  }
  auto sorted = reflect_type_a(std::move(x));
  if (!sorted) return std::nullopt;
  if (negatives % 2 != 0) sorted->weight.back() = -sorted->weight.back();
  return sorted;
}

std::optional<SignedWeight> reflect_sp1sp(Weight x) {
  int sign = 1;
  if (x[0].is_zero()) return std::nullopt;
  if (x[0].sgn() < 0) {
    x[0] = -x[0];
    sign = -sign;
  }
  Weight rest(x.begin() + 1, x.end());
  auto sorted = reflect_type_bc(std::move(rest));
  if (!sorted) return std::nullopt;
  Weight out;
  out.reserve(x.size());
  out.push_back(x[0]);
  out.insert(out.end(), sorted->weight.begin(), sorted->weight.end());
  return SignedWeight{std::move(out), sign * sorted->sign};
}

// G2: descend by simple reflections until dominant; wall iff a simple-root
// pairing vanishes on the way or at the end.
std::optional<SignedWeight> reflect_g2(const GroupDescriptor& g, Weight x) {
  const Weight alpha1 = {Rat(1), Rat(-1)};
  const Weight alpha2 = {Rat(-1), Rat(2)};
  int sign = 1;
  for (int guard = 0; guard < 64; ++guard) {
    Rat p1 = inner(g, x, alpha1);
    Rat p2 = inner(g, x, alpha2);
    if (p1.is_zero() || p2.is_zero()) return std::nullopt;
    if (p1.sgn() > 0 && p2.sgn() > 0) return SignedWeight{std::move(x), sign};
    const Weight& alpha = p1.sgn() < 0 ? alpha1 : alpha2;
    Rat coeff = Rat(2) * inner(g, x, alpha) / inner(g, alpha, alpha);
    x = weight_sub(x, weight_scale(coeff, alpha));
    sign = -sign;
  }
  throw InternalInconsistencyError("G2 reflection did not terminate");
}

}  // namespace

std::optional<SignedWeight> reflect_to_dominant(const GroupDescriptor& g,
                                                const Weight& w) {
  if (static_cast<int>(w.size()) != g.rank)
    throw LengthError("reflect_to_dominant: weight length mismatch for " +
                      group_name(g.id));
  Weight x = weight_add(w, g.weyl_vector);
  std::optional<SignedWeight> r;
  switch (g.weyl) {
    case WeylKind::TypeA:
      r = reflect_type_a(std::move(x));
      break;
    case WeylKind::TypeB:
    case WeylKind::TypeC:
      r = reflect_type_bc(std::move(x));
      break;
    case WeylKind::TypeD:
      r = reflect_type_d(std::move(x));
      break;
    case WeylKind::SpinTimesSp:
      r = reflect_sp1sp(std::move(x));
      break;
    case WeylKind::DihedralG2:
      r = reflect_g2(g, std::move(x));
      break;
  }
  if (!r) return std::nullopt;
  r->weight = weight_sub(r->weight, g.weyl_vector);
  return r;
}

std::vector<std::pair<DominantWeight, int>> tensor_decompose_oracle(
    const GroupDescriptor& g, const DominantWeight& lambda) {
  if (!(lambda.group() == g.id))
    throw WrongGroupError("tensor_decompose_oracle: lambda belongs to " +
                          group_name(lambda.group()) + ", descriptor is " +
                          group_name(g.id));
  std::map<Weight, long long, WeightLexLess> acc;
  for (const auto& [tw, mult] : g.tau_weights) {
    auto r = reflect_to_dominant(g, weight_add(lambda.weight(), tw));
    if (!r) continue;
    acc[su_normal_form(g.id, r->weight)] += static_cast<long long>(mult) * r->sign;
  }
  std::vector<std::pair<DominantWeight, int>> out;
  for (const auto& [w, m] : acc) {
    if (m == 0) continue;
    if (m < 0)
      throw InternalInconsistencyError(
          group_name(g.id) + ": negative net multiplicity " +
          std::to_string(m) + " at " + format_weight(w) +
          " in tau (x) " + format_weight(lambda.weight()));
    out.push_back({certify(g.id, w), static_cast<int>(m)});
  }
  return out;
}

Int weyl_dim(const GroupDescriptor& g, const DominantWeight& lambda) {
  Weight shifted = weight_add(lambda.weight(), g.weyl_vector);
  Rat prod(1);
  for (const Weight& alpha : g.positive_roots)
    prod *= inner(g, shifted, alpha) / inner(g, g.weyl_vector, alpha);
  if (!prod.is_integer() || prod.sgn() <= 0)
    throw InternalInconsistencyError(
        group_name(g.id) + ": Weyl dimension of " +
        format_weight(lambda.weight()) + " is not a positive integer: " +
        prod.to_string());
  return prod.num();
}

int bareiss_rank(std::vector<std::vector<Int>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  Int prev(1);
  int r = 0;
  while (r < rows && r < cols) {
    int pi = -1, pj = -1;
    for (int i = r; i < rows && pi < 0; ++i)
      for (int j = r; j < cols; ++j)
        if (!a[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(a[r], a[pi]);
    if (pj != r)
      for (int i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pj]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j) {
        Int q, rem;
        Int::divmod(a[i][j] * a[r][r] - a[i][r] * a[r][j], prev, q, rem);
        if (!rem.is_zero())
          throw InternalInconsistencyError(
              "fraction-free elimination: non-exact division");
        a[i][j] = std::move(q);
      }
      a[i][r] = Int(0);
    }
    prev = a[r][r];
    ++r;
  }
  return r;
}

namespace {

// p-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(p);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// wedge-sort a p-tuple: returns (index-of-sorted-subset, sign) or sign 0 when
// an entry repeats
std::pair<std::vector<int>, int> wedge_normalize(std::vector<int> t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  for (size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return {{}, 0};
  return {std::move(t), sign};
}

}  // namespace

std::vector<std::pair<Rat, Int>> weight_operator_eigenvalues_forms(int n,
                                                                   int p) {
  if (n < 3 || n > 8)
    throw OutOfRangeError("weight operator on forms: need 3 <= n <= 8, got " +
                          std::to_string(n));
  if (p < 1 || p > n - 1)
    throw OutOfRangeError("weight operator on forms: need 1 <= p <= n-1, got " +
                          std::to_string(p));

  const auto sets = subsets(n, p);
  std::map<std::vector<int>, int> set_index;
  for (size_t i = 0; i < sets.size(); ++i) set_index[sets[i]] = static_cast<int>(i);
  const int nsets = static_cast<int>(sets.size());
  const int dim = n * nsets;

  // column (a, S) -> B(e_a* (x) e_S) = sum_i e_i* (x) (e_i ^ e_a) . e_S,
  // with (e_i ^ e_a) e_k = delta_ik e_a - delta_ak e_i extended as a
  // derivation of the wedge.
  std::vector<std::vector<Int>> mat(dim, std::vector<Int>(dim, Int(0)));
  auto slot = [&](int i, int s) { return i * nsets + s; };
  for (int a = 0; a < n; ++a) {
    for (int s = 0; s < nsets; ++s) {
      const std::vector<int>& S = sets[s];
      const int col = slot(a, s);
      for (int i = 0; i < n; ++i) {
        for (size_t k = 0; k < S.size(); ++k) {
          // replace S[k] by (e_i ^ e_a) e_{S[k]}
          if (S[k] == i) {
            std::vector<int> t = S;
            t[k] = a;
            auto [sorted, sign] = wedge_normalize(std::move(t));
            if (sign) mat[slot(i, set_index[sorted])][col] += Int(sign);
          }
          if (S[k] == a) {
            std::vector<int> t = S;
            t[k] = i;
            auto [sorted, sign] = wedge_normalize(std::move(t));
            if (sign) mat[slot(i, set_index[sorted])][col] -= Int(sign);
          }
        }
      }
    }
  }

  // Candidate eigenvalues: the closed-form conformal weights of the source
  // representation(s) of Lambda^p.
  const int m = n / 2;
  std::vector<Weight> reps;
  {
    int q = std::min(p, n - p);
    if (n % 2 == 0 && p == m) {
      Weight plus(m, Rat(0)), minus(m, Rat(0));
      for (int i = 0; i < m; ++i) plus[i] = Rat(1);
      minus = plus;
      minus[m - 1] = Rat(-1);
      reps = {plus, minus};
    } else {
      Weight lam(m, Rat(0));
      for (int i = 0; i < q; ++i) lam[i] = Rat(1);
      reps = {lam};
    }
  }
  std::vector<Rat> candidates;
  auto add_candidate = [&](const Rat& w) {
    if (std::find(candidates.begin(), candidates.end(), w) == candidates.end())
      candidates.push_back(w);
  };
  for (const Weight& lam : reps) {
    if (n % 2) add_candidate(Rat(1 - n, 2));
    for (int i = 1; i <= m; ++i) {
      add_candidate(Rat(1 - i) + lam[i - 1]);
      add_candidate(Rat(1 - n + i) - lam[i - 1]);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::pair<Rat, Int>> out;
  Int total(0);
  for (const Rat& w : candidates) {
    if (!w.is_integer())
      throw InternalInconsistencyError(
          "form weight operator: non-integer candidate eigenvalue " +
          w.to_string());
    std::vector<std::vector<Int>> shifted = mat;
    for (int i = 0; i < dim; ++i) shifted[i][i] -= w.num();
    Int nullity = Int(dim - bareiss_rank(std::move(shifted)));
    if (!nullity.is_zero()) {
      out.push_back({w, nullity});
      total += nullity;
    }
  }
  if (total != Int(dim))
    throw InternalInconsistencyError(
        "form weight operator: eigenspace dimensions sum to " +
        total.to_string() + ", expected " + std::to_string(dim));
  return out;
}

}  // namespace ggrad
