#include "doctest.h"

#include <algorithm>
#include <map>

#include "ggrad/casimir.hpp"
#include "ggrad/errors.hpp"
#include "ggrad/oracle.hpp"
#include "ggrad/selection.hpp"
#include "ggrad/sweep.hpp"

using namespace ggrad;

namespace {

// independent rank-1 oracle: decompose V_j (x) V_1 for so(3) by multiplying
// weight multisets and stripping highest strings
std::vector<int> so3_tensor_with_vector(int j) {
  std::map<int, int> weights;
  for (int a = -1; a <= 1; ++a)
    for (int b = -j; b <= j; ++b) weights[a + b] += 1;
  std::vector<int> comps;
  while (!weights.empty()) {
    int h = weights.rbegin()->first;
    comps.push_back(h);
    for (int w = -h; w <= h; ++w) {
      if (--weights[w] == 0) weights.erase(w);
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<int> oracle_components_so3(int j) {
  const GroupDescriptor& g = descriptor({Family::SO, 3});
  auto out = tensor_decompose_oracle(g, certify({Family::SO, 3}, {Rat(j)}));
  std::vector<int> comps;
  for (const auto& [mu, mult] : out)
    for (int k = 0; k < mult; ++k)
      comps.push_back(static_cast<int>(mu.weight()[0].num().to_int64()));
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

TEST_CASE("reflect_to_dominant on SO(7)") {
  const GroupDescriptor& g = descriptor({Family::SO, 7});
  // already strictly dominant
  auto r = reflect_to_dominant(g, {Rat(2), Rat(1), Rat(0)});
  REQUIRE(r.has_value());
  CHECK(r->weight == Weight{Rat(2), Rat(1), Rat(0)});
  CHECK(r->sign == 1);
  // one transposition
  r = reflect_to_dominant(g, {Rat(1), Rat(5, 2), Rat(1, 2)});
  REQUIRE(r.has_value());
  CHECK(r->weight == Weight{Rat(3, 2), Rat(2), Rat(1, 2)});
  CHECK(r->sign == -1);
  // wall: w + delta has two equal coordinates
  CHECK_FALSE(reflect_to_dominant(g, {Rat(1), Rat(2), Rat(1, 2)}).has_value());
  // wall: w + delta has a zero coordinate
  CHECK_FALSE(
      reflect_to_dominant(g, {Rat(1), Rat(1), Rat(-1, 2)}).has_value());
}

TEST_CASE("reflect_to_dominant on type D keeps the even sign-change parity") {
  const GroupDescriptor& g = descriptor({Family::SO, 6});
  // w + delta = (3, -5, 0): odd negatives with a zero coordinate
  auto r = reflect_to_dominant(g, {Rat(1), Rat(-6), Rat(0)});
  REQUIRE(r.has_value());
  CHECK(r->weight == Weight{Rat(3), Rat(2), Rat(0)});
  CHECK(r->sign == -1);
  // w + delta = (3, -5, 1): odd negatives, no zero: smallest flips
  r = reflect_to_dominant(g, {Rat(1), Rat(-6), Rat(1)});
  REQUIRE(r.has_value());
  CHECK(r->weight == Weight{Rat(3), Rat(2), Rat(-1)});
  CHECK(r->sign == -1);
  // even negatives
  r = reflect_to_dominant(g, {Rat(-6), Rat(-3), Rat(1)});
  REQUIRE(r.has_value());
  // w + delta = (-4, -2, 1) -> (4, 2, 1) with two flips, perm = reverse of
  // first two after abs: (4, 2, 1) sorted already -> sign +1
  CHECK(r->weight == Weight{Rat(2), Rat(1), Rat(1)});
  CHECK(r->sign == 1);
  // wall: two equal absolute values
  CHECK_FALSE(reflect_to_dominant(g, {Rat(0), Rat(-3), Rat(0)}).has_value());
}

TEST_CASE("reflect handles the dihedral G2 chamber") {
  const GroupDescriptor& g = descriptor({Family::G2, 0});
  for (const DominantWeight& lambda : dominant_sweep({Family::G2, 0}, 3)) {
    auto r = reflect_to_dominant(g, lambda.weight());
    REQUIRE(r.has_value());
    CHECK(r->weight == lambda.weight());
    CHECK(r->sign == 1);
  }
  // the negative of a strictly dominant vector returns with the longest
  // element's determinant; for G2 w0 = -id has determinant +1
  auto r = reflect_to_dominant(g, weight_sub(weight_neg({Rat(3), Rat(1)}),
                                             weight_scale(Rat(2), g.weyl_vector)));
  REQUIRE(r.has_value());
  CHECK(r->weight == Weight{Rat(3), Rat(1)});
  CHECK(r->sign == 1);
}

TEST_CASE("Klimyk oracle agrees with the rank-1 character oracle") {
  for (int j = 0; j <= 4; ++j) {
    CHECK(oracle_components_so3(j) == so3_tensor_with_vector(j));
  }
}

TEST_CASE("Klimyk oracle classical cases") {
  const GroupDescriptor& so7 = descriptor({Family::SO, 7});
  auto triv = tensor_decompose_oracle(so7, certify({Family::SO, 7}, Weight(3, Rat(0))));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].first.weight() == Weight{Rat(1), Rat(0), Rat(0)});
  CHECK(triv[0].second == 1);

  const GroupDescriptor& g2 = descriptor({Family::G2, 0});
  auto v7 = tensor_decompose_oracle(g2, certify({Family::G2, 0}, {Rat(1), Rat(0)}));
  REQUIRE(v7.size() == 4);
  std::vector<long long> dims;
  for (const auto& [mu, mult] : v7) {
    CHECK(mult == 1);
    dims.push_back(weyl_dim(g2, mu).to_int64());
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<long long>{1, 7, 14, 27});
}

TEST_CASE("Weyl dimension formula") {
  const GroupDescriptor& so7 = descriptor({Family::SO, 7});
  CHECK(weyl_dim(so7, certify({Family::SO, 7}, {Rat(1), Rat(0), Rat(0)})) == Int(7));
  CHECK(weyl_dim(so7, certify({Family::SO, 7}, {Rat(1), Rat(1), Rat(0)})) == Int(21));
  const GroupDescriptor& spin7 = descriptor({Family::Spin, 7});
  CHECK(weyl_dim(spin7, certify({Family::Spin, 7}, {Rat(1, 2), Rat(1, 2), Rat(1, 2)})) == Int(8));
  // spinor dimension 2^m across ranks
  for (int n = 3; n <= 11; n += 2) {
    int m = n / 2;
    const GroupDescriptor& g = descriptor({Family::Spin, n});
    CHECK(weyl_dim(g, certify({Family::Spin, n}, Weight(m, Rat(1, 2)))) ==
          Int(1ll << m));
  }
  CHECK(weyl_dim(descriptor({Family::U, 1}), certify({Family::U, 1}, {Rat(-5)})) == Int(1));
  CHECK(weyl_dim(descriptor({Family::SU, 3}), certify({Family::SU, 3}, {Rat(1), Rat(0), Rat(0)})) == Int(3));
  CHECK(weyl_dim(descriptor({Family::Sp, 2}), certify({Family::Sp, 2}, {Rat(1), Rat(0)})) == Int(4));
  CHECK(weyl_dim(descriptor({Family::Sp1Sp, 2}), certify({Family::Sp1Sp, 2}, {Rat(1), Rat(1), Rat(0)})) == Int(8));
}

TEST_CASE("tensor dimension identity over a sweep") {
  for (const GroupId& id : standard_groups(8, 3)) {
    const GroupDescriptor& g = descriptor(id);
    for (const DominantWeight& lambda : dominant_sweep(id, 2)) {
      Int sum(0);
      for (const auto& [mu, mult] : tensor_decompose_oracle(g, lambda))
        sum += Int(mult) * weyl_dim(g, mu);
      CHECK(sum == Int(g.sum_tau_mult) * weyl_dim(g, lambda));
    }
  }
}

TEST_CASE("bareiss rank") {
  CHECK(bareiss_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
  CHECK(bareiss_rank({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
  CHECK(bareiss_rank({{Int(2), Int(0), Int(1)},
                      {Int(0), Int(3), Int(0)},
                      {Int(0), Int(0), Int(5)}}) == 3);
  // rank-r product of random +-2 factors
  for (int r = 1; r <= 3; ++r) {
    const int n = 6;
    std::vector<std::vector<Int>> u(n, std::vector<Int>(r, Int(0)));
    std::vector<std::vector<Int>> v(r, std::vector<Int>(n, Int(0)));
    unsigned state = 12345 + r;
    auto next = [&]() { return state = state * 1103515245u + 12345u; };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) u[i][j] = Int(static_cast<int>(next() % 5) - 2);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < n; ++j) v[i][j] = Int(static_cast<int>(next() % 5) - 2);
      v[i][i] = Int(7);  // forces full factor rank
      u[i][i] += Int(3);
    }
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < r; ++k) a[i][j] += u[i][k] * v[k][j];
    CHECK(bareiss_rank(a) == r);
  }
}

TEST_CASE("weight operator matrix spectra on forms") {
  auto spectrum = weight_operator_eigenvalues_forms(5, 1);
  REQUIRE(spectrum.size() == 3);
  CHECK(spectrum[0] == std::pair<Rat, Int>{Rat(-4), Int(1)});
  CHECK(spectrum[1] == std::pair<Rat, Int>{Rat(-1), Int(10)});
  CHECK(spectrum[2] == std::pair<Rat, Int>{Rat(1), Int(14)});

  spectrum = weight_operator_eigenvalues_forms(7, 2);
  REQUIRE(spectrum.size() == 3);
  CHECK(spectrum[0] == std::pair<Rat, Int>{Rat(-5), Int(7)});
  CHECK(spectrum[1] == std::pair<Rat, Int>{Rat(-2), Int(35)});
  CHECK(spectrum[2] == std::pair<Rat, Int>{Rat(1), Int(105)});

  // even-dimensional selfdual splitting at the middle degree
  spectrum = weight_operator_eigenvalues_forms(4, 2);
  REQUIRE(spectrum.size() == 2);
  CHECK(spectrum[0] == std::pair<Rat, Int>{Rat(-2), Int(8)});
  CHECK(spectrum[1] == std::pair<Rat, Int>{Rat(1), Int(16)});

  CHECK_THROWS_AS(weight_operator_eigenvalues_forms(9, 1), OutOfRangeError);
  CHECK_THROWS_AS(weight_operator_eigenvalues_forms(5, 0), OutOfRangeError);
  CHECK_THROWS_AS(weight_operator_eigenvalues_forms(5, 5), OutOfRangeError);
}

TEST_CASE("oracle rejects foreign dominant weights") {
  const GroupDescriptor& so7 = descriptor({Family::SO, 7});
  DominantWeight w = certify({Family::Sp, 3}, {Rat(1), Rat(0), Rat(0)});
  CHECK_THROWS_AS(tensor_decompose_oracle(so7, w), WrongGroupError);
}

// ---------------------------------------------------------------------------
// Independent cross-oracle: Steinberg's formula. The multiplicity of mu in
// tau (x) lambda is sum over the Weyl group of det(w) times the multiplicity
// of mu + delta - w(lambda + delta) as a weight of tau. The Weyl group is
// enumerated explicitly as matrices here, a route disjoint from both the
// selection rule and the Klimyk summation used by the library.

namespace {

using Matrix = std::vector<std::vector<Rat>>;

Matrix reflection_matrix(const GroupDescriptor& g, const Weight& alpha) {
  const int n = g.rank;
  Matrix s(n, std::vector<Rat>(n, Rat(0)));
  Rat alpha_sq = inner(g, alpha, alpha);
  for (int j = 0; j < n; ++j) {
    Weight e(n, Rat(0));
    e[j] = Rat(1);
    Rat coeff = Rat(2) * inner(g, e, alpha) / alpha_sq;
    for (int i = 0; i < n; ++i)
      s[i][j] = (i == j ? Rat(1) : Rat(0)) - coeff * alpha[i];
  }
  return s;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix c(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Weight mat_apply(const Matrix& a, const Weight& x) {
  Weight y(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

struct WeylGroup {
  std::vector<Matrix> elements;
  std::vector<int> dets;
};

WeylGroup enumerate_weyl(const GroupDescriptor& g,
                         const std::vector<Weight>& simples) {
  WeylGroup w;
  const int n = g.rank;
  Matrix id(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) id[i][i] = Rat(1);
  w.elements.push_back(id);
  w.dets.push_back(1);
  std::vector<Matrix> gens;
  for (const Weight& alpha : simples) gens.push_back(reflection_matrix(g, alpha));
  for (size_t head = 0; head < w.elements.size(); ++head) {
    for (const Matrix& s : gens) {
      Matrix next = mat_mul(s, w.elements[head]);
      bool seen = false;
      for (const Matrix& e : w.elements)
        if (e == next) {
          seen = true;
          break;
        }
      if (!seen) {
        w.elements.push_back(next);
        w.dets.push_back(-w.dets[head]);
      }
    }
  }
  return w;
}

int tau_weight_multiplicity(const GroupDescriptor& g, const Weight& nu) {
  for (const auto& [tw, mult] : g.tau_weights)
    if (tw == nu) return mult;
  return 0;
}

std::map<Weight, int, WeightLexLess> steinberg_decompose(
    const GroupDescriptor& g, const WeylGroup& w, const DominantWeight& lambda) {
  // candidate targets: lambda + any tau weight that is dominant
  std::map<Weight, int, WeightLexLess> out;
  Weight shifted = weight_add(lambda.weight(), g.weyl_vector);
  for (const auto& [eps, mult] : g.tau_weights) {
    (void)mult;
    Weight mu = weight_add(lambda.weight(), eps);
    if (!is_dominant(g.id, mu) || out.count(mu)) continue;
    int total = 0;
    for (size_t k = 0; k < w.elements.size(); ++k) {
      Weight probe = weight_sub(weight_add(mu, g.weyl_vector),
                                mat_apply(w.elements[k], shifted));
      total += w.dets[k] * tau_weight_multiplicity(g, probe);
    }
    if (total != 0) out[mu] = total;
  }
  return out;
}

void check_steinberg(const GroupId& id, const std::vector<Weight>& simples) {
  const GroupDescriptor& g = descriptor(id);
  WeylGroup w = enumerate_weyl(g, simples);
  for (const DominantWeight& lambda : dominant_sweep(id, 2)) {
    std::map<Weight, int, WeightLexLess> klimyk;
    for (const auto& [mu, mult] : tensor_decompose_oracle(g, lambda))
      klimyk[mu.weight()] += mult;
    // the zero-exception target lambda itself is covered since 0 is a tau
    // weight exactly for the groups where it can appear
    CAPTURE(group_name(id));
    CAPTURE(format_weight(lambda.weight()));
    CHECK(steinberg_decompose(g, w, lambda) == klimyk);
  }
}

}  // namespace

TEST_CASE("Steinberg formula agrees with the Klimyk oracle") {
  // G2: dihedral Weyl group of order 12
  {
    const GroupDescriptor& g = descriptor({Family::G2, 0});
    WeylGroup w = enumerate_weyl(g, {{Rat(1), Rat(-1)}, {Rat(-1), Rat(2)}});
    CHECK(w.elements.size() == 12);
    check_steinberg({Family::G2, 0}, {{Rat(1), Rat(-1)}, {Rat(-1), Rat(2)}});
  }
  // SO(5): hyperoctahedral group of order 8
  {
    std::vector<Weight> simples = {{Rat(1), Rat(-1)}, {Rat(0), Rat(1)}};
    const GroupDescriptor& g = descriptor({Family::SO, 5});
    CHECK(enumerate_weyl(g, simples).elements.size() == 8);
    check_steinberg({Family::SO, 5}, simples);
  }
  // Sp(2): same group, long simple root
  check_steinberg({Family::Sp, 2}, {{Rat(1), Rat(-1)}, {Rat(0), Rat(2)}});
  // SO(6): type D3, order 24
  {
    std::vector<Weight> simples = {
        {Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}, {Rat(0), Rat(1), Rat(1)}};
    const GroupDescriptor& g = descriptor({Family::SO, 6});
    CHECK(enumerate_weyl(g, simples).elements.size() == 24);
    check_steinberg({Family::SO, 6}, simples);
  }
  // U(3): symmetric group on three letters
  check_steinberg({Family::U, 3},
                  {{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}});
}

TEST_CASE("Weyl dimensions match binomial counts on form representations") {
  for (int n = 3; n <= 12; ++n) {
    const int m = n / 2;
    const GroupDescriptor& g = descriptor({Family::SO, n});
    auto binom = [](int a, int b) {
      long long r = 1;
      for (int i = 1; i <= b; ++i) r = r * (a - i + 1) / i;
      return r;
    };
    for (int p = 1; p <= (n - 1) / 2; ++p) {
      Weight lam(m, Rat(0));
      for (int i = 0; i < p; ++i) lam[i] = Rat(1);
      CHECK(weyl_dim(g, certify({Family::SO, n}, lam)) == Int(binom(n, p)));
    }
    if (n % 2 == 0) {
      // selfdual halves split the middle binomial evenly
      Weight plus(m, Rat(1)), minus(m, Rat(1));
      minus[m - 1] = Rat(-1);
      Int half(binom(n, m) / 2);
      CHECK(weyl_dim(g, certify({Family::SO, n}, plus)) == half);
      CHECK(weyl_dim(g, certify({Family::SO, n}, minus)) == half);
    }
    // symmetric traceless 2-tensors
    if (m >= 2) {
      Weight s2(m, Rat(0));
      s2[0] = Rat(2);
      CHECK(weyl_dim(g, certify({Family::SO, n}, s2)) ==
            Int(static_cast<long long>(n) * (n + 1) / 2 - 1));
    }
  }
}

TEST_CASE("Sp(1)Sp(m) dimensions factor through the two factors") {
  for (int m = 1; m <= 4; ++m) {
    const GroupDescriptor& prod = descriptor({Family::Sp1Sp, m});
    const GroupDescriptor& sp = descriptor({Family::Sp, m});
    for (const DominantWeight& lambda : dominant_sweep({Family::Sp1Sp, m}, 2)) {
      Weight tail(lambda.weight().begin() + 1, lambda.weight().end());
      Int sp_dim = weyl_dim(sp, certify({Family::Sp, m}, tail));
      Int beta_dim = lambda.weight()[0].num() + Int(1);
      CHECK(weyl_dim(prod, lambda) == beta_dim * sp_dim);
    }
  }
}

TEST_CASE("half-spinor decomposition in dimension four") {
  GroupId id{Family::Spin, 4};
  const GroupDescriptor& g = descriptor(id);
  DominantWeight plus = certify(id, {Rat(1, 2), Rat(1, 2)});
  auto rel = relevant_weights(id, plus);
  REQUIRE(rel.size() == 2);
  // Dirac part lands in the opposite half-spinor module
  CHECK(rel[0] == Weight{Rat(0), Rat(-1)});
  CHECK(conformal_weight(g, plus, rel[0]) == Rat(-3, 2));
  CHECK(weight_add(plus.weight(), rel[0]) == Weight{Rat(1, 2), Rat(-1, 2)});
  // twistor part
  CHECK(rel[1] == Weight{Rat(1), Rat(0)});
  CHECK(conformal_weight(g, plus, rel[1]) == Rat(1, 2));
}
