#include "doctest.h"

#include "ggrad/casimir.hpp"
#include "ggrad/catalog.hpp"
#include "ggrad/errors.hpp"
#include "ggrad/sweep.hpp"

using namespace ggrad;

namespace {

Weight axis(int m, int i, int sign) {
  Weight w(m, Rat(0));
  w[i - 1] = Rat(sign);
  return w;
}

}  // namespace

TEST_CASE("catalog: Dirac operator") {
  NamedOperator op = lookup(OperatorKind::Dirac, 7);
  CHECK(op.lambda.weight() == Weight(3, Rat(1, 2)));
  CHECK(is_zero_weight(op.epsilon));
  CHECK(op.expected_weight == Rat(-3));
  CHECK(op.endomorphism_type);
  // even n acts on half-spinors with the same weight
  NamedOperator even = lookup(OperatorKind::Dirac, 8);
  CHECK(even.expected_weight == Rat(-7, 2));
  CHECK(even.epsilon == axis(4, 4, -1));
  CHECK_FALSE(even.endomorphism_type);
}

TEST_CASE("catalog: exterior derivative, codifferential, twistor on forms") {
  NamedOperator d2 = lookup(OperatorKind::ExteriorDerivative, 7, 2);
  CHECK(d2.lambda.weight() == Weight{Rat(1), Rat(1), Rat(0)});
  CHECK(d2.epsilon == axis(3, 3, +1));
  CHECK(d2.expected_weight == Rat(-2));

  NamedOperator del2 = lookup(OperatorKind::Codifferential, 7, 2);
  CHECK(del2.epsilon == axis(3, 2, -1));
  CHECK(del2.expected_weight == Rat(-5));

  NamedOperator tw = lookup(OperatorKind::FormTwistor, 7, 2);
  CHECK(tw.epsilon == axis(3, 1, +1));
  CHECK(tw.expected_weight == Rat(1));

  // conformal weight of d is -p across the whole degree range, odd n
  for (int n : {5, 7, 9}) {
    for (int p = 1; p <= n - 1; ++p)
      CHECK(lookup(OperatorKind::ExteriorDerivative, n, p).expected_weight ==
            Rat(-p));
    for (int p = 1; p <= n - 1; ++p)
      CHECK(lookup(OperatorKind::Codifferential, n, p).expected_weight ==
            Rat(p - n));
  }
  // middle degree of odd n is endomorphism type (*d on (n-1)/2-forms)
  NamedOperator mid = lookup(OperatorKind::ExteriorDerivative, 7, 3);
  CHECK(mid.endomorphism_type);
  CHECK(mid.expected_weight == Rat(-3));

  // even-n selfdual boundaries are excluded
  CHECK_THROWS_AS(lookup(OperatorKind::ExteriorDerivative, 8, 3), OutOfRangeError);
  CHECK_THROWS_AS(lookup(OperatorKind::ExteriorDerivative, 8, 4), OutOfRangeError);
  CHECK_THROWS_AS(lookup(OperatorKind::Codifferential, 8, 4), OutOfRangeError);
  CHECK_THROWS_AS(lookup(OperatorKind::Codifferential, 8, 5), OutOfRangeError);
  CHECK(lookup(OperatorKind::ExteriorDerivative, 8, 2).expected_weight == Rat(-2));
  CHECK(lookup(OperatorKind::Codifferential, 8, 6).expected_weight == Rat(-2));

  CHECK_THROWS_AS(lookup(OperatorKind::ExteriorDerivative, 7, 0), OutOfRangeError);
  CHECK_THROWS_AS(lookup(OperatorKind::ExteriorDerivative, 7, 7), OutOfRangeError);
}

TEST_CASE("catalog: Penrose twistor and Rarita-Schwinger") {
  NamedOperator tw = lookup(OperatorKind::PenroseTwistor, 7);
  CHECK(tw.expected_weight == Rat(1, 2));
  CHECK_FALSE(tw.endomorphism_type);

  NamedOperator rs = lookup(OperatorKind::RaritaSchwinger, 7);
  CHECK(rs.lambda.weight() == Weight{Rat(3, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(is_zero_weight(rs.epsilon));
  CHECK(rs.expected_weight == Rat(-3));
  CHECK(rs.endomorphism_type);
  // n = 3 exists with fewer targets
  CHECK(lookup(OperatorKind::RaritaSchwinger, 3).expected_weight == Rat(-1));
  // even n
  CHECK(lookup(OperatorKind::RaritaSchwinger, 8).expected_weight == Rat(-7, 2));
  CHECK_THROWS_AS(lookup(OperatorKind::Dirac, 2), OutOfRangeError);
}

TEST_CASE("catalog: Kaehlerian gradients") {
  for (int m : {2, 3, 4}) {
    for (int i = 1; i <= m; ++i) {
      NamedOperator plus = lookup(OperatorKind::KahlerGradientPlus, m, i);
      // staircase lambda_i = m - i, so w_{i,+} = lambda_i - i + 1 = m - 2i + 1
      CHECK(plus.expected_weight == Rat(m - 2 * i + 1));
      NamedOperator minus = lookup(OperatorKind::KahlerGradientMinus, m, i);
      CHECK(minus.expected_weight == Rat(2 * (i - m)));
    }
  }
  CHECK_THROWS_AS(lookup(OperatorKind::KahlerGradientPlus, 3, 4), OutOfRangeError);
  CHECK_THROWS_AS(lookup(OperatorKind::KahlerGradientPlus, 3, 0), OutOfRangeError);
}

TEST_CASE("catalog entries agree with the Casimir path for n, m = 3..12") {
  for (int n = 3; n <= 12; ++n) {
    const GroupDescriptor& g = descriptor({Family::Spin, n});
    for (OperatorKind kind : {OperatorKind::Dirac, OperatorKind::PenroseTwistor,
                              OperatorKind::RaritaSchwinger}) {
      NamedOperator op = lookup(kind, n);
      CHECK(op.expected_weight == conformal_weight(g, op.lambda, op.epsilon));
    }
  }
  for (int m = 3; m <= 12; ++m) {
    const GroupDescriptor& g = descriptor({Family::U, m});
    for (int i = 1; i <= m; i += 2) {
      NamedOperator op = lookup(OperatorKind::KahlerGradientPlus, m, i);
      CHECK(op.expected_weight == conformal_weight(g, op.lambda, op.epsilon));
    }
  }
  for (int n = 3; n <= 12; n += 2) {
    const GroupDescriptor& g = descriptor({Family::SO, n});
    for (int p = 1; p <= n - 1; ++p) {
      NamedOperator op = lookup(OperatorKind::ExteriorDerivative, n, p);
      CHECK(op.expected_weight == conformal_weight(g, op.lambda, op.epsilon));
    }
  }
}

TEST_CASE("formal adjoints") {
  const GroupDescriptor& so_n = descriptor({Family::SO, 9});
  // d on p-forms pairs with the codifferential on (p+1)-forms
  for (int p = 1; p <= 2; ++p) {
    NamedOperator d = lookup(OperatorKind::ExteriorDerivative, 9, p);
    AdjointData adj = adjoint(so_n, d.lambda, d.epsilon);
    NamedOperator del = lookup(OperatorKind::Codifferential, 9, p + 1);
    CHECK(adj.mu == del.lambda);
    CHECK(adj.epsilon == del.epsilon);
    CHECK(adj.weight == Rat(-9 + p + 1));
  }
  // the Dirac operator is self-paired
  const GroupDescriptor& spin7 = descriptor({Family::Spin, 7});
  NamedOperator dirac = lookup(OperatorKind::Dirac, 7);
  AdjointData self = adjoint(spin7, dirac.lambda, dirac.epsilon);
  CHECK(self.mu == dirac.lambda);
  CHECK(self.weight == Rat(-3));
  // explicit example: (1,0,0) with +eps_1
  const GroupDescriptor& so7 = descriptor({Family::SO, 7});
  AdjointData a = adjoint(so7, certify({Family::SO, 7}, {Rat(1), Rat(0), Rat(0)}),
                          axis(3, 1, +1));
  CHECK(a.mu.weight() == Weight{Rat(2), Rat(0), Rat(0)});
  CHECK(a.epsilon == axis(3, 1, -1));
  CHECK(a.weight == Rat(-7));
}

TEST_CASE("adjoint is an involution across the sweep") {
  for (const GroupId& id : standard_groups(8, 3)) {
    const GroupDescriptor& g = descriptor(id);
    for (const DominantWeight& lambda : dominant_sweep(id, 2)) {
      for (const Weight& eps : relevant_weights(id, lambda)) {
        AdjointData adj = adjoint(g, lambda, eps);
        AdjointData back = adjoint(g, adj.mu, adj.epsilon);
        CHECK(back.mu == lambda);
        CHECK(back.epsilon == eps);
        CHECK(back.weight == conformal_weight(g, lambda, eps));
      }
    }
  }
}

TEST_CASE("second-order composability") {
  const GroupDescriptor& so6 = descriptor({Family::SO, 6});
  DominantWeight l2 = certify({Family::SO, 6}, {Rat(1), Rat(1), Rat(0)});
  // delta d on 2-forms of SO(6): p = n/2 - 1, conformally invariant
  CHECK(second_order_invariant(so6, l2, axis(3, 3, +1), axis(3, 3, -1)));
  CHECK(second_order_invariant(so6, l2, axis(3, 3, -1), axis(3, 3, +1)));
  // delta d on 1-forms: not invariant
  DominantWeight l1 = certify({Family::SO, 6}, {Rat(1), Rat(0), Rat(0)});
  CHECK_FALSE(second_order_invariant(so6, l1, axis(3, 2, +1), axis(3, 2, -1)));
  // d delta on 5-forms of SO(8): p = n/2 + 1, invariant (rep of Lambda^5 is
  // lambda_3, delta goes to the antiselfdual half, d comes back)
  const GroupDescriptor& so8 = descriptor({Family::SO, 8});
  DominantWeight l3 = certify({Family::SO, 8}, {Rat(1), Rat(1), Rat(1), Rat(0)});
  CHECK(second_order_invariant(so8, l3, axis(4, 4, -1), axis(4, 4, +1)));
  CHECK(second_order_invariant(so8, l3, axis(4, 4, +1), axis(4, 4, -1)));
  // precondition failures name the pair
  CHECK_THROWS_AS(second_order_invariant(so6, l1, axis(3, 1, -1), axis(3, 3, +1)),
                  NotRelevantError);
}
