#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crnf/lemma_lab.hpp"
#include "crnf/linalg.hpp"

using namespace crnf;

TEST_CASE("matrix builders match the displayed entries") {
  auto a1 = build({BandFamily::A, 1});
  REQUIRE(a1.size() == 2);
  CHECK(a1[0][0] == 0);
  CHECK(a1[0][1] == 2);
  CHECK(a1[1][0] == 1);
  CHECK(a1[1][1] == 3);

  // C_m = A_m - (m-4) id entrywise.
  for (long m = 1; m <= 20; ++m) {
    auto am = build({BandFamily::A, m});
    auto cm = build({BandFamily::C, m});
    for (std::size_t i = 0; i < am.size(); ++i)
      for (std::size_t j = 0; j < am.size(); ++j) {
        Int expect = am[i][j] - (i == j ? Int(m - 4) : Int(0));
        CHECK(cm[i][j] == expect);
      }
  }

  // E_2(2) has determinant 36 = 4 (m+1)^2.
  auto e22 = build({BandFamily::E, 2, 2});
  REQUIRE(e22.size() == 2);
  CHECK(bareiss_det(e22) == 36);

  // E_m(m+1) is exactly C_m.
  for (long m = 1; m <= 12; ++m) {
    auto em = build({BandFamily::E, m, m + 1});
    auto cm = build({BandFamily::C, m});
    CHECK(em == cm);
  }

  // B_m carries the 1..m+1 first row over the C_m body.
  auto b3 = build({BandFamily::B, 3});
  CHECK(b3[0] == std::vector<Int>({1, 2, 3, 4}));
  CHECK(b3[1] == std::vector<Int>({3, 4, 4, 0}));
  CHECK(b3[3] == std::vector<Int>({0, 0, 1, 10}));
}

TEST_CASE("det_E recurrence equals dense fraction-free determinants") {
  for (long m = 1; m <= 25; ++m) {
    auto seq = det_E_sequence(m);
    for (long s = 1; s <= m + 1; ++s) {
      Int dense = bareiss_det(build({BandFamily::E, m, s}));
      CHECK(seq[s] == dense);
    }
  }
}

TEST_CASE("det_E initial values and spot values") {
  for (long m = 1; m <= 40; ++m) {
    CHECK(det_E(m, 1) == 2 * m + 4);
    if (m >= 1) CHECK(det_E(m, 2) == 4 * (m + 1) * (m + 1));
  }
  CHECK(det_E(4, 4) == 168);
  CHECK(det_E(4, 3) == 456);
  CHECK(det_E(5, 5) == -10752);
}

TEST_CASE("bordered determinants agree with dense oracle") {
  for (long m = 3; m <= 20; ++m) {
    CHECK(det_B(m) == bareiss_det(build({BandFamily::B, m})));
    CHECK(det_B2(m) == bareiss_det(build({BandFamily::B2, m})));
    if (m >= 4) CHECK(det_B3(m) == bareiss_det(build({BandFamily::B3, m})));
  }
}

TEST_CASE("eta values and formula") {
  CHECK(eta(2) == Rat(9, 2));
  CHECK(eta(3) == Rat(11, 4));
  CHECK(eta(4) == Rat(168, 456));
  CHECK(eta(5) == Rat(-21, 4));  // printed as -5.24...; exact value -5.25
  CHECK(eta1_shifted() == Rat(8, 3));
  CHECK(eta(1) == Rat(6));  // recurrence convention det E_1(0) = 1
  for (long m = 2; m <= 50; ++m)
    CHECK(eta(m) == Rat(2 * m) / (Rat(4 - m) - delta_inv(m)));
}

TEST_CASE("delta_inv values and exclusions") {
  CHECK(delta_inv(2) == Rat(10, 9));  // det E_2(3) = 2*36 - 4*8 = 40, /36
  CHECK(delta_inv(1) == Rat(16, 6));
  for (long m = 1; m <= 100; ++m) {
    CHECK(delta_inv(m) != 4);
    CHECK(delta_inv(m) != Rat(-4 * (m - 3), 3));
  }
  CHECK_THROWS_AS(delta_m(4), std::domain_error);
}

TEST_CASE("binomial weights sum to one in Q(sqrt17)") {
  for (long m : {1L, 2L, 5L, 17L, 40L}) {
    QuadExt sum;
    for (long k = 0; k <= m; ++k)
      sum += QuadExt(Rat(binomial(m, k))) * quadext_pow(weight_A(), k) *
             quadext_pow(weight_B(), m - k);
    CHECK(sum == QuadExt(Rat(1)));
  }
}

TEST_CASE("delta_sum exact equals integer recurrence") {
  for (long m = 1; m <= 40; ++m) {
    QuadExt d = delta_sum_exact(m);
    CHECK(d.b == 0);  // the sqrt17 part cancels
    CHECK(Rat(1) / d.a == delta_inv(m));
  }
  // Float path cross-check at 256 bits.
  for (long m : {1L, 10L, 30L}) {
    BigFloat ds = delta_sum(m, 256);
    BigFloat expect = to_bigfloat(delta_sum_exact(m).a);
    CHECK(abs(ds - expect) <= abs(expect) * pow(BigFloat(2), -200));
  }
}

TEST_CASE("eigenvalues of A_m match 3m/2 + (m-2s)/2 sqrt17") {
  const double r17 = std::sqrt(17.0);
  // m=1: {(3-sqrt17)/2, (3+sqrt17)/2}; trace 3, det -2.
  auto e1 = eigs_A(1);
  CHECK(e1[0] == doctest::Approx((3 - r17) / 2).epsilon(1e-10));
  CHECK(e1[1] == doctest::Approx((3 + r17) / 2).epsilon(1e-10));
  CHECK(e1[0] + e1[1] == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(e1[0] * e1[1] == doctest::Approx(-2.0).epsilon(1e-10));

  auto e2 = eigs_A(2);
  CHECK(e2[0] == doctest::Approx(3 - r17).epsilon(1e-10));
  CHECK(e2[1] == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(e2[2] == doctest::Approx(3 + r17).epsilon(1e-10));

  for (long m : {5L, 20L, 60L}) {
    auto ev = eigs_A(m);
    for (long s = 0; s <= m; ++s) {
      double expect = 1.5 * m + (m - 2 * (m - s)) * r17 / 2;  // ascending
      CHECK(std::abs(ev[s] - expect) <= 1e-8 * (1 + 1.5 * m));
    }
  }

  // Product of C_m eigenvalues matches the exact determinant.
  for (long m : {3L, 10L, 30L}) {
    auto ev = eigs_A(m);
    double prod = 1;
    for (double v : ev) prod *= v - (m - 4);
    double expect = det_C(m).convert_to<double>();
    CHECK(std::abs(prod - expect) <= 1e-6 * std::abs(expect));
  }
}

TEST_CASE("F1 and F2 reproduce the printed constants") {
  CHECK(abs(F1(100, 256) - BigFloat("2114.7")) < BigFloat("0.1"));
  CHECK(abs(F1(200, 256) - BigFloat("1.5207")) < BigFloat("0.0001"));
  CHECK(F1(300, 256) <= BigFloat("5.3215e-4"));
  CHECK(abs(F2(400, 256) - BigFloat("0.2247")) < BigFloat("0.0001"));
  CHECK(abs(F2(600, 256) - BigFloat("0.1815")) < BigFloat("0.0001"));
  CHECK(abs(F2(800, 256) - BigFloat("0.1564")) < BigFloat("0.0001"));
}

TEST_CASE("F1 domination and tail bound") {
  auto rep = f1_domination_check(100, 450);
  CHECK(rep.domination_ok);
  CHECK(rep.ratio_ok);
  CHECK(rep.tail_bound_ok);
}

TEST_CASE("nonsingularity audit, small range") {
  auto rep = nonsingularity_audit(40, 30);
  CHECK(rep.all_pass);
  CHECK(rep.eta1_formula == Rat(6));
  CHECK(rep.eta1_alt == Rat(8, 3));
  for (auto& rec : rep.records) {
    CHECK(rec.pass());
    if (rec.m <= 30) {
      // det B_m = det C_m / 4 exactly (Eq. 1.5).
      CHECK(4 * det_B(rec.m) == det_C(rec.m));
    }
  }
}

TEST_CASE("delta_m bound holds on 30..120 (exact rationals)") {
  for (long m = 30; m <= 120; ++m)
    CHECK(rat_abs(delta_m(m)) <= Rat(1, 5));
}
