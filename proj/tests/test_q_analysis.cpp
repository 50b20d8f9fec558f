#include <doctest.h>

#include <cstdlib>

#include "crowdest/errors.hpp"
#include "crowdest/poly_lab.hpp"
#include "crowdest/q_analysis.hpp"
#include "crowdest/sturm.hpp"

using namespace crowdest;

namespace {

double parse(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("q_function shape") {
  CHECK_THROWS_AS(q_function(2), DomainError);
  for (unsigned d = 3; d <= 20; ++d) {
    QFunction qf = q_function(d);
    long want = 2 * (static_cast<long>(d) / 2);
    CHECK(qf.numerator.degree() == want);
    CHECK(qf.denominator.degree() == want);
  }
  CHECK(q_function(25).numerator.degree() == 24);
}

TEST_CASE("q matches its defining expression at sample points") {
  for (unsigned d : {5u, 6u, 9u, 12u}) {
    QFunction qf = q_function(d);
    auto [pt, rt] = reduced_pair(d);
    for (const Rat& x : {Rat(7), make_rat(19, 2), Rat(31)}) {
      Rat direct = 1 - (rt.eval(x) / pt.eval(x)) /
                           (Rat(-(static_cast<long>(d) - 2)) / (2 * x + static_cast<long>(d) - 2));
      CHECK(q_eval(qf, x) == direct);
    }
  }
}

TEST_CASE("alternative numerator route through P~_{d+1}") {
  // (d-2)P~_d + (P~_{d+1} - q_d P~_d)(2x + d - 2) over (d-2)P~_d, built from
  // the P polynomials divided by the same common factor.
  for (unsigned d : {5u, 8u, 11u}) {
    unsigned b = d / 2, eps = d % 2;
    Polynomial factor = Polynomial::constant(Rat(1));
    for (unsigned i = 0; i + 1 <= b + eps; ++i) {
      Polynomial lin({Rat(-static_cast<long>(i)), Rat(1)});
      factor = factor * lin * lin;
    }
    auto pd = poly_divide(p_poly(d), factor);
    auto pd1 = poly_divide(p_poly(d + 1), factor);
    REQUIRE(pd.remainder.is_zero());
    REQUIRE(pd1.remainder.is_zero());
    Polynomial rt = pd1.quotient - lemma_quotient(d) * pd.quotient;
    QFunction qf = q_function(d);
    Polynomial shift({Rat(static_cast<long>(d) - 2), Rat(2)});
    CHECK(qf.numerator == pd.quotient.scaled(Rat(static_cast<long>(d) - 2)) + rt * shift);
  }
}

TEST_CASE("special values of the closing proposition") {
  for (unsigned d = 5; d <= 41; d += 2) {
    QFunction qf = q_function(d);
    CHECK(q_eval(qf, make_rat(static_cast<long>(d) - 1, 2)) == 1);
  }
  for (unsigned d = 4; d <= 40; d += 2) {
    QFunction qf = q_function(d);
    Rat expect = make_rat(-2, (static_cast<long>(d) + 1) * (static_cast<long>(d) - 2));
    CHECK(q_eval(qf, make_rat(d, 2)) == expect);
  }
}

TEST_CASE("q_limit values") {
  CHECK(q_limit(5) == make_rat(-1, 9));
  CHECK(q_limit(7) == make_rat(-1, 20));
  CHECK(q_limit(61) == make_rat(-2, 62 * 59));
  for (unsigned d = 3; d <= 30; ++d)
    CHECK(q_limit(d) == make_rat(-2, (static_cast<long>(d) + 1) * (static_cast<long>(d) - 2)));
}

TEST_CASE("sturm chain counts on constructed polynomials") {
  // (x-1)(x-2)(x-4) has three positive roots.
  IntPoly w{BigInt(-8), BigInt(14), BigInt(-7), BigInt(1)};
  sturm::Chain chain(w);
  CHECK(chain.count_positive() == 3);
  CHECK(chain.count_in(Rat(1), Rat(4)) == 2);    // (1, 4] holds 2 and 4
  CHECK(chain.count_in(make_rat(1, 2), Rat(3)) == 2);
  // (x^2+1)(x-3) has one.
  IntPoly w2{BigInt(-3), BigInt(1), BigInt(-3), BigInt(1)};
  CHECK(sturm::Chain(w2).count_positive() == 1);
  // double root counts once
  IntPoly w3{BigInt(4), BigInt(-4), BigInt(1)};  // (x-2)^2
  CHECK(sturm::Chain(w3).count_positive() == 1);
}

TEST_CASE("isolation and refinement on a known cubic") {
  IntPoly w{BigInt(-8), BigInt(14), BigInt(-7), BigInt(1)};
  auto brackets = sturm::isolate_positive_roots(w);
  REQUIRE(brackets.size() == 3);
  sturm::Chain chain(w);
  std::vector<double> expect{1.0, 2.0, 4.0};
  for (size_t i = 0; i < 3; ++i) {
    auto& b = brackets[i];
    for (int it = 0; it < 80 && !b.exact; ++it) sturm::refine_step(w, chain, b);
    double mid = (b.lo.get_d() + b.hi.get_d()) / 2;
    CHECK(std::abs(mid - expect[i]) < 1e-9);
  }
}

TEST_CASE("isolation copes with rational roots hit by bisection") {
  // roots 1/2 and 3/2: dyadic midpoints land on them.
  IntPoly w{BigInt(3), BigInt(-8), BigInt(4)};
  auto brackets = sturm::isolate_positive_roots(w);
  REQUIRE(brackets.size() == 2);
}

TEST_CASE("critical points of Q_25 match the tabulated row") {
  CriticalPointReport r = critical_points(25, 10);
  CHECK(r.certified_count == 2);
  CHECK(r.points.size() == 2);
  CHECK(std::abs(parse(r.x_max) - 4.040938032) < 1e-8);
  CHECK(std::abs(parse(r.x_min) - 60.50336525) < 1e-7);
  CHECK(std::abs(parse(r.q_at_x_max) - 14.78513590) / 14.785 < 1e-6);
  CHECK(std::abs(parse(r.q_at_x_min) + 0.006867535404) < 1e-10);
  CHECK(r.q_lim == make_rat(-1, 299));
  CHECK_THROWS_AS(critical_points(4, 10), DomainError);
  CHECK_THROWS_AS(critical_points(25, 0), DomainError);
  CHECK_THROWS_AS(critical_points(25, 500), DomainError);
}

TEST_CASE("even d shows the extra wiggle") {
  CriticalPointReport r = critical_points(24, 8);
  CHECK(r.certified_count == 4);
  REQUIRE(r.points.size() == 4);
  CHECK(std::abs(parse(r.points[0].x_str) - 3.874236) < 1e-5);
  CHECK(std::abs(parse(r.points[3].x_str) - 58.00307) < 1e-4);
  // interior pair sits between d/2 and d/2 + 1
  CHECK(r.points[1].x_lo > 12);
  CHECK(r.points[2].x_hi < 13);
  CHECK(std::abs(parse(r.x_max) - 3.874236) < 1e-5);
  CHECK(std::abs(parse(r.x_min) - 58.00307) < 1e-4);
}

TEST_CASE("certified digits really are digits of the bracketed root") {
  CriticalPointReport r = critical_points(9, 14);
  for (const auto& p : r.points) {
    RatInterval iv{p.x_lo, p.x_hi};
    auto s = dec_sig_interval(iv, 14);
    REQUIRE(s.has_value());
    CHECK(*s == p.x_str);
  }
}

TEST_CASE("conj2 evidence rows") {
  Conj2Evidence e7 = conj2_evidence(7, 9);
  CHECK(e7.exact_x);
  CHECK(e7.value == "-0.031250000");
  CHECK(e7.below_threshold);

  Conj2Evidence e27 = conj2_evidence(27, 9);
  CHECK(std::abs(parse(e27.value) - 0.004045174) < 1e-8);
  CHECK(e27.below_threshold);

  Conj2Evidence e13 = conj2_evidence(13, 9);
  CHECK(std::abs(parse(e13.value) + 0.000764689) < 1e-8);

  CHECK_THROWS_AS(conj2_evidence(4, 9), DomainError);
}

TEST_CASE("asymptote predictions against tabulated values") {
  AsymptotePrediction p61 = asymptote_predictions(61);
  CHECK(std::abs(p61.x_max.get_d() - 10.041394134) < 5e-4);
  CHECK(std::abs(p61.x_min.get_d() - 150.5075219) < 5e-4);
  CHECK(std::abs(p61.q_min.get_d() + 0.001942564749) < 7e-5);
  AsymptotePrediction p25 = asymptote_predictions(25);
  CHECK(std::abs(p25.q_min.get_d() + 1.0 / 288) < 1e-15);  // -1/(12(d-1))
  CHECK_THROWS_AS(asymptote_predictions(8), DomainError);
}

TEST_CASE("fit over a short sample stack recovers the leading constants") {
  // Low-depth smoke fit; the paper-depth fit is the extended acceptance run.
  CoefficientFit fit = fit_coefficients({51, 61, 71, 81}, 3, 40);
  CHECK(fit.c_exact.size() == 4);
  CHECK(std::abs(fit.c_exact[0].get_d() - 1.0 / 96) < 1e-7);
  CHECK(std::abs(fit.c_exact[1].get_d() + 305.0 / 1728) < 1e-4);
  for (const auto& r : fit.residuals) CHECK(r == "0/1");
  CHECK_THROWS_AS(fit_coefficients({51, 61}, 3, 40), DomainError);
  CHECK_THROWS_AS(fit_coefficients({50, 61, 71, 81}, 3, 40), DomainError);
  CHECK_THROWS_AS(fit_coefficients({51, 61, 71, 81}, 3, 20), DomainError);
}
