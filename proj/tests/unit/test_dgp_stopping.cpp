#include <doctest.h>

#include <cmath>

#include "avlm/power.hpp"
#include "avlm/stopping.hpp"

using namespace avlm;

TEST_SUITE("dgp") {

TEST_CASE("nonlinear model moments") {
  Rng rng(42);
  const NonlinearModelDgp dgp{0.0, 0.5};
  const long n = 200000;
  double sum_z = 0.0, sum_x1 = 0.0, sum_x1_sq = 0.0;
  for (long i = 0; i < n; ++i) {
    const auto pt = nonlinear_dgp_draw(rng, dgp);
    sum_z += pt.z(0);
    sum_x1 += pt.x(1);
    sum_x1_sq += pt.x(1) * pt.x(1);
  }
  const double nn = static_cast<double>(n);
  CHECK(std::abs(sum_z / nn) < 4.0 * 0.5 / std::sqrt(nn));  // centered
  const double var_x1 = sum_x1_sq / nn - (sum_x1 / nn) * (sum_x1 / nn);
  CHECK(var_x1 == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("nonlinear residual variance matches the scaled t5") {
  // eps = 1.5 * t5 has variance 1.5^2 * 5/3 = 3.75
  Rng rng(43);
  const long n = 400000;
  double sum = 0.0, sum_sq = 0.0;
  for (long i = 0; i < n; ++i) {
    const double e = 1.5 * rng.student_t(5);
    sum += e;
    sum_sq += e * e;
  }
  const double nn = static_cast<double>(n);
  const double var = sum_sq / nn - (sum / nn) * (sum / nn);
  CHECK(var == doctest::Approx(3.75).epsilon(0.03));
}

TEST_CASE("alternating draw reproduces the deterministic design") {
  Rng rng(44);
  const AlternatingDgp dgp{1.0, 0.2, 1.5};
  const auto p1 = alternating_draw(rng, dgp, 1);
  const auto p2 = alternating_draw(rng, dgp, 2);
  CHECK(p1.z(0) == 0.0);
  CHECK(p2.z(0) == 1.0);
  CHECK(p1.x(0) == 1.0);
}

TEST_CASE("bootstrap A/A draws both arms from control") {
  BootstrapDgp dgp;
  dgp.control.y = {5.0, 5.5, 6.0, 6.5};
  dgp.treatment.y = {100.0};  // would be obvious if ever sampled
  dgp.aa_mode = true;
  dgp.use_pre = false;
  Rng rng(45);
  for (int i = 0; i < 200; ++i) {
    const auto pt = bootstrap_dgp_draw(rng, dgp);
    CHECK(pt.y < 10.0);
  }
}

TEST_CASE("bootstrap empty sample is rejected") {
  BootstrapDgp dgp;
  dgp.use_pre = false;
  Rng rng(46);
  CHECK_THROWS_AS(bootstrap_dgp_draw(rng, dgp), std::invalid_argument);
  dgp.control.y = {1.0};
  dgp.aa_mode = false;
  CHECK_THROWS_AS(bootstrap_dgp_draw(rng, dgp), std::invalid_argument);
  dgp.aa_mode = true;
  CHECK_NOTHROW(bootstrap_dgp_draw(rng, dgp));
}

TEST_CASE("bootstrap pre column enters the design") {
  BootstrapDgp dgp;
  dgp.control.y = {1.0, 2.0};
  dgp.control.pre = {0.5, 0.7};
  dgp.aa_mode = true;
  dgp.use_pre = true;
  Rng rng(47);
  const auto pt = bootstrap_dgp_draw(rng, dgp);
  CHECK(pt.x.size() == 2);
  CHECK((pt.x(1) == 0.5 || pt.x(1) == 0.7));
  CHECK(dgp_p(DgpSpec(dgp)) == 2);
}

}  // TEST_SUITE

TEST_SUITE("stopping") {

TEST_CASE("identical seeds give bit-identical results at any thread count") {
  SimulateOptions opts;
  opts.alpha = 0.05;
  opts.mixture_param = 1.0;
  opts.n_max = 800;
  opts.replications = 24;
  opts.base_seed = 909;
  const DgpSpec dgp = NonlinearModelDgp{0.0, 0.5};
  const std::vector<Method> methods{Method::AnytimeExact,
                                    Method::FixedNRepeated};
  opts.threads = 1;
  const auto a = simulate_stopping_times(dgp, methods, opts);
  opts.threads = 4;
  const auto b = simulate_stopping_times(dgp, methods, opts);
  opts.threads = 3;
  const auto c = simulate_stopping_times(dgp, methods, opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t m = 0; m < a.size(); ++m) {
    REQUIRE(a[m].size() == b[m].size());
    for (std::size_t i = 0; i < a[m].size(); ++i) {
      CHECK(a[m][i].tau == b[m][i].tau);
      CHECK(a[m][i].censored == b[m][i].censored);
      CHECK(a[m][i].tau == c[m][i].tau);
    }
  }
}

TEST_CASE("single-method run matches the joint run per replication") {
  SimulateOptions opts;
  opts.alpha = 0.05;
  opts.mixture_param = 1.0;
  opts.n_max = 500;
  opts.replications = 16;
  opts.base_seed = 31337;
  const DgpSpec dgp = NonlinearModelDgp{0.3, 0.5};
  const auto joint = simulate_stopping_times(
      dgp, {Method::AnytimeExact, Method::AnytimeAsymptotic}, opts);
  const auto solo = simulate_stopping_times(dgp, Method::AnytimeExact, opts);
  for (std::size_t i = 0; i < solo.size(); ++i) {
    CHECK(solo[i].tau == joint[0][i].tau);
  }
}

TEST_CASE("null calibration of the exact method across processes") {
  SimulateOptions opts;
  opts.alpha = 0.05;
  opts.mixture_param = 1.0;
  opts.n_max = 2000;
  opts.replications = 400;
  opts.base_seed = 555;
  opts.threads = 4;
  const double band =
      opts.alpha + 3.0 * std::sqrt(opts.alpha * (1.0 - opts.alpha) /
                                   static_cast<double>(opts.replications));

  const auto nl = simulate_stopping_times(
      NonlinearModelDgp{0.0, 0.5}, Method::AnytimeExact, opts);
  CHECK(static_cast<double>(count_rejections(nl)) / 400.0 <= band);

  opts.mixture_param = 37.5;
  const auto alt = simulate_stopping_times(
      AlternatingDgp{1.0, 0.0, 1.5}, Method::AnytimeExact, opts);
  CHECK(static_cast<double>(count_rejections(alt)) / 400.0 <= band);

  BootstrapDgp bs;
  bs.control.y = {0.1, 0.4, 0.9, 1.6, 2.5, 3.6, 0.2, 0.8};
  bs.aa_mode = true;
  bs.use_pre = false;
  opts.mixture_param = 1.0;
  const auto boot =
      simulate_stopping_times(DgpSpec(bs), Method::AnytimeExact, opts);
  CHECK(static_cast<double>(count_rejections(boot)) / 400.0 <= band);
}

TEST_CASE("empirical stopping distribution dominates the analytic bound") {
  // the alternating-design alternative: P[tau <= n] >= bound(n) - 3 se
  SimulateOptions opts;
  opts.alpha = 0.01;
  opts.mixture_param = 37.5;  // = xi_mde^-2
  opts.n_max = 20000;
  opts.replications = 400;
  opts.base_seed = 2024;
  opts.threads = 4;
  const double xi = 0.2 / std::sqrt(1.5);
  const auto samples = simulate_stopping_times(
      AlternatingDgp{1.0, 0.2, 1.5}, Method::AnytimeExact, opts);
  const double se =
      3.0 / std::sqrt(static_cast<double>(opts.replications));  // worst case
  for (long n = 500; n <= 3000; n += 500) {
    const double bound = rejection_prob_at_n(n, xi, xi, opts.alpha);
    CHECK(ecdf_at(samples, n) >= bound - se);
  }
}

TEST_CASE("ecdf summary shapes") {
  std::vector<StoppingTimeSample> samples(3);
  samples[0] = {0, 5, false, Method::AnytimeExact};
  samples[1] = {1, 5, false, Method::AnytimeExact};
  samples[2] = {2, 9, true, Method::AnytimeExact};
  const auto rows = ecdf_summary(samples);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 5);
  CHECK(rows[0].ecdf == doctest::Approx(2.0 / 3.0));
  CHECK(rows[1].n == 9);
  CHECK(rows[1].ecdf == doctest::Approx(2.0 / 3.0));

  // all censored: flat zero curve
  std::vector<StoppingTimeSample> censored(2);
  censored[0] = {0, 100, true, Method::AnytimeExact};
  censored[1] = {1, 100, true, Method::AnytimeExact};
  const auto flat = ecdf_summary(censored);
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].ecdf == 0.0);

  // single stop: step at 5
  std::vector<StoppingTimeSample> one(1);
  one[0] = {0, 5, false, Method::AnytimeExact};
  const auto step = ecdf_summary(one);
  REQUIRE(step.size() == 1);
  CHECK(step[0].n == 5);
  CHECK(step[0].ecdf == 1.0);
}

TEST_CASE("option validation") {
  SimulateOptions opts;
  opts.replications = 0;
  CHECK_THROWS_AS(
      simulate_stopping_times(NonlinearModelDgp{}, Method::AnytimeExact, opts),
      std::invalid_argument);
  opts.replications = 1;
  opts.alpha = 1.5;
  CHECK_THROWS_AS(
      simulate_stopping_times(NonlinearModelDgp{}, Method::AnytimeExact, opts),
      std::invalid_argument);
}

}  // TEST_SUITE
