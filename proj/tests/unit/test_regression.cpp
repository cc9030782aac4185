#include <doctest.h>

#include <cmath>
#include <limits>

#include "avlm/regression.hpp"
#include "helpers.hpp"

using namespace avlm;
using avlm::testing::batch_ols;
using avlm::testing::make_dataset;

TEST_SUITE("regression") {

TEST_CASE("single point identity") {
  SufficientStats stats(1, 1);
  DesignPoint pt;
  pt.x = Eigen::VectorXd::Ones(1);
  pt.z = Eigen::VectorXd::Ones(1);
  pt.y = 2.0;
  stats.update(pt);
  CHECK(stats.n() == 1);
  CHECK(stats.gram()(0, 0) == 1.0);
  CHECK(stats.gram()(0, 1) == 1.0);
  CHECK(stats.gram()(1, 1) == 1.0);
  CHECK(stats.cross()(0) == 2.0);
  CHECK(stats.cross()(1) == 2.0);
  CHECK(stats.yty() == 4.0);
}

TEST_CASE("rank deficiency is a state, not an error") {
  SufficientStats stats(1, 1);
  DesignPoint pt;
  pt.x = Eigen::VectorXd::Ones(1);
  pt.z = Eigen::VectorXd::Zero(1);
  pt.y = 1.0;
  stats.update(pt);
  stats.update(pt);
  CHECK(stats.gram()(0, 0) == 2.0);
  CHECK(stats.gram()(1, 1) == 0.0);
  const auto snap = snapshot(stats);
  CHECK_FALSE(snap.full_rank);
  // a third point does not help: the z column is still all zero
  pt.y = -1.0;
  stats.update(pt);
  CHECK_FALSE(snapshot(stats).full_rank);
}

TEST_CASE("update rejects bad input") {
  SufficientStats stats(2, 1);
  DesignPoint pt;
  pt.x = Eigen::VectorXd::Ones(1);  // wrong p
  pt.z = Eigen::VectorXd::Ones(1);
  pt.y = 0.0;
  CHECK_THROWS_AS(stats.update(pt), std::invalid_argument);
  pt.x = Eigen::VectorXd::Ones(2);
  pt.y = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(stats.update(pt), std::invalid_argument);
  CHECK(stats.n() == 0);
}

TEST_CASE("gram matches batch sum on a seeded stream") {
  const auto ds = make_dataset(101, 10, 2, 1, Eigen::Vector2d(0.5, -1.0),
                               Eigen::VectorXd::Constant(1, 0.3), 1.0);
  const Eigen::MatrixXd batch = ds.w.transpose() * ds.w;
  CHECK((ds.stats.gram() - batch).cwiseAbs().maxCoeff() < 1e-12);
  const Eigen::VectorXd cross = ds.w.transpose() * ds.y;
  CHECK((ds.stats.cross() - cross).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("n <= p + d yields full_rank = false") {
  auto ds = make_dataset(7, 2, 1, 1, Eigen::VectorXd::Constant(1, 1.0),
                         Eigen::VectorXd::Constant(1, 0.2), 1.0);
  CHECK_FALSE(snapshot(ds.stats).full_rank);
}

TEST_CASE("zero-residual stream has s2 = 0 and no t vector") {
  SufficientStats stats(1, 1);
  Rng rng(3);
  for (int i = 0; i < 8; ++i) {
    DesignPoint pt;
    pt.x = Eigen::VectorXd::Ones(1);
    pt.z = Eigen::VectorXd::Constant(1, rng.normal());
    pt.y = 2.0 + 3.0 * pt.z(0);  // exact fit
    stats.update(pt);
  }
  const auto snap = snapshot(stats);
  REQUIRE(snap.full_rank);
  CHECK(snap.s2 == 0.0);
  CHECK_FALSE(snap.t_vec.has_value());
  CHECK(std::isinf(classical_f(snap)));
  CHECK(classical_f(snap) > 0);
}

TEST_CASE("snapshot matches dense batch least squares") {
  const auto ds = make_dataset(11, 20, 1, 1, Eigen::VectorXd::Constant(1, 0.7),
                               Eigen::VectorXd::Constant(1, -0.4), 1.3);
  const auto snap = snapshot(ds.stats);
  const auto fit = batch_ols(ds);
  REQUIRE(snap.full_rank);
  CHECK(snap.beta_hat(0) ==
        doctest::Approx(fit.gamma_hat(0)).epsilon(1e-10));
  CHECK(snap.delta_hat(0) ==
        doctest::Approx(fit.gamma_hat(1)).epsilon(1e-10));
  CHECK(snap.s2 == doctest::Approx(fit.s2).epsilon(1e-10));
  CHECK(snap.ztilde_gram(0, 0) ==
        doctest::Approx(fit.ztilde_gram(0, 0)).epsilon(1e-10));
}

TEST_CASE("classical f equals the projection-matrix form") {
  const auto ds = make_dataset(17, 50, 2, 2, Eigen::Vector2d(1.0, 0.5),
                               Eigen::Vector2d(0.3, -0.2), 1.1);
  const auto snap = snapshot(ds.stats);
  REQUIRE(snap.full_rank);

  // f = (Y'(P_W - P_X)Y / d) / (Y'(I - P_W)Y / nu) from explicit projections
  const Eigen::MatrixXd pw =
      ds.w * (ds.w.transpose() * ds.w).ldlt().solve(ds.w.transpose());
  const Eigen::MatrixXd px =
      ds.x * (ds.x.transpose() * ds.x).ldlt().solve(ds.x.transpose());
  const double num = ds.y.dot((pw - px) * ds.y) / 2.0;
  const double den = ds.y.dot(ds.y - pw * ds.y) / static_cast<double>(snap.nu);
  CHECK(classical_f(snap) == doctest::Approx(num / den).epsilon(1e-9));
  // f = t't / d
  REQUIRE(snap.t_vec.has_value());
  CHECK(classical_f(snap) ==
        doctest::Approx(snap.t_vec->squaredNorm() / 2.0).epsilon(1e-12));
}

TEST_CASE("block inverse identity") {
  const auto ds = make_dataset(23, 60, 3, 2, Eigen::Vector3d(0.2, 1.0, -0.5),
                               Eigen::Vector2d(0.1, 0.4), 0.9);
  const auto snap = snapshot(ds.stats);
  REQUIRE(snap.full_rank);
  const Eigen::MatrixXd gram_inv = ds.stats.gram().inverse();
  const Eigen::MatrixXd block = gram_inv.bottomRightCorner(2, 2);
  const Eigen::MatrixXd zt_inv = snap.ztilde_gram.inverse();
  CHECK((block - zt_inv).cwiseAbs().maxCoeff() <
        1e-8 * zt_inv.cwiseAbs().maxCoeff());
}

TEST_CASE("affine nuisance invariance of t and f") {
  const auto base = make_dataset(31, 40, 2, 1, Eigen::Vector2d(1.0, -0.3),
                                 Eigen::VectorXd::Constant(1, 0.25), 1.0);
  const auto snap0 = snapshot(base.stats);
  REQUIRE(snap0.full_rank);

  const double c = -2.5;
  const Eigen::Vector2d a(0.7, 1.9);
  SufficientStats stats(2, 1);
  for (const auto& pt : base.points) {
    DesignPoint q = pt;
    q.y = c * pt.y + pt.x.dot(a);
    stats.update(q);
  }
  const auto snap1 = snapshot(stats);
  REQUIRE(snap1.full_rank);
  CHECK(snap1.f_stat == doctest::Approx(snap0.f_stat).epsilon(1e-8));
  REQUIRE(snap0.t_vec.has_value());
  REQUIRE(snap1.t_vec.has_value());
  // t flips sign with c < 0 but is otherwise unchanged
  CHECK(((*snap1.t_vec) + (*snap0.t_vec)).cwiseAbs().maxCoeff() <
        1e-8 * snap0.t_vec->cwiseAbs().maxCoeff());
}

TEST_CASE("streaming equals batch accumulation bit for bit") {
  const auto ds = make_dataset(41, 30, 1, 1, Eigen::VectorXd::Constant(1, 1.0),
                               Eigen::VectorXd::Constant(1, 0.2), 1.5);
  SufficientStats rebuilt(1, 1);
  for (const auto& pt : ds.points) rebuilt.update(pt);
  const auto a = snapshot(ds.stats);
  const auto b = snapshot(rebuilt);
  CHECK(a.delta_hat(0) == b.delta_hat(0));
  CHECK(a.s2 == b.s2);
  CHECK(a.f_stat == b.f_stat);
}

TEST_CASE("classical_f requires full rank") {
  SufficientStats stats(1, 1);
  CHECK_THROWS_AS(classical_f(snapshot(stats)), std::logic_error);
}

}  // TEST_SUITE
