#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "nevpick/error.hpp"
#include "nevpick/hermlin.hpp"

using namespace nevpick;
using fixtures::Rng;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("build_system examples") {
  SUBCASE("two simple nodes") {
    const SystemMatrices s = build_system(fixtures::example16());
    CHECK((s.T - fixtures::to_matrix({{0.0, 0.0}, {0.0, 0.5}})).norm() == 0.0);
    CHECK((s.E - Eigen::Vector2cd(1.0, 1.0)).norm() == 0.0);
    CHECK((s.C - Eigen::Vector2cd(1.0, 0.5)).norm() == 0.0);
  }
  SUBCASE("double node: Jordan block with the 1 below the diagonal") {
    InterpProblem p;
    const cplx a{0.2, -0.1}, b{0.7, 0.3};
    p.nodes = {{0.3, {a, b}}};
    const SystemMatrices s = build_system(p);
    CHECK((s.T - fixtures::to_matrix({{0.3, 0.0}, {1.0, 0.3}})).norm() == 0.0);
    CHECK((s.E - Eigen::Vector2cd(1.0, 0.0)).norm() == 0.0);
    CHECK((s.C - Eigen::Vector2cd(a, b)).norm() == 0.0);
  }
  SUBCASE("single zero node") {
    InterpProblem p;
    p.nodes = {{0.0, {0.0}}};
    const SystemMatrices s = build_system(p);
    CHECK(s.T.rows() == 1);
    CHECK(s.T(0, 0) == cplx{});
    CHECK(s.E(0) == cplx{1.0});
    CHECK(s.C(0) == cplx{});
  }
  SUBCASE("errors") {
    InterpProblem p;
    p.nodes = {{1.0, {0.0}}};
    CHECK(code_of([&] { build_system(p); }) == ErrorCode::NodeOutsideDisk);
    p.nodes = {{0.1, {0.0}}, {0.1, {0.5}}};
    CHECK(code_of([&] { build_system(p); }) == ErrorCode::DuplicateNode);
    p.nodes = {{0.1, {}}};
    CHECK(code_of([&] { build_system(p); }) == ErrorCode::ValueCountMismatch);
  }
}

TEST_CASE("stein_solve and stein_series examples") {
  const SystemMatrices s = build_system(fixtures::example16());
  double asym = -1.0;
  const HermitianMatrix P = stein_solve(s, &asym);
  const Eigen::MatrixXcd want = fixtures::to_matrix({{0.0, 0.5}, {0.5, 1.0}});
  CHECK((P.matrix() - want).norm() <= 1e-12);
  CHECK(asym <= 1e-10);

  const HermitianMatrix S = stein_series(s);
  CHECK((S.matrix() - want).norm() <= 1e-13);

  // first series term EE* - CC*
  const Eigen::MatrixXcd term0 = s.E * s.E.adjoint() - s.C * s.C.adjoint();
  CHECK((term0 - fixtures::to_matrix({{0.0, 0.5}, {0.5, 0.75}})).norm() <= 1e-15);

  InterpProblem same;
  same.nodes = {{0.2, {1.0}}, {-0.4, {1.0}}};
  CHECK(stein_solve(build_system(same)).matrix().norm() <= 1e-15);
  CHECK(stein_series(build_system(same)).matrix().norm() == 0.0);

  InterpProblem single;
  const cplx c{0.3, 0.4};
  single.nodes = {{0.0, {c}}};
  CHECK(std::abs(stein_solve(build_system(single)).matrix()(0, 0) - (1.0 - std::norm(c))) <= 1e-15);
  CHECK(std::abs(stein_series(build_system(single)).matrix()(0, 0) - (1.0 - std::norm(c))) <= 1e-15);
}

TEST_CASE("inertia examples") {
  const HermitianMatrix P(fixtures::to_matrix({{0.0, 0.5}, {0.5, 1.0}}));
  CHECK(inertia(P) == Inertia{1, 1, 0});
  const Eigen::VectorXd ev = hermitian_eigenvalues(P);
  CHECK(std::abs(ev(0) - (1.0 - std::sqrt(2.0)) / 2.0) <= 1e-14);
  CHECK(std::abs(ev(1) - (1.0 + std::sqrt(2.0)) / 2.0) <= 1e-14);
  CHECK(inertia(HermitianMatrix(Eigen::MatrixXcd::Identity(2, 2))) == Inertia{2, 0, 0});
  CHECK(inertia(HermitianMatrix(Eigen::MatrixXcd::Zero(2, 2))) == Inertia{0, 0, 2});
  CHECK(code_of([] { inertia(fixtures::to_matrix({{0.0, 1.0}, {0.0, 0.0}})); }) == ErrorCode::NotHermitian);
}

TEST_CASE("property: direct solver matches the series and the bivariate oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    InterpProblem p;
    const int k = rng.integer(1, 3);
    while (static_cast<int>(p.nodes.size()) < k) {
      const cplx z = rng.disk(0.8);
      bool ok = true;
      for (const auto& nd : p.nodes)
        if (std::abs(nd.z - z) < 0.05) ok = false;
      if (!ok) continue;
      NodeData nd{z, {}};
      for (int j = rng.integer(1, 2); j > 0; --j) nd.values.push_back(rng.disk(1.2));
      p.nodes.push_back(nd);
    }
    if (p.total_size() > 6) continue;
    const SystemMatrices s = build_system(p);
    double asym = 0.0;
    const HermitianMatrix P = stein_solve(s, &asym);
    const HermitianMatrix Ps = stein_series(s);
    CHECK((P.matrix() - Ps.matrix()).norm() <= 1e-8);
    CHECK(asym <= 1e-10);
    const double resid =
        (P.matrix() - s.T * P.matrix() * s.T.adjoint() - (s.E * s.E.adjoint() - s.C * s.C.adjoint())).norm();
    CHECK(resid <= 1e-10 * (1.0 + P.norm()));
    CHECK((P.matrix() - fixtures::pick_oracle(p)).norm() <= 1e-9 * (1.0 + P.norm()));
  }
}

TEST_CASE("property: inertia is invariant under congruence") {
  Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) Q(i, j) = rng.disk(1.0);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Q);
    const Eigen::MatrixXcd U = qr.householderQ();
    Eigen::VectorXd d(4);
    for (int i = 0; i < 4; ++i) {
      const int kind = rng.integer(0, 2);
      d(i) = kind == 0 ? -rng.uniform(0.5, 2.0) : kind == 1 ? rng.uniform(0.5, 2.0) : 0.0;
    }
    const Eigen::MatrixXcd H = U * d.cast<cplx>().asDiagonal() * U.adjoint();
    Eigen::MatrixXcd G(4, 4);
    for (;;) {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = rng.disk(1.0);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G);
      if (svd.singularValues()(3) > 0.2) break;
    }
    const HermitianMatrix h1 = HermitianMatrix::symmetrize(H);
    const HermitianMatrix h2 = HermitianMatrix::symmetrize(G * H * G.adjoint());
    CHECK(inertia(h1, 1e-9) == inertia(h2, 1e-9));
  }
}
