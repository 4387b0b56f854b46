#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "fixtures.hpp"
#include "nevpick/error.hpp"
#include "nevpick/schurclass.hpp"

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

RatFun quarter_over_z() { return RatFun::reduce(Poly{0.25}, Poly{0.0, 1.0}); }

RatFun ex16_solution() { return RatFun::reduce(Poly{-2.0, 7.0, -4.0}, Poly{-2.0, 8.0, -4.0}); }

std::vector<cplx> ring_grid(int count, double r, double phase) {
  std::vector<cplx> g;
  for (int k = 0; k < count; ++k) g.push_back(std::polar(r, phase + 2.0 * std::numbers::pi * k / count));
  return g;
}

std::vector<cplx> random_grid(Rng& rng, int count, double min_mod) {
  std::vector<cplx> g;
  while (static_cast<int>(g.size()) < count) {
    const cplx z = rng.disk(0.95);
    if (std::abs(z) >= min_mod) g.push_back(z);
  }
  return g;
}

}  // namespace

TEST_CASE("blaschke_from_zeros examples") {
  const Blaschke b0({0.0});
  CHECK(std::abs(b0(0.3) - 0.3) <= 1e-15);
  const Blaschke one;
  CHECK(one.degree() == 0);
  CHECK(std::abs(one(0.7) - 1.0) == 0.0);

  const RatFun b = Blaschke({0.0, 0.5}).to_ratfun();
  // z (2z - 1) / (2 - z) = (z^2 - z/2) / (1 - z/2)
  const RatFun want = RatFun::reduce(Poly{0.0, -1.0, 2.0}, Poly{2.0, -1.0});
  CHECK(relative_coeff_distance(b.num(), want.num()) <= 1e-14);
  CHECK(relative_coeff_distance(b.den(), want.den()) <= 1e-14);

  CHECK(code_of([] { Blaschke({1.0}); }) == ErrorCode::ZeroOutsideDisk);
  CHECK(code_of([] { Blaschke({0.1}, 2.0); }) == ErrorCode::NonUnimodularFactor);
}

TEST_CASE("property: Blaschke products are unimodular on the circle") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> zeros;
    for (int k = rng.integer(0, 5); k > 0; --k) zeros.push_back(rng.disk(0.95));
    const Blaschke b(zeros, std::polar(1.0, rng.uniform(0.0, 6.0)));
    const RatFun rf = b.to_ratfun();
    for (int s = 0; s < 64; ++s) {
      const cplx t = std::polar(1.0, 2.0 * std::numbers::pi * s / 64.0);
      CHECK(std::abs(std::abs(b(t)) - 1.0) <= 1e-10);
      CHECK(std::abs(std::abs(rf(t)) - 1.0) <= 1e-10);
    }
    const Blaschke back = blaschke_from_ratfun(rf);
    CHECK(back.degree() == b.degree());
  }
}

TEST_CASE("class_index examples") {
  SUBCASE("z") {
    const KreinLanger kl = class_index(RatFun::identity());
    CHECK(kl.index == 0);
    CHECK(kl.b.degree() == 0);
    CHECK(std::abs(kl.s(0.4) - 0.4) <= 1e-14);
  }
  SUBCASE("1/(4z)") {
    const KreinLanger kl = class_index(quarter_over_z());
    CHECK(kl.index == 1);
    REQUIRE(kl.b.degree() == 1);
    CHECK(std::abs(kl.b.zeros()[0]) <= 1e-14);
    // f = s / b with b = z up to a unimodular factor
    CHECK(std::abs(std::abs(kl.s(0.3)) - 0.25) <= 1e-14);
    CHECK(std::abs(kl.boundary_sup - 0.25) <= 1e-12);
  }
  SUBCASE("Example solution") {
    const KreinLanger kl = class_index(ex16_solution());
    CHECK(kl.index == 1);
    REQUIRE(kl.b.degree() == 1);
    CHECK(std::abs(kl.b.zeros()[0] - (1.0 - std::sqrt(2.0) / 2.0)) <= 1e-12);
    CHECK(kl.boundary_sup <= 1.0 + 1e-9);
  }
  SUBCASE("errors") {
    CHECK(code_of([] { class_index(RatFun(2.0)); }) == ErrorCode::NotContractive);
    CHECK(code_of([] { class_index(RatFun::reduce(Poly{0.5}, Poly{-1.0, 1.0})); }) == ErrorCode::PoleOnBoundary);
  }
}

TEST_CASE("property: class index of s / b equals the disk pole count") {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFun s = fixtures::random_schur(rng);
    const Blaschke b = fixtures::random_blaschke(rng, rng.integer(0, 3), {});
    bool coprime = true;
    for (const cplx a : b.zeros())
      if (std::abs(s(a)) < 1e-3) coprime = false;
    if (!coprime) continue;
    const RatFun f = s / b.to_ratfun();
    const KreinLanger kl = class_index(f);
    CHECK(kl.index == b.degree());
    CHECK(kl.index == zeros_in_disk(RatFun::polynomial(f.den())));
    CHECK(kl.index == poles_in_disk(f));
    for (int k = 0; k < 8; ++k) {
      const cplx z = rng.disk(0.9);
      if (std::abs(kl.b(z)) < 1e-3) continue;
      CHECK(std::abs(kl.s(z) / kl.b(z) - f(z)) <= 1e-8 * (1.0 + std::abs(f(z))));
    }
  }
}

TEST_CASE("zeros_in_disk examples") {
  CHECK(zeros_in_disk(RatFun::polynomial(Poly{0.0, 0.0, 1.0})) == 2);
  CHECK(zeros_in_disk(RatFun(1.0)) == 0);
  CHECK(zeros_in_disk(RatFun::polynomial(Poly{-1.0, 4.0, -2.0})) == 1);
  CHECK(code_of([] { zeros_in_disk(RatFun()); }) == ErrorCode::ZeroFunction);
  CHECK(code_of([] { zeros_in_disk(RatFun::polynomial(Poly{-1.0, 1.0})); }) == ErrorCode::ZeroOnBoundary);
}

TEST_CASE("winding_count examples") {
  CHECK(winding_count(RatFun::identity(), {0.0, 0.9, 256}) == 1);
  CHECK(winding_count(quarter_over_z(), {0.0, 0.9, 256}) == -1);
  CHECK(winding_count(RatFun::polynomial(Poly{-1.0, 4.0, -2.0}), {0.0, 0.9, 256}) == 1);
  CHECK(code_of([] { winding_count(RatFun::polynomial(Poly{-0.9, 1.0}), {0.0, 0.9, 4}); }) ==
        ErrorCode::SingularOnContour);
  CHECK(code_of([] { ContourSpec{0.0, 1.2, 16}.validate(); }) == ErrorCode::InvalidInput);
}

TEST_CASE("property: root count agrees with the argument principle") {
  Rng rng(33);
  int checked = 0;
  while (checked < 100) {
    std::vector<cplx> zn, zd;
    for (int k = rng.integer(0, 6); k > 0; --k) zn.push_back(rng.disk(1.6));
    for (int k = rng.integer(0, 6 - static_cast<int>(zn.size())); k > 0; --k) zd.push_back(rng.disk(1.6));
    bool away = true;
    for (const auto* v : {&zn, &zd})
      for (const cplx r : *v)
        if (std::abs(std::abs(r) - 1.0) < 0.02) away = false;
    for (const cplx a : zn)
      for (const cplx b : zd)
        if (std::abs(a - b) < 0.05) away = false;
    if (!away) continue;
    ++checked;
    const RatFun g = RatFun::reduce(Poly::from_roots(zn, rng.annulus(0.5, 2.0)), Poly::from_roots(zd));
    int inside_poles = 0;
    for (const cplx b : zd)
      if (std::abs(b) < 1.0) ++inside_poles;
    CHECK(zeros_in_disk(g) == winding_count(g, {0.0, 0.99, 2048}) + inside_poles);
  }
}

TEST_CASE("kernel_negsquares examples") {
  Rng rng(34);
  const auto g20 = random_grid(rng, 20, 0.05);
  CHECK(kernel_negsquares(RatFun::identity(), g20).count == 0);
  CHECK(kernel_negsquares(quarter_over_z(), g20).count == 1);

  std::vector<cplx> g24 = ring_grid(12, 0.3, 0.1);
  for (const cplx z : ring_grid(12, 0.7, 0.2)) g24.push_back(z);
  CHECK(kernel_negsquares(ex16_solution(), g24).count == 1);
  CHECK(kernel_negsquares(ex16_solution(), default_kernel_grid(ex16_solution())).count == 1);

  const SampledFunction sampled = [](cplx z) { return 0.25 / z; };
  CHECK(kernel_negsquares(sampled, g20).count == 1);

  std::vector<cplx> dup{0.1, 0.2, 0.1};
  CHECK(code_of([&] { kernel_negsquares(RatFun::identity(), dup); }) == ErrorCode::DegenerateGrid);
  std::vector<cplx> with_pole{0.1, 0.0, 0.3};
  CHECK(code_of([&] { kernel_negsquares(quarter_over_z(), with_pole); }) == ErrorCode::PoleOnGrid);
}

TEST_CASE("property: negative squares never decrease under grid refinement") {
  Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const RatFun s = fixtures::random_schur(rng);
    const Blaschke b = fixtures::random_blaschke(rng, rng.integer(0, 2), {});
    bool coprime = true;
    for (const cplx a : b.zeros())
      if (std::abs(s(a)) < 1e-3) coprime = false;
    if (!coprime) continue;
    const RatFun f = s / b.to_ratfun();
    std::vector<cplx> grid;
    int last = 0;
    for (int step = 0; step < 6; ++step) {
      for (int k = 0; k < 4; ++k) {
        const cplx z = rng.disk(0.95);
        bool ok = !f.has_pole_at(z);
        for (const cplx a : b.zeros())
          if (std::abs(z - a) < 1e-3) ok = false;
        if (ok) grid.push_back(z);
      }
      const int count = kernel_negsquares(f, grid).count;
      CHECK(count >= last);
      CHECK(count <= b.degree());
      last = count;
    }
  }
}

TEST_CASE("analytic cycle and quadrature") {
  // (1/2 pi i) integral of f over a cycle avoiding the pole of 1/(4z) at 0
  const RatFun f = quarter_over_z();
  const std::vector<cplx> enclose{0.5};
  const auto cycle = analytic_cycle(f, enclose, {0.0, 0.85, 128});
  REQUIRE(cycle.size() == 2);
  cplx integral{};
  for (const QuadNode& q : cycle_quadrature(cycle)) integral += q.weight * f(q.point);
  CHECK(std::abs(integral) <= 1e-12);

  // Cauchy formula for an analytic function on the plain circle
  const auto plain = analytic_cycle(RatFun::identity(), enclose, {0.0, 0.85, 128});
  REQUIRE(plain.size() == 1);
  cplx cauchy{};
  for (const QuadNode& q : cycle_quadrature(plain)) cauchy += q.weight * std::exp(q.point) / (q.point - 0.5);
  CHECK(std::abs(cauchy - std::exp(0.5)) <= 1e-12);

  CHECK(code_of([&] { analytic_cycle(RatFun::identity(), std::vector<cplx>{0.9}, {0.0, 0.85, 64}); }) ==
        ErrorCode::NodesNotEnclosed);
}
