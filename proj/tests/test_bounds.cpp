#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trinet/bounds.hpp"
#include "trinet/random.hpp"
#include "trinet/seesaw.hpp"
#include "trinet/states.hpp"

using namespace trinet;
using namespace trinet::bounds;

namespace {

const double kGhz2Bound = std::pow(std::cos(std::numbers::pi / 8), 2);

PureTriangleDecomposition random_qubit_network(Rng& rng) {
  return {{haar_state(rng, {2, 2}), haar_state(rng, {2, 2}), haar_state(rng, {2, 2})},
          {haar_unitary(rng, 4), haar_unitary(rng, 4), haar_unitary(rng, 4)}};
}

}  // namespace

TEST_CASE("bipartite overlap bound") {
  const double h = std::sqrt(0.5);
  CHECK(bipartite_overlap_bound({h, h}, {h, h}) == doctest::Approx(1.0));
  CHECK(bipartite_overlap_bound({1.0}, {h, h}) == doctest::Approx(0.5));
  CHECK(bipartite_overlap_bound({h, h, 0.0, 0.0}, {1.0}) == doctest::Approx(0.5));
  CHECK_THROWS(bipartite_overlap_bound({0.5, 0.5}, {1.0}));
  CHECK_THROWS(bipartite_overlap_bound({0.6, 0.8}, {1.0}));
  CHECK_THROWS(bipartite_overlap_bound({-1.0}, {1.0}));
}

TEST_CASE("network cut coefficients") {
  const SourceAngles ang{0.3, 0.5, 0.7};
  for (Cut c : {Cut::A_BC, Cut::B_AC, Cut::C_AB}) {
    const auto s = itn_cut_coefficients(ang, c);
    double sq = 0.0;
    for (int i = 0; i < 4; ++i) {
      sq += s[i] * s[i];
      if (i > 0) CHECK(s[i] <= s[i - 1]);
    }
    CHECK(sq == doctest::Approx(1.0).epsilon(1e-14));
  }
  // Cut A|BC is crossed by beta and gamma only.
  const auto a = itn_cut_coefficients({0.0, std::numbers::pi / 4, std::numbers::pi / 4}, Cut::A_BC);
  for (double x : a) CHECK(x == doctest::Approx(0.5));
  const auto b = itn_cut_coefficients({0.0, std::numbers::pi / 4, std::numbers::pi / 4}, Cut::B_AC);
  CHECK(b[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(b[2] == doctest::Approx(0.0));
}

TEST_CASE("network cut coefficients match the Schmidt spectrum") {
  Rng rng = make_rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_real_distribution<double> u(0.0, std::numbers::pi / 4);
    const SourceAngles ang{u(rng), u(rng), u(rng)};
    auto src = [](double t) {
      Vector v = Vector::Zero(4);
      v(0) = std::cos(t);
      v(3) = std::sin(t);
      return PureState(v, {2, 2});
    };
    PureTriangleDecomposition net{{src(ang.a), src(ang.b), src(ang.c)},
                                  {haar_unitary(rng, 4), haar_unitary(rng, 4), haar_unitary(rng, 4)}};
    const PureState phi = states::itn_state(net);
    for (int x = 0; x < 3; ++x) {
      const auto expected = itn_cut_coefficients(ang, static_cast<Cut>(x));
      const auto got = schmidt(phi, Bipartition{{x}}).coefficients;
      for (std::size_t i = 0; i < 4; ++i) CHECK((i < got.size() ? got[i] : 0.0) == doctest::Approx(expected[i]).epsilon(1e-7));
    }
  }
}

TEST_CASE("ghz2 bound") {
  const BoundResult r = overlap_upper_bound(states::ghz(2));
  CHECK(std::abs(r.value - kGhz2Bound) < 1e-9);
  BoundConfig sym;
  sym.symmetric = true;
  const BoundResult s = overlap_upper_bound(states::ghz(2), sym);
  CHECK(std::abs(s.value - kGhz2Bound) < 1e-9);
  CHECK(s.angles.a >= s.angles.b);
  CHECK(s.angles.b >= s.angles.c);
}

TEST_CASE("product and network targets give bound one") {
  CHECK(overlap_upper_bound(states::product_state(4)).value == doctest::Approx(1.0).epsilon(1e-12));
  Rng rng = make_rng(18);
  CHECK(overlap_upper_bound(states::itn_state(random_qubit_network(rng))).value ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("bound dominates overlaps with random networks") {
  Rng rng = make_rng(19);
  std::vector<PureState> targets = {states::ghz(2), states::w_state(), states::ghz(4), states::ame_six_qubits(),
                                    haar_state(rng, {4, 4, 4})};
  for (const auto& t : targets) {
    const double b = overlap_upper_bound(t).value;
    const PureState te = states::embed(t, {4, 4, 4});
    for (int trial = 0; trial < 50; ++trial) {
      CHECK(std::norm(overlap(te, states::itn_state(random_qubit_network(rng)))) <= b + 1e-12);
    }
  }
}

TEST_CASE("bound dominates the see-saw") {
  seesaw::SeesawConfig cfg;
  cfg.restarts = 10;
  cfg.threads = 1;
  for (const PureState& t : {states::ghz(2), states::w_state(), states::ghz(4), states::ame_six_qubits()}) {
    const double mu2 = seesaw::optimize_overlap(states::embed(t, {4, 4, 4}), cfg).mu_squared;
    CHECK(mu2 <= overlap_upper_bound(t).value + 1e-6);
  }
}

TEST_CASE("bound input validation") {
  CHECK_THROWS(overlap_upper_bound(states::embed(states::antisymmetric_qutrit(), {9, 9, 9})));
  BoundConfig bad;
  bad.grid = 1;
  CHECK_THROWS(overlap_upper_bound(states::ghz(2), bad));
  bad = {};
  bad.refine_shrink = 1.0;
  CHECK_THROWS(overlap_upper_bound(states::ghz(2), bad));
}
