#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trinet/linalg.hpp"
#include "trinet/random.hpp"
#include "trinet/states.hpp"
#include "trinet/tensorrank.hpp"

using namespace trinet;

namespace {

double entropy_of(const PureState& s, std::vector<int> keep) {
  return von_neumann_entropy(partial_trace(DensityState(s), std::move(keep)));
}

PureTriangleDecomposition bell_network() {
  const PureState b = states::bell_state(2);
  return {{b, b, b}, {UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4)}};
}

double binary_entropy(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

}  // namespace

TEST_CASE("ghz marginals") {
  for (int D = 2; D <= 4; ++D) {
    const PureState g = states::ghz(D);
    CHECK(g.dims() == Dims{D, D, D});
    for (int k = 0; k < 3; ++k) CHECK(entropy_of(g, {k}) == doctest::Approx(std::log2(D)).epsilon(1e-12));
  }
}

TEST_CASE("w state marginals") {
  const PureState w = states::w_state();
  CHECK(w.dims() == Dims{2, 2, 2});
  for (int k = 0; k < 3; ++k) CHECK(entropy_of(w, {k}) == doctest::Approx(binary_entropy(1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("antisymmetric qutrit state") {
  const PureState a = states::antisymmetric_qutrit();
  CHECK(a.dims() == Dims{3, 3, 3});
  for (int k = 0; k < 3; ++k) CHECK(entropy_of(a, {k}) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  // Swapping two parties flips the sign.
  CHECK(overlap(a, permute_subsystems(a, {1, 0, 2})).real() == doctest::Approx(-1.0));
  CHECK(overlap(a, permute_subsystems(a, {1, 2, 0})).real() == doctest::Approx(1.0));
}

TEST_CASE("six-qubit AME state has maximally mixed three-qubit marginals") {
  const PureState ame = states::ame_six_qubits();
  CHECK(ame.dims() == Dims{4, 4, 4});
  const PureState qubits(ame.amplitudes(), {2, 2, 2, 2, 2, 2});
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) CHECK(entropy_of(qubits, {a, b, c}) == doctest::Approx(3.0).epsilon(1e-10));
    }
  }
  CHECK(states::ame_graph_edges().size() == 10);
}

TEST_CASE("smolin state") {
  const DensityState s = states::smolin();
  CHECK(s.dims() == Dims{4, 4, 4});
  CHECK(std::abs(s.matrix().trace() - cplx(1.0)) < 1e-12);
  const Eigen::VectorXd ev = spectrum(s);
  int nonzero = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 1e-12) {
      ++nonzero;
      CHECK(ev(i) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    }
  }
  CHECK(nonzero == 16);
  for (int k = 0; k < 3; ++k) {
    CHECK(von_neumann_entropy(partial_trace(s, {k})) == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("noisy ghz endpoints") {
  const DensityState one = states::noisy_ghz(1.0, 4);
  CHECK((one.matrix() - states::ghz(4).projector()).cwiseAbs().maxCoeff() < 1e-14);
  const DensityState zero = states::noisy_ghz(0.0, 4);
  CHECK(von_neumann_entropy(zero) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK_THROWS(states::noisy_ghz(1.5, 4));
}

TEST_CASE("classical correlations") {
  const DensityState c = states::classical_corr(3, 4);
  CHECK(von_neumann_entropy(c) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  CHECK(numerical_rank(c) == 3);
  CHECK_THROWS(states::classical_corr(5, 4));
}

TEST_CASE("source and node orders are inverse") {
  Rng rng = make_rng(4);
  for (int d : {2, 3}) {
    const PureState six = haar_state(rng, Dims(6, d));
    const PureState nodes = states::source_to_node_order(six);
    CHECK(nodes.dims() == Dims{d * d, d * d, d * d});
    CHECK((states::node_to_source_order(nodes, d).amplitudes() - six.amplitudes()).norm() < 1e-14);
  }
}

TEST_CASE("node A holds the beta and gamma halves") {
  // beta = |01>, others |00>: the 1 lands on C_beta, the second half of C.
  const PureState z = states::basis_state({2, 2}, {0, 0});
  const PureState b01 = states::basis_state({2, 2}, {0, 1});
  const auto id = UnitaryOp::identity(4);
  const PureState n = states::itn_state(PureTriangleDecomposition{{z, b01, z}, {id, id, id}});
  CHECK(std::abs(overlap(n, states::basis_state({4, 4, 4}, {0, 0, 1}))) == doctest::Approx(1.0));
  // gamma = |10>: the 1 lands on A_gamma, the second half of A.
  const PureState b10 = states::basis_state({2, 2}, {1, 0});
  const PureState m = states::itn_state(PureTriangleDecomposition{{z, z, b10}, {id, id, id}});
  CHECK(std::abs(overlap(m, states::basis_state({4, 4, 4}, {1, 0, 0}))) == doctest::Approx(1.0));
}

TEST_CASE("bell network is the matrix-multiplication tensor up to swapping B's halves") {
  const PureState net = states::itn_state(bell_network());
  const PureState qubits(net.amplitudes(), Dims(6, 2));
  const PureState swapped = permute_subsystems(qubits, {0, 1, 3, 2, 4, 5});
  const PureState mm = tensorrank::as_network_state(tensorrank::matmul_tensor());
  CHECK(std::abs(overlap(PureState(swapped.amplitudes(), {4, 4, 4}), mm)) == doctest::Approx(1.0).epsilon(1e-14));
  for (int k = 0; k < 3; ++k) CHECK(entropy_of(net, {k}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("bell construction reaches overlap one half with ghz4") {
  const PureState net = states::itn_state(states::bell_ghz4_decomposition());
  CHECK(std::norm(overlap(states::ghz(4), net)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("mixed and pure network constructions agree") {
  Rng rng = make_rng(12);
  PureTriangleDecomposition t{{haar_state(rng, {2, 2}), haar_state(rng, {2, 2}), haar_state(rng, {2, 2})},
                              {haar_unitary(rng, 4), haar_unitary(rng, 4), haar_unitary(rng, 4)}};
  const PureState pure = states::itn_state(t);
  const DensityState mixed = states::itn_state(t.to_mixed());
  CHECK((mixed.matrix() - pure.projector()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("correlated mixture of two product networks") {
  const auto id = UnitaryOp::identity(4);
  const DensityState zero(states::basis_state({2, 2}, {0, 0}));
  const DensityState one(states::basis_state({2, 2}, {1, 1}));
  CtnMixture m{{0.5, 0.5},
               {TriangleDecomposition{{zero, zero, zero}, {id, id, id}},
                TriangleDecomposition{{one, one, one}, {id, id, id}}}};
  const DensityState rho = states::ctn_state(m);
  Matrix expected = 0.5 * states::basis_state({4, 4, 4}, {0, 0, 0}).projector() +
                    0.5 * states::basis_state({4, 4, 4}, {3, 3, 3}).projector();
  CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS(states::ctn_state(CtnMixture{{0.3, 0.3}, m.components}));
}

TEST_CASE("ring cluster network") {
  const PureState rc = states::ring_cluster();
  CHECK(rc.dims() == Dims{4, 4, 4});
  for (int k = 0; k < 3; ++k) CHECK(entropy_of(rc, {k}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("embed preserves amplitudes") {
  const PureState w = states::w_state();
  const PureState e = states::embed(w, {4, 4, 4});
  CHECK(e.dims() == Dims{4, 4, 4});
  CHECK(std::abs(overlap(e, states::embed(w, {4, 4, 4}))) == doctest::Approx(1.0));
  CHECK(entropy_of(e, {0}) == doctest::Approx(binary_entropy(1.0 / 3.0)).epsilon(1e-12));
  CHECK_THROWS(states::embed(states::ghz(3), {2, 2, 2}));
}

TEST_CASE("error paths") {
  const DensityState g(states::ghz(2));
  CHECK_THROWS(states::ghz(1));
  CHECK_THROWS(partial_trace(g, {}));
  CHECK_THROWS(partial_trace(g, {3}));
  CHECK_THROWS(permute_subsystems(g, {0, 0, 1}));
  CHECK_THROWS(schmidt(states::ghz(2), Bipartition{{}}));
  CHECK_THROWS(schmidt(states::ghz(2), Bipartition{{0, 1, 2}}));
  CHECK_THROWS(overlap(states::ghz(2), states::ghz(3)));

  const auto id2 = UnitaryOp::identity(4);
  const auto id3 = UnitaryOp::identity(9);
  const DensityState z2(states::basis_state({2, 2}, {0, 0}));
  const DensityState z3(states::basis_state({3, 3}, {0, 0}));
  CHECK_THROWS(states::ctn_state(CtnMixture{{0.5, 0.5},
                                            {TriangleDecomposition{{z2, z2, z2}, {id2, id2, id2}},
                                             TriangleDecomposition{{z3, z3, z3}, {id3, id3, id3}}}}));
  CHECK_THROWS(states::itn_state(TriangleDecomposition{{z2, z2, z2}, {id2, id3, id2}}));
}
