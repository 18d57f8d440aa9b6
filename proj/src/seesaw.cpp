#include "trinet/seesaw.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include "trinet/random.hpp"

namespace trinet::seesaw {

namespace {

using RowMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kDegenerateNorm = 1e-14;

// Index bookkeeping for one source dimension d.
struct Layout {
  int d;
  int D;  // d^2, node dimension
  int N;  // D^3
  std::vector<int> node_of_source;  // node-order flat index of each source-order flat index

  explicit Layout(int d_) : d(d_), D(d_ * d_), N(D * D * D), node_of_source(N) {
    for (int s = 0; s < N; ++s) {
      std::array<int, 6> digit{};
      int rest = s;
      for (int k = 5; k >= 0; --k) {
        digit[k] = rest % d;
        rest /= d;
      }
      int node = 0;
      for (int k = 0; k < 6; ++k) node = node * d + digit[kNodeFromSource[k]];
      node_of_source[s] = node;
    }
  }
};

// D x D^2 matrix with `leg` as row index and the other two legs (in order) as columns.
Matrix leg_matrix(const Vector& v, int D, int leg) {
  Matrix m(D, D * D);
  for (int a = 0; a < D; ++a) {
    for (int b = 0; b < D; ++b) {
      for (int c = 0; c < D; ++c) {
        const cplx x = v(a * D * D + b * D + c);
        switch (leg) {
          case 0: m(a, b * D + c) = x; break;
          case 1: m(b, a * D + c) = x; break;
          default: m(c, a * D + b) = x; break;
        }
      }
    }
  }
  return m;
}

Vector apply_on_leg(const Vector& v, int D, int leg, const Matrix& u) {
  Vector out(v.size());
  if (leg == 0) {
    Eigen::Map<const RowMatrix> m(v.data(), D, D * D);
    Eigen::Map<RowMatrix>(out.data(), D, D * D) = u * m;
  } else if (leg == 2) {
    Eigen::Map<const RowMatrix> m(v.data(), D * D, D);
    Eigen::Map<RowMatrix>(out.data(), D * D, D) = m * u.transpose();
  } else {
    for (int a = 0; a < D; ++a) {
      Eigen::Map<const RowMatrix> m(v.data() + a * D * D, D, D);
      Eigen::Map<RowMatrix>(out.data() + a * D * D, D, D) = u * m;
    }
  }
  return out;
}

Vector rotate(const Vector& psi, int D, const std::array<const Matrix*, 3>& u) {
  Vector out = psi;
  for (int leg = 0; leg < 3; ++leg) {
    if (u[leg] != nullptr) out = apply_on_leg(out, D, leg, *u[leg]);
  }
  return out;
}

std::array<const Matrix*, 3> all_of(const std::array<UnitaryOp, 3>& u) {
  return {&u[0].matrix(), &u[1].matrix(), &u[2].matrix()};
}

Vector node_product(const Layout& L, const std::array<Vector, 3>& src) {
  const Vector s = kron(kron(src[0], src[1]), src[2]);
  Vector out(L.N);
  for (int i = 0; i < L.N; ++i) out(L.node_of_source[i]) = s(i);
  return out;
}

Vector to_source_order(const Layout& L, const Vector& node) {
  Vector out(L.N);
  for (int i = 0; i < L.N; ++i) out(i) = node(L.node_of_source[i]);
  return out;
}

// Unnormalized <other sources | psi~> for `slot`; psi~ given in source order.
Vector partial_contraction(const Vector& t, int D, const std::array<Vector, 3>& src, int slot) {
  switch (slot) {
    case 0: {
      Eigen::Map<const RowMatrix> m(t.data(), D, D * D);
      return m * kron(src[1], src[2]).conjugate();
    }
    case 1: {
      Vector v = Vector::Zero(D);
      for (int a = 0; a < D; ++a) {
        Eigen::Map<const RowMatrix> m(t.data() + a * D * D, D, D);
        v += std::conj(src[0](a)) * (m * src[2].conjugate());
      }
      return v;
    }
    default: {
      Eigen::Map<const RowMatrix> m(t.data(), D * D, D);
      return m.transpose() * kron(src[0], src[1]).conjugate();
    }
  }
}

void check_target(const PureState& target, int d) {
  const int D = d * d;
  if (target.parties() != 3 || target.dims()[0] != D || target.dims()[1] != D || target.dims()[2] != D) {
    std::ostringstream os;
    os << "see-saw target must have three parties of dimension d^2 = " << D << " (embed it first)";
    throw std::invalid_argument(os.str());
  }
}

std::array<Vector, 3> amplitudes_of(const std::array<PureState, 3>& s) {
  return {s[0].amplitudes(), s[1].amplitudes(), s[2].amplitudes()};
}

int source_dim_of(const std::array<PureState, 3>& s) { return s[0].dims().at(0); }

int resolve_threads(int requested, int restarts) {
  int n = requested;
  if (n <= 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TRINET_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0) n = cap;
    }
  }
  return std::clamp(n, 1, std::max(1, restarts));
}

}  // namespace

void SeesawConfig::validate() const {
  if (d < 1) throw std::invalid_argument("SeesawConfig: d must be positive");
  if (restarts < 1) throw std::invalid_argument("SeesawConfig: restarts must be at least 1");
  if (max_iterations < 1) throw std::invalid_argument("SeesawConfig: maxIterations must be at least 1");
  if (!(convergence_tol > 0.0)) throw std::invalid_argument("SeesawConfig: convergenceTol must be positive");
}

double objective(const PureState& target, const std::array<PureState, 3>& sources,
                 const std::array<UnitaryOp, 3>& unitaries) {
  const int d = source_dim_of(sources);
  check_target(target, d);
  const Layout L(d);
  const Vector rotated = rotate(target.amplitudes(), L.D, all_of(unitaries));
  return std::abs(node_product(L, amplitudes_of(sources)).dot(rotated));
}

PureState optimal_source_state(const PureState& target, const std::array<PureState, 3>& sources,
                               const std::array<UnitaryOp, 3>& unitaries, SourceSlot slot) {
  const int d = source_dim_of(sources);
  check_target(target, d);
  const Layout L(d);
  const Vector t = to_source_order(L, rotate(target.amplitudes(), L.D, all_of(unitaries)));
  const Vector v = partial_contraction(t, L.D, amplitudes_of(sources), static_cast<int>(slot));
  const double n = v.norm();
  if (!(n > kDegenerateNorm)) throw DegenerateUpdate("optimal_source_state: partial inner product vanishes");
  return PureState::normalized(v, {d, d});
}

Matrix node_reduced_operator(const PureState& target, const std::array<PureState, 3>& sources,
                             const std::array<UnitaryOp, 3>& unitaries, Node node) {
  const int d = source_dim_of(sources);
  check_target(target, d);
  const Layout L(d);
  auto u = all_of(unitaries);
  const int leg = static_cast<int>(node);
  u[leg] = nullptr;
  const Vector partial = rotate(target.amplitudes(), L.D, u);
  const Vector phi = node_product(L, amplitudes_of(sources));
  return leg_matrix(partial, L.D, leg) * leg_matrix(phi, L.D, leg).adjoint();
}

UnitaryUpdate optimal_unitary(const Matrix& rhoA) {
  if (rhoA.rows() != rhoA.cols() || rhoA.rows() == 0) {
    throw std::invalid_argument("optimal_unitary: expected a non-empty square matrix");
  }
  Eigen::JacobiSVD<Matrix> svd(rhoA, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return UnitaryUpdate{UnitaryOp(svd.matrixV() * svd.matrixU().adjoint()), svd.singularValues().sum()};
}

SeesawResult run_restart(const PureState& target, const SeesawConfig& cfg, int restart_index) {
  cfg.validate();
  check_target(target, cfg.d);
  const Layout L(cfg.d);
  const Vector& psi = target.amplitudes();
  Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(restart_index));

  for (;;) {
    std::array<Vector, 3> src;
    for (auto& s : src) s = haar_state(rng, {cfg.d, cfg.d}).amplitudes();
    std::array<Matrix, 3> u;
    for (auto& m : u) m = haar_unitary(rng, L.D).matrix();

    auto current_objective = [&] {
      return std::abs(node_product(L, src).dot(rotate(psi, L.D, {&u[0], &u[1], &u[2]})));
    };

    std::vector<double> trace{current_objective()};
    int iterations = 0;
    bool converged = false;
    double previous = trace.back();
    bool degenerate = false;

    for (int sweep = 1; sweep <= cfg.max_iterations; ++sweep) {
      const Vector t = to_source_order(L, rotate(psi, L.D, {&u[0], &u[1], &u[2]}));
      for (int slot = 0; slot < 3 && !degenerate; ++slot) {
        Vector v = partial_contraction(t, L.D, src, slot);
        const double n = v.norm();
        if (!(n > kDegenerateNorm)) {
          degenerate = true;
          break;
        }
        src[slot] = v / n;
        trace.push_back(current_objective());
      }
      if (degenerate) break;

      const Vector phi = node_product(L, src);
      for (int leg = 0; leg < 3; ++leg) {
        std::array<const Matrix*, 3> others = {&u[0], &u[1], &u[2]};
        others[leg] = nullptr;
        const Vector partial = rotate(psi, L.D, others);
        const Matrix rho = leg_matrix(partial, L.D, leg) * leg_matrix(phi, L.D, leg).adjoint();
        u[leg] = optimal_unitary(rho).unitary.matrix();
        trace.push_back(current_objective());
      }

      iterations = sweep;
      const double now = trace.back();
      if (std::abs(now - previous) < cfg.convergence_tol) {
        converged = true;
        break;
      }
      previous = now;
    }
    // Probability-zero event: draw a fresh starting point from the same stream.
    if (degenerate) continue;

    std::array<PureState, 3> sources = {PureState::normalized(src[0], {cfg.d, cfg.d}),
                                        PureState::normalized(src[1], {cfg.d, cfg.d}),
                                        PureState::normalized(src[2], {cfg.d, cfg.d})};
    PureTriangleDecomposition best{
        sources, {UnitaryOp(u[0]).adjoint(), UnitaryOp(u[1]).adjoint(), UnitaryOp(u[2]).adjoint()}};
    const double f = trace.back();
    return SeesawResult{f * f, std::move(best), iterations, std::move(trace), converged, restart_index, {f * f}, {iterations}};
  }
}

SeesawResult optimize_overlap(const PureState& target, const SeesawConfig& cfg) {
  cfg.validate();
  check_target(target, cfg.d);

  std::vector<std::optional<SeesawResult>> outcomes(cfg.restarts);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.restarts; i = next++) outcomes[i] = run_restart(target, cfg, i);
  };
  const int nthreads = resolve_threads(cfg.threads, cfg.restarts);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }

  int best = 0;
  for (int i = 1; i < cfg.restarts; ++i) {
    if (outcomes[i]->mu_squared > outcomes[best]->mu_squared) best = i;
  }
  SeesawResult out = std::move(*outcomes[best]);
  out.restart_mu_squared.clear();
  out.restart_iterations.clear();
  for (const auto& o : outcomes) {
    out.restart_mu_squared.push_back(o->mu_squared);
    out.restart_iterations.push_back(o->iterations);
  }
  return out;
}

}  // namespace trinet::seesaw
