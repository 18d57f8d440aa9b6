#include "trinet/criteria.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trinet/states.hpp"

namespace trinet::criteria {

namespace {

void require_three_parties(int parties, const char* what) {
  if (parties != 3) {
    std::ostringstream os;
    os << what << ": expected exactly three parties, got " << parties;
    throw std::invalid_argument(os.str());
  }
}

const char* kPartyNames[3] = {"A", "B", "C"};

// Isometry onto the support of a Hermitian PSD matrix.
Matrix support_isometry(const DensityState& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.matrix());
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > kRankRelTol * top) keep.push_back(i);
  }
  Matrix v(s.dim(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) v.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  return v;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::consistent: return "consistent";
    case Status::violated: return "violated";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "consistent") return Status::consistent;
  if (s == "violated") return Status::violated;
  if (s == "inconclusive") return Status::inconclusive;
  throw std::invalid_argument("unknown verdict status '" + s + "'");
}

const char* to_string(MuProvenance p) {
  return p == MuProvenance::seesaw_lower_bound ? "seesaw-lower-bound" : "analytical-upper-bound";
}

const char* to_string(SeparabilityCertificate c) {
  switch (c) {
    case SeparabilityCertificate::diagonal_product_basis: return "diagonal-product-basis";
    case SeparabilityCertificate::product_support: return "product";
    case SeparabilityCertificate::ppt_low_dimension: return "ppt-low-dimension";
    case SeparabilityCertificate::entangled: return "entangled";
    case SeparabilityCertificate::undecided: return "undecided";
  }
  return "?";
}

double Verdict::number(const std::string& name) const {
  for (const auto& [k, v] : numbers) {
    if (k == name) return v;
  }
  throw std::out_of_range("verdict has no number named '" + name + "'");
}

bool Verdict::has_number(const std::string& name) const {
  for (const auto& kv : numbers) {
    if (kv.first == name) return true;
  }
  return false;
}

Verdict make_verdict(Status status, std::string detail, std::vector<std::pair<std::string, double>> numbers) {
  if (status == Status::violated && numbers.empty()) {
    throw std::logic_error("violated verdicts must carry at least one named number");
  }
  return Verdict{status, std::move(detail), std::move(numbers)};
}

void RankProfile::validate() const {
  if (d < 1) throw std::invalid_argument("RankProfile: source dimension d must be positive");
  const long long d2 = static_cast<long long>(d) * d;
  auto check = [](int r, long long max, const char* name) {
    if (r < 1 || r > max) {
      std::ostringstream os;
      os << "RankProfile: " << name << " = " << r << " outside [1, " << max << "]";
      throw std::invalid_argument(os.str());
    }
  };
  check(global_rank, d2 * d2 * d2, "global rank");
  check(rank_bc, d2 * d2, "rank of tr_A");
  check(rank_ac, d2 * d2, "rank of tr_B");
  check(rank_ab, d2 * d2, "rank of tr_C");
  check(rank_a, d2, "rank of tr_BC");
  check(rank_b, d2, "rank of tr_AC");
  check(rank_c, d2, "rank of tr_AB");
}

double tmi(const DensityState& s) {
  require_three_parties(s.parties(), "tmi");
  auto h = [&](std::vector<int> keep) { return von_neumann_entropy(partial_trace(s, std::move(keep))); };
  return von_neumann_entropy(s) + h({0}) + h({1}) + h({2}) - h({0, 1}) - h({0, 2}) - h({1, 2});
}

Verdict obs1_check(const DensityState& s, double threshold) {
  const double i3 = tmi(s);
  std::ostringstream os;
  os << "I3(A:B:C) = " << i3 << " bits";
  if (std::abs(i3) > threshold) {
    os << "; nonzero tripartite mutual information excludes independent sources";
    return make_verdict(Status::violated, os.str(), {{"I3", i3}});
  }
  return make_verdict(Status::consistent, os.str(), {{"I3", i3}});
}

RankProfile rank_profile_of(const DensityState& s, int d) {
  require_three_parties(s.parties(), "rank_profile_of");
  const Dims& dims = s.dims();
  if (dims[0] != dims[1] || dims[1] != dims[2]) {
    throw std::invalid_argument("rank_profile_of: all three parties must have equal dimension");
  }
  if (d == 0) {
    d = 1;
    while (d * d < dims[0]) ++d;
  } else if (d * d < dims[0]) {
    throw std::invalid_argument("rank_profile_of: party dimension exceeds d^2");
  }
  RankProfile p;
  p.d = d;
  p.global_rank = numerical_rank(s);
  p.rank_bc = numerical_rank(partial_trace(s, {1, 2}));
  p.rank_ac = numerical_rank(partial_trace(s, {0, 2}));
  p.rank_ab = numerical_rank(partial_trace(s, {0, 1}));
  p.rank_a = numerical_rank(partial_trace(s, {0}));
  p.rank_b = numerical_rank(partial_trace(s, {1}));
  p.rank_c = numerical_rank(partial_trace(s, {2}));
  return p;
}

RankFeasibility rank_feasibility(const RankProfile& p) {
  p.validate();
  const int d = p.d;
  const int d2 = d * d;
  RankFeasibility out;
  out.assignments_total = 1;
  for (int i = 0; i < 3; ++i) out.assignments_total *= d2;
  for (int i = 0; i < 6; ++i) out.assignments_total *= d;

  long long examined = 0;
  RankAssignment r;
  for (r.r_alpha = 1; r.r_alpha <= d2; ++r.r_alpha)
  for (r.r_beta = 1; r.r_beta <= d2; ++r.r_beta)
  for (r.r_gamma = 1; r.r_gamma <= d2; ++r.r_gamma)
  for (r.r_gamma_a = 1; r.r_gamma_a <= d; ++r.r_gamma_a)
  for (r.r_gamma_b = 1; r.r_gamma_b <= d; ++r.r_gamma_b)
  for (r.r_alpha_b = 1; r.r_alpha_b <= d; ++r.r_alpha_b)
  for (r.r_alpha_c = 1; r.r_alpha_c <= d; ++r.r_alpha_c)
  for (r.r_beta_c = 1; r.r_beta_c <= d; ++r.r_beta_c)
  for (r.r_beta_a = 1; r.r_beta_a <= d; ++r.r_beta_a) {
    ++examined;
    const bool ok = p.global_rank == r.r_alpha * r.r_beta * r.r_gamma &&
                    p.rank_bc == r.r_alpha * r.r_beta_c * r.r_gamma_b &&
                    p.rank_ac == r.r_alpha_c * r.r_beta * r.r_gamma_a &&
                    p.rank_ab == r.r_alpha_b * r.r_beta_a * r.r_gamma &&
                    p.rank_a == r.r_beta_a * r.r_gamma_a &&
                    p.rank_b == r.r_alpha_b * r.r_gamma_b &&
                    p.rank_c == r.r_alpha_c * r.r_beta_c;
    if (ok) {
      out.assignment = r;
      out.assignments_examined = examined;
      std::ostringstream os;
      os << "rank equations satisfied by (r_alpha, r_beta, r_gamma) = (" << r.r_alpha << ", " << r.r_beta << ", "
         << r.r_gamma << ")";
      out.verdict = make_verdict(Status::consistent, os.str(),
                                 {{"assignments_examined", static_cast<double>(examined)},
                                  {"assignments_total", static_cast<double>(out.assignments_total)}});
      return out;
    }
  }
  out.assignments_examined = examined;
  std::ostringstream os;
  os << "no assignment among all " << examined << " candidates satisfies the rank equations";
  out.verdict = make_verdict(Status::violated, os.str(),
                             {{"assignments_examined", static_cast<double>(examined)},
                              {"assignments_total", static_cast<double>(out.assignments_total)},
                              {"satisfying_assignments", 0.0},
                              {"global_rank", static_cast<double>(p.global_rank)}});
  return out;
}

SeparabilityCertificate certify_separable(const DensityState& two_party) {
  if (two_party.parties() != 2) throw std::invalid_argument("certify_separable: expected a two-party state");
  const Matrix& m = two_party.matrix();
  Matrix off = m;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() <= kHermitianTol) return SeparabilityCertificate::diagonal_product_basis;

  const Matrix vx = support_isometry(partial_trace(two_party, {0}));
  const Matrix vy = support_isometry(partial_trace(two_party, {1}));
  const int rx = static_cast<int>(vx.cols());
  const int ry = static_cast<int>(vy.cols());
  if (rx == 1 || ry == 1) return SeparabilityCertificate::product_support;
  if (rx * ry > 6) return SeparabilityCertificate::undecided;

  // Restrict to supp(rho_X) (x) supp(rho_Y), which contains the support of rho.
  const Matrix v = kron(vx, vy);
  Matrix reduced = v.adjoint() * m * v;
  reduced = (0.5 * (reduced + reduced.adjoint())).eval();
  reduced /= reduced.trace().real();
  const DensityState compressed(reduced, {rx, ry});
  return ppt_check(compressed, Bipartition{{0}}) ? SeparabilityCertificate::ppt_low_dimension
                                                 : SeparabilityCertificate::entangled;
}

Verdict obs2_pure_check(const PureState& s, double threshold) {
  require_three_parties(s.parties(), "obs2_pure_check");
  const DensityState rho(s);
  std::vector<std::pair<std::string, double>> numbers;
  std::ostringstream detail;
  bool all_product = true;
  bool violated = false;

  for (int x = 0; x < 3; ++x) {
    const int y = (x + 1) % 3;
    const int z = (x + 2) % 3;
    const std::string cut = std::string(kPartyNames[x]) + "|" + kPartyNames[std::min(y, z)] + kPartyNames[std::max(y, z)];
    const double e = von_neumann_entropy(partial_trace(rho, {x}));
    numbers.emplace_back("E_" + cut, e);
    if (e <= threshold) continue;
    all_product = false;

    const auto cert_xy = certify_separable(partial_trace(rho, {x, y}));
    const auto cert_xz = certify_separable(partial_trace(rho, {x, z}));
    auto separable = [](SeparabilityCertificate c) {
      return c != SeparabilityCertificate::entangled && c != SeparabilityCertificate::undecided;
    };
    const std::string pxy = std::string(kPartyNames[std::min(x, y)]) + kPartyNames[std::max(x, y)];
    const std::string pxz = std::string(kPartyNames[std::min(x, z)]) + kPartyNames[std::max(x, z)];
    numbers.emplace_back(cut + ".separable_" + pxy, separable(cert_xy) ? 1.0 : 0.0);
    numbers.emplace_back(cut + ".separable_" + pxz, separable(cert_xz) ? 1.0 : 0.0);
    detail << cut << ": E = " << e << " bits, marginal " << pxy << " " << to_string(cert_xy) << ", marginal " << pxz
           << " " << to_string(cert_xz) << "; ";
    if (separable(cert_xy) && separable(cert_xz)) violated = true;
  }

  if (all_product) return make_verdict(Status::consistent, "product across every bipartition", std::move(numbers));
  if (violated) {
    detail << "entanglement across a cut with separable two-party marginals breaks additivity";
    return make_verdict(Status::violated, detail.str(), std::move(numbers));
  }
  detail << "no bipartition admits a separability certificate";
  return make_verdict(Status::inconclusive, detail.str(), std::move(numbers));
}

Verdict gme_qubit_check(const PureState& s) {
  require_three_parties(s.parties(), "gme_qubit_check");
  const DensityState rho(s);
  const int ra = numerical_rank(partial_trace(rho, {0}));
  const int rb = numerical_rank(partial_trace(rho, {1}));
  const int rc = numerical_rank(partial_trace(rho, {2}));
  std::vector<std::pair<std::string, double>> numbers = {
      {"rank_A", static_cast<double>(ra)}, {"rank_B", static_cast<double>(rb)}, {"rank_C", static_cast<double>(rc)}};
  // For a pure state the Schmidt rank of X|YZ equals rank(rho_X).
  if (ra == 2 && rb == 2 && rc == 2) {
    return make_verdict(Status::violated,
                        "all single-party marginals have rank two: a genuinely entangled three-qubit state",
                        std::move(numbers));
  }
  return make_verdict(Status::consistent, "single-party ranks are not all two", std::move(numbers));
}

WitnessOp build_witness(PureState target, double muSquared, MuProvenance provenance) {
  if (!(muSquared >= 0.0 && muSquared <= 1.0)) {
    throw std::invalid_argument("build_witness: mu^2 must lie in [0, 1]");
  }
  return WitnessOp{muSquared, std::move(target), provenance};
}

WitnessValue evaluate_witness(const WitnessOp& w, const DensityState& s) {
  PureState target = w.target;
  if (target.dims() != s.dims()) {
    bool embeddable = target.dims().size() == s.dims().size();
    for (std::size_t k = 0; embeddable && k < s.dims().size(); ++k) embeddable = target.dims()[k] <= s.dims()[k];
    if (!embeddable) throw std::invalid_argument("evaluate_witness: target and state dimensions are incompatible");
    target = states::embed(target, s.dims());
  }
  const cplx fid = target.amplitudes().dot(s.matrix() * target.amplitudes());
  const double value = w.mu_squared - fid.real();
  WitnessValue out{value, false, ""};
  if (w.provenance == MuProvenance::analytical_upper_bound) {
    out.certified = value < 0.0;
    out.label = out.certified ? "certified: outside the correlated network with qubit sources"
                              : "no detection";
  } else {
    out.label = value < 0.0 ? "putative: mu^2 is a see-saw lower bound" : "putative: no detection";
  }
  return out;
}

}  // namespace trinet::criteria
