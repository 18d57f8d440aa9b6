#include "trinet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace trinet::bounds {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kNormalizationTol = 1e-8;

void check_schmidt_vector(const std::vector<double>& v, const char* which) {
  double sq = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0.0) throw std::invalid_argument(std::string(which) + " Schmidt vector has a negative entry");
    if (i > 0 && v[i] > v[i - 1] + 1e-15) {
      throw std::invalid_argument(std::string(which) + " Schmidt vector must be sorted non-increasing");
    }
    sq += v[i] * v[i];
  }
  if (std::abs(sq - 1.0) > kNormalizationTol) {
    std::ostringstream os;
    os << which << " Schmidt vector is not normalized (sum of squares " << sq << ")";
    throw std::invalid_argument(os.str());
  }
}

std::array<double, 4> pair_product(double x, double y) {
  std::array<double, 4> p = {std::cos(x) * std::cos(y), std::cos(x) * std::sin(y), std::sin(x) * std::cos(y),
                             std::sin(x) * std::sin(y)};
  for (double& v : p) v = std::abs(v);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

double dot_squared(const std::vector<double>& target, const std::array<double, 4>& itn) {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min<std::size_t>(target.size(), 4); ++i) s += target[i] * itn[i];
  return s * s;
}

std::vector<double> axis(double lo, double hi, int n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = 0.5 * (lo + hi);
    return v;
  }
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

struct Best {
  double value = -1.0;
  SourceAngles angles;
};

// Maximizes min over cuts on the product grid ax x bx x cx.
Best search(const std::array<std::vector<double>, 3>& target, const std::vector<double>& ax,
            const std::vector<double>& bx, const std::vector<double>& cx, bool symmetric) {
  // Cut A|BC depends on (b, c); B|AC on (a, c); C|AB on (a, b).
  auto table = [&](const std::vector<double>& u, const std::vector<double>& w, const std::vector<double>& t) {
    std::vector<double> out(u.size() * w.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) out[i * w.size() + j] = dot_squared(t, pair_product(u[i], w[j]));
    }
    return out;
  };
  const auto fa = table(bx, cx, target[0]);
  const auto fb = table(ax, cx, target[1]);
  const auto fc = table(ax, bx, target[2]);

  Best best;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    for (std::size_t j = 0; j < bx.size(); ++j) {
      if (symmetric && bx[j] > ax[i]) continue;
      const double vc = fc[i * bx.size() + j];
      if (vc <= best.value) continue;
      for (std::size_t k = 0; k < cx.size(); ++k) {
        if (symmetric && cx[k] > bx[j]) continue;
        const double v = std::min({fa[j * cx.size() + k], fb[i * cx.size() + k], vc});
        // Strict comparison keeps the lexicographically smallest angles on ties.
        if (v > best.value) {
          best.value = v;
          best.angles = {ax[i], bx[j], cx[k]};
        }
      }
    }
  }
  return best;
}

}  // namespace

double bipartite_overlap_bound(const std::vector<double>& targetCoeffs, const std::vector<double>& itnCoeffs) {
  check_schmidt_vector(targetCoeffs, "target");
  check_schmidt_vector(itnCoeffs, "network");
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(targetCoeffs.size(), itnCoeffs.size()); ++i) s += targetCoeffs[i] * itnCoeffs[i];
  return s * s;
}

std::array<double, 4> itn_cut_coefficients(const SourceAngles& angles, Cut cut) {
  switch (cut) {
    case Cut::A_BC: return pair_product(angles.b, angles.c);
    case Cut::B_AC: return pair_product(angles.a, angles.c);
    case Cut::C_AB: return pair_product(angles.a, angles.b);
  }
  throw std::invalid_argument("itn_cut_coefficients: unknown cut");
}

BoundResult overlap_upper_bound(const PureState& target, const BoundConfig& cfg) {
  if (target.parties() != 3) throw std::invalid_argument("overlap_upper_bound: target must have three parties");
  for (int d : target.dims()) {
    if (d > 4) {
      throw std::invalid_argument("overlap_upper_bound: only qubit sources are supported (party dimension <= 4)");
    }
  }
  if (cfg.grid < 2 || cfg.refine_grid < 2 || cfg.refine_rounds < 0 || !(cfg.refine_shrink > 1.0)) {
    throw std::invalid_argument("overlap_upper_bound: invalid grid configuration");
  }

  BoundResult out;
  for (int x = 0; x < 3; ++x) {
    std::vector<double> t = schmidt(target, Bipartition{{x}}).coefficients;
    t.resize(4, 0.0);
    out.target_coefficients[x] = t;
  }

  const auto full = axis(0.0, kQuarterPi, cfg.grid);
  Best best = search(out.target_coefficients, full, full, full, cfg.symmetric);

  // A window shrinks only once the best point is interior to it; otherwise it
  // slides with the same size.
  constexpr int kMaxSlides = 200;
  double side = kQuarterPi / cfg.refine_shrink;
  int slides = 0;
  for (int round = 0; round < cfg.refine_rounds;) {
    auto range = [&](double centre) {
      return std::pair{std::max(0.0, centre - side / 2), std::min(kQuarterPi, centre + side / 2)};
    };
    const auto ra = range(best.angles.a), rb = range(best.angles.b), rc = range(best.angles.c);
    const auto ax = axis(ra.first, ra.second, cfg.refine_grid);
    const auto bx = axis(rb.first, rb.second, cfg.refine_grid);
    const auto cx = axis(rc.first, rc.second, cfg.refine_grid);
    const Best local = search(out.target_coefficients, ax, bx, cx, cfg.symmetric);
    bool moved_to_edge = false;
    if (local.value > best.value) {
      best = local;
      auto interior_edge = [](double x, std::pair<double, double> r) {
        return (x == r.first && r.first > 0.0) || (x == r.second && r.second < kQuarterPi);
      };
      moved_to_edge = interior_edge(best.angles.a, ra) || interior_edge(best.angles.b, rb) ||
                      interior_edge(best.angles.c, rc);
    }
    if (moved_to_edge && slides < kMaxSlides) {
      ++slides;
    } else {
      side /= cfg.refine_shrink;
      ++round;
    }
  }
  out.value = best.value;
  out.angles = best.angles;
  return out;
}

}  // namespace trinet::bounds
