#include "stretchlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "stretchlab/error.hpp"
#include "stretchlab/parallel.hpp"

namespace stretchlab {

std::vector<double> curve_lengths(const ShearStructure& s, const std::vector<Curve>& curves) {
  const bool needs_rep = std::any_of(curves.begin(), curves.end(), [](const Curve& c) {
    return !std::holds_alternative<CombinatorialLoop>(c);
  });
  HolonomyRep rep;
  if (needs_rep) rep = shear_to_holonomy_rep(s);
  return parallel_map<double>(curves.size(), [&](std::size_t i) {
    const Curve& c = curves[i];
    if (std::holds_alternative<CombinatorialLoop>(c)) return curve_length(s, c);
    const std::string word = std::holds_alternative<Slope>(c)
                                 ? slope_word(std::get<Slope>(c)).letters
                                 : std::get<FreeWord>(c).letters;
    const double tr = std::abs(evaluate_word(rep, word).trace());
    if (tr < 2.0 - kParabolicTol) {
      throw StretchError(ErrorKind::EllipticHolonomy, "elliptic holonomy for " + to_string(c));
    }
    return trace_to_length(tr);
  });
}

std::vector<Curve> slope_curves(int max_complexity) {
  std::vector<Curve> out;
  for (const Slope& s : enumerate_slopes(max_complexity)) out.emplace_back(s);
  return out;
}

std::vector<Curve> word_curves(int max_length) {
  std::vector<Curve> out;
  for (const FreeWord& w : enumerate_conjugacy_classes(max_length)) out.emplace_back(w);
  return out;
}

RatioReport k_lower_bound(const ShearStructure& g, const ShearStructure& h,
                          const std::vector<Curve>& curves) {
  if (!(g.triangulation() == h.triangulation())) {
    throw StretchError(ErrorKind::InvalidArgument, "structures live on different triangulations");
  }
  if (curves.empty()) throw StretchError(ErrorKind::InvalidArgument, "empty curve set");
  const auto lg = curve_lengths(g, curves);
  const auto lh = curve_lengths(h, curves);
  RatioReport report;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (lg[i] == 0.0 && lh[i] == 0.0) continue;
    if (lg[i] == 0.0 || lh[i] == 0.0) {
      throw StretchError(ErrorKind::ZeroLength,
                         "curve " + to_string(curves[i]) + " is peripheral on one side only");
    }
    report.table.push_back(
        {curves[i], to_string(curves[i]), lg[i], lh[i], std::log(lh[i] / lg[i])});
  }
  if (report.table.empty()) {
    throw StretchError(ErrorKind::InvalidArgument, "all curves are peripheral");
  }
  std::stable_sort(report.table.begin(), report.table.end(),
                   [](const RatioRow& x, const RatioRow& y) { return x.log_ratio > y.log_ratio; });
  report.k_lower = report.table.front().log_ratio;
  report.best_curve = report.table.front().id;
  return report;
}

RatioReport k_estimate(const ShearStructure& g, const ShearStructure& h,
                       const std::vector<int>& schedule) {
  if (schedule.empty()) throw StretchError(ErrorKind::InvalidArgument, "empty sweep schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) {
      throw StretchError(ErrorKind::InvalidArgument, "sweep schedule must be strictly increasing");
    }
  }
  RatioReport previous, current;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    previous = std::move(current);
    current = k_lower_bound(g, h, slope_curves(schedule[i]));
  }
  current.levels = schedule;
  current.stabilized = schedule.size() >= 2 && previous.best_curve == current.best_curve &&
                       std::abs(previous.k_lower - current.k_lower) <= 1e-10;
  return current;
}

std::vector<double> to_shear_coords(const IdealTriangulation& tri, const TangentCovector& c) {
  const auto basis = completeness_basis(tri);
  std::vector<double> out(tri.edge_count(), 0.0);
  for (std::size_t k = 0; k < basis.size() && k < c.components.size(); ++k) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c.components[k] * basis[k][i];
  }
  return out;
}

namespace {

ShearStructure moved(const ShearStructure& g, const std::vector<double>& direction, double t) {
  std::vector<double> shears = g.shears();
  for (std::size_t i = 0; i < shears.size(); ++i) shears[i] += t * direction[i];
  return {g.triangulation(), std::move(shears)};
}

}  // namespace

TangentCovector grad_log_length(const ShearStructure& g, const Curve& c, double step,
                                double weight) {
  if (!(weight > 0.0)) throw StretchError(ErrorKind::InvalidArgument, "weight must be positive");
  if (curve_length(g, c) == 0.0) {
    throw StretchError(ErrorKind::ZeroLength, to_string(c) + " has zero length");
  }
  TangentCovector out;
  for (const auto& u : completeness_basis(g.triangulation())) {
    const double up = curve_length(moved(g, u, step), c);
    const double down = curve_length(moved(g, u, -step), c);
    out.components.push_back(std::log(up / down) / (2.0 * step));
  }
  return out;
}

namespace {

using Point = std::array<double, 2>;

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double outside_distance(const std::vector<Point>& hull, const Point& p) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::hypot(p[0] - hull[0][0], p[1] - hull[0][1]);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
    // counterclockwise: the interior is on the left, outward normal on the right
    worst = std::max(worst, -cross(a, b, p) / len);
  }
  return worst;
}

CloudReport convex_cloud(const ShearStructure& g, int max_complexity) {
  if (max_complexity < 2) {
    throw StretchError(ErrorKind::InvalidArgument, "gradient cloud needs N >= 2");
  }
  if (!g.triangulation().is_standard_torus()) {
    throw StretchError(ErrorKind::NotStandardTorus, "gradient cloud is defined on the punctured torus");
  }
  CloudReport report;
  report.slopes = enumerate_slopes(max_complexity);
  report.points = parallel_map<Point>(report.slopes.size(), [&](std::size_t i) {
    const auto c = grad_log_length(g, report.slopes[i]).components;
    return Point{c[0], c[1]};
  });
  const auto hull = convex_hull(report.points);
  report.origin_margin = -outside_distance(hull, {0.0, 0.0});
  report.origin_interior = report.origin_margin > kHullTol;

  const auto margins = parallel_map<double>(report.points.size(), [&](std::size_t i) {
    std::vector<Point> rest;
    rest.reserve(report.points.size() - 1);
    for (std::size_t j = 0; j < report.points.size(); ++j) {
      if (j != i) rest.push_back(report.points[j]);
    }
    return outside_distance(convex_hull(std::move(rest)), report.points[i]);
  });
  report.min_vertex_margin = *std::min_element(margins.begin(), margins.end());
  report.all_vertices = report.min_vertex_margin > -kHullTol;
  return report;
}

double antisymmetry_residual(const ShearStructure& g, const Slope& s, const Slope& t,
                             double step) {
  const HolonomyRep rep = shear_to_holonomy_rep(g);
  auto rate = [&](const Slope& along, const Slope& measured) {
    const FreeWord w = slope_word(measured);
    return (twisted_word_length(rep, along, step, w) - twisted_word_length(rep, along, -step, w)) /
           (2.0 * step);
  };
  return rate(s, t) + rate(t, s);
}

namespace {

// Solves the small dense system m x = rhs; false when singular.
bool solve(std::vector<std::vector<double>> m, std::vector<double> rhs, std::vector<double>& x) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    if (std::abs(m[piv][c]) < 1e-14) return false;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

// Least-norm v with <g_i, v> >= 1 for all rows, by enumerating active sets of
// size <= dim. Empty when infeasible.
std::vector<double> min_norm_ascent(const std::vector<std::vector<double>>& grads) {
  const std::size_t m = grads.size();
  const std::size_t dim = grads.front().size();
  std::vector<double> best;
  double best_norm = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) active.push_back(i);
    }
    if (active.size() > dim) continue;
    std::vector<std::vector<double>> gram(active.size(), std::vector<double>(active.size()));
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = 0; j < active.size(); ++j) {
        gram[i][j] = dot(grads[active[i]], grads[active[j]]);
      }
    }
    std::vector<double> lambda;
    if (!solve(gram, std::vector<double>(active.size(), 1.0), lambda)) continue;
    if (std::any_of(lambda.begin(), lambda.end(), [](double l) { return l < -1e-12; })) continue;
    std::vector<double> v(dim, 0.0);
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t k = 0; k < dim; ++k) v[k] += lambda[i] * grads[active[i]][k];
    }
    const bool feasible = std::all_of(grads.begin(), grads.end(),
                                      [&](const auto& g) { return dot(g, v) >= 1.0 - 1e-9; });
    const double norm = dot(v, v);
    if (feasible && norm < best_norm) {
      best_norm = norm;
      best = std::move(v);
    }
  }
  return best;
}

constexpr std::size_t kMaxActive = 6;
constexpr int kMaxHalvings = 10;

}  // namespace

MarchResult stretch_march(const ShearStructure& g, const ShearStructure& h,
                          const MarchOptions& options) {
  if (!(options.step > 0.0)) throw StretchError(ErrorKind::InvalidArgument, "step must be > 0");
  const auto curves = slope_curves(options.slope_bound);
  const auto basis = completeness_basis(g.triangulation());

  MarchResult result;
  ShearStructure current = g;
  RatioReport report = k_lower_bound(current, h, curves);
  result.initial_k = report.k_lower;
  std::vector<double> history{report.k_lower};
  if (report.k_lower < options.step) return result;

  for (int i = 1; i <= options.max_steps; ++i) {
    std::vector<std::vector<double>> grads;
    for (const RatioRow& row : report.table) {
      if (grads.size() == kMaxActive || row.log_ratio < report.k_lower - options.step) break;
      grads.push_back(grad_log_length(current, row.curve).components);
    }
    std::vector<double> v = min_norm_ascent(grads);
    if (v.empty()) {
      const auto& g0 = grads.front();
      v = g0;
      for (double& x : v) x /= dot(g0, g0);
    }
    std::vector<double> direction(current.shears().size(), 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t e = 0; e < direction.size(); ++e) direction[e] += v[k] * basis[k][e];
    }

    double trial = options.step;
    ShearStructure next = moved(current, direction, trial);
    RatioReport next_report = k_lower_bound(next, h, curves);
    for (int halving = 0; halving < kMaxHalvings && next_report.k_lower > report.k_lower; ++halving) {
      trial /= 2.0;
      next = moved(current, direction, trial);
      next_report = k_lower_bound(next, h, curves);
    }
    current = std::move(next);
    report = std::move(next_report);
    history.push_back(report.k_lower);
    result.steps.push_back({i, current.shears(), report.k_lower, report.best_curve});

    if (report.k_lower < options.step) {
      result.status = MarchStatus::Converged;
      return result;
    }
    if (i >= 5 && history[i - 5] - history[i] < options.step / 10.0) {
      result.status = MarchStatus::NoProgress;
      return result;
    }
  }
  result.status = MarchStatus::MaxSteps;
  return result;
}

std::pair<double, double> asymmetry_probe(const ShearStructure& g, const ShearStructure& h,
                                          int max_complexity) {
  const auto curves = slope_curves(max_complexity);
  return {k_lower_bound(g, h, curves).k_lower, k_lower_bound(h, g, curves).k_lower};
}

}  // namespace stretchlab
