#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "stretchlab/shear.hpp"
#include "stretchlab/surface.hpp"

namespace stretchlab {

// Lengths of many curves on one structure, evaluated in parallel; the
// torus holonomy representation is built once.
std::vector<double> curve_lengths(const ShearStructure& s, const std::vector<Curve>& curves);

std::vector<Curve> slope_curves(int max_complexity);
std::vector<Curve> word_curves(int max_length);

struct RatioRow {
  Curve curve;
  std::string id;
  double len_g = 0.0;
  double len_h = 0.0;
  double log_ratio = 0.0;
};

// Table sorted by descending log ratio; ties keep the input (canonical) order.
struct RatioReport {
  std::vector<RatioRow> table;
  std::string best_curve;
  double k_lower = 0.0;
  bool stabilized = false;
  std::vector<int> levels;

  const RatioRow& best() const { return table.front(); }
};

// Max of log(l_h / l_g) over the given curves. Peripheral classes (length 0
// on both sides) are left out of the table. Throws InvalidArgument when the
// triangulations differ or no non-peripheral curve is given.
RatioReport k_lower_bound(const ShearStructure& g, const ShearStructure& h,
                          const std::vector<Curve>& curves);

// k_lower_bound over slopes |p| + |q| <= N for each N of the schedule;
// stabilized when the best curve and K (within 1e-10) agree on the last two
// levels.
RatioReport k_estimate(const ShearStructure& g, const ShearStructure& h,
                       const std::vector<int>& schedule);

// Covector in the orthonormal completeness-hyperplane basis of the
// triangulation.
struct TangentCovector {
  std::vector<double> components;
};

// Same covector as a vector in shear coordinates.
std::vector<double> to_shear_coords(const IdealTriangulation& tri, const TangentCovector& c);

inline constexpr double kGradientStep = 1e-5;

// Central differences of log length along the hyperplane basis. A positive
// weight scales the measured curve; log-derivatives ignore it. Throws
// ZeroLength for peripheral classes.
TangentCovector grad_log_length(const ShearStructure& g, const Curve& c,
                                double step = kGradientStep, double weight = 1.0);

struct CloudReport {
  std::vector<Slope> slopes;
  std::vector<std::array<double, 2>> points;
  bool origin_interior = false;
  bool all_vertices = false;
  double origin_margin = 0.0;       // inward distance of 0 from the hull boundary
  double min_vertex_margin = 0.0;   // min distance of a point outside the hull of the rest
};

inline constexpr double kHullTol = 1e-8;

// Counterclockwise hull without collinear points (Andrew's monotone chain).
std::vector<std::array<double, 2>> convex_hull(std::vector<std::array<double, 2>> pts);

// Signed distance of p outside a counterclockwise convex polygon (negative
// inside).
double outside_distance(const std::vector<std::array<double, 2>>& hull,
                        const std::array<double, 2>& p);

// d log length of every slope |p| + |q| <= N at g on the punctured torus,
// with hull verdicts at tolerance kHullTol.
CloudReport convex_cloud(const ShearStructure& g, int max_complexity);

inline constexpr double kTwistStep = 1e-4;

// E_s(l_t) + E_t(l_s) by central differences of unit-speed twists.
double antisymmetry_residual(const ShearStructure& g, const Slope& s, const Slope& t,
                             double step = kTwistStep);

enum class MarchStatus { Converged, NoProgress, MaxSteps };

struct MarchStep {
  int index = 0;
  std::vector<double> shears;
  double k_lower = 0.0;
  std::string best_curve;
};

struct MarchResult {
  MarchStatus status = MarchStatus::Converged;
  double initial_k = 0.0;
  std::vector<MarchStep> steps;
};

struct MarchOptions {
  double step = 0.01;
  int max_steps = 500;
  int slope_bound = 20;
};

// Descent surrogate for a stretch path from g toward h. Each move raises the
// log length of every near-maximal curve at unit rate (min-norm direction;
// for a single maximizer alpha this is grad / |grad|^2), scaled by the step,
// halving the step when K would increase. Stops once K_lower(g_i, h) < step.
MarchResult stretch_march(const ShearStructure& g, const ShearStructure& h,
                          const MarchOptions& options);

// (K_lower(g, h), K_lower(h, g)) over slopes |p| + |q| <= N.
std::pair<double, double> asymmetry_probe(const ShearStructure& g, const ShearStructure& h,
                                          int max_complexity);

}  // namespace stretchlab
