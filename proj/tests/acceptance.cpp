// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "stretchlab/error.hpp"
#include "stretchlab/hypgeom.hpp"
#include "stretchlab/io.hpp"
#include "stretchlab/metric.hpp"
#include "stretchlab/shear.hpp"
#include "stretchlab/traintrack.hpp"
#include "support.hpp"
#include "track_oracle.hpp"

using namespace stretchlab;
using testsupport::kSeed;
using testsupport::random_torus;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %2d %-28s %s  %s\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

void c1_completeness() {
  std::mt19937_64 rng(kSeed + 1);
  const auto puncture = puncture_loops(standard_torus_triangulation()).front();
  double worst_p = 0, worst_c = 0;
  for (int i = 0; i < 1000; ++i) {
    const ShearStructure s = random_torus(rng);
    worst_p = std::max(worst_p, std::abs(std::abs(holonomy_of_loop(s, puncture).trace()) - 2));
    const auto r = testsupport::oracle_rep(s.shears());
    worst_c = std::max({worst_c, std::abs(commutator_trace(shear_to_holonomy_rep(s)) + 2),
                        std::abs(testsupport::oracle_trace(r, "abAB") + 2)});
  }
  report(1, "completeness", worst_p <= 1e-9 && worst_c <= 1e-9,
         fmt("max ||tr P|-2|=%.2e max |tr[A,B]+2|=%.2e", worst_p, worst_c));
}

void c2_markov() {
  std::mt19937_64 rng(kSeed + 1);
  double worst = 0, worst_oracle = 0;
  for (int i = 0; i < 1000; ++i) {
    const ShearStructure s = random_torus(rng);
    const HolonomyRep h = shear_to_holonomy_rep(s);
    const double x = h.A.trace(), y = h.B.trace(), z = evaluate_word(h, "ab").trace();
    worst = std::max(worst, std::abs(x * x + y * y + z * z - x * y * z));
    const auto r = testsupport::oracle_rep(s.shears());
    worst_oracle = std::max({worst_oracle, std::abs(std::abs(x) - std::abs(r.a[0] + r.a[3])),
                             std::abs(std::abs(y) - std::abs(r.b[0] + r.b[3])),
                             std::abs(std::abs(z) - std::abs(testsupport::oracle_trace(r, "ab")))});
  }
  const ShearStructure zero(standard_torus_triangulation(), {0, 0, 0});
  const HolonomyRep h0 = shear_to_holonomy_rep(zero);
  const double t0 = std::max({std::abs(std::abs(h0.A.trace()) - 3), std::abs(std::abs(h0.B.trace()) - 3),
                              std::abs(std::abs(evaluate_word(h0, "ab").trace()) - 3)});
  const auto lengths = curve_lengths(zero, slope_curves(10));
  const double systole = *std::min_element(lengths.begin(), lengths.end());
  const double sys_err = std::abs(systole - 2 * std::acosh(1.5));
  report(2, "fricke-markov", worst <= 1e-9 && worst_oracle <= 1e-9 && t0 <= 1e-9 && sys_err <= 1e-9,
         fmt("max identity residual=%.2e oracle trace diff=%.2e systole err=%.2e", worst,
             worst_oracle, sys_err));
}

void c3_simple_sufficiency() {
  std::mt19937_64 rng(kSeed + 3);
  const auto slopes = slope_curves(30);
  const auto words = word_curves(8);
  int bad = 0;
  double worst = 0;
  std::string where;
  for (int i = 0; i < 25; ++i) {
    const ShearStructure g = random_torus(rng), h = random_torus(rng);
    const RatioReport rs = k_lower_bound(g, h, slopes);
    const RatioReport rw = k_lower_bound(g, h, words);
    const double d = std::abs(rs.k_lower - rw.k_lower);
    if (d > 1e-6) {
      ++bad;
      where += " pair" + std::to_string(i) + ":" + rs.best_curve + " vs " + rw.best_curve;
    }
    worst = std::max(worst, d);
  }
  report(3, "simple-curve sufficiency", bad == 0,
         fmt("%g/25 pairs differ, max |K_slopes-K_words|=%.2e", bad, worst) + where);
}

void c4_triangle_inequality() {
  std::mt19937_64 rng(kSeed + 4);
  const auto slopes = slope_curves(30);
  double worst = -1e300;
  for (int i = 0; i < 100; ++i) {
    const ShearStructure f = random_torus(rng), g = random_torus(rng), h = random_torus(rng);
    const double excess = k_lower_bound(f, h, slopes).k_lower -
                          k_lower_bound(f, g, slopes).k_lower - k_lower_bound(g, h, slopes).k_lower;
    worst = std::max(worst, excess);
  }
  report(4, "triangle inequality", worst <= 1e-12,
         fmt("max K(f,h)-K(f,g)-K(g,h)=%.3e", worst));
}

void c5_positivity() {
  std::mt19937_64 rng(kSeed + 5);
  const auto slopes = slope_curves(30);
  int bad = 0;
  double smallest = 1e300;
  for (int i = 0; i < 100; ++i) {
    const ShearStructure g = random_torus(rng), h = random_torus(rng);
    if (g == h) continue;
    const RatioReport r = k_lower_bound(g, h, slopes);
    // witness recomputed with the oracle matrices
    const std::string w = slope_word(std::get<Slope>(r.best().curve)).letters;
    const double lg = testsupport::oracle_length(testsupport::oracle_rep(g.shears()), w);
    const double lh = testsupport::oracle_length(testsupport::oracle_rep(h.shears()), w);
    if (!(r.k_lower > 0 && std::log(lh / lg) > 0 && std::abs(std::log(lh / lg) - r.k_lower) < 1e-9)) {
      ++bad;
    }
    smallest = std::min(smallest, r.k_lower);
  }
  report(5, "positivity", bad == 0, fmt("%g failures, min K_lower=%.4g", bad, smallest));
}

void c6_stretch_bound() {
  std::mt19937_64 rng(kSeed + 6);
  const auto slopes = slope_curves(30);
  double worst = -1e300, max_gap = 0;
  for (int i = 0; i < 20; ++i) {
    const ShearStructure g = random_torus(rng);
    for (double t : {0.1, 0.5, 1.0}) {
      const RatioReport r = k_lower_bound(g, stretch(g, t), slopes);
      for (const RatioRow& row : r.table) worst = std::max(worst, row.log_ratio - t);
      max_gap = std::max(max_gap, t - r.k_lower);
    }
  }
  report(6, "stretch lipschitz bound", worst <= 1e-9,
         fmt("max log-ratio - t=%.3e (gap t-K_lower up to %.3e, reported)", worst, max_gap));
}

HPoint sample_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  std::exponential_distribution<double> ex(0.7);
  const double x = ux(rng);
  return {x, std::sqrt(x * (1 - x)) * (1 + ex(rng)) + 1e-9};
}

void c7_triangle_map() {
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_real_distribution<double> uk(1.0, 5.0);
  double worst = -1e300;
  for (int i = 0; i < 10000; ++i) {
    const double K = uk(rng);
    const HPoint p = sample_triangle(rng), q = sample_triangle(rng);
    const double d = hyp_distance(p, q);
    const double image = hyp_distance(stretch_triangle_map(p, K), stretch_triangle_map(q, K));
    worst = std::max(worst, (image - K * d) / (K * d));
  }
  // arcs along each of the three sides
  double side_err = 0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 3000; ++i) {
    const double K = uk(rng);
    auto on_side = [&](int side) -> HPoint {
      const double s = u(rng);
      if (side == 0) return {0.0, std::exp(6 * (s - 0.5))};
      if (side == 1) return {1.0, std::exp(6 * (s - 0.5))};
      const double th = 0.02 + (M_PI - 0.04) * s;
      return {0.5 + 0.5 * std::cos(th), 0.5 * std::sin(th)};
    };
    const int side = i % 3;
    const HPoint p = on_side(side), q = on_side(side);
    const double d = hyp_distance(p, q);
    const double image = hyp_distance(stretch_triangle_map(p, K), stretch_triangle_map(q, K));
    side_err = std::max(side_err, std::abs(image - K * d));
  }
  report(7, "ideal triangle stretch map", worst <= 1e-6 && side_err <= 1e-9,
         fmt("max (d'-Kd)/(Kd)=%.3e, side arc |d'-Kd| max=%.3e", worst, side_err));
}

void c8_convexity() {
  std::mt19937_64 rng(kSeed + 8);
  int bad = 0;
  double min_origin = 1e300, min_vertex = 1e300;
  for (int i = 0; i < 20; ++i) {
    const CloudReport c = convex_cloud(random_torus(rng), 20);
    if (!c.origin_interior || !c.all_vertices) ++bad;
    min_origin = std::min(min_origin, c.origin_margin);
    min_vertex = std::min(min_vertex, c.min_vertex_margin);
  }
  report(8, "d log length convexity", bad == 0,
         fmt("%g/20 failures, min origin margin=%.3e, min vertex margin=%.3e", bad, min_origin,
             min_vertex));
}

void c9_antisymmetry() {
  std::mt19937_64 rng(kSeed + 9);
  const auto slopes = enumerate_slopes(5);
  std::uniform_int_distribution<std::size_t> pick(0, slopes.size() - 1);
  double worst = 0, self = 0;
  for (int i = 0; i < 50; ++i) {
    const ShearStructure g = random_torus(rng);
    const Slope s = slopes[pick(rng)];
    Slope t = slopes[pick(rng)];
    while (t == s) t = slopes[pick(rng)];
    worst = std::max(worst, std::abs(antisymmetry_residual(g, s, t)));
    self = std::max(self, std::abs(antisymmetry_residual(g, s, s)));
  }
  report(9, "earthquake antisymmetry", worst <= 1e-4 && self == 0.0,
         fmt("max |E_s l_t + E_t l_s|=%.3e, max s=t residual=%.1e", worst, self));
}

void c10_tracks() {
  namespace fs = std::filesystem;
  int count = 0, bad = 0;
  bool saw_standard = false;
  std::string msg;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(STRETCHLAB_TEST_DATA "/tracks")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const std::string text = read_text_file(path.string());
    const TrainTrack tt = parse_track(text);
    const auto expect = nlohmann::json::parse(text)["expect"];
    const int dim = static_cast<int>(weight_cone_basis(tt).size());
    const bool rec = is_recurrent(tt);
    const int oracle_dim = tt.branch_count() - testsupport::oracle_rank(tt);
    const bool ok = dim == oracle_dim && dim == expect["cone_dim"].get<int>() &&
                    rec == testsupport::oracle_recurrent(tt) &&
                    rec == expect["recurrent"].get<bool>() &&
                    carries_positive(tt).positive == expect["positive"].get<bool>();
    if (!ok) {
      ++bad;
      msg += " " + path.stem().string();
    }
    if (path.stem() == "theta_s11") saw_standard = dim == 2;
    ++count;
  }
  report(10, "train-track suite", bad == 0 && count >= 10 && saw_standard,
         fmt("%g tracks, %g mismatches, standard S11 cone dim 2: ", count, bad) +
             (saw_standard ? "yes" : "no") + msg);
}

void c11_march() {
  std::mt19937_64 rng(kSeed + 11);
  const auto probe = slope_curves(20);
  int done = 0, bad = 0, tries = 0;
  double slowest = 0, worst_rise = -1e300;
  int most_steps = 0;
  while (done < 10 && tries < 10000) {
    ++tries;
    const ShearStructure g = random_torus(rng, 1.5), h = random_torus(rng, 1.5);
    const double k = k_lower_bound(g, h, probe).k_lower;
    if (k < 0.3 || k > 1.0) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const MarchResult r = stretch_march(g, h, {0.01, 500, 20});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double prev = r.initial_k;
    for (const MarchStep& s : r.steps) {
      worst_rise = std::max(worst_rise, s.k_lower - prev);
      prev = s.k_lower;
    }
    const bool ok = r.status == MarchStatus::Converged && !r.steps.empty() &&
                    r.steps.back().k_lower < 0.01 && worst_rise <= 1e-3 && secs < 60;
    if (!ok) ++bad;
    slowest = std::max(slowest, secs);
    most_steps = std::max(most_steps, static_cast<int>(r.steps.size()));
    ++done;
  }
  report(11, "stretch march surrogate", done == 10 && bad == 0,
         fmt("%g/10 pairs failed, max steps=%g, slowest=%.2fs", bad, most_steps, slowest) +
             fmt(", max K rise=%.2e", worst_rise));
}

void c12_asymmetry() {
  const IdealTriangulation tri = standard_torus_triangulation();
  const ShearStructure h(tri, {0, 0, 0});
  double lowest = 1e300;
  std::string detail;
  for (double s : {6.0, 8.0, 10.0}) {
    const ShearStructure g(tri, {0, -s, s});
    const auto [kgh, khg] = asymmetry_probe(g, h, 30);
    const double ratio = kgh / khg;
    lowest = std::min(lowest, ratio);
    detail += fmt(" s=%g: K(g,h)=%.4f K(h,g)=%.4f", s, kgh, khg) + fmt(" ratio=%.3f;", ratio);
  }
  report(12, "asymmetry", lowest > 2, detail);
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)()> checks[] = {
      {"1", c1_completeness}, {"2", c2_markov},      {"3", c3_simple_sufficiency},
      {"4", c4_triangle_inequality}, {"5", c5_positivity}, {"6", c6_stretch_bound},
      {"7", c7_triangle_map}, {"8", c8_convexity}, {"9", c9_antisymmetry},
      {"10", c10_tracks},     {"11", c11_march},     {"12", c12_asymmetry}};
  for (const auto& [id, fn] : checks) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(std::stoi(id), "exception", false, e.what());
    }
  }
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
