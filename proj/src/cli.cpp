#include "stretchlab/cli.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "stretchlab/error.hpp"
#include "stretchlab/io.hpp"
#include "stretchlab/metric.hpp"
#include "stretchlab/traintrack.hpp"

namespace stretchlab::cli {

namespace {

const char* boolean(bool b) { return b ? "true" : "false"; }

// Runs body; maps library failures onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const StretchError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::EllipticHolonomy ? kElliptic : kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

Slope parse_slope_text(const std::string& text) {
  const Curve c = parse_curve("slope:" + text);
  return std::get<Slope>(c);
}

}  // namespace

std::vector<int> sweep_schedule(int n) {
  std::vector<int> out;
  for (int level : {n / 4, n / 2, n}) {
    if (level >= 1 && (out.empty() || level > out.back())) out.push_back(level);
  }
  return out;
}

int cmd_length(const std::string& surface, const std::string& curve, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const SurfaceDoc doc = read_surface_file(surface);
    const Curve c = parse_curve(curve);
    out << format_number(curve_length(doc.structure, c)) << '\n';
    return kOk;
  });
}

int cmd_kmetric(const std::string& g, const std::string& h, int max_complexity,
                std::optional<int> all_classes, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (max_complexity < 1) {
      throw StretchError(ErrorKind::InvalidArgument, "--max-complexity must be >= 1");
    }
    if (all_classes && *all_classes < 1) {
      throw StretchError(ErrorKind::InvalidArgument, "--all-classes must be >= 1");
    }
    const SurfaceDoc dg = read_surface_file(g);
    const SurfaceDoc dh = read_surface_file(h);
    const RatioReport r = k_estimate(dg.structure, dh.structure, sweep_schedule(max_complexity));
    std::optional<RatioReport> words;
    if (all_classes) words = k_lower_bound(dg.structure, dh.structure, word_curves(*all_classes));

    out << "curve\tlen_g\tlen_h\tlog_ratio\n";
    for (const RatioRow& row : r.table) {
      out << row.id << '\t' << format_number(row.len_g) << '\t' << format_number(row.len_h)
          << '\t' << format_number(row.log_ratio) << '\n';
    }
    out << "K_lower=" << format_number(r.k_lower) << " best=" << r.best_curve
        << " stabilized=" << boolean(r.stabilized) << '\n';
    if (words) {
      out << "K_lower_all_classes=" << format_number(words->k_lower) << " best=" << words->best_curve
          << " agree=" << boolean(std::abs(words->k_lower - r.k_lower) <= 1e-6) << '\n';
    }
    return r.stabilized ? kOk : kSoftWarning;
  });
}

int cmd_deform(const std::string& surface, std::optional<double> stretch_t,
               std::optional<TwistSpec> twist, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (stretch_t.has_value() == twist.has_value()) {
      throw StretchError(ErrorKind::InvalidArgument, "give exactly one of --stretch, --twist");
    }
    SurfaceDoc doc = read_surface_file(surface);
    if (stretch_t) {
      if (!std::isfinite(*stretch_t)) throw StretchError(ErrorKind::InvalidArgument, "bad t");
      doc.structure = stretch(doc.structure, *stretch_t);
    } else {
      const Slope s = parse_slope_text(twist->slope);
      if (!std::isfinite(twist->t)) throw StretchError(ErrorKind::InvalidArgument, "bad t");
      const HolonomyRep rep = shear_to_holonomy_rep(doc.structure);
      // a zero twist is the identity; skip the lossy trace round trip
      if (twist->t != 0.0) {
        doc.structure = shears_from_torus_rep(earthquake_twist(rep, s, twist->t));
      }
    }
    out << emit_surface(doc);
    return kOk;
  });
}

int cmd_gradcloud(const std::string& surface, int max_complexity, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const SurfaceDoc doc = read_surface_file(surface);
    const CloudReport cloud = convex_cloud(doc.structure, max_complexity);
    out << "p,q,x,y\n";
    for (std::size_t i = 0; i < cloud.slopes.size(); ++i) {
      out << cloud.slopes[i].p << ',' << cloud.slopes[i].q << ','
          << format_number(cloud.points[i][0]) << ',' << format_number(cloud.points[i][1]) << '\n';
    }
    out << "origin_interior=" << boolean(cloud.origin_interior) << '\n';
    out << "all_vertices=" << boolean(cloud.all_vertices) << '\n';
    return cloud.origin_interior && cloud.all_vertices ? kOk : kHullFailed;
  });
}

int cmd_march(const std::string& g, const std::string& h, const MarchArgs& args,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SurfaceDoc dg = read_surface_file(g);
    const SurfaceDoc dh = read_surface_file(h);
    const MarchResult r = stretch_march(dg.structure, dh.structure,
                                        {args.step, args.max_steps, args.max_complexity});
    out << "step\tK_lower\tbest\n";
    for (const MarchStep& s : r.steps) {
      out << s.index << '\t' << format_number(s.k_lower) << '\t' << s.best_curve << '\n';
    }
    return r.status == MarchStatus::Converged ? kOk : kSoftWarning;
  });
}

int cmd_track(const std::string& track, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TrainTrack tt = read_track_file(track);
    out << "recurrent=" << boolean(is_recurrent(tt)) << " cone_dim=" << weight_cone_basis(tt).size()
        << " positive=" << boolean(carries_positive(tt).positive) << '\n';
    return kOk;
  });
}

}  // namespace stretchlab::cli
