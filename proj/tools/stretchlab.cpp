#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stretchlab/cli.hpp"

namespace cli = stretchlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz metric on cusped hyperbolic surfaces in shear coordinates"};
  app.require_subcommand(1);
  int code = 0;

  std::string surface, g, h, curve, track;
  int n = 20;
  std::optional<int> all_classes;
  std::optional<double> stretch_t;
  std::vector<std::string> twist;
  cli::MarchArgs march;

  auto* length = app.add_subcommand("length", "length of a curve");
  length->add_option("surface", surface, "surface file")->required();
  length->add_option("curve", curve, "slope:p/q | word:<aAbB> | loop:<edge><L|R>,...")->required();
  length->callback([&] { code = cli::cmd_length(surface, curve, std::cout, std::cerr); });

  auto* kmetric = app.add_subcommand("kmetric", "length-ratio table and K lower bound");
  kmetric->add_option("surface_g", g, "surface file g")->required();
  kmetric->add_option("surface_h", h, "surface file h")->required();
  kmetric->add_option("--max-complexity,-N", n, "slope bound |p|+|q|");
  kmetric->add_option("--all-classes", all_classes, "cross-check on all classes up to this length");
  kmetric->callback([&] { code = cli::cmd_kmetric(g, h, n, all_classes, std::cout, std::cerr); });

  auto* deform = app.add_subcommand("deform", "stretch or twist a structure");
  deform->add_option("surface", surface, "surface file")->required();
  auto* st = deform->add_option("--stretch", stretch_t, "shears times e^t");
  auto* tw = deform->add_option("--twist", twist, "p/q t")->expected(2);
  st->excludes(tw);
  deform->callback([&] {
    std::optional<cli::TwistSpec> spec;
    if (!twist.empty()) {
      try {
        spec = cli::TwistSpec{twist[0], std::stod(twist[1])};
      } catch (const std::exception&) {
        std::cerr << "error: bad twist distance '" << twist[1] << "'\n";
        code = cli::kInvalid;
        return;
      }
    }
    code = cli::cmd_deform(surface, stretch_t, spec, std::cout, std::cerr);
  });

  auto* grad = app.add_subcommand("gradcloud", "d log length of slopes and hull verdicts");
  grad->add_option("surface", surface, "surface file")->required();
  grad->add_option("N", n, "slope bound |p|+|q|")->required();
  grad->callback([&] { code = cli::cmd_gradcloud(surface, n, std::cout, std::cerr); });

  auto* m = app.add_subcommand("march", "descent trace from g toward h");
  m->add_option("surface_g", g, "surface file g")->required();
  m->add_option("surface_h", h, "surface file h")->required();
  m->add_option("--step", march.step, "step size and stopping threshold");
  m->add_option("--max-steps", march.max_steps);
  m->add_option("--max-complexity,-N", march.max_complexity, "slope bound |p|+|q|");
  m->callback([&] { code = cli::cmd_march(g, h, march, std::cout, std::cerr); });

  auto* t = app.add_subcommand("track", "train-track verdicts");
  t->add_option("track", track, "track file")->required();
  t->add_flag("--check", "accepted for compatibility; checks always run");
  t->callback([&] { code = cli::cmd_track(track, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInvalid;
  }
  return code;
}
