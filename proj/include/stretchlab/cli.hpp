#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stretchlab::cli {

enum Exit : int {
  kOk = 0,
  kInvalid = 2,
  kSoftWarning = 3,
  kElliptic = 4,
  kHullFailed = 5,
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code. Nothing reaches `err` on success.
int cmd_length(const std::string& surface, const std::string& curve, std::ostream& out,
               std::ostream& err);

int cmd_kmetric(const std::string& g, const std::string& h, int max_complexity,
                std::optional<int> all_classes, std::ostream& out, std::ostream& err);

struct TwistSpec {
  std::string slope;  // "p/q"
  double t = 0.0;
};

int cmd_deform(const std::string& surface, std::optional<double> stretch_t,
               std::optional<TwistSpec> twist, std::ostream& out, std::ostream& err);

int cmd_gradcloud(const std::string& surface, int max_complexity, std::ostream& out,
                  std::ostream& err);

struct MarchArgs {
  double step = 0.01;
  int max_steps = 500;
  int max_complexity = 20;
};

int cmd_march(const std::string& g, const std::string& h, const MarchArgs& args,
              std::ostream& out, std::ostream& err);

int cmd_track(const std::string& track, std::ostream& out, std::ostream& err);

// Schedule N/4, N/2, N with duplicates and levels below 1 removed.
std::vector<int> sweep_schedule(int n);

}  // namespace stretchlab::cli
