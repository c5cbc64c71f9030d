#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace stretchlab {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Half-branch ids: branch b has ends 2b and 2b+1.
struct Switch {
  std::vector<int> left;
  std::vector<int> right;
  friend bool operator==(const Switch&, const Switch&) = default;
};

// Abstract (non-embedded) train track. A switch with one empty side is a
// dead end: trajectories reaching it cannot continue.
class TrainTrack {
 public:
  // Throws InvalidTrack.
  TrainTrack(int branches, std::vector<Switch> switches);

  int branch_count() const { return branches_; }
  const std::vector<Switch>& switches() const { return switches_; }

  // Switch and side (0 = left, 1 = right) holding a half-branch.
  struct Placement {
    int sw;
    int side;
  };
  Placement placement(int half_branch) const { return placement_[half_branch]; }

 private:
  int branches_;
  std::vector<Switch> switches_;
  std::vector<Placement> placement_;
};

// Adds a branch leaving `sw` on the given side and ending at a new dead-end
// switch.
TrainTrack with_dead_end(const TrainTrack& tt, int sw, int side);

// Row per switch: +1 for each left half-branch, -1 for each right one.
RationalMatrix switch_matrix(const TrainTrack& tt);

RationalMatrix reduced_row_echelon(RationalMatrix m);

// Kernel basis of the switch matrix, each vector scaled to primitive integers.
std::vector<RationalVector> weight_cone_basis(const TrainTrack& tt);

bool satisfies_switch_conditions(const TrainTrack& tt, const RationalVector& w);

// Legal-continuation graph on directed traversals: node 2b + e traverses
// branch b starting at end e. Arriving at a switch on one side continues on
// any half-branch of the other side.
std::vector<std::vector<int>> continuation_graph(const TrainTrack& tt);

// Strongly connected component id per node (Tarjan).
std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& graph);

// True iff every directed traversal lies on a closed legal trajectory.
bool is_recurrent(const TrainTrack& tt);

struct PositivityReport {
  bool positive = false;
  std::vector<std::int64_t> witness;  // strictly positive and in the kernel when positive
};

// Sum over branches of the counting vector of a shortest closed trajectory
// through that branch.
PositivityReport carries_positive(const TrainTrack& tt);

}  // namespace stretchlab
