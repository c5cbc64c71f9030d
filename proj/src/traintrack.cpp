#include "stretchlab/traintrack.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "stretchlab/error.hpp"

namespace stretchlab {

TrainTrack::TrainTrack(int branches, std::vector<Switch> switches)
    : branches_(branches), switches_(std::move(switches)) {
  if (branches_ < 1) throw StretchError(ErrorKind::InvalidTrack, "track needs a branch");
  placement_.assign(2 * branches_, {-1, -1});
  for (int s = 0; s < static_cast<int>(switches_.size()); ++s) {
    const Switch& sw = switches_[s];
    if (sw.left.empty() && sw.right.empty()) {
      throw StretchError(ErrorKind::InvalidTrack, "switch " + std::to_string(s) + " is empty");
    }
    for (int side = 0; side < 2; ++side) {
      for (int h : side == 0 ? sw.left : sw.right) {
        if (h < 0 || h >= 2 * branches_) {
          throw StretchError(ErrorKind::InvalidTrack,
                             "half-branch " + std::to_string(h) + " out of range");
        }
        if (placement_[h].sw != -1) {
          throw StretchError(ErrorKind::InvalidTrack,
                             "half-branch " + std::to_string(h) + " placed twice");
        }
        placement_[h] = {s, side};
      }
    }
  }
  for (int h = 0; h < 2 * branches_; ++h) {
    if (placement_[h].sw == -1) {
      throw StretchError(ErrorKind::InvalidTrack,
                         "half-branch " + std::to_string(h) + " is not placed");
    }
  }
}

TrainTrack with_dead_end(const TrainTrack& tt, int sw, int side) {
  auto switches = tt.switches();
  if (sw < 0 || sw >= static_cast<int>(switches.size())) {
    throw StretchError(ErrorKind::InvalidTrack, "no such switch");
  }
  const int b = tt.branch_count();
  (side == 0 ? switches[sw].left : switches[sw].right).push_back(2 * b);
  switches.push_back({{2 * b + 1}, {}});
  return {b + 1, std::move(switches)};
}

RationalMatrix switch_matrix(const TrainTrack& tt) {
  RationalMatrix m;
  for (const Switch& sw : tt.switches()) {
    RationalVector row(tt.branch_count(), Rational(0));
    for (int h : sw.left) row[h / 2] += 1;
    for (int h : sw.right) row[h / 2] -= 1;
    m.push_back(std::move(row));
  }
  return m;
}

RationalMatrix reduced_row_echelon(RationalMatrix m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].numerator() == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].numerator() == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return m;
}

std::vector<RationalVector> weight_cone_basis(const TrainTrack& tt) {
  const int n = tt.branch_count();
  const RationalMatrix rref = reduced_row_echelon(switch_matrix(tt));
  std::vector<int> pivot_of_col(n, -1);
  for (std::size_t r = 0; r < rref.size(); ++r) {
    for (int c = 0; c < n; ++c) {
      if (rref[r][c].numerator() != 0) {
        pivot_of_col[c] = static_cast<int>(r);
        break;
      }
    }
  }
  std::vector<RationalVector> basis;
  for (int free = 0; free < n; ++free) {
    if (pivot_of_col[free] != -1) continue;
    RationalVector v(n, Rational(0));
    v[free] = 1;
    for (int c = 0; c < n; ++c) {
      if (pivot_of_col[c] != -1) v[c] = -rref[pivot_of_col[c]][free];
    }
    // scale to primitive integers
    std::int64_t den = 1, num = 0;
    for (const Rational& x : v) den = std::lcm(den, x.denominator());
    for (Rational& x : v) {
      x *= den;
      num = std::gcd(num, std::abs(x.numerator()));
    }
    if (num > 1) {
      for (Rational& x : v) x /= num;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool satisfies_switch_conditions(const TrainTrack& tt, const RationalVector& w) {
  for (const auto& row : switch_matrix(tt)) {
    Rational s(0);
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * w[i];
    if (s.numerator() != 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> continuation_graph(const TrainTrack& tt) {
  const int nodes = 2 * tt.branch_count();
  std::vector<std::vector<int>> graph(nodes);
  for (int node = 0; node < nodes; ++node) {
    const int b = node / 2, start = node % 2;
    const auto arrival = tt.placement(2 * b + (1 - start));
    const Switch& sw = tt.switches()[arrival.sw];
    for (int h : arrival.side == 0 ? sw.right : sw.left) graph[node].push_back(h);
  }
  return graph;
}

std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& graph) {
  const int n = static_cast<int>(graph.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, components = 0;
  // iterative Tarjan: frames of (node, next edge position)
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < graph[v].size()) {
        const int w = graph[v][pos++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return comp;
}

namespace {

std::vector<bool> on_closed_trajectory(const std::vector<std::vector<int>>& graph) {
  const auto comp = strongly_connected_components(graph);
  std::vector<int> size(graph.size(), 0);
  for (int c : comp) ++size[c];
  std::vector<bool> out(graph.size(), false);
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const bool self_loop =
        std::find(graph[v].begin(), graph[v].end(), static_cast<int>(v)) != graph[v].end();
    out[v] = size[comp[v]] > 1 || self_loop;
  }
  return out;
}

}  // namespace

bool is_recurrent(const TrainTrack& tt) {
  const auto closed = on_closed_trajectory(continuation_graph(tt));
  return std::all_of(closed.begin(), closed.end(), [](bool b) { return b; });
}

PositivityReport carries_positive(const TrainTrack& tt) {
  PositivityReport report;
  if (!is_recurrent(tt)) return report;
  const auto graph = continuation_graph(tt);
  const int nodes = static_cast<int>(graph.size());
  report.witness.assign(tt.branch_count(), 0);
  for (int b = 0; b < tt.branch_count(); ++b) {
    const int start = 2 * b;
    // BFS for the shortest closed walk start -> ... -> start
    std::vector<int> parent(nodes, -1);
    std::queue<int> frontier;
    int closing = -1;
    for (int w : graph[start]) {
      if (w == start) {
        closing = start;
        break;
      }
      if (parent[w] == -1) {
        parent[w] = start;
        frontier.push(w);
      }
    }
    while (closing == -1 && !frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : graph[v]) {
        if (w == start) {
          closing = v;
          break;
        }
        if (parent[w] == -1 && w != start) {
          parent[w] = v;
          frontier.push(w);
        }
      }
    }
    if (closing == -1) return PositivityReport{};
    for (int v = closing; v != start; v = parent[v]) ++report.witness[v / 2];
    ++report.witness[b];
  }
  RationalVector w;
  for (auto x : report.witness) w.emplace_back(x);
  report.positive = satisfies_switch_conditions(tt, w) &&
                    std::all_of(report.witness.begin(), report.witness.end(),
                                [](std::int64_t x) { return x > 0; });
  return report;
}

}  // namespace stretchlab
