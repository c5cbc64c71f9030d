#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace stretchlab {

// Side s of a triangle spans its vertex s to vertex s+1 (mod 3),
// counterclockwise. Vertex s sits between sides s-1 and s.
struct SideRef {
  int triangle = 0;
  int side = 0;
  friend bool operator==(const SideRef&, const SideRef&) = default;
  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

// A corner is identified by (triangle, vertex index).
using Corner = SideRef;

// Oriented ideal triangulation. Every side is glued to exactly one other
// side (orientation-reversing, so gluing is determined by the pairing).
class IdealTriangulation {
 public:
  // triangles[t][s] is the edge id on side s of triangle t. Every edge id in
  // [0, E) must appear exactly twice. Throws InvalidTriangulation.
  static IdealTriangulation from_edge_lists(std::vector<std::array<int, 3>> triangles,
                                            std::optional<int> declared_genus = {});

  int triangle_count() const { return static_cast<int>(edges_.size()); }
  int edge_count() const { return static_cast<int>(edge_sides_.size()); }
  int puncture_count() const { return static_cast<int>(punctures_.size()); }
  int genus() const { return genus_; }

  int edge(SideRef s) const { return edges_[s.triangle][s.side]; }
  SideRef partner(SideRef s) const { return partner_[s.triangle][s.side]; }
  const std::array<SideRef, 2>& edge_sides(int e) const { return edge_sides_[e]; }
  const std::vector<std::array<int, 3>>& edge_lists() const { return edges_; }

  // Corner orbits under the rotation corner(t,i) -> corner(partner(t, i-1)).
  const std::vector<std::vector<Corner>>& punctures() const { return punctures_; }
  Corner rotate_corner(Corner c) const;

  // Re-checks the structural invariants; throws InvalidTriangulation.
  void validate() const;

  bool is_standard_torus() const;

  friend bool operator==(const IdealTriangulation& x, const IdealTriangulation& y) {
    return x.edges_ == y.edges_;
  }

 private:
  std::vector<std::array<int, 3>> edges_;
  std::vector<std::array<SideRef, 3>> partner_;
  std::vector<std::array<SideRef, 2>> edge_sides_;
  std::vector<std::vector<Corner>> punctures_;
  int genus_ = 0;
};

// Two triangles, three edges, one puncture. Edge e0 is the horizontal side,
// e1 the vertical side and e2 the diagonal of the square picture; slope (1,0)
// crosses e1 and e2, slope (0,1) crosses e0 and e2.
IdealTriangulation standard_torus_triangulation();

enum class Turn { Left, Right };

// Cross `edge` into the next triangle, then leave it through the side on the
// given hand (Right: next side counterclockwise, Left: the one after).
struct LoopStep {
  int edge = 0;
  Turn turn = Turn::Left;
  friend bool operator==(const LoopStep&, const LoopStep&) = default;
};

struct CombinatorialLoop {
  std::vector<LoopStep> steps;
  friend bool operator==(const CombinatorialLoop&, const CombinatorialLoop&) = default;
};

// Sides entered at each step, starting from the first consistent choice of
// crossing direction. Throws IncompatibleLoop.
std::vector<SideRef> resolve_loop(const IdealTriangulation& tri,
                                  const CombinatorialLoop& loop);

CombinatorialLoop reversed(const CombinatorialLoop& loop);
CombinatorialLoop rotated(const CombinatorialLoop& loop, std::size_t k);

// One all-left loop per puncture, going once around its corner orbit.
std::vector<CombinatorialLoop> puncture_loops(const IdealTriangulation& tri);

// Dual-spine loops of the standard torus based at the frame "about to cross
// side 2 of triangle 0"; holonomy of slope (1,0) is the a-loop, holonomy of
// slope (0,1) is the inverse of the b-loop.
CombinatorialLoop torus_a_loop();
CombinatorialLoop torus_b_loop();

// Simple closed curve class on the punctured torus, (p,q) ~ (-p,-q).
struct Slope {
  long p = 1;
  long q = 0;
  friend bool operator==(const Slope&, const Slope&) = default;
};

// Canonical form q > 0, or (1, 0). Throws InvalidCurve when gcd != 1.
Slope make_slope(long p, long q);

std::vector<Slope> enumerate_slopes(int max_complexity);

long geometric_intersection(const Slope& s, const Slope& t);

// Number of crossings of the slope's geodesic with e0, e1, e2 of the
// standard torus triangulation.
std::array<long, 3> torus_edge_intersections(const Slope& s);

// Words over a, b, A, B (capitals are inverses).
struct FreeWord {
  std::string letters;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

bool is_letter(char c);
char inverse_letter(char c);
std::string inverse_word(std::string_view w);
std::string free_reduce(std::string_view w);
std::string cyclic_reduce(std::string_view w);
bool is_cyclically_reduced(std::string_view w);

// Letter order a < b < A < B.
int letter_rank(char c);
bool word_less(std::string_view x, std::string_view y);

// Lexicographically least word among rotations of w and of its inverse.
std::string canonical_class(std::string_view cyclically_reduced);

// Christoffel word: (1,0) -> a, (0,1) -> b, mediants concatenate
// (larger p/q first); negative p uses A in place of a.
FreeWord slope_word(const Slope& s);

// Conjugacy classes up to inversion of nontrivial cyclically reduced words of
// length <= max_length, one canonical representative each, ordered by length
// then by word_less.
std::vector<FreeWord> enumerate_conjugacy_classes(int max_length);

using Curve = std::variant<Slope, FreeWord, CombinatorialLoop>;

std::string to_string(const Slope& s);
std::string to_string(const FreeWord& w);
std::string to_string(const CombinatorialLoop& l);
std::string to_string(const Curve& c);

// Parses "slope:p/q", "word:<a,b,A,B>" or "loop:<edge><L|R>,...".
// Throws InvalidCurve.
Curve parse_curve(std::string_view spec);

}  // namespace stretchlab
