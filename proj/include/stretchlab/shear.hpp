#pragma once

#include <array>
#include <string>
#include <vector>

#include "stretchlab/hypgeom.hpp"
#include "stretchlab/surface.hpp"

namespace stretchlab {

inline constexpr double kCompletenessTol = 1e-9;

// Point of Teichmueller space: an ideal triangulation with one shear per edge.
//
// Holonomy convention. Each loop step crosses an edge with shear x and then
// turns; its factor is D(x) * G, with D(x) = diag(e^{x/2}, e^{-x/2}),
// G_left = [[1, 0], [-1, 1]] and G_right = [[1, -1], [0, 1]]. This is the
// developing map of ideal triangles normalized so the edge being crossed is
// (0, inf) with the previous triangle on the side of 1. A left turn fixes the
// vertex at 0, so puncture holonomy is lower triangular with diagonal
// e^{+-sum/2}: parabolic exactly when the shears around the puncture sum
// to zero. Zero shears on the torus give the trace triple (3, 3, 3).
class ShearStructure {
 public:
  // Throws IncompleteStructure / InvalidArgument.
  ShearStructure(IdealTriangulation tri, std::vector<double> shears);

  const IdealTriangulation& triangulation() const { return tri_; }
  const std::vector<double>& shears() const { return shears_; }
  double shear(int edge) const { return shears_[edge]; }

  friend bool operator==(const ShearStructure& x, const ShearStructure& y) {
    return x.tri_ == y.tri_ && x.shears_ == y.shears_;
  }

 private:
  IdealTriangulation tri_;
  std::vector<double> shears_;
};

// |trace| - 2 of each puncture loop's holonomy.
std::vector<double> completeness_residuals(const IdealTriangulation& tri,
                                           const std::vector<double>& shears);

// Row p: coefficient of each edge in the shear sum around puncture p.
std::vector<std::vector<double>> completeness_constraints(const IdealTriangulation& tri);

// Orthonormal basis (in shear coordinates) of the completeness hyperplane,
// fixed per triangulation: Gram-Schmidt on the projections of the unit
// edge vectors. For the standard torus: (2,-1,-1)/sqrt6 and (0,1,-1)/sqrt2.
std::vector<std::vector<double>> completeness_basis(const IdealTriangulation& tri);

// Shears of the point with the given hyperplane-basis coordinates.
ShearStructure from_hyperplane_coords(const IdealTriangulation& tri,
                                      const std::vector<double>& coords);

IsometryMatrix holonomy_of_loop(const ShearStructure& s, const CombinatorialLoop& loop);

// Images of the generators of pi_1 of the punctured torus.
struct HolonomyRep {
  IsometryMatrix A;
  IsometryMatrix B;
};

Mat2 evaluate_word(const HolonomyRep& h, std::string_view word);
double word_length(const HolonomyRep& h, const FreeWord& w);
double commutator_trace(const HolonomyRep& h);

// A = holonomy of the slope (1,0) loop, B = holonomy of the slope (0,1) loop,
// both based at the frame about to cross side 2 of triangle 0.
// Throws NotStandardTorus.
HolonomyRep shear_to_holonomy_rep(const ShearStructure& s);

// Inverse of shear_to_holonomy_rep on the standard torus. The curves disjoint
// from e0, e1, e2 are a, b, ab with |traces| t0, t1, t2, proportional to the
// lambda lengths of the edges; the shear on e_k is 2 log(t_{k+2} / t_{k+1}).
ShearStructure shears_from_torus_rep(const HolonomyRep& h);

// Translation length of the curve's holonomy; 0 for peripheral classes.
// Slopes and words need the standard torus. Throws EllipticHolonomy,
// NotStandardTorus, IncompatibleLoop.
double curve_length(const ShearStructure& s, const Curve& c);

// Every shear multiplied by e^t.
ShearStructure stretch(const ShearStructure& s, double t);

// Free basis (x, y) of F2 with x the Christoffel word of a slope and
// [x, y] conjugate to [a, b] (orientation preserving). `a_in_xy`, `b_in_xy`
// spell a and b in the letters of the new basis (a, b standing for x, y).
struct AdaptedBasis {
  std::string x;
  std::string y;
  std::string a_in_xy;
  std::string b_in_xy;

  // Rewrites a word in a, b as a reduced word in x, y.
  std::string rewrite(std::string_view word) const;
};

// Throws BasisChangeFailed.
AdaptedBasis adapted_basis(const Slope& s);

// Fenchel-Nielsen twist by hyperbolic distance t along the slope: in the
// adapted basis y -> T_x(t) y, where T_x(t) translates along the axis of x.
// Spelling a, b back in the twisted basis multiplies large matrices and
// loses digits for complex slopes; twisted_word_length avoids that.
HolonomyRep earthquake_twist(const HolonomyRep& h, const Slope& s, double t);

// Length of `w` after twisting along s, evaluated directly in the adapted
// basis. Twisting along s leaves the holonomy of s bit-for-bit unchanged.
double twisted_word_length(const HolonomyRep& h, const Slope& s, double t,
                           const FreeWord& w);

// Per-edge nonnegative transverse measure.
struct TransverseWeights {
  std::vector<double> weights;
};

// Half the alternating sum of the quadrilateral sides s1 - s2 + s3 - s4.
double alternating_shear(const std::array<double, 4>& sides);

// Quadrilateral around edge e, glued from its two triangles: for each side
// (t, i) carrying e, the sides (t, i+2), (t, i+1) in that order. Repeated
// sides count with multiplicity. Throws InvalidArgument on negative weights.
std::vector<double> shear_from_transverse(const IdealTriangulation& tri,
                                          const TransverseWeights& w);

}  // namespace stretchlab
