#pragma once

// Exact sprawl of a 2D perimeter via cutline decomposition of each side
// pair's parameter square.  The distance function (s,t) -> |sigma(s)-tau(t)|
// in the perimeter norm is piecewise affine; its affine pieces are separated
// by the cutlines, the loci where the connecting vector points at a vertex.
// Averaging the vertex values of a triangulation subordinate to the cutlines
// integrates the function exactly.

#include <vector>

#include "sprawl/geometry.hpp"

namespace sprawl {

// Clockwise side k of a 2D perimeter, parametrized by [0,1].
struct SideParam {
    int index;
    VecR start;
    VecR end;
};

SideParam side_param(const Perimeter& l, int k);

// Segment of the parameter square along which tau(t)-sigma(s) is parallel to
// one vertex direction, with the norm values at its endpoints.
struct Cutline {
    int direction_vertex;   // index into the perimeter's vertex list
    VecR a, b;              // endpoints in the (s,t) square
    Rat value_a, value_b;
};

// Triangle of the subordinate triangulation with the (affine) distance
// function's values at its corners.
struct CutlineCell {
    VecR p[3];
    Rat value[3];
};

struct SidePairDecomposition {
    std::vector<Cutline> cutlines;
    std::vector<CutlineCell> triangles; // tile [0,1]^2 with disjoint interiors
    Rat average;                        // E_ij, exact
};

// Full decomposition for sides i != j (throws NotPlanar off the plane).
SidePairDecomposition side_pair_decomposition(const Perimeter& l, int i, int j);

// Average distance between points of sides i and j.  The same-side case
// short-circuits to |side|/3, which equals the cutline integral.
Rat side_pair_average(const Perimeter& l, int i, int j);

struct SprawlExact {
    Rat value;
    std::vector<std::vector<Rat>> side_pair; // E_ij matrix
    std::vector<Rat> weights;                // cone weights w_i
};

// E(L) = sum_ij w_i w_j E_ij / sum_ij w_i w_j, exact.  `threads` = 0 uses
// the available hardware parallelism; the result is independent of it.
SprawlExact sprawl_exact(const Perimeter& l, int threads = 0);

// --- Hexagon normal form ----------------------------------------------------

// Canonical two-parameter hexagon with vertices +-(x,y), +-(1,1), +-(-1,1);
// degenerates to the square when x = 1.
Perimeter hexagon_xy(const Rat& x, const Rat& y);

struct HexagonNormalization {
    Rat x, y;
    MatR transform; // maps the input hexagon onto hexagon_xy(x, y)
};

// Linear normal form of a centrally symmetric hexagon: x >= 1, y >= 0,
// x + y <= 2.  Parallelograms are accepted as degenerate hexagons and map to
// (1, 0).  Throws NotHexagon for any other vertex count.
HexagonNormalization hexagon_normalize(const Perimeter& h);

} // namespace sprawl
