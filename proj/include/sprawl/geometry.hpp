#pragma once

// Convex geometry core: centrally symmetric polytopes in V- and H-form,
// Minkowski norms, cone weights, exact volumes, and the constructions the
// sprawl computations run on.  Everything here is exact rational.

#include <cstdint>
#include <optional>
#include <vector>

#include "sprawl/rational.hpp"

namespace sprawl {

using LatticeVector = std::vector<int64_t>;

// Symmetric finite generating set of Z^d.  The constructor closes the set
// under negation, deduplicates, and validates that the set generates Z^d.
struct GeneratorSet {
    int dimension = 0;
    std::vector<LatticeVector> vectors;

    GeneratorSet() = default;
    GeneratorSet(int dim, std::vector<LatticeVector> vecs);
};

struct PolytopeV {
    int dimension = 0;
    std::vector<VecR> vertices; // extreme points only
};

struct PolytopeH {
    int dimension = 0;
    std::vector<VecR> functionals; // irredundant, closed under negation
};

struct Facet {
    std::vector<int> vertex_indices; // indices into the V-representation
    int functional_index = -1;
    Rat cone_weight;                 // cone volume of the facet / body volume
};

// Boundary of a centrally symmetric convex body with both representations,
// facet incidence and cone weights.  In 2D the vertices are stored in
// clockwise order starting from the lexicographically smallest vertex, and
// facet k is the side from vertex k to vertex k+1 (cyclically).
struct Perimeter {
    int dimension = 0;
    std::vector<VecR> vertices;
    std::vector<VecR> functionals;
    std::vector<Facet> facets;
    Rat body_volume;

    int side_count() const { return (int)facets.size(); }
};

// --- Representation conversions -------------------------------------------

// Exact facet functionals of conv(vertices).  All candidate hyperplanes
// through d affinely independent vertices are solved for and filtered; this
// is exhaustive rather than incremental, which keeps degenerate (non-simplicial)
// facets exact with no perturbation.  Intended for the small dimensions the
// toolkit targets (d <= 6).
PolytopeH h_from_v(const PolytopeV& p);

// Exact vertex enumeration of {x : a_i . x <= 1}.
PolytopeV v_from_h(const PolytopeH& p);

// --- Perimeter construction ------------------------------------------------

// Perimeter of conv(S).  Interior and otherwise non-extreme points of S are
// discarded.  Throws NotFullDimensional / NotGenerating per the generator
// checks.
Perimeter hull(const GeneratorSet& s);

// Builds the full Perimeter (H-rep, facets, weights, volume) from exact,
// centrally symmetric vertex data; non-extreme input points are dropped.
Perimeter perimeter_from_points(int dimension, const std::vector<VecR>& points);

Perimeter make_cube(int d);      // [-1,1]^d
Perimeter make_orthoplex(int d); // conv(+-e_i)

// Integer polygon approximating the circle of radius `scale`: rounded points
// of a symmetric angle grid, symmetrized and hull-reduced.  `grid_angles` = 0
// picks a grid fine enough that only the rounding error survives.
Perimeter approximate_circle(int64_t scale, int grid_angles = 0);

// Image perimeter under an invertible linear map (functionals transform by
// the inverse transpose).  Throws SingularMatrix.
Perimeter apply_linear(const Perimeter& l, const MatR& t);

// --- Queries ----------------------------------------------------------------

// Minkowski norm with unit sphere L: max_i a_i . x.  In 2D this uses a
// binary search over the clockwise vertex fan rather than a scan over all
// functionals.
Rat norm(const Perimeter& l, const VecR& x);

std::vector<Rat> cone_weights(const Perimeter& l);

// Exact Lebesgue volume via fan triangulation from the origin.
Rat volume(const PolytopeV& p);

// Triangulation of each facet into (d-1)-simplices (vertex index lists),
// fanned from the facet's first stored vertex; used by volume, cone weights
// and the Monte Carlo boundary sampler.
std::vector<std::vector<std::vector<int>>> facet_triangulations(
    int dimension, const std::vector<VecR>& vertices, const std::vector<Facet>& facets);

// --- Lattice checks ---------------------------------------------------------

// Elementary divisors of an integer matrix (Smith normal form diagonal).
std::vector<BigInt> smith_normal_form_divisors(std::vector<std::vector<BigInt>> m);

} // namespace sprawl
