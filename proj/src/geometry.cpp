#include "sprawl/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace sprawl {

namespace {

// Forward declaration; defined with the facet machinery below.
std::vector<std::vector<int>> triangulate_point_set(const std::vector<VecR>& pts,
                                                    const std::vector<int>& ids);

bool vec_less(const VecR& a, const VecR& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<VecR> dedupe_points(std::vector<VecR> pts) {
    std::sort(pts.begin(), pts.end(), vec_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

int linear_rank(const std::vector<VecR>& pts, int d) {
    MatR m;
    for (const auto& p : pts) m.push_back(p);
    int rank = 0;
    size_t rows = m.size();
    for (int col = 0; col < d && rank < (int)rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if ((int)r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (int c = col; c < d; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

template <class F>
void for_each_combination(int n, int k, F&& body) {
    if (k > n || k <= 0) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        body(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// All facet hyperplanes a . x = 1 of conv(pts), assuming the hull is
// full-dimensional and contains the origin strictly inside (so every facet
// functional has the a . x <= 1 normalization).  Exhaustive over d-subsets:
// exact and insensitive to non-simplicial facets or non-extreme input points.
std::vector<VecR> brute_facet_functionals(const std::vector<VecR>& pts, int d) {
    std::set<std::vector<Rat>> seen;
    std::vector<VecR> out;
    VecR ones(d, Rat(1));
    for_each_combination((int)pts.size(), d, [&](const std::vector<int>& idx) {
        MatR m(d);
        for (int i = 0; i < d; ++i) m[i] = pts[idx[i]];
        VecR a;
        try {
            a = solve_linear(m, ones);
        } catch (const SingularMatrix&) {
            return; // affinely dependent subset, no unique hyperplane
        }
        if (seen.count(a)) return;
        for (const auto& p : pts)
            if (dot(a, p) > 1) return;
        seen.insert(a);
        out.push_back(a);
    });
    return out;
}

// --- 2D hull: monotone chain with exact predicates --------------------------

// Strictly convex hull (collinear points dropped), counterclockwise.
std::vector<VecR> hull2d_ccw(std::vector<VecR> pts) {
    pts = dedupe_points(std::move(pts));
    size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<VecR> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && cross2(vec_sub(h[k - 1], h[k - 2]), vec_sub(pts[i], h[k - 2])) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) { // upper
        while (k >= t && cross2(vec_sub(h[k - 1], h[k - 2]), vec_sub(pts[i], h[k - 2])) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

void rotate_to_lex_min(std::vector<VecR>& v) {
    auto it = std::min_element(v.begin(), v.end(), vec_less);
    std::rotate(v.begin(), it, v.end());
}

bool closed_under_negation(const std::vector<VecR>& pts) {
    std::set<std::vector<Rat>> s(pts.begin(), pts.end());
    for (const auto& p : pts)
        if (!s.count(vec_neg(p))) return false;
    return true;
}

Perimeter perimeter_2d(const std::vector<VecR>& points) {
    std::vector<VecR> ccw = hull2d_ccw(points);
    if (ccw.size() < 3) throw NotFullDimensional("2D hull has empty interior");
    std::vector<VecR> cw(ccw.rbegin(), ccw.rend());
    rotate_to_lex_min(cw);
    if (!closed_under_negation(cw))
        throw InvalidInput("vertex set is not centrally symmetric");

    Perimeter per;
    per.dimension = 2;
    per.vertices = cw;
    int m = (int)cw.size();
    Rat area2 = 0; // twice the area
    std::vector<Rat> side_cross(m);
    for (int k = 0; k < m; ++k) {
        const VecR& v = cw[k];
        const VecR& w = cw[(k + 1) % m];
        side_cross[k] = rat_abs(cross2(v, w));
        area2 += side_cross[k];
        // functional tight on both side endpoints
        MatR sys = {v, w};
        per.functionals.push_back(solve_linear(sys, VecR{Rat(1), Rat(1)}));
    }
    per.body_volume = area2 / 2;
    for (int k = 0; k < m; ++k) {
        Facet f;
        f.vertex_indices = {k, (k + 1) % m};
        f.functional_index = k;
        f.cone_weight = side_cross[k] / area2;
        per.facets.push_back(f);
    }
    return per;
}

// --- d >= 3 (and d == 1) construction ---------------------------------------

Perimeter perimeter_1d(const std::vector<VecR>& points) {
    Rat m = 0;
    for (const auto& p : points) m = std::max(m, rat_abs(p[0]));
    if (m == 0) throw NotFullDimensional("1D hull has empty interior");
    Perimeter per;
    per.dimension = 1;
    per.vertices = {{-m}, {m}};
    per.functionals = {{Rat(-1) / m}, {Rat(1) / m}};
    per.body_volume = 2 * m;
    per.facets.push_back({{0}, 0, Rat(1, 2)});
    per.facets.push_back({{1}, 1, Rat(1, 2)});
    return per;
}

Perimeter perimeter_dd(int d, const std::vector<VecR>& points) {
    std::vector<VecR> pts = dedupe_points(points);
    if (linear_rank(pts, d) < d) throw NotFullDimensional("hull has empty interior");

    std::vector<VecR> functionals = brute_facet_functionals(pts, d);
    std::sort(functionals.begin(), functionals.end(), vec_less);

    // Extreme points are exactly the points tight on >= d facets.
    std::vector<VecR> verts;
    for (const auto& p : pts) {
        int tight = 0;
        for (const auto& a : functionals)
            if (dot(a, p) == 1) ++tight;
        if (tight >= d) verts.push_back(p);
    }
    std::sort(verts.begin(), verts.end(), vec_less);
    if (!closed_under_negation(verts))
        throw InvalidInput("vertex set is not centrally symmetric");

    Perimeter per;
    per.dimension = d;
    per.vertices = verts;
    per.functionals = functionals;
    for (int i = 0; i < (int)functionals.size(); ++i) {
        Facet f;
        f.functional_index = i;
        for (int v = 0; v < (int)verts.size(); ++v)
            if (dot(functionals[i], verts[v]) == 1) f.vertex_indices.push_back(v);
        if ((int)f.vertex_indices.size() < d)
            throw DegenerateFacet("facet with fewer than d vertices");
        per.facets.push_back(f);
    }

    // Cone volume of each facet via its simplex decomposition.
    Rat total = 0;
    std::vector<Rat> cone_vol(per.facets.size());
    auto tris = facet_triangulations(d, per.vertices, per.facets);
    BigInt dfact = 1;
    for (int i = 2; i <= d; ++i) dfact *= i;
    for (size_t i = 0; i < per.facets.size(); ++i) {
        Rat v = 0;
        for (const auto& simplex : tris[i]) {
            MatR m(d);
            for (int r = 0; r < d; ++r) m[r] = per.vertices[simplex[r]];
            v += rat_abs(mat_det(m));
        }
        cone_vol[i] = v / dfact;
        total += cone_vol[i];
    }
    if (total == 0) throw NotFullDimensional("hull has empty interior");
    per.body_volume = total;
    for (size_t i = 0; i < per.facets.size(); ++i)
        per.facets[i].cone_weight = cone_vol[i] / total;
    return per;
}

// Recursive fan triangulation of an arbitrary polytope given by points
// affinely spanning k dimensions inside R^d.  Returns simplices as lists of
// ids (caller-supplied labels).  The fan apex is the first stored point, and
// sub-facet structure is recovered by projecting to a coordinate chart and
// re-running the exhaustive facet search there.
std::vector<std::vector<int>> triangulate_point_set(const std::vector<VecR>& pts,
                                                    const std::vector<int>& ids) {
    size_t n = pts.size();
    if (n == 0) return {};
    int ambient = (int)pts[0].size();

    // affine chart: translate by pts[0], pick pivot coordinates
    std::vector<VecR> rel(n - 1);
    for (size_t i = 1; i < n; ++i) rel[i - 1] = vec_sub(pts[i], pts[0]);
    MatR m = rel;
    std::vector<int> pivot_cols;
    size_t row = 0;
    for (int col = 0; col < ambient && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (int c = col; c < ambient; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    int k = (int)pivot_cols.size(); // affine dimension

    if (k == 0) throw DegenerateFacet("triangulation of a zero-dimensional set");
    if (n == (size_t)k + 1) return {ids}; // simplex already

    // project to chart coordinates (affine bijection on the span)
    std::vector<VecR> proj(n, VecR(k));
    for (size_t i = 0; i < n; ++i)
        for (int c = 0; c < k; ++c) proj[i][c] = pts[i][pivot_cols[c]];

    if (k == 1) {
        // segment: extremes under the chart coordinate
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < n; ++i) {
            if (proj[i][0] < proj[lo][0]) lo = i;
            if (proj[i][0] > proj[hi][0]) hi = i;
        }
        return {{ids[lo], ids[hi]}};
    }

    // centre the chart so the facet search normalization applies
    VecR centroid(k, Rat(0));
    for (const auto& p : proj) centroid = vec_add(centroid, p);
    centroid = vec_scale(Rat(1, (int64_t)n), centroid);
    std::vector<VecR> centered(n);
    for (size_t i = 0; i < n; ++i) centered[i] = vec_sub(proj[i], centroid);

    std::vector<VecR> fns = brute_facet_functionals(centered, k);
    std::sort(fns.begin(), fns.end(), vec_less);

    std::vector<std::vector<int>> out;
    for (const auto& a : fns) {
        bool apex_on = dot(a, centered[0]) == 1;
        if (apex_on) continue;
        std::vector<VecR> sub_pts;
        std::vector<int> sub_ids;
        for (size_t i = 0; i < n; ++i)
            if (dot(a, centered[i]) == 1) {
                sub_pts.push_back(pts[i]);
                sub_ids.push_back(ids[i]);
            }
        for (auto& s : triangulate_point_set(sub_pts, sub_ids)) {
            s.insert(s.begin(), ids[0]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace

std::vector<std::vector<std::vector<int>>> facet_triangulations(
    int dimension, const std::vector<VecR>& vertices, const std::vector<Facet>& facets) {
    std::vector<std::vector<std::vector<int>>> out;
    out.reserve(facets.size());
    for (const auto& f : facets) {
        if (dimension <= 2) {
            out.push_back({f.vertex_indices});
            continue;
        }
        std::vector<VecR> pts;
        for (int idx : f.vertex_indices) pts.push_back(vertices[idx]);
        out.push_back(triangulate_point_set(pts, f.vertex_indices));
    }
    return out;
}

GeneratorSet::GeneratorSet(int dim, std::vector<LatticeVector> vecs) : dimension(dim) {
    if (dim < 1) throw InvalidInput("dimension must be >= 1");
    std::set<LatticeVector> s;
    for (auto& v : vecs) {
        if ((int)v.size() != dim) throw DimensionMismatch("generator of wrong dimension");
        bool zero = std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
        if (zero) continue;
        LatticeVector neg(v.size());
        for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        s.insert(v);
        s.insert(neg);
    }
    if (s.empty()) throw InvalidInput("empty generating set");
    vectors.assign(s.begin(), s.end());
}

std::vector<BigInt> smith_normal_form_divisors(std::vector<std::vector<BigInt>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t t = 0;
    while (t < rows && t < cols) {
        // pick the nonzero entry of smallest magnitude as pivot
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[pi], m[t]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);

        bool again = true;
        while (again) {
            again = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) { // remainder became the smaller pivot
                    std::swap(m[i], m[t]);
                    again = true;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
                    again = true;
                }
            }
            if (!again) {
                // enforce divisibility of the remaining block
                for (size_t i = t + 1; i < rows && !again; ++i)
                    for (size_t j = t + 1; j < cols && !again; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
                            again = true;
                        }
            }
        }
        ++t;
    }
    std::vector<BigInt> div;
    for (size_t i = 0; i < std::min(rows, cols); ++i)
        div.push_back(i < t ? abs(m[i][i]) : BigInt(0));
    return div;
}

Perimeter perimeter_from_points(int dimension, const std::vector<VecR>& points) {
    for (const auto& p : points)
        if ((int)p.size() != dimension) throw DimensionMismatch("point of wrong dimension");
    if (dimension == 1) return perimeter_1d(points);
    if (dimension == 2) return perimeter_2d(points);
    return perimeter_dd(dimension, points);
}

Perimeter hull(const GeneratorSet& s) {
    std::vector<std::vector<BigInt>> m;
    for (const auto& v : s.vectors) {
        std::vector<BigInt> row(v.begin(), v.end());
        m.push_back(std::move(row));
    }
    auto div = smith_normal_form_divisors(m);
    int rank = 0;
    for (const auto& d : div)
        if (d != 0) ++rank;
    if (rank < s.dimension)
        throw NotFullDimensional("generators span a proper subspace");
    for (const auto& d : div)
        if (d != 1)
            throw NotGenerating("generators span a proper sublattice (index divisor " +
                                d.str() + ")");
    std::vector<VecR> pts;
    for (const auto& v : s.vectors) {
        VecR p(v.size());
        for (size_t i = 0; i < v.size(); ++i) p[i] = Rat(v[i]);
        pts.push_back(std::move(p));
    }
    return perimeter_from_points(s.dimension, pts);
}

PolytopeH h_from_v(const PolytopeV& p) {
    Perimeter per = perimeter_from_points(p.dimension, p.vertices);
    return {p.dimension, per.functionals};
}

PolytopeV v_from_h(const PolytopeH& p) {
    int d = p.dimension;
    if (d == 2) {
        // vertices from adjacent functional pairs; reuse the dual brute force
        // by treating functionals as points of the polar body
        Perimeter polar = perimeter_from_points(d, p.functionals);
        return {d, polar.functionals};
    }
    std::vector<VecR> verts;
    std::set<std::vector<Rat>> seen;
    VecR ones(d, Rat(1));
    for_each_combination((int)p.functionals.size(), d, [&](const std::vector<int>& idx) {
        MatR m(d);
        for (int i = 0; i < d; ++i) m[i] = p.functionals[idx[i]];
        VecR x;
        try {
            x = solve_linear(m, ones);
        } catch (const SingularMatrix&) {
            return;
        }
        if (seen.count(x)) return;
        for (const auto& a : p.functionals)
            if (dot(a, x) > 1) return;
        seen.insert(x);
        verts.push_back(x);
    });
    std::sort(verts.begin(), verts.end(), vec_less);
    return {d, verts};
}

Rat volume(const PolytopeV& p) {
    return perimeter_from_points(p.dimension, p.vertices).body_volume;
}

std::vector<Rat> cone_weights(const Perimeter& l) {
    std::vector<Rat> w;
    for (const auto& f : l.facets) w.push_back(f.cone_weight);
    return w;
}

namespace {

// Clockwise-from-v0 strict order on directions; v0 is the smallest element.
struct CwDirectionOrder {
    const VecR& v0;
    int key(const VecR& v) const {
        Rat c = cross2(v0, v);
        if (c < 0) return 0;
        if (c == 0 && dot(v0, v) > 0) return 0;
        return 1;
    }
    bool operator()(const VecR& a, const VecR& b) const {
        int ka = key(a), kb = key(b);
        if (ka != kb) return ka < kb;
        return cross2(a, b) < 0;
    }
};

} // namespace

Rat norm(const Perimeter& l, const VecR& x) {
    if ((int)x.size() != l.dimension) throw DimensionMismatch("norm: wrong dimension");
    if (vec_is_zero(x)) return Rat(0);
    if (l.dimension == 2) {
        // locate the side cone containing the direction of x
        CwDirectionOrder ord{l.vertices[0]};
        auto it = std::upper_bound(l.vertices.begin(), l.vertices.end(), x,
                                   [&](const VecR& a, const VecR& b) { return ord(a, b); });
        int side = (int)(it - l.vertices.begin()) - 1;
        return dot(l.functionals[side], x);
    }
    Rat best = dot(l.functionals[0], x);
    for (size_t i = 1; i < l.functionals.size(); ++i)
        best = std::max(best, dot(l.functionals[i], x));
    return best;
}

Perimeter apply_linear(const Perimeter& l, const MatR& t) {
    if ((int)t.size() != l.dimension) throw DimensionMismatch("apply_linear: wrong matrix size");
    if (mat_det(t) == 0) throw SingularMatrix("apply_linear: singular matrix");
    std::vector<VecR> pts;
    for (const auto& v : l.vertices) pts.push_back(mat_apply(t, v));
    return perimeter_from_points(l.dimension, pts);
}

Perimeter make_cube(int d) {
    std::vector<VecR> pts;
    for (int mask = 0; mask < (1 << d); ++mask) {
        VecR p(d);
        for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1 ? 1 : -1;
        pts.push_back(std::move(p));
    }
    return perimeter_from_points(d, pts);
}

Perimeter make_orthoplex(int d) {
    std::vector<VecR> pts;
    for (int i = 0; i < d; ++i) {
        VecR p(d, Rat(0)), q(d, Rat(0));
        p[i] = 1;
        q[i] = -1;
        pts.push_back(p);
        pts.push_back(q);
    }
    return perimeter_from_points(d, pts);
}

Perimeter approximate_circle(int64_t scale, int grid_angles) {
    if (scale < 1) throw InvalidInput("scale must be >= 1");
    int m = grid_angles;
    if (m <= 0) {
        double dense = std::ceil(2.0 * 3.14159265358979323846 * (double)scale);
        m = (int)std::max(16.0, dense);
    }
    m = ((m + 3) / 4) * 4; // keep the grid symmetric under the axis reflections
    std::vector<VecR> pts;
    for (int k = 0; k < m; ++k) {
        double th = 2.0 * 3.14159265358979323846 * (double)k / (double)m;
        int64_t x = (int64_t)std::llround((double)scale * std::cos(th));
        int64_t y = (int64_t)std::llround((double)scale * std::sin(th));
        if (x == 0 && y == 0) continue;
        pts.push_back({Rat(x), Rat(y)});
        pts.push_back({Rat(-x), Rat(-y)});
    }
    return perimeter_from_points(2, pts);
}

} // namespace sprawl
