#include "sprawl/cutline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace sprawl {

namespace {

using Pt = VecR; // point in the (s,t) parameter square

Pt pt(Rat s, Rat t) { return Pt{std::move(s), std::move(t)}; }

struct Cell {
    std::vector<Pt> ring; // counterclockwise
};

bool strictly_inside(const Cell& c, const Pt& m) {
    size_t n = c.ring.size();
    for (size_t k = 0; k < n; ++k) {
        const Pt& a = c.ring[k];
        const Pt& b = c.ring[(k + 1) % n];
        if (cross2(vec_sub(b, a), vec_sub(m, a)) <= 0) return false;
    }
    return true;
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
    if (cross2(vec_sub(b, a), vec_sub(p, a)) != 0) return false;
    Rat d = dot(vec_sub(p, a), vec_sub(b, a));
    return d >= 0 && d <= dot(vec_sub(b, a), vec_sub(b, a));
}

// Index of p in the ring, inserting it into its containing edge if needed.
size_t locate_or_insert(Cell& c, const Pt& p) {
    size_t n = c.ring.size();
    for (size_t k = 0; k < n; ++k)
        if (c.ring[k] == p) return k;
    for (size_t k = 0; k < n; ++k) {
        const Pt& a = c.ring[k];
        const Pt& b = c.ring[(k + 1) % n];
        if (on_segment(a, b, p)) {
            c.ring.insert(c.ring.begin() + k + 1, p);
            return k + 1;
        }
    }
    throw Error("Internal", "cutline endpoint not on cell boundary");
}

void split_cells(std::vector<Cell>& cells, const Pt& p, const Pt& q) {
    Pt mid = pt((p[0] + q[0]) / 2, (p[1] + q[1]) / 2);
    int hit = -1;
    for (size_t c = 0; c < cells.size(); ++c)
        if (strictly_inside(cells[c], mid)) {
            if (hit >= 0) throw Error("Internal", "cutline midpoint in two cells");
            hit = (int)c;
        }
    if (hit < 0) throw Error("Internal", "cutline midpoint in no cell");
    Cell cell = cells[hit];
    size_t ip = locate_or_insert(cell, p);
    size_t iq = locate_or_insert(cell, q);
    size_t n = cell.ring.size();
    if (ip == iq || (ip + 1) % n == iq || (iq + 1) % n == ip)
        throw Error("Internal", "cutline degenerate against cell boundary");
    Cell c1, c2;
    for (size_t k = ip; ; k = (k + 1) % n) {
        c1.ring.push_back(cell.ring[k]);
        if (k == iq) break;
    }
    for (size_t k = iq; ; k = (k + 1) % n) {
        c2.ring.push_back(cell.ring[k]);
        if (k == ip) break;
    }
    cells[hit] = std::move(c1);
    cells.push_back(std::move(c2));
}

// Clip the line alpha + beta*t - gamma*s = 0 against the unit square.
// Returns the chord's endpoints, or an empty vector when the intersection is
// degenerate.  A line containing a whole square edge is rejected.
std::vector<Pt> clip_line_to_square(const Rat& alpha, const Rat& beta, const Rat& gamma) {
    const Pt corners[4] = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
    auto eval = [&](const Pt& p) { return alpha + beta * p[1] - gamma * p[0]; };
    std::vector<Pt> out;
    auto push = [&](const Pt& p) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    };
    for (int k = 0; k < 4; ++k) {
        const Pt& a = corners[k];
        const Pt& b = corners[(k + 1) % 4];
        Rat ha = eval(a), hb = eval(b);
        if (ha == 0 && hb == 0)
            throw Error("Internal", "cutline collinear with a square edge");
        if (ha == 0) push(a);
        if ((ha < 0 && hb > 0) || (ha > 0 && hb < 0)) {
            Rat u = ha / (ha - hb);
            push(pt(a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1])));
        }
    }
    if (out.size() > 2) throw Error("Internal", "line meets square in >2 points");
    if (out.size() < 2) return {};
    return out;
}

} // namespace

SideParam side_param(const Perimeter& l, int k) {
    if (l.dimension != 2) throw NotPlanar("side parametrization needs a 2D perimeter");
    int m = l.side_count();
    return {k, l.vertices[k % m], l.vertices[(k + 1) % m]};
}

SidePairDecomposition side_pair_decomposition(const Perimeter& l, int i, int j) {
    if (l.dimension != 2) throw NotPlanar("cutline decomposition needs a 2D perimeter");
    int m = l.side_count();
    if (i == j) throw InvalidInput("decomposition is for distinct sides");
    SideParam si = side_param(l, i), sj = side_param(l, j);

    // tau(t) - sigma(s) = C + t D - s B
    VecR b = vec_sub(si.end, si.start);
    VecR c = vec_sub(sj.start, si.start);
    VecR d = vec_sub(sj.end, sj.start);

    VecR corner_vec[4] = {c, vec_sub(c, b), vec_add(c, d), vec_sub(vec_add(c, d), b)};
    std::vector<VecR> cand;
    for (auto& g : corner_vec)
        if (!vec_is_zero(g)) cand.push_back(g);

    // angular hull of the corner directions; the open sector spans < pi
    VecR lo = cand[0], hi = cand[0];
    for (const auto& g : cand) {
        if (cross2(lo, g) < 0) lo = g;
        if (cross2(g, hi) < 0) hi = g;
    }
    for (const auto& g : cand)
        if (cross2(lo, g) < 0 || cross2(g, hi) < 0 ||
            (cross2(lo, g) == 0 && dot(lo, g) < 0))
            throw Error("Internal", "corner directions span a half turn or more");

    SidePairDecomposition out;

    // distance values are queried repeatedly at shared points
    std::map<std::vector<Rat>, Rat> value_cache;
    auto value_at = [&](const Pt& p) {
        auto it = value_cache.find(p);
        if (it != value_cache.end()) return it->second;
        VecR f = vec_add(c, vec_sub(vec_scale(p[1], d), vec_scale(p[0], b)));
        Rat v = norm(l, f);
        value_cache.emplace(p, v);
        return v;
    };

    std::vector<Cell> cells{Cell{{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}}};
    for (int vi = 0; vi < (int)l.vertices.size(); ++vi) {
        const VecR& u = l.vertices[vi];
        if (!(cross2(lo, u) > 0 && cross2(u, hi) > 0)) continue; // not strictly inside
        // cross(C + tD - sB, u) = 0 is affine in (s,t)
        Rat alpha = cross2(c, u), beta = cross2(d, u), gamma = cross2(b, u);
        auto seg = clip_line_to_square(alpha, beta, gamma);
        if (seg.empty())
            throw Error("Internal", "interior vertex direction with no cutline");
        split_cells(cells, seg[0], seg[1]);
        out.cutlines.push_back({vi, seg[0], seg[1], value_at(seg[0]), value_at(seg[1])});
    }

    // fan each cell from its lexicographically smallest vertex and integrate
    Rat total_area = 0, integral = 0;
    for (const auto& cell : cells) {
        size_t n = cell.ring.size();
        size_t r = 0;
        for (size_t k = 1; k < n; ++k)
            if (std::lexicographical_compare(cell.ring[k].begin(), cell.ring[k].end(),
                                             cell.ring[r].begin(), cell.ring[r].end()))
                r = k;
        for (size_t k = 1; k + 1 < n; ++k) {
            const Pt& p0 = cell.ring[r];
            const Pt& p1 = cell.ring[(r + k) % n];
            const Pt& p2 = cell.ring[(r + k + 1) % n];
            Rat area = rat_abs(cross2(vec_sub(p1, p0), vec_sub(p2, p0))) / 2;
            if (area == 0) continue;
            CutlineCell t;
            t.p[0] = p0;
            t.p[1] = p1;
            t.p[2] = p2;
            t.value[0] = value_at(p0);
            t.value[1] = value_at(p1);
            t.value[2] = value_at(p2);
            out.triangles.push_back(t);
            total_area += area;
            integral += area * (t.value[0] + t.value[1] + t.value[2]) / 3;
        }
    }
    if (total_area != 1)
        throw Error("Internal", "triangulated area of the parameter square is not 1");
    out.average = integral;
    return out;
}

Rat side_pair_average(const Perimeter& l, int i, int j) {
    if (l.dimension != 2) throw NotPlanar("side averages need a 2D perimeter");
    if (i == j) {
        SideParam s = side_param(l, i);
        // E|s-t| = 1/3 for independent uniforms on [0,1]
        return norm(l, vec_sub(s.end, s.start)) / 3;
    }
    return side_pair_decomposition(l, i, j).average;
}

SprawlExact sprawl_exact(const Perimeter& l, int threads) {
    if (l.dimension != 2) throw NotPlanar("exact sprawl needs a 2D perimeter");
    int m = l.side_count();
    SprawlExact res;
    res.weights = cone_weights(l);
    res.side_pair.assign(m, std::vector<Rat>(m));

    std::vector<std::pair<int, int>> jobs;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) jobs.emplace_back(i, j);

    unsigned hw = threads > 0 ? (unsigned)threads : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    hw = std::min<unsigned>(hw, (unsigned)jobs.size());

    std::vector<Rat> results(jobs.size());
    if (hw <= 1) {
        for (size_t k = 0; k < jobs.size(); ++k)
            results[k] = side_pair_average(l, jobs[k].first, jobs[k].second);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t k = next.fetch_add(1);
                if (k >= jobs.size()) break;
                results[k] = side_pair_average(l, jobs[k].first, jobs[k].second);
            }
        };
        std::vector<std::thread> ts;
        for (unsigned w = 0; w < hw; ++w) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }

    for (size_t k = 0; k < jobs.size(); ++k) {
        auto [i, j] = jobs[k];
        res.side_pair[i][j] = results[k];
        res.side_pair[j][i] = results[k];
    }

    // fixed summation order keeps the exact result reproducible
    Rat num = 0, den = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rat ww = res.weights[i] * res.weights[j];
            num += ww * res.side_pair[i][j];
            den += ww;
        }
    res.value = num / den;
    if (!(res.value > Rat(1, 2) && res.value < 2))
        throw Error("Internal", "sprawl outside (1/2, 2): " + rat_to_string(res.value));
    return res;
}

Perimeter hexagon_xy(const Rat& x, const Rat& y) {
    std::vector<VecR> pts = {{x, y},  {Rat(1), Rat(1)},   {Rat(-1), Rat(1)},
                             {-x, -y}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)}};
    return perimeter_from_points(2, pts);
}

namespace {

bool same_vertex_set(const Perimeter& p, const std::vector<VecR>& expect) {
    if (p.vertices.size() != expect.size()) return false;
    std::vector<VecR> a = p.vertices, b = expect;
    auto less = [](const VecR& u, const VecR& v) {
        return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
    };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

} // namespace

HexagonNormalization hexagon_normalize(const Perimeter& h) {
    if (h.dimension != 2) throw NotPlanar("hexagon normalization needs a 2D perimeter");
    size_t n = h.vertices.size();
    const VecR one_one{Rat(1), Rat(1)};
    const VecR neg_one_one{Rat(-1), Rat(1)};

    if (n == 4) {
        // parallelogram: degenerate hexagon, normal form (1, 0)
        // t maps vertices[0] -> (1,1) and vertices[1] -> (-1,1)
        MatR sys = {h.vertices[0], h.vertices[1]};
        MatR t = mat_transpose(mat_mul(mat_inverse(sys), MatR{one_one, neg_one_one}));
        Perimeter img = apply_linear(h, t);
        std::vector<VecR> expect = {one_one, neg_one_one, vec_neg(one_one), vec_neg(neg_one_one)};
        if (!same_vertex_set(img, expect))
            throw Error("Internal", "parallelogram normalization failed");
        return {Rat(1), Rat(0), t};
    }
    if (n != 6) throw NotHexagon("expected 6 (or degenerate 4) vertices, got " +
                                 std::to_string(n));

    std::vector<HexagonNormalization> valid;
    MatR reflect = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
    for (int dir = 0; dir < 2; ++dir)
        for (int s = 0; s < 6; ++s) {
            // consecutive (prev, p, q) in one traversal direction
            auto at = [&](int k) {
                int idx = dir == 0 ? (s + k) % 6 : (s - k % 6 + 6) % 6;
                return h.vertices[idx];
            };
            VecR r = at(0), p = at(1), q = at(2);
            // T p = (1,1), T q = (-1,1): columns of T from the inverse system
            MatR pq = {p, q}; // rows
            if (mat_det(pq) == 0) continue;
            MatR t = mat_transpose(mat_mul(mat_inverse(pq), MatR{one_one, neg_one_one}));
            // try the candidate and its reflection across the x-axis
            for (int refl = 0; refl < 2; ++refl) {
                MatR tt = refl ? mat_mul(reflect, t) : t;
                VecR img = mat_apply(tt, r);
                Rat x = img[0], y = img[1];
                if (!(x >= 1 && y >= 0 && x + y <= 2)) continue;
                std::vector<VecR> expect = {img,          one_one,          neg_one_one,
                                            vec_neg(img), vec_neg(one_one), vec_neg(neg_one_one)};
                if (!same_vertex_set(apply_linear(h, tt), expect)) continue;
                valid.push_back({x, y, tt});
            }
        }
    if (valid.empty()) throw Error("Internal", "no hexagon normal form found");
    MatR id = mat_identity(2);
    auto rank = [&](const HexagonNormalization& c) {
        return std::make_tuple(c.transform != id, c.x, c.y);
    };
    auto best = std::min_element(valid.begin(), valid.end(),
                                 [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
    return *best;
}

} // namespace sprawl
