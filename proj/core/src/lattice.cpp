#include "logfront/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "logfront/elimination.hpp"
#include "logfront/error.hpp"

namespace logfront {

namespace {

int64_t igcd(int64_t x, int64_t y) { return std::gcd(std::abs(x), std::abs(y)); }

LatticePoint primitive(LatticePoint v) {
    int64_t g = igcd(v.x, v.y);
    return g == 0 ? v : LatticePoint{v.x / g, v.y / g};
}

// Outward normal of a counterclockwise edge direction.
LatticePoint outward_normal(LatticePoint dir) { return primitive({dir.y, -dir.x}); }

// Strict counterclockwise angle order starting from the positive x-axis.
bool angle_less(LatticePoint p, LatticePoint q) {
    auto half = [](LatticePoint v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return cross(p, q) > 0;
}

}  // namespace

void LatticePolygon::canonicalize() {
    if (verts_.empty()) {
        kind_ = Kind::point;
        verts_ = {{0, 0}};
        return;
    }
    auto min_it = std::min_element(verts_.begin(), verts_.end());
    std::rotate(verts_.begin(), min_it, verts_.end());
    LatticePoint base = verts_[0];
    for (auto& v : verts_) v = v - base;
}

LatticePolygon LatticePolygon::hull_of(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw Error("lattice", "empty_support", "convex hull of no points");
    std::vector<LatticePoint> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolygon out;
    if (pts.size() == 1) {
        out.kind_ = Kind::point;
        out.verts_ = {pts[0]};
        out.canonicalize();
        return out;
    }
    // Monotone chain with strict turns: collinear interior points are dropped.
    auto build = [&](bool lower) {
        std::vector<LatticePoint> chain;
        auto scan = [&](const LatticePoint& p) {
            while (chain.size() >= 2 &&
                   cross(chain.back() - chain[chain.size() - 2], p - chain.back()) <= 0)
                chain.pop_back();
            chain.push_back(p);
        };
        if (lower)
            for (const auto& p : pts) scan(p);
        else
            for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
        return chain;
    };
    std::vector<LatticePoint> lower = build(true), upper = build(false);
    if (lower.size() == 2 && upper.size() == 2) {
        out.kind_ = Kind::segment;
        out.verts_ = {lower[0], lower[1]};
        out.canonicalize();
        return out;
    }
    out.kind_ = Kind::polygon;
    out.verts_.assign(lower.begin(), lower.end() - 1);
    out.verts_.insert(out.verts_.end(), upper.begin(), upper.end() - 1);
    out.canonicalize();
    return out;
}

LatticePolygon LatticePolygon::from_vertices(const std::vector<LatticePoint>& vertices) {
    LatticePolygon hull = hull_of(vertices);
    if (hull.kind_ == Kind::polygon && hull.verts_.size() != vertices.size())
        throw Error("lattice", "bad_vertices",
                    "vertex list is not a strictly convex counterclockwise cycle");
    return hull;
}

std::vector<PolygonEdge> LatticePolygon::edges() const {
    std::vector<PolygonEdge> out;
    if (kind_ == Kind::point) return out;
    if (kind_ == Kind::segment) {
        LatticePoint d = verts_[1] - verts_[0];
        LatticePoint pd = primitive(d);
        int64_t len = igcd(d.x, d.y);
        out.push_back({verts_[0], verts_[1], pd, outward_normal(pd), len});
        out.push_back({verts_[1], verts_[0], -pd, outward_normal(-pd), len});
        return out;
    }
    for (size_t i = 0; i < verts_.size(); ++i) {
        LatticePoint from = verts_[i], to = verts_[(i + 1) % verts_.size()];
        LatticePoint d = to - from;
        LatticePoint pd = primitive(d);
        out.push_back({from, to, pd, outward_normal(pd), igcd(d.x, d.y)});
    }
    return out;
}

int64_t LatticePolygon::area2() const {
    if (kind_ != Kind::polygon) return 0;
    int64_t s = 0;
    for (size_t i = 0; i < verts_.size(); ++i)
        s += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
    return s;
}

int64_t LatticePolygon::lattice_perimeter() const {
    int64_t s = 0;
    for (const auto& e : edges()) s += e.length;
    return s;
}

int64_t LatticePolygon::interior_points() const {
    if (kind_ != Kind::polygon) return 0;
    // Pick: A = I + B/2 - 1, so I = (2A - B)/2 + 1.
    return (area2() - lattice_perimeter()) / 2 + 1;
}

LatticePolygon LatticePolygon::reflected() const {
    std::vector<LatticePoint> pts;
    for (const auto& v : verts_) pts.push_back(-v);
    return hull_of(pts);
}

LatticePolygon LatticePolygon::scaled(int64_t k) const {
    if (k <= 0) throw Error("lattice", "bad_scale", "polygon scale must be positive");
    std::vector<LatticePoint> pts;
    for (const auto& v : verts_) pts.push_back(k * v);
    return hull_of(pts);
}

std::string LatticePolygon::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << " ";
        os << "(" << verts_[i].x << "," << verts_[i].y << ")";
    }
    os << "]";
    return os.str();
}

PolygonMetrics polygon_metrics(const LatticePolygon& polygon) {
    PolygonMetrics m;
    m.area2 = polygon.area2();
    m.lattice_perimeter = polygon.lattice_perimeter();
    m.interior = polygon.interior_points();
    m.vertex_count = polygon.vertex_count();
    return m;
}

LatticePolygon newton_polygon(const SparsePoly& p) {
    if (p.is_zero()) throw Error("lattice", "zero_polynomial", "Newton polygon of zero");
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : p.terms())
        pts.push_back({static_cast<int64_t>(e[static_cast<int>(Var::z)] + e[static_cast<int>(Var::a)]),
                       static_cast<int64_t>(e[static_cast<int>(Var::w)] + e[static_cast<int>(Var::b)])});
    return LatticePolygon::hull_of(pts);
}

// --- Minkowski sums via oriented edge-vector merge ----------------------------

namespace {

struct DirLess {
    bool operator()(const LatticePoint& p, const LatticePoint& q) const {
        if (p == q) return false;
        return angle_less(p, q);
    }
};

using EdgeVectorMap = std::map<LatticePoint, int64_t, DirLess>;  // primitive dir -> total length

void accumulate_edges(EdgeVectorMap& acc, const LatticePolygon& poly, int64_t scale, bool reflect) {
    for (const auto& e : poly.edges()) {
        LatticePoint d = reflect ? -e.dir : e.dir;
        acc[d] += scale * e.length;
    }
}

LatticePolygon polygon_from_edge_vectors(const EdgeVectorMap& vectors) {
    std::vector<std::pair<LatticePoint, int64_t>> dirs;
    for (const auto& [d, len] : vectors)
        if (len > 0) dirs.emplace_back(d, len);
    if (dirs.empty()) return LatticePolygon();  // point
    std::vector<LatticePoint> verts;
    LatticePoint cur{0, 0};
    for (const auto& [d, len] : dirs) {
        verts.push_back(cur);
        cur = cur + len * d;
    }
    if (!(cur == LatticePoint{0, 0}))
        throw Error("lattice", "open_edge_cycle", "edge vectors do not close up");
    return LatticePolygon::hull_of(verts);
}

}  // namespace

LatticePolygon minkowski_combine(const std::vector<MinkowskiPart>& parts) {
    if (parts.empty()) throw Error("lattice", "empty_sum", "Minkowski combination of nothing");
    EdgeVectorMap acc;
    for (const auto& part : parts) {
        if (part.scale <= 0) throw Error("lattice", "bad_scale", "Minkowski scale must be positive");
        accumulate_edges(acc, part.polygon, part.scale, part.reflect);
    }
    return polygon_from_edge_vectors(acc);
}

int64_t epsilon_pairing(const LatticePolygon& p1, const LatticePolygon& p2) {
    // Degenerate 2-gons would double-count their single geometric side.
    auto sides = [](const LatticePolygon& p) {
        auto es = p.edges();
        if (p.kind() == LatticePolygon::Kind::segment) es.resize(1);
        return es;
    };
    int64_t total = 0;
    for (const auto& e : sides(p1))
        for (const auto& f : sides(p2))
            total += std::abs(cross(e.length * e.dir, f.length * f.dir));
    return total;
}

Rational mixed_volume(const LatticePolygon& p1, const LatticePolygon& p2) {
    LatticePolygon sum = minkowski_combine({{1, p1, false}, {1, p2, false}});
    int64_t a2 = sum.area2() - p1.area2() - p2.area2();
    return Rational(a2, 2);
}

// --- partitions ----------------------------------------------------------------

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x <= 0) throw Error("lattice", "bad_partition", "partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Partition::conjugate() const {
    std::vector<int> out;
    if (parts.empty()) return out;
    out.resize(parts[0], 0);
    for (size_t i = 0; i < out.size(); ++i)
        for (int part : parts)
            if (part > static_cast<int>(i)) out[i] += 1;
    return out;
}

int partition_pairing(const Partition& lambda, const Partition& mu) {
    auto lc = lambda.conjugate(), mc = mu.conjugate();
    int via_conjugates = 0;
    for (size_t i = 0; i < std::min(lc.size(), mc.size()); ++i) via_conjugates += lc[i] * mc[i];
    int via_min = 0;
    for (int x : lambda.parts)
        for (int y : mu.parts) via_min += std::min(x, y);
    if (via_conjugates != via_min)
        throw Error("lattice", "pairing_mismatch", "partition pairing formulas disagree");
    return via_min;
}

// --- markings --------------------------------------------------------------------

MarkedPolygon edge_marking(const SparsePoly& p) {
    if (p.is_zero()) throw Error("lattice", "zero_polynomial", "edge marking of zero");
    // Raw (untranslated) hull so support lookups hit the actual exponents.
    std::vector<LatticePoint> pts;
    std::map<std::pair<int64_t, int64_t>, Rational> support;
    for (const auto& [e, c] : p.terms()) {
        int64_t x = e[static_cast<int>(Var::z)] + e[static_cast<int>(Var::a)];
        int64_t y = e[static_cast<int>(Var::w)] + e[static_cast<int>(Var::b)];
        pts.push_back({x, y});
        support[{x, y}] = c;  // distinct (z,a)/(w,b) splits cannot collide for (z,w)-polynomials
    }
    std::vector<LatticePoint> raw = pts;
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Hull on the raw points, then shift markings onto the canonical polygon.
    LatticePolygon canonical = LatticePolygon::hull_of(pts);
    if (canonical.degenerate())
        throw Error("lattice", "degenerate_polygon", "edge marking needs a two-dimensional Newton polygon");
    LatticePoint base = *std::min_element(raw.begin(), raw.end(), [&](auto A, auto B) {
        return A < B;
    });
    // The canonical polygon's vertices are raw vertices minus the raw hull's
    // lexicographic minimum vertex; recover it from any raw hull vertex.
    // hull_of(pts) already translated by the lex-min *vertex*, which may differ
    // from the lex-min support point only if that point is interior - impossible
    // for the lexicographic minimum. So `base` is the translation.
    MarkedPolygon out;
    out.polygon = canonical;
    for (const auto& edge : canonical.edges()) {
        LatticePoint from = edge.from + base;
        SparsePoly f;  // edge polynomial as univariate in t, f(0) != 0
        for (int64_t k = 0; k <= edge.length; ++k) {
            LatticePoint pt = from + k * edge.dir;
            auto it = support.find({pt.x, pt.y});
            if (it == support.end()) continue;
            Exponents e{};
            e[static_cast<int>(Var::t)] = static_cast<uint32_t>(k);
            f.add_term(e, it->second);
        }
        auto decomposition = squarefree_decomposition(f, Var::t);
        std::vector<int> parts;
        for (const auto& [factor, mult] : decomposition.factors) {
            int64_t deg = factor.degree(Var::t);
            for (int64_t i = 0; i < deg; ++i) parts.push_back(mult);
        }
        Partition marking(parts);
        if (marking.size() != edge.length)
            throw Error("lattice", "marking_mismatch", "edge marking does not sum to edge length");
        out.edges.push_back({edge.dir, edge.normal, edge.length, marking});
    }
    return out;
}

MarkedPolygon transverse_marking(const LatticePolygon& polygon) {
    MarkedPolygon out;
    out.polygon = polygon;
    for (const auto& edge : polygon.edges()) {
        std::vector<int> parts(static_cast<size_t>(edge.length), 1);
        out.edges.push_back({edge.dir, edge.normal, edge.length, Partition(parts)});
    }
    return out;
}

// --- log-front polygon prediction -------------------------------------------------

namespace {

struct NormalLess {
    bool operator()(const LatticePoint& p, const LatticePoint& q) const {
        if (p == q) return false;
        return angle_less(p, q);
    }
};

const MarkedEdge* edge_with_normal(const std::vector<MarkedEdge>& edges, LatticePoint normal) {
    for (const auto& e : edges)
        if (e.normal == normal) return &e;
    return nullptr;
}

Partition empty_partition() { return Partition(); }

}  // namespace

MarkedPolygon predict_logfront_polygon(const MarkedPolygon& dp, const MarkedPolygon& dq,
                                        int64_t deg_gauss_p, int64_t deg_gauss_q) {
    if (deg_gauss_p < 0 || deg_gauss_q < 0)
        throw Error("lattice", "bad_degree", "log-Gauss degrees must be nonnegative");

    // Edges of -Q carry the original markings with reflected geometry.
    std::vector<MarkedEdge> neg_q;
    for (const auto& e : dq.edges) neg_q.push_back({-e.dir, -e.normal, e.length, e.marking});

    // Base polygon gQ*P + gP*(-Q) as oriented edge vectors.
    std::map<LatticePoint, int64_t, NormalLess> lengths;  // primitive dir -> length
    for (const auto& e : dp.edges) lengths[e.dir] += deg_gauss_q * e.length;
    for (const auto& e : neg_q) lengths[e.dir] += deg_gauss_p * e.length;

    // Opposite pairs shrink both sides of their direction line.
    for (const auto& e : dp.edges) {
        for (const auto& f : neg_q) {
            if (!(e.normal == -f.normal)) continue;
            int64_t k = partition_pairing(e.marking, f.marking);
            lengths[e.dir] -= k;
            lengths[-e.dir] -= k;
        }
    }
    for (const auto& [dir, len] : lengths) {
        if (len < 0)
            throw Error("lattice", "polygon_collapse",
                        "opposite-edge subtraction exceeds an edge length");
    }

    EdgeVectorMap vectors;
    for (const auto& [dir, len] : lengths)
        if (len > 0) vectors[dir] += len;
    MarkedPolygon out;
    out.polygon = polygon_from_edge_vectors(vectors);

    // Assemble per-direction markings. For outward normal n let E, Ebar be the
    // P edges with normals n, -n and F, Fbar the (-Q) edges with normals n, -n.
    auto marking_for_normal = [&](LatticePoint n) -> Partition {
        const MarkedEdge* E = edge_with_normal(dp.edges, n);
        const MarkedEdge* Ebar = edge_with_normal(dp.edges, -n);
        const MarkedEdge* F = edge_with_normal(neg_q, n);
        const MarkedEdge* Fbar = edge_with_normal(neg_q, -n);
        auto marking = [&](const MarkedEdge* e) -> const Partition& {
            static const Partition none;
            return e ? e->marking : none;
        };
        const Partition &lE = marking(E), &lEbar = marking(Ebar), &lF = marking(F), &lFbar = marking(Fbar);

        std::vector<int> parts;
        int64_t count_e = deg_gauss_q - lF.length() - lFbar.length();
        int64_t count_f = deg_gauss_p - lE.length() - lEbar.length();
        if ((lE.length() > 0 && count_e < 0) || (lF.length() > 0 && count_f < 0))
            throw Error("lattice", "degenerate_marking",
                        "log-Gauss degree too small for the boundary data");
        for (int x : lE.parts)
            for (int64_t r = 0; r < count_e; ++r) parts.push_back(x);
        for (int y : lF.parts)
            for (int64_t r = 0; r < count_f; ++r) parts.push_back(y);
        for (int x : lE.parts)
            for (int y : lF.parts) parts.push_back(x + y);
        for (int x : lE.parts)
            for (int y : lFbar.parts)
                if (x - y > 0) parts.push_back(x - y);
        for (int y : lF.parts)
            for (int x : lEbar.parts)
                if (y - x > 0) parts.push_back(y - x);
        return Partition(parts);
    };

    for (const auto& edge : out.polygon.edges()) {
        Partition marking = marking_for_normal(edge.normal);
        if (marking.size() != edge.length)
            throw Error("lattice", "marking_mismatch",
                        "predicted marking does not sum to the predicted edge length");
        out.edges.push_back({edge.dir, edge.normal, edge.length, marking});
    }
    // Directions that cancelled entirely must also have empty markings.
    for (const auto& [dir, len] : lengths) {
        if (len != 0) continue;
        LatticePoint n = outward_normal(dir);
        Partition marking = marking_for_normal(n);
        if (marking.size() != 0)
            throw Error("lattice", "marking_mismatch",
                        "vanished direction still carries marked boundary points");
    }
    return out;
}

BoundaryCountPrediction predict_boundary_count(const MarkedPolygon& dp, const MarkedPolygon& dq,
                                               int64_t deg_gauss_p, int64_t deg_gauss_q) {
    MarkedPolygon predicted = predict_logfront_polygon(dp, dq, deg_gauss_p, deg_gauss_q);
    BoundaryCountPrediction out;
    for (const auto& e : predicted.edges) out.derived += e.marking.length();

    int64_t pairing_sum = 0;
    std::vector<MarkedEdge> neg_q;
    for (const auto& e : dq.edges) neg_q.push_back({-e.dir, -e.normal, e.length, e.marking});
    for (const auto& e : dp.edges)
        for (const auto& f : neg_q)
            if (e.normal == -f.normal) pairing_sum += partition_pairing(e.marking, f.marking);
    out.as_printed = deg_gauss_p * dq.polygon.lattice_perimeter() +
                     deg_gauss_q * dp.polygon.lattice_perimeter() - pairing_sum;
    return out;
}

}  // namespace logfront
