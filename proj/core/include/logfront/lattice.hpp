#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logfront/poly.hpp"
#include "logfront/rational.hpp"

namespace logfront {

struct LatticePoint {
    int64_t x = 0, y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.x + q.x, p.y + q.y}; }
    friend LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.x - q.x, p.y - q.y}; }
    LatticePoint operator-() const { return {-x, -y}; }
    friend LatticePoint operator*(int64_t k, LatticePoint p) { return {k * p.x, k * p.y}; }
    // Lexicographic (x, then y); the canonical translate puts the minimum at the origin.
    friend bool operator<(const LatticePoint& p, const LatticePoint& q) {
        return p.x != q.x ? p.x < q.x : p.y < q.y;
    }
};

inline int64_t cross(LatticePoint p, LatticePoint q) { return p.x * q.y - p.y * q.x; }

// One side of a (possibly degenerate) lattice polygon.
struct PolygonEdge {
    LatticePoint from, to;
    LatticePoint dir;      // primitive direction (to - from)/length
    LatticePoint normal;   // primitive outward normal
    int64_t length = 0;    // lattice length
};

// Convex lattice polygon, counterclockwise, canonical translate
// (lexicographically minimal vertex at the origin, vertex list starting
// there). Degenerate cases (segment, point) are carried with a kind flag.
class LatticePolygon {
public:
    enum class Kind { point, segment, polygon };

    LatticePolygon() : kind_(Kind::point), verts_{{0, 0}} {}

    static LatticePolygon hull_of(const std::vector<LatticePoint>& points);
    // Validates an explicit counterclockwise vertex list (used by JSON input).
    static LatticePolygon from_vertices(const std::vector<LatticePoint>& vertices);

    Kind kind() const { return kind_; }
    bool degenerate() const { return kind_ != Kind::polygon; }
    const std::vector<LatticePoint>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }

    // Degenerate 2-gons report both sides of the segment (opposite normals);
    // a point has no edges.
    std::vector<PolygonEdge> edges() const;

    int64_t area2() const;              // twice the Euclidean area
    int64_t lattice_perimeter() const;  // sum of lattice edge lengths
    int64_t interior_points() const;    // lattice points strictly inside (Pick)

    LatticePolygon reflected() const;
    LatticePolygon scaled(int64_t k) const;

    friend bool operator==(const LatticePolygon& x, const LatticePolygon& y) {
        return x.kind_ == y.kind_ && x.verts_ == y.verts_;
    }
    friend bool operator!=(const LatticePolygon& x, const LatticePolygon& y) { return !(x == y); }

    std::string str() const;

private:
    Kind kind_;
    std::vector<LatticePoint> verts_;
    void canonicalize();
};

struct PolygonMetrics {
    int64_t area2 = 0;
    int64_t interior = 0;
    int64_t lattice_perimeter = 0;
    int vertex_count = 0;
};
PolygonMetrics polygon_metrics(const LatticePolygon& polygon);

LatticePolygon newton_polygon(const SparsePoly& p);

struct MinkowskiPart {
    int64_t scale = 1;
    LatticePolygon polygon;
    bool reflect = false;
};
LatticePolygon minkowski_combine(const std::vector<MinkowskiPart>& parts);

// Area(E + F) summed over all side pairs: |cross| of the full edge vectors.
int64_t epsilon_pairing(const LatticePolygon& p1, const LatticePolygon& p2);
// Area(P+Q) - Area(P) - Area(Q), Euclidean. Integer-valued on lattice polygons.
Rational mixed_volume(const LatticePolygon& p1, const LatticePolygon& p2);

// --- partitions and markings -------------------------------------------------

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);
    int size() const;                  // |lambda|
    int length() const { return static_cast<int>(parts.size()); }
    std::vector<int> conjugate() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

// <lambda, mu>: computed both as sum_i lambda'_i mu'_i and as
// sum_{i,j} min(lambda_i, mu_j); the two routes are asserted to agree.
int partition_pairing(const Partition& lambda, const Partition& mu);

struct MarkedEdge {
    LatticePoint dir;     // primitive edge direction (counterclockwise)
    LatticePoint normal;  // primitive outward normal
    int64_t length = 0;
    Partition marking;
};

struct MarkedPolygon {
    LatticePolygon polygon;
    std::vector<MarkedEdge> edges;  // in polygon edge order
};

// Boundary intersection multiplicities per edge, computed from the edge
// polynomials via square-free decomposition.
MarkedPolygon edge_marking(const SparsePoly& p);

// Trivial marking for synthetic polygons: every boundary point simple.
MarkedPolygon transverse_marking(const LatticePolygon& polygon);

// --- Newton polygon of a log-front -------------------------------------------

// Predicted Newton polygon of the tangency dual of two marked curves:
// the Minkowski combination deg_gauss_q * P + deg_gauss_p * (-Q), with each
// opposite-edge pair (E of P, F of -Q) shrinking both sides in that direction
// by <lambda(E), lambda(F)>. Per-direction markings are assembled from the
// finite-tangency, opposite-tentacle and same-direction surplus parts and are
// asserted to account for the full predicted edge length.
MarkedPolygon predict_logfront_polygon(const MarkedPolygon& dp, const MarkedPolygon& dq,
                                        int64_t deg_gauss_p, int64_t deg_gauss_q);

struct BoundaryCountPrediction {
    int64_t derived = 0;     // parts across all predicted edge markings
    int64_t as_printed = 0;  // gP*|dQ| + gQ*|dP| - sum <lambda(E),lambda(F)>
};
BoundaryCountPrediction predict_boundary_count(const MarkedPolygon& dp, const MarkedPolygon& dq,
                                               int64_t deg_gauss_p, int64_t deg_gauss_q);

}  // namespace logfront
