#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logfront/lattice.hpp"
#include "logfront/rational.hpp"

namespace logfront {

// User-asserted local data of one singular point. Multiplicity m, Milnor
// number mu, branch count beta; the refinement fields split nodal/cuspidal
// counts into real and imaginary contributions.
struct SingularPoint {
    int64_t m = 1;
    int64_t mu = 0;
    int64_t beta = 1;
    bool real = true;
    int64_t conj_branch_pairs = 0;   // pairs of conjugate imaginary branches (real points only)
    int64_t local_nodal = 0;         // sum of pairwise branch intersection numbers
    int64_t local_nodal_rr = 0;      // portion coming from pairs of real branches
    std::optional<std::pair<Rational, Rational>> at;  // rational coordinates, when known
};

struct SingularityProfile {
    bool irreducible = true;
    std::vector<SingularPoint> points;
};

// Throws invariants.bad_profile on violated integrality or ordering constraints.
void validate_profile(const SingularityProfile& profile);

// Per-edge boundary data of a real curve. `parts` mirrors the edge marking;
// real_simple counts real boundary points, real_mult_excess their total
// multiplicity excess (the real part of the boundary nodal number).
struct BoundaryEdgeProfile {
    Partition parts;
    int64_t real_simple = 0;
    int64_t real_mult_excess = 0;
};

struct BoundaryProfile {
    std::vector<BoundaryEdgeProfile> edges;
};

BoundaryProfile boundary_from_marking(const MarkedPolygon& marked);

struct RefinedCounts {
    int64_t c = 0, c_re = 0, c_im = 0;
    int64_t b = 0, b_re_plus = 0, b_re_minus = 0, b_im = 0;
    int64_t boundary_points = 0;    // |dP|, boundary points without multiplicity
    int64_t boundary_nodal = 0;     // b(dP)
    int64_t boundary_nodal_re = 0;  // b^Re(dP)
};

RefinedCounts cuspidal_nodal_numbers(const SingularityProfile& profile,
                                     const BoundaryProfile& boundary);

// deg gamma = 2|interior| + |dP| - 2 - sum (mu + m - 1). Raw value may be
// <= 0 for degenerate curves; log_gauss_degree rejects those.
int64_t log_gauss_degree_raw(int64_t interior, int64_t boundary_simple,
                             const SingularityProfile& profile);
int64_t log_gauss_degree(int64_t interior, int64_t boundary_simple,
                         const SingularityProfile& profile);

// genus = |interior| - 1/2 sum (mu + beta - 1); returns (genus, chi = 2 - 2g).
std::pair<int64_t, int64_t> geometric_genus(int64_t interior, const SingularityProfile& profile);

int64_t inflection_count(int64_t deg_gauss, int64_t chi);

// Full single-curve report; cross-checks the cuspidal count against
// -deg_gauss - (chi - |dP|) computed independently.
struct CurveInvariants {
    int64_t deg_gauss = 0;
    int64_t chi = 0;
    int64_t genus = 0;
    int64_t inflections = 0;
    RefinedCounts counts;
};
CurveInvariants curve_invariants(int64_t interior, const SingularityProfile& profile,
                                 const BoundaryProfile& boundary);

int64_t tangency_multiplicity(int64_t intersection_mult, int64_t m1, int64_t m2);

int64_t logfront_gauss_degree(int64_t deg_gauss_p, int64_t deg_gauss_q);

struct CoincidencePair {
    int64_t nu_p = 1, nu_q = 1;
};
// Euler characteristics (chi of the fibre product, chi of the normalization).
std::pair<int64_t, int64_t> logfront_euler(int64_t deg_gauss_p, int64_t deg_gauss_q,
                                           int64_t chi_p, int64_t chi_q,
                                           const std::vector<CoincidencePair>& coincidences);

int64_t logfront_cuspidal(int64_t chi_r, int64_t boundary_r, int64_t chi_p, int64_t c_p,
                          int64_t boundary_p, int64_t chi_q, int64_t c_q, int64_t boundary_q);

int64_t logfront_nodal(int64_t interior_r, int64_t genus_r, int64_t cusps_r);

// Closed forms for generic curves of degree (dP, dQ).
struct GenericDegreeReport {
    int64_t chi = 0;
    int64_t genus = 0;
    int64_t cusps = 0;
    int64_t nodes = 0;
    int64_t hexagon_side_q = 0;  // d_P d_Q (d_Q - 1)
    int64_t hexagon_side_p = 0;  // d_P d_Q (d_P - 1)
    bool degenerate = false;     // out-of-range counts (e.g. dP = dQ = 1)
};
GenericDegreeReport generic_degree_report(int64_t d_p, int64_t d_q);

// 2 b^Re_+(R) + c^Re(R) for P a Harnack curve and Q immersed near the
// boundary. All polygon quantities are Euclidean-area based.
int64_t klein_sum(const MarkedPolygon& dp, const MarkedPolygon& dq,
                  const SingularityProfile& profile_p, const BoundaryProfile& boundary_p,
                  const SingularityProfile& profile_q, const BoundaryProfile& boundary_q,
                  int64_t chi_q);

struct KleinGeneric {
    int64_t value = 0;
    bool degenerate = false;  // lines have no dual points inside the torus
};
KleinGeneric klein_generic(int64_t d_p, int64_t d_q);

// (d - 2b^Re_+(Q) - c^Re(Q)) - (d* - 2b^Re_+(R) - c^Re(R)); zero iff the
// classical identity holds for the supplied refined counts.
int64_t classical_klein_check(int64_t d, int64_t d_star, int64_t b_plus_q, int64_t c_re_q,
                              int64_t b_plus_r, int64_t c_re_r);

}  // namespace logfront
