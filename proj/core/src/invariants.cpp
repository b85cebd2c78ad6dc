#include "logfront/invariants.hpp"

#include <numeric>

#include "logfront/error.hpp"

namespace logfront {

void validate_profile(const SingularityProfile& profile) {
    for (const auto& p : profile.points) {
        if (p.beta < 1 || p.m < p.beta)
            throw Error("invariants", "bad_profile", "need m >= beta >= 1 at every point");
        int64_t adj = p.mu + p.beta - 1;
        if (adj < 0 || adj % 2 != 0)
            throw Error("invariants", "bad_profile", "mu + beta - 1 must be even and nonnegative");
        if (p.local_nodal_rr > p.local_nodal)
            throw Error("invariants", "bad_profile", "real-real nodal part exceeds the local nodal number");
        if (p.local_nodal < 0 || p.local_nodal_rr < 0 || p.conj_branch_pairs < 0)
            throw Error("invariants", "bad_profile", "nodal counts must be nonnegative");
        if (!p.real && p.conj_branch_pairs != 0)
            throw Error("invariants", "bad_profile", "conjugate branch pairs only apply to real points");
    }
}

BoundaryProfile boundary_from_marking(const MarkedPolygon& marked) {
    BoundaryProfile out;
    for (const auto& e : marked.edges) out.edges.push_back({e.marking, 0, 0});
    return out;
}

RefinedCounts cuspidal_nodal_numbers(const SingularityProfile& profile,
                                     const BoundaryProfile& boundary) {
    validate_profile(profile);
    RefinedCounts rc;
    for (const auto& p : profile.points) {
        int64_t cusp = p.m - p.beta;
        rc.c += cusp;
        (p.real ? rc.c_re : rc.c_im) += cusp;
        rc.b += p.local_nodal;
        if (p.real) {
            rc.b_re_plus += p.conj_branch_pairs;
            rc.b_re_minus += p.local_nodal_rr;
        }
    }
    rc.b_im = rc.b - rc.b_re_plus - rc.b_re_minus;
    if (rc.b_im < 0)
        throw Error("invariants", "bad_profile", "refined nodal numbers exceed the nodal number");
    for (const auto& e : boundary.edges) {
        rc.boundary_points += e.parts.length();
        rc.boundary_nodal += e.parts.size() - e.parts.length();
        rc.boundary_nodal_re += e.real_mult_excess;
        if (e.real_simple > e.parts.length() || e.real_mult_excess > e.parts.size() - e.parts.length())
            throw Error("invariants", "bad_profile", "real boundary counts exceed the boundary data");
    }
    return rc;
}

int64_t log_gauss_degree_raw(int64_t interior, int64_t boundary_simple,
                             const SingularityProfile& profile) {
    validate_profile(profile);
    int64_t s = 0;
    for (const auto& p : profile.points) s += p.mu + p.m - 1;
    return 2 * interior + boundary_simple - 2 - s;
}

int64_t log_gauss_degree(int64_t interior, int64_t boundary_simple,
                         const SingularityProfile& profile) {
    int64_t d = log_gauss_degree_raw(interior, boundary_simple, profile);
    if (d <= 0)
        throw Error("invariants", "degenerate_curve",
                    "log-Gauss degree " + std::to_string(d) + " is not positive");
    return d;
}

std::pair<int64_t, int64_t> geometric_genus(int64_t interior, const SingularityProfile& profile) {
    validate_profile(profile);
    int64_t s = 0;
    for (const auto& p : profile.points) s += p.mu + p.beta - 1;
    int64_t genus = interior - s / 2;
    if (genus < 0)
        throw Error("invariants", "inconsistent_profile",
                    "adjunction gives negative genus " + std::to_string(genus));
    return {genus, 2 - 2 * genus};
}

int64_t inflection_count(int64_t deg_gauss, int64_t chi) { return 2 * deg_gauss - chi; }

CurveInvariants curve_invariants(int64_t interior, const SingularityProfile& profile,
                                 const BoundaryProfile& boundary) {
    CurveInvariants inv;
    inv.counts = cuspidal_nodal_numbers(profile, boundary);
    inv.deg_gauss = log_gauss_degree(interior, inv.counts.boundary_points, profile);
    auto [genus, chi] = geometric_genus(interior, profile);
    inv.genus = genus;
    inv.chi = chi;
    inv.inflections = inflection_count(inv.deg_gauss, chi);
    // Cuspidal count must match -deg_gauss - chi(curve minus boundary).
    int64_t via_euler = -inv.deg_gauss - (inv.chi - inv.counts.boundary_points);
    if (via_euler != inv.counts.c)
        throw Error("invariants", "inconsistent_profile",
                    "cuspidal number mismatch: profile gives " + std::to_string(inv.counts.c) +
                        ", Euler route gives " + std::to_string(via_euler));
    return inv;
}

int64_t tangency_multiplicity(int64_t intersection_mult, int64_t m1, int64_t m2) {
    if (intersection_mult < m1 * m2)
        throw Error("invariants", "inconsistent_intersection",
                    "intersection multiplicity below the product of point multiplicities");
    return intersection_mult - m1 * m2;
}

int64_t logfront_gauss_degree(int64_t deg_gauss_p, int64_t deg_gauss_q) {
    if (deg_gauss_p < 1 || deg_gauss_q < 1)
        throw Error("invariants", "bad_degree", "log-Gauss degrees must be at least 1");
    return deg_gauss_p * deg_gauss_q;
}

std::pair<int64_t, int64_t> logfront_euler(int64_t deg_gauss_p, int64_t deg_gauss_q,
                                           int64_t chi_p, int64_t chi_q,
                                           const std::vector<CoincidencePair>& coincidences) {
    int64_t chi_hat =
        -2 * deg_gauss_p * deg_gauss_q + chi_p * deg_gauss_q + chi_q * deg_gauss_p;
    int64_t chi_tilde = chi_hat;
    for (const auto& c : coincidences) {
        if (c.nu_p < 1 || c.nu_q < 1)
            throw Error("invariants", "bad_profile", "ramification orders must be positive");
        chi_tilde += std::gcd(c.nu_p, c.nu_q) - 1;
    }
    return {chi_hat, chi_tilde};
}

int64_t logfront_cuspidal(int64_t chi_r, int64_t boundary_r, int64_t chi_p, int64_t c_p,
                          int64_t boundary_p, int64_t chi_q, int64_t c_q, int64_t boundary_q) {
    return -chi_r + boundary_r - (chi_p + c_p - boundary_p) * (chi_q + c_q - boundary_q);
}

int64_t logfront_nodal(int64_t interior_r, int64_t genus_r, int64_t cusps_r) {
    int64_t nodes = interior_r - genus_r - cusps_r;
    if (nodes < 0)
        throw Error("invariants", "assumption_violated",
                    "negative node count; curve has singularities beyond nodes and cusps");
    return nodes;
}

GenericDegreeReport generic_degree_report(int64_t d_p, int64_t d_q) {
    if (d_p < 1 || d_q < 1)
        throw Error("invariants", "bad_degree", "curve degrees must be at least 1");
    GenericDegreeReport r;
    const int64_t pq = d_p * d_q;
    r.chi = -pq * (4 * pq - 3 * d_p - 3 * d_q);
    if ((2 - r.chi) % 2 != 0)
        throw Error("invariants", "half_integer", "Euler characteristic parity violated");
    r.genus = (2 - r.chi) / 2;
    r.cusps = 3 * pq * pq - 6 * pq;
    // d_P^4 d_Q^2 / 2 + 2 d_P^3 d_Q^3 + d_P^2 d_Q^4 / 2
    //   - 3 d_P^3 d_Q^2 - 3 d_P^2 d_Q^3 - 2 d_P^2 d_Q^2 + 9 d_P d_Q
    Rational nodes = Rational(d_p * d_p * d_p * d_p * d_q * d_q, 2) +
                     Rational(2 * d_p * d_p * d_p * d_q * d_q * d_q) +
                     Rational(d_p * d_p * d_q * d_q * d_q * d_q, 2) -
                     Rational(3 * d_p * d_p * d_p * d_q * d_q) -
                     Rational(3 * d_p * d_p * d_q * d_q * d_q) - Rational(2 * pq * pq) +
                     Rational(9 * pq);
    if (!nodes.is_integer())
        throw Error("invariants", "half_integer", "node count is not an integer");
    r.nodes = nodes.num().get_si();
    r.hexagon_side_q = pq * (d_q - 1);
    r.hexagon_side_p = pq * (d_p - 1);
    r.degenerate = r.cusps < 0 || r.nodes < 0 || (r.hexagon_side_p == 0 && r.hexagon_side_q == 0);
    return r;
}

int64_t klein_sum(const MarkedPolygon& dp, const MarkedPolygon& dq,
                  const SingularityProfile& profile_p, const BoundaryProfile& boundary_p,
                  const SingularityProfile& profile_q, const BoundaryProfile& boundary_q,
                  int64_t chi_q) {
    RefinedCounts cp = cuspidal_nodal_numbers(profile_p, boundary_p);
    RefinedCounts cq = cuspidal_nodal_numbers(profile_q, boundary_q);

    LatticePolygon pq_polygon =
        minkowski_combine({{1, dq.polygon, false}, {1, dp.polygon, true}});
    int64_t n = pq_polygon.vertex_count();
    Rational mv = mixed_volume(dp.polygon, dq.polygon);
    int64_t eps = epsilon_pairing(dp.polygon, dq.polygon);
    Rational area_p(dp.polygon.area2(), 2);
    int64_t perim_q = dq.polygon.lattice_perimeter();

    Rational total = Rational(4 - 2 * n) * mv;
    total += Rational(2) * area_p *
             Rational(perim_q - chi_q + 2 * cq.b_re_plus + cq.boundary_nodal_re - cq.c_im);
    total -= Rational(2 * cp.b_re_plus + cp.boundary_nodal_re) *
             Rational(2 * cq.b_re_plus + cq.boundary_nodal_re + cq.c_re);
    total += Rational(eps);
    if (!total.is_integer())
        throw Error("invariants", "half_integer", "Klein sum is not an integer");
    return total.num().get_si();
}

KleinGeneric klein_generic(int64_t d_p, int64_t d_q) {
    if (d_p < 1 || d_q < 1)
        throw Error("invariants", "bad_degree", "curve degrees must be at least 1");
    KleinGeneric out;
    out.value = d_p * d_p * d_q * d_q - 2 * d_p * d_q;
    out.degenerate = out.value < 0;
    return out;
}

int64_t classical_klein_check(int64_t d, int64_t d_star, int64_t b_plus_q, int64_t c_re_q,
                              int64_t b_plus_r, int64_t c_re_r) {
    return (d - 2 * b_plus_q - c_re_q) - (d_star - 2 * b_plus_r - c_re_r);
}

}  // namespace logfront
