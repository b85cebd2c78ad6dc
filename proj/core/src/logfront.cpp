#include "logfront/logfront.hpp"

#include <algorithm>
#include <map>

#include "logfront/error.hpp"

namespace logfront {

namespace {

void check_curve_input(const SparsePoly& p, const char* which) {
    if (p.is_zero())
        throw Error("logfront", "zero_curve", std::string(which) + " is the zero polynomial");
    if (!p.uses_only({Var::z, Var::w}))
        throw Error("logfront", "bad_variables",
                    std::string(which) + " must be a polynomial in z and w");
}

void check_degree_bound(const SparsePoly& p, int64_t bound, const char* stage) {
    if (p.total_degree() > bound)
        throw Error("logfront", "degree_bound_exceeded",
                    std::string(stage) + " has total degree " + std::to_string(p.total_degree()) +
                        " > bound " + std::to_string(bound));
}

}  // namespace

std::tuple<SparsePoly, SparsePoly, SparsePoly> tangency_scheme(const SparsePoly& p,
                                                               const SparsePoly& q) {
    check_curve_input(p, "P");
    check_curve_input(q, "Q");
    SparsePoly pd = dilate(p);
    return {pd, q, wronskian(pd, q)};
}

SparsePoly compute_R1(const SparsePoly& p, const SparsePoly& q, SparsePoly* content_out) {
    check_curve_input(p, "P");
    check_curve_input(q, "Q");
    SparsePoly pd = dilate(p);
    if (pd.degree(Var::w) <= 0 && q.degree(Var::w) <= 0)
        throw Error("logfront", "no_w_dependence", "neither curve involves w");
    SparsePoly r1 = resultant(pd, q, Var::w);
    if (r1.is_zero())
        throw Error("logfront", "resultant_vanishes",
                    "first resultant is identically zero; the curves share a component");
    SparsePoly content = content_in(r1, Var::z);
    if (content_out) *content_out = content;
    return canonical_unit(exact_div(r1, content));
}

SparsePoly compute_R2(const SparsePoly& r1) {
    if (r1.degree(Var::z) <= 0)
        throw Error("logfront", "no_z_dependence",
                    "first elimination left nothing to project; tangency locus empty or everything");
    SparsePoly r2 = resultant(r1, r1.derivative(Var::z), Var::z);
    return canonical_unit(r2);
}

namespace {

// Full square-free split of a polynomial in (a,b): Yun with respect to a,
// then the a-free content decomposed with respect to b. Factors with equal
// multiplicity are merged so multiplicities stay strictly increasing.
SquarefreeDecomposition squarefree_ab(const SparsePoly& p) {
    SquarefreeDecomposition first = squarefree_decomposition(p, Var::a);
    SquarefreeDecomposition out;
    std::map<int, SparsePoly> merged;
    for (const auto& [f, m] : first.factors) merged.emplace(m, f);
    if (first.content.degree(Var::b) > 0) {
        SquarefreeDecomposition second = squarefree_decomposition(first.content, Var::b);
        for (const auto& [f, m] : second.factors) {
            auto [it, inserted] = merged.emplace(m, f);
            if (!inserted) it->second = canonical_unit(it->second * f);
        }
        out.content = second.content;
    } else {
        out.content = first.content;
    }
    for (auto& [m, f] : merged) out.factors.emplace_back(f, m);
    // content is recovered exactly so that content * prod f^m == p.
    SparsePoly prod = SparsePoly::one();
    for (const auto& [f, m] : out.factors) prod *= f.pow(static_cast<uint32_t>(m));
    out.content = exact_div(p, prod);
    return out;
}

}  // namespace

LogFrontResult extract_logfront(const SparsePoly& r2, const SparsePoly& p, const SparsePoly& q,
                                const SingularityProfile& profile_p,
                                const SingularityProfile& profile_q) {
    if (r2.is_zero()) throw Error("logfront", "zero_input", "second elimination is zero");
    LogFrontResult out;
    out.R2 = canonical_unit(r2);
    out.sqfree = squarefree_ab(out.R2);

    SparsePoly r = SparsePoly::one();
    for (const auto& [factor, mult] : out.sqfree.factors) {
        if (mult == 1) {
            r *= factor;
        } else {
            out.removed.push_back({factor, "multiplicity>1"});
        }
    }

    // Singular points of Q pin dilated copies of P inside the scheme; their
    // projections are spurious. Same for singular points of P against Q.
    for (const auto& point : profile_q.points) {
        if (!point.at) continue;
        SparsePoly d = dilate_eval_at(p, point.at->first, point.at->second);
        SparsePoly g = poly_gcd(r, d);
        if (!g.is_constant()) {
            r = exact_div(r, g);
            out.removed.push_back({g, "dilate-of-P"});
        }
    }
    for (const auto& point : profile_p.points) {
        if (!point.at) continue;
        SparsePoly d = reciprocal_dilate_eval(q, point.at->first, point.at->second);
        SparsePoly g = poly_gcd(r, d);
        if (!g.is_constant()) {
            r = exact_div(r, g);
            out.removed.push_back({g, "dilate-of-Q"});
        }
    }

    // Monomial factors in a/b sit on the torus boundary, not in the dual.
    out.removed_monomial_a = static_cast<uint32_t>(r.min_degree(Var::a));
    out.removed_monomial_b = static_cast<uint32_t>(r.min_degree(Var::b));
    if (out.removed_monomial_a > 0 || out.removed_monomial_b > 0) {
        Exponents shift{};
        shift[static_cast<int>(Var::a)] = out.removed_monomial_a;
        shift[static_cast<int>(Var::b)] = out.removed_monomial_b;
        r = exact_div(r, SparsePoly::monomial(shift, Rational(1)));
    }

    out.R = canonical_unit(r);
    out.empty_logfront = out.R.is_constant();
    out.polygon_computed = out.empty_logfront ? LatticePolygon() : newton_polygon(out.R);
    return out;
}

LogFrontResult run_pipeline(const SparsePoly& p, const SparsePoly& q,
                            const SingularityProfile& profile_p,
                            const SingularityProfile& profile_q,
                            const PipelineOptions& options) {
    check_curve_input(p, "P");
    check_curve_input(q, "Q");
    check_degree_bound(p, options.degree_bound, "P");
    check_degree_bound(q, options.degree_bound, "Q");

    SparsePoly r1, r1_content, r2;
    if (options.order == EliminationOrder::w_then_z) {
        r1 = compute_R1(p, q, &r1_content);
        check_degree_bound(r1, options.degree_bound, "R1");
        r2 = compute_R2(r1);
    } else {
        // Mirror chain: eliminate z first, then w.
        SparsePoly pd = dilate(p);
        if (pd.degree(Var::z) <= 0 && q.degree(Var::z) <= 0)
            throw Error("logfront", "no_z_dependence", "neither curve involves z");
        SparsePoly raw = resultant(pd, q, Var::z);
        if (raw.is_zero())
            throw Error("logfront", "resultant_vanishes",
                        "first resultant is identically zero; the curves share a component");
        r1_content = content_in(raw, Var::w);
        r1 = canonical_unit(exact_div(raw, r1_content));
        check_degree_bound(r1, options.degree_bound, "R1");
        if (r1.degree(Var::w) <= 0)
            throw Error("logfront", "no_w_dependence",
                        "first elimination left nothing to project; tangency locus empty or everything");
        r2 = canonical_unit(resultant(r1, r1.derivative(Var::w), Var::w));
    }
    check_degree_bound(r2, options.degree_bound, "R2");
    if (r2.is_zero())
        throw Error("logfront", "resultant_vanishes", "second elimination is identically zero");

    LogFrontResult out = extract_logfront(r2, p, q, profile_p, profile_q);
    out.R1 = r1;
    out.r1_content = r1_content;
    return out;
}

ValidationReport validate(LogFrontResult& result, const MarkedPolygon& dp,
                          const MarkedPolygon& dq, int64_t deg_gauss_p, int64_t deg_gauss_q) {
    MarkedPolygon predicted = predict_logfront_polygon(dp, dq, deg_gauss_p, deg_gauss_q);
    result.polygon_predicted = predicted;

    ValidationReport report;
    report.match = result.polygon_computed == predicted.polygon;
    if (!report.match) {
        std::map<std::pair<int64_t, int64_t>, DirectionDelta> deltas;
        for (const auto& e : result.polygon_computed.edges()) {
            auto& d = deltas[{e.dir.x, e.dir.y}];
            d.dir = e.dir;
            d.computed += e.length;
        }
        for (const auto& e : predicted.polygon.edges()) {
            auto& d = deltas[{e.dir.x, e.dir.y}];
            d.dir = e.dir;
            d.predicted += e.length;
        }
        for (auto& [key, d] : deltas)
            if (d.computed != d.predicted) report.deltas.push_back(d);
    }
    result.match = report.match;
    return report;
}

DoubleDualReport double_dual_check(const SparsePoly& p, const SparsePoly& q,
                                   const PipelineOptions& options) {
    check_curve_input(p, "P");
    check_curve_input(q, "Q");
    if (!poly_gcd(p, q).is_constant())
        throw Error("logfront", "shared_component",
                    "P and Q share a component; tangency is not isolated");

    DoubleDualReport out;
    LogFrontResult first = run_pipeline(p, q, {}, {}, options);
    if (first.empty_logfront)
        throw Error("logfront", "empty_logfront", "first stage produced an empty log-front");
    out.first_stage_R = first.R;

    // Re-read the dual as a curve in (z,w) and dualize again.
    std::array<Var, kVarCount> to_zw = {Var::z, Var::w, Var::z, Var::w, Var::t};
    SparsePoly s_zw = rename_vars(first.R, to_zw);

    SparsePoly r1 = compute_R1(p, s_zw, nullptr);
    check_degree_bound(r1, options.degree_bound, "second-stage R1");
    out.second_stage_R2 = compute_R2(r1);

    std::array<Var, kVarCount> to_ab = {Var::a, Var::b, Var::a, Var::b, Var::t};
    SparsePoly q_ab = canonical_unit(rename_vars(q, to_ab));
    SparsePoly rest = out.second_stage_R2;
    while (true) {
        SparsePoly quotient;
        if (!try_exact_div(rest, q_ab, quotient)) break;
        rest = quotient;
        out.multiplicity += 1;
    }
    out.quotient_exists = out.multiplicity > 0;
    return out;
}

}  // namespace logfront
