#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "logfront/elimination.hpp"
#include "logfront/invariants.hpp"
#include "logfront/lattice.hpp"
#include "logfront/poly.hpp"

namespace logfront {

// Which variable is eliminated first. Both orders must yield the same
// canonical dual polynomial.
enum class EliminationOrder { w_then_z, z_then_w };

struct PipelineOptions {
    EliminationOrder order = EliminationOrder::w_then_z;
    int64_t degree_bound = 64;  // cap on intermediate total degree
};

struct RemovedFactor {
    SparsePoly factor;
    std::string reason;  // "multiplicity>1" | "dilate-of-P" | "dilate-of-Q"
};

struct LogFrontResult {
    SparsePoly R;   // canonical, monomial-free dual polynomial in (a,b)
    SparsePoly R1;  // first elimination, content-stripped
    SparsePoly R2;  // second elimination, scalar-canonical
    SquarefreeDecomposition sqfree;     // of R2
    std::vector<RemovedFactor> removed;
    uint32_t removed_monomial_a = 0;  // stripped a-exponent
    uint32_t removed_monomial_b = 0;  // stripped b-exponent
    SparsePoly r1_content;            // provenance: content stripped from R1
    LatticePolygon polygon_computed;
    std::optional<MarkedPolygon> polygon_predicted;
    bool match = false;
    bool empty_logfront = false;
};

// The three defining polynomials of the tangency scheme:
// (P(az,bw), Q(z,w), wronskian). Inputs must be nonzero (z,w)-polynomials.
std::tuple<SparsePoly, SparsePoly, SparsePoly> tangency_scheme(const SparsePoly& p,
                                                               const SparsePoly& q);

// resultant_w(P(az,bw), Q), stripped of its z-content. The stripped content
// is reported through `content_out` when non-null.
SparsePoly compute_R1(const SparsePoly& p, const SparsePoly& q,
                      SparsePoly* content_out = nullptr);

// resultant_z(R1, dR1/dz), scalar-canonical. Degree-zero R1 raises
// logfront.no_z_dependence.
SparsePoly compute_R2(const SparsePoly& r1);

// Multiplicity-one extraction with dilate-factor removal and monomial
// stripping. Profiles supply the singular points whose spurious components
// are divided out when they carry rational coordinates.
LogFrontResult extract_logfront(const SparsePoly& r2, const SparsePoly& p, const SparsePoly& q,
                                const SingularityProfile& profile_p,
                                const SingularityProfile& profile_q);

// Full chain: scheme, R1, R2, extraction. Generic entry point for callers.
LogFrontResult run_pipeline(const SparsePoly& p, const SparsePoly& q,
                            const SingularityProfile& profile_p = {},
                            const SingularityProfile& profile_q = {},
                            const PipelineOptions& options = {});

struct DirectionDelta {
    LatticePoint dir;
    int64_t computed = 0;
    int64_t predicted = 0;
};

struct ValidationReport {
    bool match = false;
    std::vector<DirectionDelta> deltas;  // nonempty only on mismatch
};

// Fills polygon_predicted / match on the result; never touches R.
ValidationReport validate(LogFrontResult& result, const MarkedPolygon& dp,
                          const MarkedPolygon& dq, int64_t deg_gauss_p, int64_t deg_gauss_q);

struct DoubleDualReport {
    bool quotient_exists = false;
    int64_t multiplicity = 0;
    SparsePoly first_stage_R;   // P / Q
    SparsePoly second_stage_R2; // before multiplicity-one stripping
};

// Computes S = P / Q, re-reads S as a curve in (z,w) and forms P / S; reports
// whether Q divides the second-stage R2 and with which multiplicity.
DoubleDualReport double_dual_check(const SparsePoly& p, const SparsePoly& q,
                                   const PipelineOptions& options = {});

}  // namespace logfront
