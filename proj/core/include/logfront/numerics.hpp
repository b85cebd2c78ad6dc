#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "logfront/poly.hpp"

namespace logfront {

// Every tolerance in the floating-point layer lives here; call sites may
// override per invocation.
struct NumericsConfig {
    double root_residual_tol = 1e-10;   // |p(x)| / scale after root finding
    double root_cluster_tol = 1e-7;     // merge radius for multiplicity clusters
    int root_max_iter = 400;
    double fiber_verify_tol = 1e-8;     // |P|, |Q| at reconstructed fiber points
    double trace_residual_tol = 1e-9;   // |f| at refined trace points, times scale
    double cusp_angle_threshold = 2.5;  // radians
    int theta_samples = 64;             // samples per argument sweep
    double min_theta_step = 6.0e-6;     // 2*pi / 2^20, sweep refinement floor
    uint64_t seed = 0;
};

struct Window {
    double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
};

// --- univariate roots ---------------------------------------------------------

struct RootCluster {
    std::complex<double> value;
    int multiplicity = 1;
};

// Simultaneous (Aberth) iteration; roots are clustered within
// root_cluster_tol and returned with summed multiplicities. Coefficients are
// in ascending order: coeffs[k] multiplies x^k. Throws numerics.no_convergence
// with partial results rendered into the message on iteration-cap overrun.
std::vector<RootCluster> univariate_roots(const std::vector<std::complex<double>>& coeffs,
                                          const NumericsConfig& config = {});

// --- fibers and tangency residuals ----------------------------------------------

struct FiberSolution {
    std::complex<double> z, w;
    int multiplicity = 1;
};

std::vector<FiberSolution> fiber_solutions(const SparsePoly& p, const SparsePoly& q,
                                           std::complex<double> a, std::complex<double> b,
                                           const NumericsConfig& config = {});

// Scaled Wronskian residual, minimized over the fiber; +infinity on an empty
// fiber. Small values certify tangency at the dilation (a, b).
double tangency_residual(const SparsePoly& p, const SparsePoly& q, std::complex<double> a,
                         std::complex<double> b, const NumericsConfig& config = {});

// --- implicit-curve tracing -----------------------------------------------------

struct TracePoint {
    double x = 0, y = 0;
    double residual = 0;
};

struct TraceSet {
    std::vector<std::vector<TracePoint>> polylines;  // each with >= 2 points
    Window window;
    int resolution = 0;
    std::string tag;
};

// Marching squares on the sign grid of f with per-crossing bisection
// refinement. Resolution is the number of cells per axis (>= 8).
TraceSet trace_real_locus(const std::function<double(double, double)>& f, const Window& window,
                          int resolution, const NumericsConfig& config = {},
                          const std::string& tag = "");

struct CuspCandidate {
    double x = 0, y = 0;
    double turning_angle = 0;
    double confidence = 0;  // min/max adjacent segment length ratio
};

// Heuristic corner detector on refined polylines: turning angles above the
// threshold, deduplicated within one grid cell.
std::vector<CuspCandidate> cusp_detect(const TraceSet& trace, double angle_threshold = 2.5);

// --- amoeba / alga / Harnack ------------------------------------------------------

struct CloudPoint {
    double x = 0, y = 0;
    double residual = 0;
};

// Points (log|z|, log|w|) of the curve, sampled over a modulus/argument grid.
std::vector<CloudPoint> amoeba_sample(const SparsePoly& p, const Window& window,
                                      int modulus_samples, int angle_samples,
                                      const NumericsConfig& config = {});

// Points (arg z, arg w) reduced modulo pi in each coordinate, in [0,pi)^2.
std::vector<CloudPoint> alga_sample(const SparsePoly& p, int modulus_samples, int angle_samples,
                                    const NumericsConfig& config = {});

// Cardinality of Log^{-1}(x,y) on the curve: sign crossings of
// log|w_j(theta)| - y along continuously tracked root branches.
int fiber_point_count(const SparsePoly& p, double x, double y,
                      const NumericsConfig& config = {});

struct HarnackFiberReport {
    int max_fiber = 0;
    bool pass = false;  // max <= 2
    double grid_x0 = 0, grid_x1 = 0, grid_y0 = 0, grid_y1 = 0;
};

HarnackFiberReport harnack_fiber_test(const SparsePoly& p, const Window& window, int grid,
                                      const NumericsConfig& config = {});

struct AmoebaAreaReport {
    double area = 0;
    double stderr_estimate = 0;
    double expected = 0;    // pi^2 * Area(newton polygon)
    double bias_bound = 0;  // crude tentacle-tail bound beyond the window
    bool harnack_area_verdict = false;
    uint64_t samples = 0;
};

// Hit-or-miss Monte Carlo against a column-discretized membership oracle.
AmoebaAreaReport amoeba_area_estimate(const SparsePoly& p, const Window& window, uint64_t n,
                                      const NumericsConfig& config = {}, int columns = 4096);

// --- sample verification -----------------------------------------------------------

struct SampleFailure {
    double a_re = 0, a_im = 0, b_re = 0, b_im = 0;
    double residual = 0;
};

struct SampleReport {
    uint64_t samples_on_curve = 0;
    uint64_t samples_off_curve = 0;
    double max_on_curve_residual = 0;
    double min_off_curve_residual = 0;
    std::vector<SampleFailure> failures;
    bool pass = false;
};

// Samples points on {R = 0} (roots of R(a, .)) and random off-curve points;
// tangency residuals must be below `tol` on the curve and above
// `off_tol` at distance >= `off_distance` from it.
SampleReport verify_tangency(const SparsePoly& p, const SparsePoly& q, const SparsePoly& r,
                             uint64_t samples, double tol, double off_tol = 1e-2,
                             double off_distance = 0.1, const NumericsConfig& config = {});

// --- writers -------------------------------------------------------------------------

std::string trace_to_csv(const TraceSet& trace);
std::string cloud_to_csv(const std::vector<CloudPoint>& cloud);
std::string trace_to_svg(const TraceSet& trace, const std::vector<CuspCandidate>& cusps = {});

}  // namespace logfront
