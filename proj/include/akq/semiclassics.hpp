#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "akq/geometry.hpp"
#include "akq/quantization.hpp"
#include "akq/types.hpp"

namespace akq {

// Measured values against k with a log-log fit.  A slope gate is applied when
// expected_slope is finite; the fit residual gate always applies.
struct RateSeries {
    std::string claim;
    std::vector<int> ks;
    std::vector<double> values;
    double slope = std::numeric_limits<double>::quiet_NaN();
    double intercept = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::quiet_NaN();   // max |log10 residual|
    double expected_slope = std::numeric_limits<double>::quiet_NaN();
    double slope_tolerance = 0.0;
    double max_residual = 0.15;
    bool fitted = false;
    bool pass = false;
    std::string note;
};

// Requires >= 4 points with strictly increasing k.  Non-positive values make
// the fit impossible; the series is then reported as failing with a note.
RateSeries fit_rate(std::string claim, std::vector<int> ks, std::vector<double> values,
                    double expected_slope, double slope_tolerance, double max_residual = 0.15);

// phi_hat(t) = amplitude * exp(-1 / (1 - (t/T0)^2)) on |t| < T0, and
// phi(x) = (1/2pi) int phi_hat(t) e^{ixt} dt by the trapezoid rule on 4096
// intervals (spectrally accurate for a bump that is flat at the ends).
class TestFunctionProfile {
public:
    explicit TestFunctionProfile(double support, double amplitude = 1.0);

    double support() const { return support_; }
    double amplitude() const { return amplitude_; }
    double fourier(double t) const;
    double fourier_at_zero() const { return fourier(0.0); }
    double operator()(double x) const;
    // |phi_4096 - phi_2048| over a probe set covering |x| <= x_max.
    double quadrature_error(double x_max) const;

private:
    double evaluate(double x, int intervals) const;
    double support_;
    double amplitude_;
};

// Source of quantum spaces; lets callers share or cache the spectral work.
using SpaceSource = std::function<QuantumSpace(BackendPtr, int k, Scheme)>;
QuantumSpace build_space(BackendPtr backend, int k, Scheme scheme);

// Sign s in |i k [T(f), T(g)] - s T({f,g})|, frozen from the integrable T2
// oracle at k = 10 (f = cos 2 pi x, g = sin 2 pi y).
constexpr int kCommutatorSign = -1;
// Sign s in |U T(f) U^* - T(f o phi_{s t})|, U = exp(-i k t T(H)), frozen the same way.
constexpr int kEgorovSign = -1;

struct CommutatorSignProbe {
    double defect_plus = 0.0;
    double defect_minus = 0.0;
    int sign() const { return defect_minus < defect_plus ? -1 : 1; }
};
CommutatorSignProbe probe_commutator_sign(const QuantumSpace& space, const ScalarField& f, const ScalarField& g);
CommutatorSignProbe probe_egorov_sign(const QuantumSpace& space, const FlowCatalogEntry& flow, const ScalarField& f,
                                      double t);

// Norm defect, product defect and commutator-vs-bracket defect.
std::vector<RateSeries> deformation_suite(BackendPtr backend, const ScalarField& f, const ScalarField& g,
                                          const std::vector<int>& ks, Scheme scheme = Scheme::AlmostKahler,
                                          const SpaceSource& source = build_space);

// |S(f) - T(f)| as operators on the graded L2 space; also returns the bound
// 2 max|f| dist(H_k, Q_k) per k in `bounds` when non-null.
RateSeries scheme_comparison_suite(BackendPtr backend, const ScalarField& f, const std::vector<int>& ks,
                                   std::vector<double>* bounds = nullptr, std::vector<double>* distances = nullptr,
                                   const SpaceSource& source = build_space);
double scheme_difference(const QuantumSpace& ak, const QuantumSpace& spinc, const ScalarField& f);

double egorov_defect(const QuantumSpace& space, const FlowCatalogEntry& flow, const ScalarField& f, double t);
RateSeries egorov_suite(BackendPtr backend, const FlowCatalogEntry& flow, const ScalarField& f, double t,
                        const std::vector<int>& ks, const SpaceSource& source = build_space);

struct WeightedTrace {
    double value = 0.0;
    RVec eigenvalues;
};
WeightedTrace weighted_trace(const QuantumSpace& space, const ScalarField& H, double E,
                             const TestFunctionProfile& profile);
// Same sum for an explicit Hermitian matrix.
WeightedTrace weighted_trace(const CMat& toeplitz_matrix, int k, double E, const TestFunctionProfile& profile);

struct TraceFormulaCheck {
    double leading = 0.0;            // (2 pi)^{-n} phi_hat(0) vol(H^{-1}(E))
    double liouville_volume = 0.0;
    std::vector<double> traces;
    std::vector<double> relative;    // |trace - leading| / |leading|
    bool decreasing = false;         // negative log-log trend and last below first
    bool monotone = false;           // every step decreases
    RateSeries series;               // absolute deviations, rate reported
};
TraceFormulaCheck trace_formula_check(BackendPtr backend, const FlowCatalogEntry& flow, double E,
                                      const TestFunctionProfile& profile, const std::vector<int>& ks,
                                      double final_tolerance = 0.15, const SpaceSource& source = build_space);

}  // namespace akq
