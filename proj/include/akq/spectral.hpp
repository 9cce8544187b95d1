#pragma once

#include <string>
#include <vector>

#include "akq/geometry.hpp"
#include "akq/operators.hpp"
#include "akq/types.hpp"

namespace akq {

int riemann_roch_dimension(BackendKind kind, int k);
int riemann_roch_dimension(const SymplecticBackend& backend, int k);

struct SolverOptions {
    double tol = 1e-9;           // relative residual, scale max(1, |lambda|)
    int block = 0;               // 0: m + 4
    int depth = 6;               // blocks per restart cycle
    int max_iterations = 0;      // operator applications per column budget; 0: 50 m
    unsigned seed = 20240611;
    std::size_t dense_threshold = 600;   // solve densely at or below this dimension
    // Generate Krylov blocks with -(A - s)^{-1}, s below the spectrum, when the
    // operator can assemble itself sparsely and carries a lower bound.
    bool shift_invert = true;
};

struct SpectralResult {
    RVec values;                 // ascending
    CMat vectors;                // columns, Euclidean-orthonormal
    RVec residuals;              // |A v - lambda v|
    bool converged = false;
    int iterations = 0;          // restart cycles
    long matvecs = 0;
    long reorthogonalizations = 0;
    std::string method;
    double max_gram_defect = 0.0;
};

SpectralResult dense_eigenpairs(const CMat& A, std::size_t m);
SpectralResult dense_eigenpairs(const HermitianOperatorHandle& op, std::size_t m);

// Lowest m eigenpairs by thick-restarted block Lanczos with full
// reorthogonalization.  Unconverged results are flagged, never hidden.
SpectralResult lowest_eigenpairs(const HermitianOperatorHandle& op, std::size_t m,
                                 const SolverOptions& options = {});

struct GapReport {
    int k = 0;
    int d_k = 0;
    double a_measured = 0.0;    // max_{j <= d_k} |lambda_j|
    double gap_next = 0.0;      // lambda_{d_k + 1}
    double band_top = 0.0;      // lambda_{d_k}
    int count_below_gap = 0;    // eigenvalues below the largest relative jump
    bool accepted = false;
};
// Requires at least d_k + 1 converged eigenvalues.
GapReport gap_report(const SpectralResult& result, const SymplecticBackend& backend, int k);
// Position of the largest relative jump among the first `count` values:
// returns the number of eigenvalues below it.
int largest_gap_position(const RVec& values, std::size_t count);

struct AffineFit {
    double slope = 0.0;
    double offset = 0.0;
    double slope_stderr = 0.0;
    double offset_stderr = 0.0;
    double max_residual = 0.0;
};
AffineFit affine_fit(const std::vector<double>& x, const std::vector<double>& y);
// Least-squares fit of min spec Delta_k against k; needs >= 4 points.
AffineFit drift_fit(const std::vector<int>& ks, const std::vector<double>& min_eigenvalues);

}  // namespace akq
