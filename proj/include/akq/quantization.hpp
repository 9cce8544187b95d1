#pragma once

#include <string>
#include <vector>

#include "akq/bundle.hpp"
#include "akq/geometry.hpp"
#include "akq/operators.hpp"
#include "akq/spectral.hpp"
#include "akq/types.hpp"

namespace akq {

enum class Scheme { AlmostKahler, Spinc };
std::string to_string(Scheme s);

// Orthonormal basis (L2 product of the backend) of a d_k-dimensional space
// of sections, stored as coefficient columns in the SectionVector layout.
struct QuantumSpace {
    Scheme scheme = Scheme::AlmostKahler;
    BackendPtr backend;
    int k = 0;
    int rank = 1;
    std::vector<int> degrees{0};
    CMat basis;
    std::string provenance;

    // Spectral diagnostics of the construction.
    RVec band;                       // eigenvalues of the retained vectors
    double gap_next = 0.0;           // first eigenvalue above the band
    int count_below_gap = 0;
    // Spin^c only.
    double odd_min_eigenvalue = 0.0;
    std::vector<double> degree_ratios;   // |higher-degree part| / |degree-0 part| per basis vector
    std::vector<std::size_t> window;     // Galerkin window size per form degree

    std::size_t dimension() const { return static_cast<std::size_t>(basis.cols()); }
    SectionVector section(std::size_t j) const;
    double max_gram_defect() const;
};

struct SpaceOptions {
    SolverOptions solver;
    int window_levels = 3;   // Spin^c Galerkin window: Landau levels kept above the kernel
};

// Lowest 2 d_k + 2 eigenpairs of the rescaled Laplacian.
SpectralResult rescaled_laplacian_band(BackendPtr backend, int k, const SolverOptions& options = {});

// Span of the d_k lowest eigenvectors of the rescaled Laplacian.  Refuses when
// the detected gap is not at position d_k.
QuantumSpace almost_kahler_space(BackendPtr backend, int k, const SpaceOptions& options = {});
QuantumSpace almost_kahler_space(BackendPtr backend, const SpectralResult& band, int k);

// Even-graded kernel of the Dirac operator, computed from D^2 on the even
// sector after Galerkin compression of D onto low-lying twisted-Laplacian
// eigenvectors of each form degree.  The compression removes the lattice
// doublers, which otherwise pair up with the physical zero modes.
QuantumSpace spinc_space(BackendPtr backend, int k, const SpaceOptions& options = {});

// Degree-0 sections viewed inside the graded bundle of `like`.
QuantumSpace embed_degree_zero(const QuantumSpace& space, const QuantumSpace& like);

struct ToeplitzMatrix {
    Scheme scheme = Scheme::AlmostKahler;
    int k = 0;
    std::string symbol;
    CMat matrix;

    double norm() const;
    RVec eigenvalues() const;
};

ToeplitzMatrix toeplitz(const QuantumSpace& space, const ScalarField& f);

// sin of the largest principal angle.  Spaces must have equal dimension and
// share the ambient layout (embed first when comparing schemes).
double projector_distance(const QuantumSpace& a, const QuantumSpace& b);

// sum_j |psi_j(x)|^2, sampled on the sites (tori) or on the sphere sample grid.
ScalarField bergman_diagonal(const QuantumSpace& space);
// Integral of a field against the Riemannian volume.
double integrate(const ScalarField& f);

}  // namespace akq
