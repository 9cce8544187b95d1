#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akq/types.hpp"

namespace akq {

enum class BackendKind { Torus2, Torus4, Sphere2 };

// How the almost complex structure is produced.
//   Standard     constant compatible J
//   Conformal    T2: G = 2pi e^{a cos 2pi x} I (polar construction returns the standard J)
//   Anisotropic  T2: G = 2pi diag(e^{a cos 2pi x}, e^{-a cos 2pi x}); varying, integrable
//   Mixing       T4: x1-dependent G coupling the (x1,x2) and (x3,x4) planes; non-integrable
enum class JRecipe { Standard, Conformal, Anisotropic, Mixing };

struct BackendSpec {
    BackendKind kind = BackendKind::Torus2;
    int resolution = 0;  // sites per axis (tori) or truncation depth above the lowest level (sphere)
    JRecipe recipe = JRecipe::Standard;
    double amplitude = 0.3;

    std::string descriptor() const;
};

std::string to_string(BackendKind kind);
std::string to_string(JRecipe recipe);
BackendKind parse_backend_kind(const std::string& s);
JRecipe parse_j_recipe(const std::string& s);

struct ValidationReport {
    double max_j_square_defect = 0.0;   // max |J^2 + I|
    double max_compat_defect = 0.0;     // max |beta - W J|
    double min_beta_eigenvalue = 0.0;
    double max_beta_condition = 0.0;
    double max_frame_defect = 0.0;      // |F^T beta F - I| and |J F - F J0|
};

// Discretized (X, omega, J, beta).  Immutable after construction.
class SymplecticBackend {
public:
    BackendKind kind() const { return spec_.kind; }
    const BackendSpec& spec() const { return spec_; }
    int n() const { return n_; }
    int real_dim() const { return 2 * n_; }

    // Tori: sites per axis, spacing, number of sites.  Sphere: truncation depth.
    int grid() const { return spec_.resolution; }
    double spacing() const { return h_; }
    std::size_t sites() const { return sites_; }
    bool is_torus() const { return spec_.kind != BackendKind::Sphere2; }

    const RMat& omega() const { return omega_; }
    const RMat& omega_inverse() const { return omega_inv_; }
    const RMat& J(std::size_t site) const { return J_[constant_ ? 0 : site]; }
    const RMat& beta(std::size_t site) const { return beta_[constant_ ? 0 : site]; }
    const RMat& beta_inverse(std::size_t site) const { return beta_inv_[constant_ ? 0 : site]; }
    // Columns: beta-orthonormal frame e_1..e_2n with J e_{2a-1} = e_{2a}.
    const RMat& frame(std::size_t site) const { return frame_[constant_ ? 0 : site]; }
    double vol_density(std::size_t site) const { return density_[site]; }
    bool constant_structure() const { return constant_; }
    bool integrable() const { return integrable_; }
    bool exact_basis() const { return spec_.kind == BackendKind::Sphere2; }

    // Riemannian volume element of one lattice cell: density * h^{2n}.
    double cell_weight(std::size_t site) const;
    double total_volume() const;

    // Lattice indexing (axis 0 fastest).
    std::size_t index(std::span<const int> coords) const;
    void coords(std::size_t site, std::span<int> out) const;
    std::size_t neighbor(std::size_t site, int axis, int step) const;
    void position(std::size_t site, std::span<double> out) const;

    const ValidationReport& validation() const { return report_; }

private:
    friend std::shared_ptr<const SymplecticBackend> build_backend(const BackendSpec& spec);
    SymplecticBackend() = default;

    BackendSpec spec_;
    int n_ = 1;
    double h_ = 0.0;
    std::size_t sites_ = 0;
    std::vector<std::size_t> strides_;
    bool constant_ = true;
    bool integrable_ = true;
    RMat omega_, omega_inv_;
    std::vector<RMat> J_, beta_, beta_inv_, frame_;
    std::vector<double> density_;
    ValidationReport report_;
};

using BackendPtr = std::shared_ptr<const SymplecticBackend>;

int minimum_resolution(BackendKind kind, int k);

BackendPtr build_backend(const BackendSpec& spec);

// Polar construction: the compatible J whose metric beta = omega(., J.) is
// closest to G.  Throws Error(Numeric) on a non-SPD G.
RMat compatible_J_from_metric(const RMat& omega, const RMat& G);
std::vector<RMat> compatible_J_from_metric(const RMat& omega, std::span<const RMat> G);

// Metric recipe used by the preset backends, evaluated at a point.
RMat recipe_metric(const BackendSpec& spec, std::span<const double> x);

double nijenhuis_norm(const SymplecticBackend& backend);

// Point of X: lattice coordinates on tori, a unit vector (x,y,z) on the sphere.
using Point = std::array<double, 4>;
using ClosedForm = std::function<double(const Point&)>;

class ScalarField {
public:
    ScalarField() = default;
    ScalarField(BackendPtr backend, std::vector<double> values, std::string label = {},
                ClosedForm closed = {});

    static ScalarField from_function(BackendPtr backend, ClosedForm f, std::string label);
    static ScalarField constant(BackendPtr backend, double c);

    const BackendPtr& backend() const { return backend_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }
    const std::string& label() const { return label_; }
    const ClosedForm& closed_form() const { return closed_; }
    bool has_closed_form() const { return static_cast<bool>(closed_); }

    double max_abs() const;
    double min() const;
    double max() const;

    ScalarField operator*(const ScalarField& other) const;
    ScalarField operator+(double c) const;
    ScalarField scaled(double c) const;

private:
    BackendPtr backend_;
    std::vector<double> values_;
    std::string label_;
    ClosedForm closed_;
};

// Sample points of a backend: lattice sites on tori, a Gauss-Legendre x
// uniform-phi product grid on the sphere.
std::vector<Point> sample_points(const SymplecticBackend& backend);

ScalarField poisson_bracket(const ScalarField& f, const ScalarField& g);

struct LiouvilleVolume {
    double value = 0.0;
    double error_estimate = 0.0;
};

LiouvilleVolume levelset_liouville_volume(const ScalarField& H, double E, int refinement = 1);

enum class FlowKind { ShearCos2PiX, Linear, SphereHeight };

struct FlowCatalogEntry {
    FlowKind kind = FlowKind::ShearCos2PiX;
    std::vector<double> coefficients;  // Linear: gradient of H in chart coordinates

    std::string descriptor() const;
    double hamiltonian(const Point& p) const;
    // Periods of closed trajectories on H^{-1}(E), ascending, up to t_max.
    std::vector<double> periods(double E, double t_max) const;
    static FlowCatalogEntry shear();
    static FlowCatalogEntry linear(std::vector<double> gradient);
    static FlowCatalogEntry sphere_height();
};

std::vector<Point> exact_flow(const FlowCatalogEntry& entry, const SymplecticBackend& backend,
                              double t, std::span<const Point> points);
// Jacobian of the time-t map at p in chart coordinates (tori only).
RMat flow_jacobian(const FlowCatalogEntry& entry, const SymplecticBackend& backend, double t,
                   const Point& p);

// f o phi_t, sampled on the backend's points.  Requires a closed form for f.
ScalarField compose_with_flow(const ScalarField& f, const FlowCatalogEntry& entry, double t);

}  // namespace akq
