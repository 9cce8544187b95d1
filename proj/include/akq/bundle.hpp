#pragma once

#include <vector>

#include "akq/geometry.hpp"
#include "akq/types.hpp"

namespace akq {

// Prequantum bundle L^k on a backend.  Tori: Landau gauge A = 2 pi x dy in
// every symplectic plane, links U = exp(-i k int A) so that the difference
// (U psi(x+e) - psi(x)) / h approximates (d - i k A) psi.  The discontinuity
// of A across x = 1 lives on the wrapping links as the transition phase
// exp(2 pi i k y).  Sphere: the charge-k monopole sector, no link data.
class GaugeRealization {
public:
    GaugeRealization() = default;

    int k() const { return k_; }
    const BackendPtr& backend() const { return backend_; }
    bool on_sphere() const { return backend_ && !backend_->is_torus(); }
    // Twice the monopole strength (sphere): equals k.
    int monopole_twice_strength() const { return k_; }

    // Phase of the +axis link leaving `site`, transition phase included.
    Complex link(std::size_t site, int axis) const { return links_[site * dim_ + axis]; }
    const std::vector<Complex>& links() const { return links_; }

    // Links conjugated by a site gauge field: U'(x) = g(x) U(x) conj(g(x+e)).
    GaugeRealization transformed(const std::vector<Complex>& site_phases) const;

    // Holonomy of the unit plaquette at `site` spanned by axes (mu, nu).
    Complex plaquette(std::size_t site, int mu, int nu) const;
    // Product of the links around the full cycle in direction `axis` through `site`.
    Complex wilson_loop(std::size_t site, int axis) const;

private:
    friend GaugeRealization realize_prequantum(BackendPtr backend, int k);
    int k_ = 0;
    int dim_ = 0;
    BackendPtr backend_;
    std::vector<Complex> links_;
};

GaugeRealization realize_prequantum(BackendPtr backend, int k);

struct GaugeCheck {
    double max_plaquette_defect = 0.0;   // |holonomy - exp(-i k flux)|
    double max_stokes_defect = 0.0;      // adjacent Wilson loops vs strip flux
    std::vector<double> plane_flux;      // total flux per symplectic plane, in units of 1
};
// Independent re-verification by traversal.
GaugeCheck verify_gauge(const GaugeRealization& gauge);

// Sections of E (x) L^k.  Tori: site-major layout, index = site * rank + c.
// Sphere: coefficients in the truncated monopole basis (rank 1).
class SectionVector {
public:
    SectionVector() = default;
    SectionVector(BackendPtr backend, int k, int rank, std::vector<int> degrees, CVec values);

    static SectionVector zeros(BackendPtr backend, int k, int rank = 1, std::vector<int> degrees = {});

    const BackendPtr& backend() const { return backend_; }
    int k() const { return k_; }
    int rank() const { return rank_; }
    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t base_size() const { return static_cast<std::size_t>(values_.size()) / rank_; }
    const CVec& values() const { return values_; }
    CVec& values() { return values_; }
    Complex& at(std::size_t site, int c) { return values_[site * rank_ + c]; }
    Complex at(std::size_t site, int c) const { return values_[site * rank_ + c]; }

private:
    BackendPtr backend_;
    int k_ = 0;
    int rank_ = 1;
    std::vector<int> degrees_;
    CVec values_;
};

enum class DifferenceScheme { Forward, Backward, Centered };

// One SectionVector per real direction.
std::vector<SectionVector> covariant_gradient(const SectionVector& s, const GaugeRealization& gauge,
                                              DifferenceScheme scheme = DifferenceScheme::Centered);

// Sum over sites of conj(s) t times the Riemannian cell weight; fiber metric is
// the standard one on the (orthonormal) fiber basis.
Complex inner_product(const SectionVector& s, const SectionVector& t);
double norm(const SectionVector& s);

// Pointwise multiplication; on the sphere, the Galerkin projection onto the
// truncated basis.
SectionVector multiply(const ScalarField& f, const SectionVector& s);

// Site phases exp(i theta(x)) drawn from a seeded generator.
std::vector<Complex> random_gauge(std::size_t sites, unsigned seed);
SectionVector gauge_transform(const SectionVector& s, const std::vector<Complex>& site_phases);

}  // namespace akq
