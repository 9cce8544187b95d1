#pragma once

#include <vector>

#include "akq/geometry.hpp"
#include "akq/types.hpp"

namespace akq {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int count);

// Product grid (Gauss-Legendre in z) x (uniform in phi) on the sphere of
// total area 2 pi.  Weights sum to 2 pi.
struct SphereGrid {
    std::vector<Point> points;
    std::vector<double> weights;
    int n_theta = 0;
    int n_phi = 0;
};
SphereGrid sphere_sample_grid(int n_theta = 128, int n_phi = 256);

// Wigner small-d d^j_{m'm}(angle) with doubled quantum numbers (j2 = 2j ...).
double wigner_d(int j2, int mp2, int m2, double angle);

// Truncated monopole basis for the charge-k bundle (strength g = k/2):
// levels l = g .. g + depth, each with m = -l .. l.  Orthonormal on the
// area-2 pi sphere.
class MonopoleBasis {
public:
    MonopoleBasis(int k, int depth);

    int k() const { return k_; }
    int depth() const { return depth_; }
    std::size_t size() const { return l2_.size(); }
    int level(std::size_t i) const { return (l2_[i] - k_) / 2; }
    double l(std::size_t i) const { return 0.5 * l2_[i]; }
    double m(std::size_t i) const { return 0.5 * m2_[i]; }
    // Number of basis functions in levels 0..level-1.
    std::size_t level_offset(int level) const;
    std::size_t level_size(int level) const { return static_cast<std::size_t>(k_ + 2 * level + 1); }

    // Bochner Laplacian eigenvalue 2 (l(l+1) - g^2).
    double laplacian_eigenvalue(std::size_t i) const;

    Complex evaluate(std::size_t i, const Point& p) const;
    // Rows: points, columns: basis functions [first, first + count).
    CMat evaluate_block(const std::vector<Point>& points, std::size_t first, std::size_t count) const;
    // Largest l in the basis; polynomial degree bookkeeping for quadrature.
    double max_l() const { return 0.5 * (k_ + 2 * depth_); }

private:
    int k_;
    int depth_;
    std::vector<int> l2_, m2_;
};

}  // namespace akq
