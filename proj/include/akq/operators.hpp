#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "akq/bundle.hpp"
#include "akq/geometry.hpp"
#include "akq/types.hpp"

namespace akq {

using SparseCMat = Eigen::SparseMatrix<Complex, Eigen::ColMajor, long>;

// Matrix-free self-adjoint operator acting on column blocks.  Hermitian with
// respect to the Euclidean product of the coefficient vectors; on tori the
// Riemannian density is constant, so this coincides with the L2 product.

class HermitianOperatorHandle {
public:
    using BlockApply = std::function<void(const CMat& in, CMat& out)>;

    HermitianOperatorHandle() = default;
    HermitianOperatorHandle(std::string name, std::size_t dim, BlockApply fn);

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return dim_; }
    CMat apply(const CMat& x) const;
    CVec apply(const CVec& x) const;
    SectionVector apply(const SectionVector& s) const;

    // Metadata.
    BackendPtr backend;
    int k = 0;
    int rank = 1;
    std::vector<int> degrees;      // per fiber component
    bool odd = false;              // maps even degrees to odd and back
    double norm_bound = 0.0;       // cheap upper bound on the operator norm (0 = unknown)
    std::optional<double> lower_bound;           // known bound below the spectrum
    std::function<SparseCMat()> assemble;        // exact sparse assembly, when available

    HermitianOperatorHandle shifted(double c) const;
    // Dense matrix by applying to the identity.  Only for small dimensions.
    CMat materialize() const;

private:
    std::string name_;
    std::size_t dim_ = 0;
    BlockApply fn_;
};

// Exact sparse assembly of a lattice operator whose stencil reaches one site
// along each axis, by applying it to colour-class indicator vectors.
SparseCMat assemble_by_probing(const HermitianOperatorHandle& op, const SymplecticBackend& backend, int rank);

struct HermiticityCertificate {
    double max_relative_defect = 0.0;
    int probes = 0;
    bool passed = false;
};
HermiticityCertificate hermiticity_probe(const HermitianOperatorHandle& op, int probes, unsigned seed,
                                         double tol = 1e-10);

// Scalar Bochner Laplacian on L^k (rank 1).  Sphere: diagonal on the
// truncated monopole basis.
HermitianOperatorHandle bochner_laplacian(BackendPtr backend, const GaugeRealization& gauge, int k);
// Delta - n k.
HermitianOperatorHandle rescaled_laplacian(BackendPtr backend, const GaugeRealization& gauge, int k);

// Fermionic fiber Lambda^{0,*}: basis u^I, I a bitmask over n modes.
struct CliffordTable {
    int n = 1;
    int rank = 2;
    std::vector<int> degrees;             // popcount of each basis index
    std::vector<CMat> frame_clifford;     // c(e^j), j = 0..2n-1, in a J-adapted beta-frame
    std::vector<CMat> raising;            // (0,1) part A_j of c(e^j) = A_j - A_j^*
    CMat sigma_formula;                   // -i sum_{j>l} omega(e_j,e_l) c_j c_l
    CMat sigma_diagonal;                  // diag(2q - n)
    bool constant = true;
    // c(dx^mu) at a site: sum_j F_{mu j} c(e^j).
    std::vector<std::vector<CMat>> coordinate_clifford;  // [site][mu] (one site if constant)

    const std::vector<CMat>& at(std::size_t site) const { return coordinate_clifford[constant ? 0 : site]; }
    double max_clifford_defect = 0.0;     // |c c + c c + 2 beta^{-1}| over sites and pairs
};
CliffordTable clifford_table(const SymplecticBackend& backend);

// Per-site, per-axis unitary transport on the fiber obtained from the
// unitary part of the frame change between neighbours.
struct FiberTransport {
    int rank = 1;
    bool trivial = true;
    std::vector<CMat> maps;   // [site * dim + axis], maps fiber(x + e) -> fiber(x)
    const CMat* at(std::size_t site, int axis, int dim) const {
        return trivial ? nullptr : &maps[site * dim + axis];
    }
};
FiberTransport fiber_transport(const SymplecticBackend& backend, const CliffordTable& table);

// Bochner Laplacian on the graded bundle E (x) L^k with the transport
// connection; restrict to a single form degree when `degree` >= 0.
HermitianOperatorHandle twisted_laplacian(BackendPtr backend, const GaugeRealization& gauge, int k,
                                          int degree = -1);

// Spin^c Dirac operator on E (x) L^k, rank 2^n; odd.
HermitianOperatorHandle dirac_operator(BackendPtr backend, const GaugeRealization& gauge, int k);
// Grading operator sigma (2q - n on degree q), rank 2^n.
HermitianOperatorHandle sigma_operator(BackendPtr backend, int k);

// Extract/insert the components of a given degree from/into a full graded vector.
CMat restrict_degree(const CMat& full, int rank, const std::vector<int>& degrees, int degree);
CMat extend_degree(const CMat& part, int rank, const std::vector<int>& degrees, int degree);

struct RemainderEstimate {
    double norm = 0.0;          // |R| on the window, largest |Rayleigh quotient|
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    std::size_t window = 0;
};
// R = D^2 - Delta - k sigma compressed onto the span of the lowest `window`
// eigenvectors of the twisted Laplacian, then estimated by power iteration.
RemainderEstimate dirac_square_remainder(BackendPtr backend, const GaugeRealization& gauge, int k,
                                         std::size_t window, double tol = 1e-9);

}  // namespace akq
