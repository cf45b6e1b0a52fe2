#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "anisoheat/multi_index.hpp"

namespace anisoheat {

// One-parameter dilation group t^E for diagonalizable E with positive real
// spectrum, given by its eigenbasis (columns) and eigenvalues. Contracting
// since all eigenvalues are > 0.
class DilationExponent {
public:
    DilationExponent(Eigen::MatrixXd eigenbasis_cols, Eigen::VectorXd eigenvalues);

    // Identity-basis exponent with eigenvalues 1/alpha_k (E_v^alpha).
    static DilationExponent from_alpha(const Eigen::VectorXd& alpha);
    // E_v^{2m}: eigenvalues 1/(2 m_k).
    static DilationExponent canonical(const Weight& m);

    int dim() const { return static_cast<int>(lambda_.size()); }
    const Eigen::VectorXd& eigenvalues() const { return lambda_; }
    const Eigen::MatrixXd& eigenbasis() const { return basis_; }
    double trace() const { return lambda_.sum(); }
    double max_eigenvalue() const { return lambda_.maxCoeff(); }

    // t^E x (t > 0).
    Eigen::VectorXd dilate(double t, const Eigen::VectorXd& x) const;
    // Diagonal-coordinate action: x'_k -> t^{lambda_k} x'_k.
    Eigen::VectorXd dilate_diag(double t, const Eigen::VectorXd& x_diag) const;

    // I - E (same eigenbasis, eigenvalues 1 - lambda_k); requires lambda_k < 1.
    DilationExponent complement() const;

private:
    Eigen::MatrixXd basis_, basis_inv_;
    Eigen::VectorXd lambda_;
    bool identity_ = true;
};

// |x|_v^alpha = sum |x'_k|^{alpha_k}, with x' the coordinates in the norm's
// basis (coordinate map C: x' = C x; identity by default).
class HomogeneousNorm {
public:
    HomogeneousNorm(Eigen::VectorXd alpha);
    HomogeneousNorm(Eigen::MatrixXd coord_map, Eigen::VectorXd alpha);

    int dim() const { return static_cast<int>(alpha_.size()); }
    const Eigen::VectorXd& alpha() const { return alpha_; }
    double operator()(const Eigen::VectorXd& x) const;

private:
    Eigen::MatrixXd coord_map_;
    Eigen::VectorXd alpha_;
    bool identity_ = true;
};

// omega_k = 2 m_k / (2 m_k - 1); all components in (1, 2].
Eigen::VectorXd omega(const Weight& m);

// Returns a with alpha = omega/a componentwise (within 1e-12), else nullopt.
// For alpha in (0,1]^d this forces a >= 2 m_min/(2 m_min - 1).
std::optional<double> consistency(const Eigen::VectorXd& alpha, const Weight& m);

// Unique t > 0 with norm(t^E x) = 1, by bisection on log t (60 iterations).
// norm must be E-homogeneous-compatible only in the loose sense that
// t -> norm(t^E x) is continuous and monotone through 1.
double sphere_scale(const DilationExponent& E, const HomogeneousNorm& norm,
                    const Eigen::VectorXd& x, int iters = 60);

// Draw a point on the anisotropic unit sphere {norm = 1}: uniform Euclidean
// direction, then dilate onto the sphere.
Eigen::VectorXd sphere_point(const DilationExponent& E, const HomogeneousNorm& norm,
                             std::mt19937_64& rng);

struct ComparabilityBounds {
    double c_low = 0.0;
    double c_high = 0.0;
};

// min and max of Q/R over the sampled unit sphere of `norm`; by homogeneity
// these bound Q/R globally up to sampling error. Throws if R <= 0 at a sample.
ComparabilityBounds compare_homogeneous(const std::function<double(const Eigen::VectorXd&)>& Q,
                                        const std::function<double(const Eigen::VectorXd&)>& R,
                                        const DilationExponent& E, const HomogeneousNorm& norm,
                                        int samples = 4096, unsigned long seed = 12345);

} // namespace anisoheat
