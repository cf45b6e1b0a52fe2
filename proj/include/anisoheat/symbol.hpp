#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "anisoheat/multi_index.hpp"

namespace anisoheat {

using Complex = std::complex<double>;

// Constant-coefficient weighted-monomial symbol P(xi) = sum a_beta xi'^beta,
// where xi' are the coordinates of xi in the symbol's dual basis. The basis
// matrix B has the basis vectors v_k of x-space as rows, so xi'_k = xi(v_k)
// = (B xi_std)_k and x-space coordinates satisfy x_std = B^T x'.
//
// Invariants: |beta:m| <= 2 exactly for every term; at least one term with
// |beta:m| = 2. Immutable after construction.
class WeightedSymbol {
public:
    using TermMap = std::map<MultiIndex, Complex>;

    WeightedSymbol(Weight m, Eigen::MatrixXd basis_rows, TermMap terms);
    WeightedSymbol(Weight m, TermMap terms); // identity basis

    int dim() const { return weight_.dim(); }
    const Weight& weight() const { return weight_; }
    const Eigen::MatrixXd& basis() const { return basis_; }
    bool identity_basis() const { return identity_; }
    double basis_det() const { return basis_det_; }
    const TermMap& terms() const { return terms_; }

    // Evaluation in the symbol's own (diagonal) dual coordinates.
    Complex eval_diag(const Eigen::VectorXd& xi_diag) const;
    double re_eval_diag(const Eigen::VectorXd& xi_diag) const;
    // Evaluation at standard coordinates of xi (applies the basis map).
    Complex eval(const Eigen::VectorXd& xi_std) const;

    WeightedSymbol principal_part() const;   // |beta:m| = 2 terms only
    WeightedSymbol lower_part_or_empty() const; // may violate the principal invariant; internal use
    bool purely_principal() const;
    bool is_diagonal() const;                // only pure-power terms xi_k^{2 m_k}
    bool real_coefficients() const;
    bool even_symbol() const;                // all |beta| even

    Rational order() const { return homogeneous_order(weight_); }

    // Max total degree per axis among stored terms (power-table sizing).
    std::vector<int> max_degree_per_axis() const;

private:
    WeightedSymbol() = default;
    void validate() const;

    Weight weight_;
    Eigen::MatrixXd basis_;
    Eigen::MatrixXd basis_inv_t_;  // maps x_std -> x'
    double basis_det_ = 1.0;
    bool identity_ = true;
    TermMap terms_;
    // flattened terms for fast evaluation
    std::vector<MultiIndex> flat_beta_;
    std::vector<Complex> flat_coef_;

    friend class SymbolEvaluator;
};

struct PositivityCertificate {
    bool positive = false;
    double min_value = 0.0;   // min of Re P over the sampled anisotropic sphere
    double max_abs = 0.0;     // max |P| over the sample (tolerance reference)
    int samples = 0;
};

// Samples {xi : sum |xi'_k|^{2 m_k} = 1} and certifies min Re P_p > tol
// relative to max |P_p|. Homogeneity extends the verdict off the sphere.
PositivityCertificate is_positive_definite(const WeightedSymbol& Pp, int samples = 0,
                                           double rel_tol = 1e-12, unsigned long seed = 12345);

// Max relative error of |t P(xi) - P(dilate_dual(t, xi))| over random trials.
// dilate_dual acts on the symbol's diagonal dual coordinates.
double verify_homogeneity(const WeightedSymbol& P,
                          const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& dilate_dual,
                          int trials = 256, unsigned long seed = 12345);

// Convenience: the canonical exponent E_v^{2m} (dual action xi'_k -> t^{1/2m_k} xi'_k).
double verify_homogeneity_canonical(const WeightedSymbol& P, int trials = 256,
                                    unsigned long seed = 12345);

struct HeatSymbolVerdict {
    bool nondegenerate = false;
    double min_abs = 0.0;     // min |Q| over the sampled sphere in R + V*
    int samples = 0;
};

// Q(tau, xi) = i tau + P(xi); checks |Q| > 0 on the anisotropic sphere
// |tau| + sum |xi'_k|^{2 m_k} = 1.
HeatSymbolVerdict heat_operator_symbol(const WeightedSymbol& P, int samples = 0,
                                       double rel_tol = 1e-12, unsigned long seed = 12345);
Complex heat_symbol_value(const WeightedSymbol& P, double tau, const Eigen::VectorXd& xi_diag);

struct EllipticityEstimate {
    double delta = 0.0;       // min over samples of Re P_p(y,.)/R(.)
    bool positive = false;
};

// Uniform ellipticity: min over y samples and sphere xi of Re P_p(y,xi)/R(xi),
// with R = Re P_p(y0=0,.) the reference. principal_at(y) must produce the
// frozen principal symbol's coefficients.
EllipticityEstimate uniform_ellipticity_constant(
    const std::function<double(const Eigen::VectorXd& y, const Eigen::VectorXd& xi_diag)>& re_Pp,
    const WeightedSymbol& reference_Pp,
    const std::vector<Eigen::VectorXd>& y_samples,
    int xi_samples = 0, double tol = 1e-12, unsigned long seed = 12345);

} // namespace anisoheat
