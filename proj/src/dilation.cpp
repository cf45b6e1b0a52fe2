#include "anisoheat/dilation.hpp"

#include <cmath>
#include <stdexcept>

namespace anisoheat {

DilationExponent::DilationExponent(Eigen::MatrixXd eigenbasis_cols, Eigen::VectorXd eigenvalues)
    : basis_(std::move(eigenbasis_cols)), lambda_(std::move(eigenvalues)) {
    const int d = static_cast<int>(lambda_.size());
    if (basis_.rows() != d || basis_.cols() != d)
        throw std::invalid_argument("DilationExponent: eigenbasis must be d x d");
    for (int k = 0; k < d; ++k)
        if (!(lambda_[k] > 0.0))
            throw std::invalid_argument("DilationExponent: eigenvalues must be positive");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_);
    if (!lu.isInvertible())
        throw std::invalid_argument("DilationExponent: eigenbasis not invertible");
    basis_inv_ = lu.inverse();
    identity_ = basis_.isIdentity(1e-15);
}

DilationExponent DilationExponent::from_alpha(const Eigen::VectorXd& alpha) {
    const int d = static_cast<int>(alpha.size());
    Eigen::VectorXd lam(d);
    for (int k = 0; k < d; ++k) {
        if (!(alpha[k] > 0.0)) throw std::invalid_argument("from_alpha: alpha_k must be positive");
        lam[k] = 1.0 / alpha[k];
    }
    return DilationExponent(Eigen::MatrixXd::Identity(d, d), lam);
}

DilationExponent DilationExponent::canonical(const Weight& m) {
    Eigen::VectorXd lam(m.dim());
    for (int k = 0; k < m.dim(); ++k) lam[k] = 1.0 / (2.0 * m.m[k]);
    return DilationExponent(Eigen::MatrixXd::Identity(m.dim(), m.dim()), lam);
}

Eigen::VectorXd DilationExponent::dilate(double t, const Eigen::VectorXd& x) const {
    if (!(t > 0.0)) throw std::invalid_argument("dilate: t must be positive");
    if (identity_) return dilate_diag(t, x);
    Eigen::VectorXd c = basis_inv_ * x;
    for (int k = 0; k < c.size(); ++k) c[k] *= std::pow(t, lambda_[k]);
    return basis_ * c;
}

Eigen::VectorXd DilationExponent::dilate_diag(double t, const Eigen::VectorXd& x) const {
    if (!(t > 0.0)) throw std::invalid_argument("dilate: t must be positive");
    Eigen::VectorXd out = x;
    for (int k = 0; k < out.size(); ++k) out[k] *= std::pow(t, lambda_[k]);
    return out;
}

DilationExponent DilationExponent::complement() const {
    Eigen::VectorXd lam(lambda_.size());
    for (int k = 0; k < lambda_.size(); ++k) {
        if (!(lambda_[k] < 1.0))
            throw std::invalid_argument("complement: requires eigenvalues < 1");
        lam[k] = 1.0 - lambda_[k];
    }
    return DilationExponent(basis_, lam);
}

HomogeneousNorm::HomogeneousNorm(Eigen::VectorXd alpha)
    : coord_map_(Eigen::MatrixXd::Identity(alpha.size(), alpha.size())),
      alpha_(std::move(alpha)) {
    for (int k = 0; k < alpha_.size(); ++k)
        if (!(alpha_[k] > 0.0)) throw std::invalid_argument("HomogeneousNorm: alpha_k > 0 required");
}

HomogeneousNorm::HomogeneousNorm(Eigen::MatrixXd coord_map, Eigen::VectorXd alpha)
    : coord_map_(std::move(coord_map)), alpha_(std::move(alpha)) {
    for (int k = 0; k < alpha_.size(); ++k)
        if (!(alpha_[k] > 0.0)) throw std::invalid_argument("HomogeneousNorm: alpha_k > 0 required");
    identity_ = coord_map_.isIdentity(1e-15);
}

double HomogeneousNorm::operator()(const Eigen::VectorXd& x) const {
    Eigen::VectorXd c = identity_ ? x : Eigen::VectorXd(coord_map_ * x);
    double s = 0.0;
    for (int k = 0; k < c.size(); ++k) s += std::pow(std::abs(c[k]), alpha_[k]);
    return s;
}

Eigen::VectorXd omega(const Weight& m) {
    Eigen::VectorXd w(m.dim());
    for (int k = 0; k < m.dim(); ++k)
        w[k] = 2.0 * m.m[k] / (2.0 * m.m[k] - 1.0);
    return w;
}

std::optional<double> consistency(const Eigen::VectorXd& alpha, const Weight& m) {
    if (alpha.size() != m.dim()) throw std::invalid_argument("consistency: dimension mismatch");
    for (int k = 0; k < alpha.size(); ++k)
        if (!(alpha[k] > 0.0)) throw std::invalid_argument("consistency: alpha_k > 0 required");
    Eigen::VectorXd w = omega(m);
    double a = w[0] / alpha[0];
    for (int k = 1; k < alpha.size(); ++k) {
        double ak = w[k] / alpha[k];
        if (std::abs(ak - a) > 1e-12 * std::max(1.0, std::abs(a))) return std::nullopt;
    }
    return a;
}

double sphere_scale(const DilationExponent& E, const HomogeneousNorm& norm,
                    const Eigen::VectorXd& x, int iters) {
    double v1 = norm(E.dilate(1.0, x));
    if (!(v1 > 0.0)) throw std::invalid_argument("sphere_scale: zero vector");
    // bracket [lo, hi] with norm(lo^E x) < 1 < norm(hi^E x)
    double lo = 1.0, hi = 1.0;
    if (v1 < 1.0) {
        while (norm(E.dilate(hi, x)) < 1.0) { hi *= 2.0; if (hi > 1e60) break; }
    } else {
        while (norm(E.dilate(lo, x)) > 1.0) { lo *= 0.5; if (lo < 1e-60) break; }
    }
    for (int i = 0; i < iters; ++i) {
        double mid = std::sqrt(lo * hi);
        if (norm(E.dilate(mid, x)) < 1.0) lo = mid; else hi = mid;
    }
    return std::sqrt(lo * hi);
}

Eigen::VectorXd sphere_point(const DilationExponent& E, const HomogeneousNorm& norm,
                             std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int d = E.dim();
    Eigen::VectorXd u(d);
    double n2 = 0.0;
    do {
        for (int k = 0; k < d; ++k) u[k] = gauss(rng);
        n2 = u.norm();
    } while (n2 < 1e-12);
    u /= n2;
    double t = sphere_scale(E, norm, u);
    return E.dilate(t, u);
}

ComparabilityBounds compare_homogeneous(const std::function<double(const Eigen::VectorXd&)>& Q,
                                        const std::function<double(const Eigen::VectorXd&)>& R,
                                        const DilationExponent& E, const HomogeneousNorm& norm,
                                        int samples, unsigned long seed) {
    std::mt19937_64 rng(seed);
    ComparabilityBounds b;
    b.c_low = std::numeric_limits<double>::infinity();
    b.c_high = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        Eigen::VectorXd x = sphere_point(E, norm, rng);
        double r = R(x);
        if (!(r > 0.0)) throw std::runtime_error("compare_homogeneous: R <= 0 at a sample");
        double ratio = Q(x) / r;
        b.c_low = std::min(b.c_low, ratio);
        b.c_high = std::max(b.c_high, ratio);
    }
    return b;
}

} // namespace anisoheat
