#include "anisoheat/symbol.hpp"

#include <cmath>
#include <random>

#include "anisoheat/dilation.hpp"

namespace anisoheat {

WeightedSymbol::WeightedSymbol(Weight m, Eigen::MatrixXd basis_rows, TermMap terms)
    : weight_(std::move(m)), basis_(std::move(basis_rows)), terms_(std::move(terms)) {
    const int d = weight_.dim();
    if (basis_.rows() != d || basis_.cols() != d)
        throw std::invalid_argument("WeightedSymbol: basis must be d x d");
    identity_ = basis_.isIdentity(1e-15);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_);
    if (!lu.isInvertible())
        throw std::invalid_argument("WeightedSymbol: basis not invertible");
    basis_det_ = std::abs(lu.determinant());
    basis_inv_t_ = lu.inverse().transpose();
    validate();
    for (const auto& [b, c] : terms_) {
        if (c == Complex(0.0, 0.0)) continue;
        flat_beta_.push_back(b);
        flat_coef_.push_back(c);
    }
}

WeightedSymbol::WeightedSymbol(Weight m, TermMap terms)
    : WeightedSymbol(m, Eigen::MatrixXd::Identity(m.dim(), m.dim()), std::move(terms)) {
    // delegated
    (void)0;
}

void WeightedSymbol::validate() const {
    const int d = dim();
    bool has_principal = false;
    const Rational two(2);
    for (const auto& [b, c] : terms_) {
        if (static_cast<int>(b.size()) != d)
            throw std::invalid_argument("WeightedSymbol: term dimension mismatch at beta=" +
                                        multi_index_str(b));
        for (int e : b)
            if (e < 0) throw std::invalid_argument("WeightedSymbol: negative exponent");
        Rational deg = weighted_degree_m(b, weight_);
        if (deg > two)
            throw std::invalid_argument("WeightedSymbol: |beta:m| > 2 at beta=" +
                                        multi_index_str(b) + " (degree " + deg.str() + ")");
        if (deg == two && c != Complex(0.0, 0.0)) has_principal = true;
    }
    if (!has_principal)
        throw std::invalid_argument("WeightedSymbol: no principal term (|beta:m| = 2)");
}

Complex WeightedSymbol::eval_diag(const Eigen::VectorXd& xi) const {
    if (xi.size() != dim()) throw std::invalid_argument("eval: dimension mismatch");
    Complex acc(0.0, 0.0);
    for (size_t i = 0; i < flat_beta_.size(); ++i) {
        double mono = 1.0;
        const MultiIndex& b = flat_beta_[i];
        for (int k = 0; k < dim(); ++k)
            for (int e = 0; e < b[k]; ++e) mono *= xi[k];
        acc += flat_coef_[i] * mono;
    }
    return acc;
}

double WeightedSymbol::re_eval_diag(const Eigen::VectorXd& xi) const {
    if (xi.size() != dim()) throw std::invalid_argument("eval: dimension mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < flat_beta_.size(); ++i) {
        double mono = 1.0;
        const MultiIndex& b = flat_beta_[i];
        for (int k = 0; k < dim(); ++k)
            for (int e = 0; e < b[k]; ++e) mono *= xi[k];
        acc += flat_coef_[i].real() * mono;
    }
    return acc;
}

Complex WeightedSymbol::eval(const Eigen::VectorXd& xi_std) const {
    if (identity_) return eval_diag(xi_std);
    return eval_diag(basis_ * xi_std);
}

WeightedSymbol WeightedSymbol::principal_part() const {
    TermMap keep;
    const Rational two(2);
    for (const auto& [b, c] : terms_)
        if (weighted_degree_m(b, weight_) == two) keep[b] = c;
    return WeightedSymbol(weight_, basis_, std::move(keep));
}

WeightedSymbol WeightedSymbol::lower_part_or_empty() const {
    WeightedSymbol out;
    out.weight_ = weight_;
    out.basis_ = basis_;
    out.basis_inv_t_ = basis_inv_t_;
    out.basis_det_ = basis_det_;
    out.identity_ = identity_;
    const Rational two(2);
    for (const auto& [b, c] : terms_)
        if (weighted_degree_m(b, weight_) < two) {
            out.terms_[b] = c;
            out.flat_beta_.push_back(b);
            out.flat_coef_.push_back(c);
        }
    return out;
}

bool WeightedSymbol::purely_principal() const {
    const Rational two(2);
    for (const auto& [b, c] : terms_)
        if (c != Complex(0.0, 0.0) && weighted_degree_m(b, weight_) != two) return false;
    return true;
}

bool WeightedSymbol::is_diagonal() const {
    for (const auto& [b, c] : terms_) {
        if (c == Complex(0.0, 0.0)) continue;
        int nz = 0, axis = -1;
        for (int k = 0; k < dim(); ++k)
            if (b[k] != 0) { ++nz; axis = k; }
        if (nz != 1) return false;
        if (b[axis] != 2 * weight_.m[axis]) return false;
    }
    return true;
}

bool WeightedSymbol::real_coefficients() const {
    for (const auto& c : flat_coef_)
        if (c.imag() != 0.0) return false;
    return true;
}

bool WeightedSymbol::even_symbol() const {
    for (const auto& b : flat_beta_) {
        int total = 0;
        for (int e : b) total += e;
        if (total % 2 != 0) return false;
    }
    return true;
}

std::vector<int> WeightedSymbol::max_degree_per_axis() const {
    std::vector<int> deg(dim(), 0);
    for (const auto& b : flat_beta_)
        for (int k = 0; k < dim(); ++k)
            if (b[k] > deg[k]) deg[k] = b[k];
    return deg;
}

namespace {

HomogeneousNorm sphere_norm_2m(const Weight& m) {
    Eigen::VectorXd a(m.dim());
    for (int k = 0; k < m.dim(); ++k) a[k] = 2.0 * m.m[k];
    return HomogeneousNorm(a);
}

} // namespace

PositivityCertificate is_positive_definite(const WeightedSymbol& Pp, int samples,
                                           double rel_tol, unsigned long seed) {
    if (!Pp.purely_principal())
        throw std::invalid_argument("is_positive_definite: symbol not purely principal");
    const int d = Pp.dim();
    if (samples <= 0) samples = 10000 * d;
    if (samples < 2 * d) throw std::invalid_argument("is_positive_definite: sample count < 2d");

    DilationExponent E = DilationExponent::canonical(Pp.weight());
    E = DilationExponent::from_alpha([&] {
        Eigen::VectorXd a(d);
        for (int k = 0; k < d; ++k) a[k] = 2.0 * Pp.weight().m[k];
        return a;
    }());
    HomogeneousNorm norm = sphere_norm_2m(Pp.weight());

    std::mt19937_64 rng(seed);
    PositivityCertificate cert;
    cert.samples = samples;
    double mn = std::numeric_limits<double>::infinity();
    double mx = 0.0;
    // axis points first so degenerate axis zeros are never missed
    for (int k = 0; k < d; ++k) {
        for (double s : {1.0, -1.0}) {
            Eigen::VectorXd xi = Eigen::VectorXd::Zero(d);
            xi[k] = s;
            double r = Pp.re_eval_diag(xi);
            double ab = std::abs(Pp.eval_diag(xi));
            mn = std::min(mn, r);
            mx = std::max(mx, ab);
        }
    }
    for (int i = 0; i < samples; ++i) {
        Eigen::VectorXd xi = sphere_point(E, norm, rng);
        double r = Pp.re_eval_diag(xi);
        double ab = std::abs(Pp.eval_diag(xi));
        mn = std::min(mn, r);
        mx = std::max(mx, ab);
    }
    cert.min_value = mn;
    cert.max_abs = mx;
    cert.positive = mn > rel_tol * mx;
    return cert;
}

double verify_homogeneity(const WeightedSymbol& P,
                          const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& dilate_dual,
                          int trials, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logt(-2.0, 2.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int d = P.dim();
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
        double t = std::pow(10.0, logt(rng));
        Eigen::VectorXd xi(d);
        for (int k = 0; k < d; ++k) xi[k] = gauss(rng);
        Complex lhs = t * P.eval_diag(xi);
        Complex rhs = P.eval_diag(dilate_dual(t, xi));
        double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return worst;
}

double verify_homogeneity_canonical(const WeightedSymbol& P, int trials, unsigned long seed) {
    const Weight& m = P.weight();
    return verify_homogeneity(
        P,
        [&m](double t, const Eigen::VectorXd& xi) {
            Eigen::VectorXd out = xi;
            for (int k = 0; k < xi.size(); ++k) out[k] *= std::pow(t, 1.0 / (2.0 * m.m[k]));
            return out;
        },
        trials, seed);
}

Complex heat_symbol_value(const WeightedSymbol& P, double tau, const Eigen::VectorXd& xi_diag) {
    return Complex(0.0, tau) + P.eval_diag(xi_diag);
}

HeatSymbolVerdict heat_operator_symbol(const WeightedSymbol& P, int samples,
                                       double rel_tol, unsigned long seed) {
    const int d = P.dim();
    if (samples <= 0) samples = 10000 * (d + 1);
    // sphere in R + V*: |tau| + sum |xi'_k|^{2 m_k} = 1, dilation (tau,xi) ->
    // (t tau, t^{E*} xi)
    Eigen::VectorXd a(d + 1);
    a[0] = 1.0;
    for (int k = 0; k < d; ++k) a[k + 1] = 2.0 * P.weight().m[k];
    DilationExponent E = DilationExponent::from_alpha(a);
    HomogeneousNorm norm(a);

    std::mt19937_64 rng(seed);
    HeatSymbolVerdict v;
    v.samples = samples;
    double mn = std::numeric_limits<double>::infinity();
    double mx = 0.0;
    for (int i = 0; i < samples; ++i) {
        Eigen::VectorXd p = sphere_point(E, norm, rng);
        Eigen::VectorXd xi = p.tail(d);
        Complex q = heat_symbol_value(P, p[0], xi);
        mn = std::min(mn, std::abs(q));
        mx = std::max(mx, std::abs(q));
    }
    v.min_abs = mn;
    v.nondegenerate = mn > rel_tol * mx;
    return v;
}

EllipticityEstimate uniform_ellipticity_constant(
    const std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>& re_Pp,
    const WeightedSymbol& reference_Pp,
    const std::vector<Eigen::VectorXd>& y_samples,
    int xi_samples, double tol, unsigned long seed) {
    const int d = reference_Pp.dim();
    if (xi_samples <= 0) xi_samples = 2000 * d;
    Eigen::VectorXd a(d);
    for (int k = 0; k < d; ++k) a[k] = 2.0 * reference_Pp.weight().m[k];
    DilationExponent E = DilationExponent::from_alpha(a);
    HomogeneousNorm norm(a);

    std::mt19937_64 rng(seed);
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(xi_samples);
    for (int i = 0; i < xi_samples; ++i) pts.push_back(sphere_point(E, norm, rng));

    double delta = std::numeric_limits<double>::infinity();
    for (const auto& y : y_samples) {
        for (const auto& xi : pts) {
            double r = reference_Pp.re_eval_diag(xi);
            if (!(r > 0.0))
                throw std::runtime_error("uniform_ellipticity_constant: reference R vanished at a sample");
            delta = std::min(delta, re_Pp(y, xi) / r);
        }
    }
    EllipticityEstimate est;
    est.delta = delta;
    est.positive = delta > tol;
    return est;
}

} // namespace anisoheat
