#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "anisoheat/rational.hpp"

namespace anisoheat {

// beta = (beta_1,...,beta_d), all entries >= 0.
using MultiIndex = std::vector<int>;

// m = (m_1,...,m_d), all entries >= 1. The grading weight; n = 2m.
struct Weight {
    std::vector<int> m;

    Weight() = default;
    explicit Weight(std::vector<int> mm) : m(std::move(mm)) {
        if (m.empty()) throw std::invalid_argument("Weight: empty");
        for (int v : m)
            if (v < 1) throw std::invalid_argument("Weight: entries must be >= 1");
    }

    int dim() const { return static_cast<int>(m.size()); }
    int max() const { int r = m[0]; for (int v : m) if (v > r) r = v; return r; }
    int min() const { int r = m[0]; for (int v : m) if (v < r) r = v; return r; }
    bool operator==(const Weight& o) const { return m == o.m; }
};

inline std::string multi_index_str(const MultiIndex& b) {
    std::string s = "(";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

// |beta : m| = sum beta_k / m_k, exact.
inline Rational weighted_degree_m(const MultiIndex& beta, const Weight& m) {
    if (static_cast<int>(beta.size()) != m.dim())
        throw std::invalid_argument("weighted_degree: dimension mismatch");
    Rational s(0);
    for (size_t k = 0; k < beta.size(); ++k) {
        if (beta[k] < 0) throw std::invalid_argument("weighted_degree: negative entry");
        s = s + Rational(beta[k], m.m[k]);
    }
    return s;
}

// |beta : 2m| = sum beta_k / (2 m_k), exact.
inline Rational weighted_degree_2m(const MultiIndex& beta, const Weight& m) {
    if (static_cast<int>(beta.size()) != m.dim())
        throw std::invalid_argument("weighted_degree: dimension mismatch");
    Rational s(0);
    for (size_t k = 0; k < beta.size(); ++k) {
        if (beta[k] < 0) throw std::invalid_argument("weighted_degree: negative entry");
        s = s + Rational(beta[k], 2 * m.m[k]);
    }
    return s;
}

// mu = sum 1/(2 m_k), exact.
inline Rational homogeneous_order(const Weight& m) {
    Rational s(0);
    for (int k = 0; k < m.dim(); ++k) s = s + Rational(1, 2 * m.m[k]);
    return s;
}

} // namespace anisoheat
