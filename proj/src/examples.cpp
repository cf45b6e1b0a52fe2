#include "anisoheat/examples.hpp"

#include <cmath>

namespace anisoheat::builtin {

WeightedSymbol laplacian(int d) {
    WeightedSymbol::TermMap t;
    for (int k = 0; k < d; ++k) {
        MultiIndex b(d, 0);
        b[k] = 2;
        t[b] = 1.0;
    }
    return WeightedSymbol(Weight(std::vector<int>(d, 1)), std::move(t));
}

WeightedSymbol poly_laplacian(int d, int m) {
    // expand (xi_1^2 + ... + xi_d^2)^m by repeated multiplication
    std::map<MultiIndex, double> poly{{MultiIndex(d, 0), 1.0}};
    for (int rep = 0; rep < m; ++rep) {
        std::map<MultiIndex, double> next;
        for (const auto& [b, c] : poly) {
            for (int k = 0; k < d; ++k) {
                MultiIndex nb = b;
                nb[k] += 2;
                next[nb] += c;
            }
        }
        poly = std::move(next);
    }
    WeightedSymbol::TermMap t;
    for (const auto& [b, c] : poly) t[b] = c;
    return WeightedSymbol(Weight(std::vector<int>(d, m)), std::move(t));
}

WeightedSymbol sep68() {
    WeightedSymbol::TermMap t;
    t[{6, 0}] = 1.0;
    t[{0, 8}] = 1.0;
    return WeightedSymbol(Weight({3, 4}), std::move(t));
}

WeightedSymbol example1() {
    const double den = 22.0 + 2.0 * std::sqrt(3.0);
    WeightedSymbol::TermMap t;
    t[{4, 0}] = 2.0 / den;
    t[{2, 1}] = (std::sqrt(3.0) - 1.0) / den;
    t[{0, 2}] = 4.0 / den;
    return WeightedSymbol(Weight({2, 1}), std::move(t));
}

WeightedSymbol example2() {
    WeightedSymbol::TermMap t;
    t[{6, 0}] = 1.0 / 64.0;
    t[{0, 4}] = 2.0 / 64.0;
    t[{3, 2}] = Complex(0.0, -2.0 / 64.0);
    return WeightedSymbol(Weight({3, 2}), std::move(t));
}

WeightedSymbol example3() {
    Eigen::MatrixXd B(2, 2);
    B << 1, 1,
         1, -1;
    WeightedSymbol::TermMap t;
    t[{2, 0}] = 1.0 / 8.0;
    t[{0, 4}] = 23.0 / 384.0;
    return WeightedSymbol(Weight({1, 2}), B, std::move(t));
}

std::vector<std::pair<std::string, WeightedSymbol>> all() {
    return {
        {"laplacian2", laplacian(2)},
        {"bilaplacian2", poly_laplacian(2, 2)},
        {"sep68", sep68()},
        {"example1", example1()},
        {"example2", example2()},
        {"example3", example3()},
    };
}

} // namespace anisoheat::builtin
