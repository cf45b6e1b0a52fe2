#pragma once

#include "anisoheat/symbol.hpp"

namespace anisoheat::builtin {

// -Laplacian on R^d: P = |xi|^2, m = (1,...,1).
WeightedSymbol laplacian(int d);

// (-Laplacian)^m on R^d: P = |xi|^{2m}, weight (m,...,m).
WeightedSymbol poly_laplacian(int d, int m);

// xi1^6 + xi2^8, m = (3,4). The separable comparison demo symbol.
WeightedSymbol sep68();

// The three lattice-example attractor symbols.
// 1: (2 xi1^4 + (sqrt3-1) xi1^2 xi2 + 4 xi2^2) / (22 + 2 sqrt3), m = (2,1).
WeightedSymbol example1();
// 2: (xi1^6 + 2 xi2^4 - 2i xi1^3 xi2^2) / 64, m = (3,2).
WeightedSymbol example2();
// 3: (1/8) xi'1^2 + (23/384) xi'2^4 in the basis {(1,1),(1,-1)}, m = (1,2).
WeightedSymbol example3();

// All of the above, labelled, for property sweeps.
std::vector<std::pair<std::string, WeightedSymbol>> all();

} // namespace anisoheat::builtin
