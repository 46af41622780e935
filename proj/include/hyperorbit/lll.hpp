#ifndef HYPERORBIT_LLL_HPP
#define HYPERORBIT_LLL_HPP

#include <vector>

#include "hyperorbit/rational.hpp"

namespace hyperorbit {

// LLL reduction (delta = 99/100) of the rows of an integer lattice basis,
// with exact rational Gram-Schmidt arithmetic. Rows must be linearly
// independent.
std::vector<std::vector<BigInt>> lll_reduce(std::vector<std::vector<BigInt>> basis);

}  // namespace hyperorbit

#endif
