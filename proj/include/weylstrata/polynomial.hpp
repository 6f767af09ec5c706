#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weylstrata {

// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<int64_t>;

// Characteristic polynomial det(xI - M) of an n x n integer matrix stored
// row-major. Faddeev-LeVerrier with every division checked for exactness.
IntPoly charpoly(const std::vector<int>& m, int n);

void trim(IntPoly& p);
std::string to_string(const IntPoly& p, const std::string& var = "q");

} // namespace weylstrata
