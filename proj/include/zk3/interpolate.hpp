#ifndef ZK3_INTERPOLATE_HPP
#define ZK3_INTERPOLATE_HPP

#include <zk3/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace zk3 {

// Coefficients (constant term first) of the unique polynomial of degree
// < points.size() through the given (x, y) pairs; trailing zeros trimmed.
std::vector<Rat> interpolate_polynomial(const std::vector<std::pair<Rat, Rat>>& points);

// Canonical display, e.g. "-3*p^8" or "p^2 - 1"; "0" for the zero polynomial.
std::string polynomial_to_string(const std::vector<Rat>& coeffs, const std::string& var);

} // namespace zk3

#endif
