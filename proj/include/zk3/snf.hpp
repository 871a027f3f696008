#ifndef ZK3_SNF_HPP
#define ZK3_SNF_HPP

#include <zk3/matrix.hpp>

#include <vector>

namespace zk3 {

// Smith normal form data: left * m * right is the diagonal matrix of diag,
// with nonnegative entries forming a divisibility chain d1 | d2 | ... and
// |det left| = |det right| = 1.
struct SnfResult {
    std::vector<Int> diag;
    RatMatrix left;
    RatMatrix right;
};

// Requires integral entries.
SnfResult smith_normal_form(const RatMatrix& m);

// Saturated basis of {v integral : m*v = 0}. The returned vectors span the
// full kernel lattice (a Z-basis, not merely a Q-basis).
std::vector<std::vector<Int>> integer_kernel(const RatMatrix& m);

// Exact inverse of a unimodular integer matrix; throws if not unimodular.
RatMatrix unimodular_inverse(const RatMatrix& u);

} // namespace zk3

#endif
