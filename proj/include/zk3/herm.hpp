#ifndef ZK3_HERM_HPP
#define ZK3_HERM_HPP

#include <zk3/matrix.hpp>
#include <zk3/quat.hpp>

#include <optional>
#include <vector>

namespace zk3 {

// Class in NS(E1 x E2) in the Hermitian model: the 2x2 matrix
//   [ alpha  beta  ]
//   [ conj(beta) delta ]
// over the order O, with integer diagonal. gamma = conj(beta) is implicit.
class HermElement {
public:
    HermElement(Int alpha, Int delta, QuatElement beta);

    const Int& alpha() const { return alpha_; }
    const Int& delta() const { return delta_; }
    const QuatElement& beta() const { return beta_; }
    const OrderCase& order_case() const { return beta_.order_case(); }

    HermElement operator+(const HermElement& other) const;
    HermElement operator-(const HermElement& other) const;
    HermElement scaled(const Int& n) const;
    bool operator==(const HermElement& other) const = default;

private:
    Int alpha_, delta_;
    QuatElement beta_;
};

// Intersection number: alpha2*delta1 + alpha1*delta2 - Trd(conj(beta1)*beta2).
// Always integral for elements of H; L.L = 2*det of the Hermitian matrix.
Int herm_pairing(const HermElement& a, const HermElement& b);

RatMatrix gram_matrix(const std::vector<HermElement>& basis);

// Standard basis <E1, E2, D1..D4> of H = NS(E1 x E2); Gram determinant -p^2.
std::vector<HermElement> h_basis(const OrderCase& c);

// Basis of the sublattice H' = j(pi^* NS(A)): diag(0,p), diag(p,0) and the
// off-diagonal elements F*b_i; H-Gram determinant -p^10.
std::vector<HermElement> hprime_basis(const OrderCase& c);

// p | alpha, p | delta and beta in F*O.
bool in_h_prime(const HermElement& x);

// Coordinates in the 6-element hprime basis, or nullopt if not in H'.
std::optional<std::vector<Int>> hprime_coordinates(const HermElement& x);

// 2x2 matrix over O acting on E1 x E2.
struct QuatMat2 {
    QuatElement a, b, c, d;
    static QuatMat2 diagonal(const QuatElement& g1, const QuatElement& g2);
};

// g^* L computed as t(conj(g)) * M_L * g; throws if the result leaves the
// Hermitian shape.
HermElement pullback_action(const QuatMat2& g, const HermElement& L);

// A finite-rank piece of a Neron-Severi group presented by classes upstairs:
// gram is the pairing on E1 x E2; scale * gram is the pairing downstairs
// (scale = 1 for NS(E1 x E2) itself, 1/p for classes pulled back from A).
struct NsLattice {
    std::vector<HermElement> basis;
    RatMatrix gram;
    Rat scale;

    RatMatrix scaled_gram() const; // asserts integral entries
};

NsLattice h_lattice(const OrderCase& c);
NsLattice hprime_lattice(const OrderCase& c);

// Action matrix of g on the 6-dimensional Z-basis of H'.
RatMatrix hprime_action_matrix(const OrderCase& c, const QuatMat2& g);

// Fixed sublattice of H' under diag(tau,tau): saturated kernel of (rho - 1),
// which must have rank 4. Returned with scale 1/p (classes come from A).
NsLattice invariant_sublattice(const OrderCase& c);

// sigma with |disc| = p^(2 sigma), or nullopt if |disc| is not an even power
// of p.
std::optional<unsigned long> artin_invariant_from_disc(const Int& disc, const Int& p);

} // namespace zk3

#endif
