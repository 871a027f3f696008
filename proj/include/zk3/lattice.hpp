#ifndef ZK3_LATTICE_HPP
#define ZK3_LATTICE_HPP

#include <zk3/matrix.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace zk3 {

enum class RootKind { A, D, E6, E7, E8 };

// Finite-rank free Z-module with a symmetric integral Gram matrix. Geometric
// root lattices are taken negative definite (Gram = -Cartan), matching
// configurations of (-2)-curves; U is [[0,1],[1,0]].
class IntegralLattice {
public:
    IntegralLattice(std::string label, RatMatrix gram);

    const std::string& label() const { return label_; }
    const RatMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }
    bool is_even() const;

private:
    std::string label_;
    RatMatrix gram_;
};

// Cartan matrix (positive definite convention) of a root system.
RatMatrix cartan_matrix(RootKind kind, int n);

// Multiplicities of the highest root, node by node; the simple fiber
// components of the corresponding Kodaira fiber are the nodes with entry 1.
std::vector<int> highest_root_coefficients(RootKind kind, int n);

IntegralLattice root_lattice(RootKind kind, int n = 0);
IntegralLattice hyperbolic_u();
IntegralLattice rank1_lattice(const Int& m);
IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts);

Int discriminant(const IntegralLattice& l);

struct DiscGroup {
    std::vector<Int> elementary_divisors; // > 1, divisibility chain
    Int order() const;
};

DiscGroup discriminant_group(const IntegralLattice& l);

// Number of elementary divisors divisible by p.
std::size_t p_length(const IntegralLattice& l, const Int& p);

struct OverlatticeResult {
    IntegralLattice lattice;
    Int index;
};

// Finite-index extension of l by glue vectors (rational coordinates in the
// basis of l). Each glue vector must pair integrally with l and have even
// integral self-pairing; a non-integral induced Gram is rejected naming the
// violating pair.
OverlatticeResult overlattice(const IntegralLattice& l,
                              const std::vector<std::vector<Rat>>& glue);

// All classes x of order 2 in L*/L with even integral self-pairing, as
// coordinate vectors; exhaustive enumeration.
std::vector<std::vector<Rat>> two_torsion_glue_candidates(const IntegralLattice& l);

// v = k*w for an integral w?
bool is_divisible(const IntegralLattice& l, const std::vector<Int>& v, const Int& k);

// floor((22 - rank)/2); requires rank <= 22 and disc prime to p.
unsigned long artin_bound(const IntegralLattice& l, const Int& p);

// Bound allowing p | disc: with e = ord_p(disc),
//   2*sigma <= e + max_{0 <= t <= e} [(22 - n)(1 + 2t) - 2t].
// Reduces to (22 - n)/2 when e = 0.
unsigned long artin_bound_adjusted(unsigned long rank, const Int& disc, const Int& p);

// JSON shape: {"label": string, "rank": int, "gram": [[int]]}
IntegralLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const IntegralLattice& l);

} // namespace zk3

#endif
