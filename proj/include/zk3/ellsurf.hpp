#ifndef ZK3_ELLSURF_HPP
#define ZK3_ELLSURF_HPP

#include <zk3/lattice.hpp>
#include <zk3/matrix.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zk3 {

enum class FiberType { In, InStar, II, IIStar, III, IIIStar, IV, IVStar };

// One Kodaira fiber. Component 0 is always the identity component; for I_n
// the n components are indexed cyclically 0..n-1, for the additive types
// components 1..rank follow the Bourbaki numbering of the root diagram.
// `wild` is an additive correction to the Euler number recorded for wild
// ramification in small characteristic.
class KodairaFiber {
public:
    static KodairaFiber make(FiberType type, int n = 0); // n for I_n / I_n*

    FiberType type() const { return type_; }
    int n() const { return n_; }
    long euler() const;
    long wild() const { return wild_; }
    void set_wild(long w) { wild_ = w; }

    int components() const;
    // (kind, n) of the root lattice of the fiber, if reducible.
    std::optional<std::pair<RootKind, int>> root() const;
    std::vector<int> simple_components() const; // indices meetable by sections
    std::string name() const;                   // "I14", "III*", ...

    nlohmann::json to_json() const;
    static KodairaFiber from_json(const nlohmann::json& j);

private:
    KodairaFiber(FiberType type, int n) : type_(type), n_(n) {}
    FiberType type_;
    int n_;
    long wild_ = 0;
};

// Local correction term contr(i, j) at a reducible fiber: the inverse-Cartan
// entry of the components met (cyclic i*(n-j)/n rule for I_n), 0 whenever the
// identity component is involved.
Rat contribution(const KodairaFiber& fiber, int i, int j);

struct FiberConfig {
    std::vector<KodairaFiber> fibers;
    long chi = 0; // holomorphic Euler characteristic; total euler = 12*chi

    nlohmann::json to_json() const;
    static FiberConfig from_json(const nlohmann::json& j);
};

// Validating constructor: requires sum of fiber Euler numbers (+wild) = 12*chi.
FiberConfig make_config(std::vector<KodairaFiber> fibers, long chi);

// Fiber configuration of w^2 + w(y^2+y) = z^l in Weierstrass form
//   y^2 + uy = u^3 - z^l u   (odd l >= 3):
// I_{2l} at z=0, l fibers I_1, and III (l = 3 mod 4) or III* (l = 1 mod 4)
// at infinity. In characteristic 2 the I_1 fibers are absorbed into wild
// ramification at infinity.
FiberConfig fiber_config_for_ell(long ell, bool char2 = false);

long euler_total(const FiberConfig& c);
long geometric_genus_for_ell(long ell); // floor(l/4)

// U + root lattices of the reducible fibers, in fiber order.
IntegralLattice trivial_lattice(const FiberConfig& c);

// A section of an elliptic fibration, described by incidences: po = (P.O),
// meets[f] = component met at reducible fiber index f (identity if absent),
// cross[name] = intersection number with the section of that name.
// The zero section is marked instead of carrying po: it meets the identity
// component of every fiber and has self-intersection -chi.
struct SectionData {
    std::string name;
    long po = 0;
    bool zero_section = false;
    std::map<std::size_t, int> meets;
    std::map<std::string, long> cross;

    static SectionData zero(std::string name = "O");

    nlohmann::json to_json() const;
    static SectionData from_json(const nlohmann::json& j);
};

// Shioda height pairing. For P = Q (same name):
//   h(P) = 2 chi + 2 (P.O) - sum_v contr_v(P, P);
// otherwise
//   <P,Q> = chi + (P.O) + (Q.O) - (P.Q) - sum_v contr_v(P, Q).
Rat height_pairing(const SectionData& p, const SectionData& q, const FiberConfig& c);

RatMatrix mw_gram(const std::vector<SectionData>& sections, const FiberConfig& c);

// |disc NS| = |disc Triv| * |disc MW| / torsion^2.
Rat shioda_tate_disc(const Int& trivial_disc, const Rat& mw_disc, const Int& torsion_order);

// Exceptional lattice of the resolution of w^2 + w(y^2+y) = z^5:
// A4 + A4 + A9 (rank 17, |disc| 250); in characteristic 2 extended by the
// strict transforms of the lines {w=z=0} and {w=u=0} to rank 18, disc -5.
IntegralLattice desingularization_lattice_ell5(bool char2);

// Evidence scan for the characteristic-2 extension: attaching the second
// line to component k of the A9 chain, for each k, the rank of the span and
// the discriminant of its nondegenerate quotient. The resolution forces
// k = 5 (branch contact (5,5) with the two axes); the scan shows it is also
// the only k matching disc -5.
struct Ell5Candidate {
    int k;
    std::size_t span_rank;
    Int disc;
};
std::vector<Ell5Candidate> ell5_char2_candidates();

} // namespace zk3

#endif
