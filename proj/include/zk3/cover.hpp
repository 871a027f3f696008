#ifndef ZK3_COVER_HPP
#define ZK3_COVER_HPP

#include <zk3/rational.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace zk3 {

// A surface in a construction chain, tracked only through its topological
// Euler characteristic.
struct SurfaceNode {
    std::string label;
    long euler = 0;
    std::string notes;
};

// One step of a chain: blow-ups, contractions of (-1)-curves, totally
// branched cyclic covers, and cyclic quotients free off the fixed locus.
// Branch and fixed loci enter only through their Euler characteristic
// (a disjoint union of k rational curves has chi = 2k).
class CoverStep {
public:
    enum class Kind { BlowUp, Contract, CyclicCover, CyclicQuotient };

    static CoverStep blow_up(long points);
    static CoverStep contract(long curves);
    static CoverStep cyclic_cover(long degree, long branch_euler);
    static CoverStep cyclic_quotient(long degree, long fixed_euler);

    Kind kind() const { return kind_; }
    long count() const { return count_; }       // points / curves
    long degree() const { return degree_; }     // cover / quotient degree
    long locus_euler() const { return locus_euler_; }

    nlohmann::json to_json() const;
    static CoverStep from_json(const nlohmann::json& j);

private:
    CoverStep(Kind kind, long count, long degree, long locus_euler)
        : kind_(kind), count_(count), degree_(degree), locus_euler_(locus_euler) {}

    Kind kind_;
    long count_ = 0;
    long degree_ = 0;
    long locus_euler_ = 0;
};

// chi rules: blow_up(k): +k; contract(k): -k;
// cyclic_cover(d, cR):  chi -> d*(chi - cR) + cR;
// cyclic_quotient(d, cR): chi -> (chi - cR)/d + cR, requiring d | chi - cR.
SurfaceNode apply_step(const SurfaceNode& s, const CoverStep& step);

SurfaceNode run_chain(SurfaceNode start, const std::vector<CoverStep>& steps);
std::vector<CoverStep> chain_from_json(const nlohmann::json& j);
nlohmann::json chain_to_json(const std::vector<CoverStep>& steps);

// Self-intersection of the image of a curve under a finite degree-d quotient
// when the pullback of the image is m times the curve: m^2 * sq / d.
Rat image_self_intersection(long sq, long pullback_multiplicity, long degree);

// Self-intersection of the full preimage in the unramified direction: d * sq.
long pullback_square(long sq, long degree);

} // namespace zk3

#endif
