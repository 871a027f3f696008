#include <zk3/cover.hpp>

#include <stdexcept>

namespace zk3 {

CoverStep CoverStep::blow_up(long points) {
    if (points < 0)
        throw std::invalid_argument("blow_up needs k >= 0");
    return CoverStep(Kind::BlowUp, points, 0, 0);
}

CoverStep CoverStep::contract(long curves) {
    if (curves < 0)
        throw std::invalid_argument("contract needs k >= 0");
    return CoverStep(Kind::Contract, curves, 0, 0);
}

CoverStep CoverStep::cyclic_cover(long degree, long branch_euler) {
    if (degree < 2)
        throw std::invalid_argument("cyclic_cover needs degree >= 2");
    return CoverStep(Kind::CyclicCover, 0, degree, branch_euler);
}

CoverStep CoverStep::cyclic_quotient(long degree, long fixed_euler) {
    if (degree < 2)
        throw std::invalid_argument("cyclic_quotient needs degree >= 2");
    return CoverStep(Kind::CyclicQuotient, 0, degree, fixed_euler);
}

SurfaceNode apply_step(const SurfaceNode& s, const CoverStep& step) {
    SurfaceNode out = s;
    switch (step.kind()) {
    case CoverStep::Kind::BlowUp:
        out.euler = s.euler + step.count();
        break;
    case CoverStep::Kind::Contract:
        out.euler = s.euler - step.count();
        break;
    case CoverStep::Kind::CyclicCover:
        out.euler = step.degree() * (s.euler - step.locus_euler()) + step.locus_euler();
        break;
    case CoverStep::Kind::CyclicQuotient: {
        long diff = s.euler - step.locus_euler();
        if (diff % step.degree() != 0)
            throw std::domain_error("inconsistent chain: chi - chi_R = " +
                                    std::to_string(diff) + " is not divisible by " +
                                    std::to_string(step.degree()));
        out.euler = diff / step.degree() + step.locus_euler();
        break;
    }
    }
    return out;
}

SurfaceNode run_chain(SurfaceNode start, const std::vector<CoverStep>& steps) {
    for (const CoverStep& s : steps)
        start = apply_step(start, s);
    return start;
}

nlohmann::json CoverStep::to_json() const {
    nlohmann::json j;
    switch (kind_) {
    case Kind::BlowUp:
        j["op"] = "blow_up";
        j["points"] = count_;
        break;
    case Kind::Contract:
        j["op"] = "contract";
        j["curves"] = count_;
        break;
    case Kind::CyclicCover:
        j["op"] = "cyclic_cover";
        j["degree"] = degree_;
        j["branch_euler"] = locus_euler_;
        break;
    case Kind::CyclicQuotient:
        j["op"] = "cyclic_quotient";
        j["degree"] = degree_;
        j["fixed_euler"] = locus_euler_;
        break;
    }
    return j;
}

CoverStep CoverStep::from_json(const nlohmann::json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "blow_up")
        return blow_up(j.at("points").get<long>());
    if (op == "contract")
        return contract(j.at("curves").get<long>());
    if (op == "cyclic_cover")
        return cyclic_cover(j.at("degree").get<long>(), j.at("branch_euler").get<long>());
    if (op == "cyclic_quotient")
        return cyclic_quotient(j.at("degree").get<long>(), j.at("fixed_euler").get<long>());
    throw std::invalid_argument("unknown chain step '" + op + "'");
}

std::vector<CoverStep> chain_from_json(const nlohmann::json& j) {
    std::vector<CoverStep> steps;
    for (const auto& e : j)
        steps.push_back(CoverStep::from_json(e));
    return steps;
}

nlohmann::json chain_to_json(const std::vector<CoverStep>& steps) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : steps)
        j.push_back(s.to_json());
    return j;
}

Rat image_self_intersection(long sq, long pullback_multiplicity, long degree) {
    if (degree < 1 || pullback_multiplicity < 1)
        throw std::invalid_argument("degree and multiplicity must be >= 1");
    return make_rat(Int(pullback_multiplicity) * Int(pullback_multiplicity) * Int(sq),
                    Int(degree));
}

long pullback_square(long sq, long degree) {
    return degree * sq;
}

} // namespace zk3
