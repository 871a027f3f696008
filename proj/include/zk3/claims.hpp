#ifndef ZK3_CLAIMS_HPP
#define ZK3_CLAIMS_HPP

#include <zk3/rational.hpp>

#include <string>
#include <vector>

namespace zk3 {

enum class ClaimStatus { Pass, Fail, Skipped };
enum class Provenance { Paper, Derived, Trivial };

std::string to_string(ClaimStatus s);
std::string to_string(Provenance p);

// One verified value. Instance ids extend the registry id with a sub-check
// and parameters, e.g. "thm-3.3#h-det@j0,p=5". Exact values are compared as
// normalized strings; pass means byte equality.
struct ClaimReport {
    std::string id;
    std::string description;
    std::string paper_location;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::Fail;
    Provenance provenance = Provenance::Derived;
};

class ClaimRegistry {
public:
    static const ClaimRegistry& standard();

    std::vector<std::string> ids() const;
    bool has_claim(const std::string& id) const;

    // Filter is a registry id or a glob over registry ids (*, ?). A literal
    // filter naming no claim throws std::invalid_argument (usage error); a
    // glob matching nothing yields an empty report. prime_override replaces
    // the default prime set of prime-parameterizable claims; inadmissible
    // primes produce skipped entries.
    std::vector<ClaimReport> run(const std::string& filter = "",
                                 const std::vector<Int>& prime_override = {}) const;

private:
    struct Def {
        std::string id;
        bool prime_parameterizable;
        void (*runner)(const std::vector<Int>& primes, std::vector<ClaimReport>& out);
    };
    std::vector<Def> defs_;
};

std::vector<ClaimReport> run_claims(const std::string& filter = "",
                                    const std::vector<Int>& prime_override = {});

enum class ReportFormat { Json, Markdown, Tsv };
ReportFormat report_format_from_string(const std::string& s);

// Stable, deterministic rendering; JSON is the canonical format (one object
// per claim with the ClaimReport fields).
std::string emit_report(const std::vector<ClaimReport>& reports, ReportFormat format);

bool any_failed(const std::vector<ClaimReport>& reports);

// Minimal glob: '*' any run, '?' any single character.
bool glob_match(const std::string& pattern, const std::string& text);

} // namespace zk3

#endif
