#ifndef THICKLAB_VERIFY_HPP
#define THICKLAB_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thicklab/amalgamation.hpp"
#include "thicklab/graph.hpp"
#include "thicklab/thickness.hpp"

namespace thicklab {

enum class Check { pass, fail, skip };

std::string to_string(Check c);
Check parse_check(const std::string& s);

// One amalgamation instance checked against its thickness bounds.
struct VerificationReport {
    int index = 0;
    AmalgamationKind kind = AmalgamationKind::vertex;
    std::string g1;   // graph6
    std::string g2;
    std::string spec;
    int theta1 = 0;
    int theta2 = 0;
    CertificateStatus status1 = CertificateStatus::exact;
    CertificateStatus status2 = CertificateStatus::exact;
    int composed = 0;        // non-empty parts of the composed decomposition
    int theta_lower = 0;     // amalgam thickness interval; equal ends when solved
    int theta_upper = 0;
    CertificateStatus status = CertificateStatus::exact;
    int bound_lower = 0;     // from theta1, theta2 and the kind
    int bound_upper = 0;
    Check lower = Check::skip;       // theta >= bound_lower
    Check upper = Check::skip;       // theta <= bound_upper
    Check composition = Check::skip; // theta_upper <= composed <= bound_upper
    std::int64_t nodes = 0;          // solver nodes over all three solves

    // All three solves finished and every check passed.
    bool verified() const;
    // No check failed. Budget-exhausted instances can pass without being verified.
    bool passed() const;
    bool operator==(const VerificationReport&) const = default;
};

// Fills bound_lower, bound_upper and the three checks from the numeric fields.
void recompute_flags(VerificationReport& r);

VerificationReport check_instance(const Graph& g1, const Graph& g2, const AmalgamationSpec& spec,
                                  const Budget& budget = {});

struct CampaignConfig {
    AmalgamationKind kind = AmalgamationKind::vertex;
    int count = 50;
    std::uint64_t seed = 1;
    int max_vertices = 10;
    int max_edges = 20;
    Budget budget;
};

class CampaignError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CampaignInstance {
    Graph g1;
    Graph g2;
    AmalgamationSpec spec;
};

// Deterministic operand pairs for a config. Throws CampaignError on an infeasible config.
std::vector<CampaignInstance> campaign_instances(const CampaignConfig& config);

std::vector<VerificationReport> run_campaign(const CampaignConfig& config);

bool campaign_passed(const std::vector<VerificationReport>& reports);

// Uniform integer in [0, bound) by rejection, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

std::string csv_header();
std::string to_csv_row(const VerificationReport& r);
std::string to_json_line(const VerificationReport& r);
std::string write_reports(const std::vector<VerificationReport>& reports, const std::string& format);
std::vector<VerificationReport> read_reports(const std::string& text, const std::string& format);

}  // namespace thicklab

#endif
