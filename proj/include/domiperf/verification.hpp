#pragma once

#include "domiperf/enumeration.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace domiperf {

inline constexpr std::size_t kMaxListedCounterexamples = 100;

struct Counterexample {
    std::string sweep;
    std::string graph6;
    nlohmann::json verdicts;
};

/// Tally over one universe. checked == agreements + counterexample_total.
/// Listed counterexamples are sorted by (sweep, graph6) and capped.
struct VerificationReport {
    std::string suite;
    nlohmann::json universe;
    std::size_t checked = 0;
    std::size_t agreements = 0;
    std::size_t counterexample_total = 0;
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds = 0.0;
    std::vector<std::string> notes;
    nlohmann::json details = nlohmann::json::object();

    bool ok() const { return counterexample_total == 0; }
    /// Without elapsed time, for comparing runs.
    nlohmann::json to_json(bool with_timing = true) const;
};

/// Definition, gamma2 and forbidden-subgraph verdicts on every graph of order 1..order_max (<= 8).
/// details: per-order counts, pairwise disagreement counts, minimal imperfect graphs found.
VerificationReport verify_theorem(int order_max);

/// gamma <= i <= alpha_c <= alpha with consistent witnesses on every graph of order 1..order_max (<= 8).
VerificationReport verify_chain(int order_max);

struct CorollaryOrders {
    int graphs = kMaxEnumerationOrder;  ///< chordal, claw-free and block-graph sweeps
    int trees = kMaxTreeOrder;
    int line_hosts = 7;
    int middle_hosts = 5;

    /// graphs = order_max; trees = 12 when order_max is 8, else order_max; hosts capped at 7 and 5.
    static CorollaryOrders for_order(int order_max);
};

VerificationReport verify_corollaries(const CorollaryOrders& orders);
VerificationReport verify_corollaries(int order_max);

/// Sums tallies, concatenates counterexamples, notes and details under each suite name.
VerificationReport combine(const std::vector<VerificationReport>& parts, std::string suite);

}  // namespace domiperf
