#pragma once

#include <map>
#include <string>
#include <vector>

#include "cricnet/centrality.hpp"
#include "cricnet/ingest.hpp"
#include "cricnet/model.hpp"

namespace cricnet {

// Per-team match score: 0 loss, 1 draw or tie, 2 win.
struct TeamScore {
    int score = 0;
};

TeamScore team_outcome_score(MatchOutcome outcome, int side);  // side is 1 or 2

// 1 iff the captain's betweenness strictly exceeds every other player's by
// more than 1e-9; ties are de-centralized. Throws CaptainAbsentError when
// the captain is not a network node.
int centralized_indicator(const CentralityReport& report, const std::string& captain);

// 1 iff pivot > median(values); the median of an even-length list is the
// midpoint of the two central order statistics.
int median_split(const std::vector<double>& values, double pivot);

// Sample standard deviation (n-1 denominator) over the mean. A single value
// has zero dispersion. Throws EmptyListError / ZeroMeanError.
double coefficient_of_variation(const std::vector<double>& points);

struct ObservationRow {
    std::string match_id;
    MatchFormat format = MatchFormat::Odi;
    std::string team;
    int year = 0;
    int batting_position = 0;  // captain's, by first appearance in the partnership sequence
    int win = 0;               // W
    int centralized = 0;       // C
    int above_median_average = 0;  // S_b
    int above_median_points = 0;   // S_p
};

struct DifferentialRow {
    std::string match_id;
    MatchFormat format = MatchFormat::Odi;
    std::string ground;
    int year = 0;
    double d_run_rate = 0.0;     // r1 - r2, first minus second batting innings
    double d_omega = 0.0;        // omega1 - omega2
    double d_cv_points = 0.0;    // talent dispersion difference
    double d_captain_average = 0.0;
};

// Per-team leadership stratum datum for score averages and the binomial CI
// strata (wins for ODI, wins+draws for Test).
struct ScoreRow {
    std::string match_id;
    MatchFormat format = MatchFormat::Odi;
    int centralized = 0;
    int score = 0;  // 0/1/2
};

struct DropLedger {
    std::size_t considered = 0;  // candidate rows (or matches) entering the stage
    std::size_t used = 0;
    std::map<std::string, std::size_t> reasons;

    void drop(const std::string& reason) {
        ++reasons[reason];
    }
    std::size_t total_dropped() const {
        std::size_t n = 0;
        for (const auto& [reason, count] : reasons) n += count;
        return n;
    }
};

struct FeatureOptions {
    bool include_draws_as_loss = false;  // draws/ties enter the logit with W = 0
    bool per_innings_networks = false;   // sensitivity: first innings only per team
};

struct ObservationTable {
    std::vector<ObservationRow> rows;
    std::vector<ScoreRow> score_rows;  // includes draws/ties, for Fig-2-style averages
    DropLedger ledger;                 // per candidate team-row
};

struct DifferentialTable {
    std::vector<DifferentialRow> rows;
    DropLedger ledger;  // per match
};

// Two rows per decisive match (one per team); draws/ties are excluded from
// the logit sample unless include_draws_as_loss is set. Score rows cover
// every match with a computable indicator. Rows are emitted in corpus order.
ObservationTable build_observations(const Corpus& corpus, const PlayerStatsIndex& stats,
                                    const FeatureOptions& options = {});

// One row per match; subscript 1 is the first batting innings (first team
// entry in the document), 2 the second.
DifferentialTable build_differentials(const Corpus& corpus, const PlayerStatsIndex& stats,
                                      const FeatureOptions& options = {});

std::string observations_to_csv(const std::vector<ObservationRow>& rows);
std::string differentials_to_csv(const std::vector<DifferentialRow>& rows);

}  // namespace cricnet
