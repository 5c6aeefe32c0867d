#include "cricnet/leadership.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cricnet/errors.hpp"

namespace cricnet {

TeamScore team_outcome_score(MatchOutcome outcome, int side) {
    if (outcome == MatchOutcome::Draw || outcome == MatchOutcome::Tie) return {1};
    const bool won = (outcome == MatchOutcome::Team1Win && side == 1) ||
                     (outcome == MatchOutcome::Team2Win && side == 2);
    return {won ? 2 : 0};
}

int centralized_indicator(const CentralityReport& report, const std::string& captain) {
    const auto captain_it = report.betweenness.find(captain);
    if (captain_it == report.betweenness.end()) {
        throw CaptainAbsentError("captain '" + captain + "' is not in the network");
    }
    constexpr double kMargin = 1e-9;
    for (const auto& [player, score] : report.betweenness) {
        if (player == captain) continue;
        if (captain_it->second <= score + kMargin) return 0;
    }
    return 1;
}

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

int median_split(const std::vector<double>& values, double pivot) {
    if (values.empty()) throw EmptyListError("median_split over an empty list");
    return pivot > median(values) ? 1 : 0;
}

double coefficient_of_variation(const std::vector<double>& points) {
    if (points.empty()) throw EmptyListError("coefficient of variation of an empty list");
    const double n = static_cast<double>(points.size());
    double mean = 0.0;
    for (const double p : points) mean += p;
    mean /= n;
    if (mean <= 0.0) throw ZeroMeanError("coefficient of variation needs a positive mean");
    if (points.size() == 1) return 0.0;
    double ss = 0.0;
    for (const double p : points) ss += (p - mean) * (p - mean);
    return std::sqrt(ss / (n - 1.0)) / mean;
}

namespace {

// The team's network for the match: aggregated over innings, or first
// innings only in the per-innings sensitivity mode.
PartnershipNetwork team_network(const MatchRecord& match, int side, const FeatureOptions& options) {
    const TeamInningsSet& team = match.teams[side - 1];
    if (options.per_innings_networks) {
        return build_innings_network(team.innings.front(), team.team, match.match_id);
    }
    return build_network(team, match.match_id);
}

// Captain's batting position: 1-based rank of first appearance across the
// match's partnership sequence, batsman_a before batsman_b within a stand.
int captain_batting_position(const TeamInningsSet& team, const std::string& captain) {
    int position = 0;
    std::vector<std::string> seen;
    for (const Innings& innings : team.innings) {
        for (const Partnership& p : innings.partnerships) {
            for (const std::string& player : {p.batsman_a, p.batsman_b}) {
                if (std::find(seen.begin(), seen.end(), player) == seen.end()) {
                    seen.push_back(player);
                    if (player == captain) return static_cast<int>(seen.size());
                }
            }
        }
    }
    return position;  // 0: captain never batted
}

struct RosterStats {
    std::vector<double> averages;
    std::vector<double> icc_points;
    bool complete = true;
};

RosterStats roster_stats(const PartnershipNetwork& net, int year, const PlayerStatsIndex& stats) {
    RosterStats result;
    for (const std::string& player : net.nodes()) {
        const auto row = stats.lookup(player, year);
        if (!row.has_value()) {
            result.complete = false;
            return result;
        }
        result.averages.push_back(row->batting_average);
        result.icc_points.push_back(static_cast<double>(row->icc_points));
    }
    return result;
}

}  // namespace

ObservationTable build_observations(const Corpus& corpus, const PlayerStatsIndex& stats,
                                    const FeatureOptions& options) {
    ObservationTable table;
    for (const MatchRecord& match : corpus.matches) {
        const bool decisive =
            match.outcome == MatchOutcome::Team1Win || match.outcome == MatchOutcome::Team2Win;
        for (int side = 1; side <= 2; ++side) {
            table.ledger.considered += 1;
            const TeamInningsSet& team = match.teams[side - 1];
            if (team.captain_did_not_bat) {
                table.ledger.drop("captain_did_not_bat");
                continue;
            }
            const PartnershipNetwork net = team_network(match, side, options);
            const CentralityReport report = compute_centrality_report(net);
            int centralized = 0;
            try {
                centralized = centralized_indicator(report, team.captain);
            } catch (const CaptainAbsentError&) {
                table.ledger.drop("captain_absent_from_network");
                continue;
            }
            const TeamScore score = team_outcome_score(match.outcome, side);
            table.score_rows.push_back(
                {match.match_id, match.format, centralized, score.score});
            if (!decisive && !options.include_draws_as_loss) {
                table.ledger.drop("indecisive_outcome");
                continue;
            }
            const RosterStats roster = roster_stats(net, match.year, stats);
            if (!roster.complete) {
                table.ledger.drop("missing_player_stats");
                continue;
            }
            const auto captain_row = stats.lookup(team.captain, match.year);
            if (!captain_row.has_value()) {
                table.ledger.drop("missing_player_stats");
                continue;
            }
            const int position = captain_batting_position(team, team.captain);
            if (position < 1 || position > 11) {
                table.ledger.drop("captain_position_out_of_range");
                continue;
            }
            ObservationRow row;
            row.match_id = match.match_id;
            row.format = match.format;
            row.team = team.team;
            row.year = match.year;
            row.batting_position = position;
            row.win = decisive ? (score.score == 2 ? 1 : 0) : 0;
            row.centralized = centralized;
            row.above_median_average = median_split(roster.averages, captain_row->batting_average);
            row.above_median_points =
                median_split(roster.icc_points, static_cast<double>(captain_row->icc_points));
            table.rows.push_back(std::move(row));
            table.ledger.used += 1;
        }
    }
    return table;
}

DifferentialTable build_differentials(const Corpus& corpus, const PlayerStatsIndex& stats,
                                      const FeatureOptions& options) {
    DifferentialTable table;
    for (const MatchRecord& match : corpus.matches) {
        table.ledger.considered += 1;
        double omega[2];
        double cv[2];
        double captain_average[2];
        double run_rate[2];
        bool dropped = false;
        for (int side = 1; side <= 2 && !dropped; ++side) {
            const TeamInningsSet& team = match.teams[side - 1];
            const PartnershipNetwork net = team_network(match, side, options);
            if (net.nodes().size() < 3) {
                table.ledger.drop("network_too_small_for_omega");
                dropped = true;
                break;
            }
            const RosterStats roster = roster_stats(net, match.year, stats);
            const auto captain_row = stats.lookup(team.captain, match.year);
            if (!roster.complete || !captain_row.has_value()) {
                table.ledger.drop("missing_player_stats");
                dropped = true;
                break;
            }
            try {
                cv[side - 1] = coefficient_of_variation(roster.icc_points);
            } catch (const ZeroMeanError&) {
                table.ledger.drop("zero_mean_icc_points");
                dropped = true;
                break;
            }
            omega[side - 1] = degree_centralization(net);
            captain_average[side - 1] = captain_row->batting_average;
            run_rate[side - 1] = team.run_rate();
        }
        if (dropped) continue;
        DifferentialRow row;
        row.match_id = match.match_id;
        row.format = match.format;
        row.ground = match.ground;
        row.year = match.year;
        row.d_run_rate = run_rate[0] - run_rate[1];
        row.d_omega = omega[0] - omega[1];
        row.d_cv_points = cv[0] - cv[1];
        row.d_captain_average = captain_average[0] - captain_average[1];
        table.rows.push_back(std::move(row));
        table.ledger.used += 1;
    }
    return table;
}

namespace {

std::string format_real(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

}  // namespace

std::string observations_to_csv(const std::vector<ObservationRow>& rows) {
    std::ostringstream out;
    out << "match_id,format,team,year,batting_position,W,C,S_b,S_p\n";
    for (const ObservationRow& r : rows) {
        out << r.match_id << ',' << to_string(r.format) << ',' << r.team << ',' << r.year << ','
            << r.batting_position << ',' << r.win << ',' << r.centralized << ','
            << r.above_median_average << ',' << r.above_median_points << '\n';
    }
    return out.str();
}

std::string differentials_to_csv(const std::vector<DifferentialRow>& rows) {
    std::ostringstream out;
    out << "match_id,format,ground,year,d_run_rate,d_omega,d_cv_points,d_captain_average\n";
    for (const DifferentialRow& r : rows) {
        out << r.match_id << ',' << to_string(r.format) << ',' << r.ground << ',' << r.year << ','
            << format_real(r.d_run_rate) << ',' << format_real(r.d_omega) << ','
            << format_real(r.d_cv_points) << ',' << format_real(r.d_captain_average) << '\n';
    }
    return out.str();
}

}  // namespace cricnet
