#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cricnet {

enum class MatchFormat { Test, Odi };

enum class MatchOutcome { Team1Win, Team2Win, Draw, Tie };

std::string to_string(MatchFormat f);
std::string to_string(MatchOutcome o);
MatchFormat match_format_from_string(const std::string& s);
MatchOutcome match_outcome_from_string(const std::string& s);

// One unbroken stand between a fixed pair of batsmen. The pair order is the
// order of appearance at the crease: in the opening partnership `batsman_a`
// takes batting position 1 and `batsman_b` position 2.
struct Partnership {
    std::string batsman_a;
    std::string batsman_b;
    long long runs = 0;
};

struct Innings {
    std::vector<Partnership> partnerships;
};

struct TeamInningsSet {
    std::string team;
    std::string captain;
    bool captain_did_not_bat = false;
    std::vector<Innings> innings;
    long long runs_total = 0;
    int overs_balls = 0;  // overs faced, stored as balls (6 balls = 1 over)

    double overs_decimal() const { return static_cast<double>(overs_balls) / 6.0; }
    // Runs per over across the team's innings in the match; 0 for an unplayed innings.
    double run_rate() const {
        return overs_balls > 0 ? static_cast<double>(runs_total) / overs_decimal() : 0.0;
    }
};

struct MatchRecord {
    std::string match_id;
    MatchFormat format = MatchFormat::Odi;
    int year = 0;
    std::string ground;
    TeamInningsSet teams[2];
    MatchOutcome outcome = MatchOutcome::Team1Win;
};

struct PlayerSeasonStats {
    std::string player;
    int year = 0;
    int icc_points = 0;           // official rating, 0..1000
    double batting_average = 0.0;  // runs per dismissal
};

// Earliest season covered by each format; the upper bound is the current year.
inline constexpr int kFirstTestYear = 1877;
inline constexpr int kFirstOdiYear = 1971;

int current_year_utc();

// Checks every type invariant (team count and names, innings counts per
// format, outcome/format compatibility, year range, the partnership chain
// property, captain presence, overs consistency). Throws InvariantError.
void validate_match_record(const MatchRecord& match);

}  // namespace cricnet
