#include "cricnet/model.hpp"

#include <ctime>
#include <set>
#include <unordered_set>

#include "cricnet/errors.hpp"

namespace cricnet {

std::string to_string(MatchFormat f) {
    return f == MatchFormat::Test ? "TEST" : "ODI";
}

std::string to_string(MatchOutcome o) {
    switch (o) {
        case MatchOutcome::Team1Win: return "TEAM1_WIN";
        case MatchOutcome::Team2Win: return "TEAM2_WIN";
        case MatchOutcome::Draw: return "DRAW";
        case MatchOutcome::Tie: return "TIE";
    }
    return "TEAM1_WIN";
}

MatchFormat match_format_from_string(const std::string& s) {
    if (s == "TEST") return MatchFormat::Test;
    if (s == "ODI") return MatchFormat::Odi;
    throw SchemaError("unknown match format: '" + s + "'");
}

MatchOutcome match_outcome_from_string(const std::string& s) {
    if (s == "TEAM1_WIN") return MatchOutcome::Team1Win;
    if (s == "TEAM2_WIN") return MatchOutcome::Team2Win;
    if (s == "DRAW") return MatchOutcome::Draw;
    if (s == "TIE") return MatchOutcome::Tie;
    throw SchemaError("unknown match outcome: '" + s + "'");
}

int current_year_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    return tm_utc.tm_year + 1900;
}

namespace {

void validate_innings(const Innings& innings, const std::string& where) {
    if (innings.partnerships.empty()) {
        throw InvariantError(where + ": innings has no partnerships");
    }
    // Dismissals implied by the sequence: one per partnership transition.
    if (innings.partnerships.size() > 11) {
        throw InvariantError(where + ": partnership sequence implies more than 10 dismissals");
    }
    std::unordered_set<std::string> seen;
    const Partnership* prev = nullptr;
    for (const Partnership& p : innings.partnerships) {
        if (p.batsman_a.empty() || p.batsman_b.empty()) {
            throw InvariantError(where + ": empty player id in partnership");
        }
        if (p.batsman_a == p.batsman_b) {
            throw InvariantError(where + ": partnership pairs '" + p.batsman_a + "' with itself");
        }
        if (p.runs < 0) {
            throw InvariantError(where + ": negative partnership runs");
        }
        if (prev == nullptr) {
            seen.insert(p.batsman_a);
            seen.insert(p.batsman_b);
        } else {
            const bool a_prior = seen.count(p.batsman_a) > 0;
            const bool b_prior = seen.count(p.batsman_b) > 0;
            if (a_prior == b_prior) {
                throw InvariantError(where + ": partnership (" + p.batsman_a + ", " + p.batsman_b +
                                     ") must reuse exactly one prior batsman");
            }
            const std::string& surviving = a_prior ? p.batsman_a : p.batsman_b;
            if (surviving != prev->batsman_a && surviving != prev->batsman_b) {
                throw InvariantError(where + ": batsman '" + surviving +
                                     "' does not continue from the preceding partnership");
            }
            seen.insert(p.batsman_a);
            seen.insert(p.batsman_b);
        }
        prev = &p;
    }
}

void validate_team(const TeamInningsSet& team, MatchFormat format, const std::string& where) {
    if (team.team.empty()) throw InvariantError(where + ": empty team name");
    if (team.captain.empty()) throw InvariantError(where + ": empty captain id");
    if (team.runs_total < 0) throw InvariantError(where + ": negative runs_total");
    if (team.overs_balls < 0) throw InvariantError(where + ": negative overs");
    if (team.runs_total > 0 && team.overs_balls == 0) {
        throw InvariantError(where + ": runs_total > 0 with zero overs faced");
    }
    const std::size_t max_innings = format == MatchFormat::Test ? 2 : 1;
    if (team.innings.empty() || team.innings.size() > max_innings) {
        throw InvariantError(where + ": " + to_string(format) + " team must have 1" +
                             (max_innings == 2 ? " or 2" : "") + " innings, got " +
                             std::to_string(team.innings.size()));
    }
    bool captain_batted = false;
    for (std::size_t i = 0; i < team.innings.size(); ++i) {
        const std::string inn_where = where + " innings " + std::to_string(i + 1);
        validate_innings(team.innings[i], inn_where);
        for (const Partnership& p : team.innings[i].partnerships) {
            if (p.batsman_a == team.captain || p.batsman_b == team.captain) captain_batted = true;
        }
    }
    if (team.captain_did_not_bat && captain_batted) {
        throw InvariantError(where + ": captain flagged did_not_bat but appears in a partnership");
    }
    if (!team.captain_did_not_bat && !captain_batted) {
        throw InvariantError(where + ": captain '" + team.captain +
                             "' absent from all partnerships and not flagged did_not_bat");
    }
}

}  // namespace

void validate_match_record(const MatchRecord& match) {
    const std::string where = "match '" + match.match_id + "'";
    if (match.match_id.empty()) throw InvariantError("empty match_id");
    if (match.ground.empty()) throw InvariantError(where + ": empty ground");
    if (match.teams[0].team == match.teams[1].team) {
        throw InvariantError(where + ": the two teams must be distinct");
    }
    if (match.format == MatchFormat::Odi && match.outcome == MatchOutcome::Draw) {
        throw InvariantError(where + ": ODI matches cannot be drawn");
    }
    const int first_year = match.format == MatchFormat::Test ? kFirstTestYear : kFirstOdiYear;
    if (match.year < first_year || match.year > current_year_utc()) {
        throw InvariantError(where + ": year " + std::to_string(match.year) + " outside [" +
                             std::to_string(first_year) + ", present] for " +
                             to_string(match.format));
    }
    validate_team(match.teams[0], match.format, where + " team 1");
    validate_team(match.teams[1], match.format, where + " team 2");
}

}  // namespace cricnet
