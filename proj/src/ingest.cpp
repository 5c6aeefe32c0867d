#include "cricnet/ingest.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "cricnet/errors.hpp"

namespace cricnet {

using nlohmann::json;

int parse_overs_balls(const std::string& text) {
    const auto bad = [&](const std::string& why) {
        throw FormatError("bad overs '" + text + "': " + why);
    };
    if (text.empty()) bad("empty");
    const std::size_t dot = text.find('.');
    const std::string whole_part = dot == std::string::npos ? text : text.substr(0, dot);
    if (whole_part.empty()) bad("missing over count");
    for (char c : whole_part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) bad("non-digit over count");
    }
    int whole = 0;
    const auto [ptr, ec] =
        std::from_chars(whole_part.data(), whole_part.data() + whole_part.size(), whole);
    if (ec != std::errc() || ptr != whole_part.data() + whole_part.size()) bad("over count overflow");
    int balls = 0;
    if (dot != std::string::npos) {
        const std::string ball_part = text.substr(dot + 1);
        if (ball_part.size() != 1 || !std::isdigit(static_cast<unsigned char>(ball_part[0]))) {
            bad("ball digit must be a single digit");
        }
        balls = ball_part[0] - '0';
        if (balls > 5) bad("ball digit must be in 0..5");
    }
    return whole * 6 + balls;
}

double parse_overs(const std::string& text) {
    return static_cast<double>(parse_overs_balls(text)) / 6.0;
}

std::string format_overs(int balls) {
    return std::to_string(balls / 6) + "." + std::to_string(balls % 6);
}

namespace {

// Rejects unknown keys so silent typos cannot pass validation.
void require_keys(const json& obj, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& where) {
    if (!obj.is_object()) throw SchemaError(where + ": expected a JSON object");
    for (const std::string& key : required) {
        if (!obj.contains(key)) throw SchemaError(where + ": missing key '" + key + "'");
    }
    for (const auto& [key, value] : obj.items()) {
        if (required.count(key) == 0 && optional.count(key) == 0) {
            throw SchemaError(where + ": unexpected key '" + key + "'");
        }
    }
}

std::string get_string(const json& obj, const std::string& key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw SchemaError(where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

long long get_integer(const json& obj, const std::string& key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw SchemaError(where + ": '" + key + "' must be an integer");
    return v.get<long long>();
}

Partnership parse_partnership(const json& obj, const std::string& where) {
    require_keys(obj, {"a", "b", "runs"}, {}, where);
    Partnership p;
    p.batsman_a = get_string(obj, "a", where);
    p.batsman_b = get_string(obj, "b", where);
    p.runs = get_integer(obj, "runs", where);
    return p;
}

Innings parse_innings(const json& obj, const std::string& where) {
    require_keys(obj, {"partnerships"}, {}, where);
    const json& list = obj.at("partnerships");
    if (!list.is_array()) throw SchemaError(where + ": 'partnerships' must be an array");
    Innings innings;
    std::size_t i = 0;
    for (const json& p : list) {
        innings.partnerships.push_back(
            parse_partnership(p, where + " partnership " + std::to_string(++i)));
    }
    return innings;
}

TeamInningsSet parse_team(const json& obj, const std::string& where) {
    require_keys(obj, {"team", "captain", "innings", "runs_total", "overs"}, {"did_not_bat"},
                 where);
    TeamInningsSet team;
    team.team = get_string(obj, "team", where);
    team.captain = get_string(obj, "captain", where);
    if (obj.contains("did_not_bat")) {
        if (!obj.at("did_not_bat").is_boolean()) {
            throw SchemaError(where + ": 'did_not_bat' must be a boolean");
        }
        team.captain_did_not_bat = obj.at("did_not_bat").get<bool>();
    }
    team.runs_total = get_integer(obj, "runs_total", where);
    team.overs_balls = parse_overs_balls(get_string(obj, "overs", where));
    const json& innings = obj.at("innings");
    if (!innings.is_array()) throw SchemaError(where + ": 'innings' must be an array");
    std::size_t i = 0;
    for (const json& inn : innings) {
        team.innings.push_back(parse_innings(inn, where + " innings " + std::to_string(++i)));
    }
    return team;
}

json partnership_to_json(const Partnership& p) {
    return json{{"a", p.batsman_a}, {"b", p.batsman_b}, {"runs", p.runs}};
}

json team_to_json(const TeamInningsSet& team) {
    json innings = json::array();
    for (const Innings& inn : team.innings) {
        json partnerships = json::array();
        for (const Partnership& p : inn.partnerships) partnerships.push_back(partnership_to_json(p));
        innings.push_back(json{{"partnerships", std::move(partnerships)}});
    }
    return json{{"team", team.team},
                {"captain", team.captain},
                {"did_not_bat", team.captain_did_not_bat},
                {"innings", std::move(innings)},
                {"runs_total", team.runs_total},
                {"overs", format_overs(team.overs_balls)}};
}

}  // namespace

MatchRecord parse_match_record(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    require_keys(doc, {"v", "match_id", "format", "year", "ground", "outcome", "teams"}, {},
                 "match document");
    const long long version = get_integer(doc, "v", "match document");
    if (version != 1) {
        throw SchemaError("unsupported schema version " + std::to_string(version));
    }
    MatchRecord match;
    match.match_id = get_string(doc, "match_id", "match document");
    const std::string where = "match '" + match.match_id + "'";
    match.format = match_format_from_string(get_string(doc, "format", where));
    match.year = static_cast<int>(get_integer(doc, "year", where));
    match.ground = get_string(doc, "ground", where);
    match.outcome = match_outcome_from_string(get_string(doc, "outcome", where));
    const json& teams = doc.at("teams");
    if (!teams.is_array() || teams.size() != 2) {
        throw SchemaError(where + ": 'teams' must be an array of exactly 2 entries");
    }
    match.teams[0] = parse_team(teams[0], where + " team 1");
    match.teams[1] = parse_team(teams[1], where + " team 2");
    validate_match_record(match);
    return match;
}

std::string serialize_match_record(const MatchRecord& match) {
    const json doc{{"v", 1},
                   {"match_id", match.match_id},
                   {"format", to_string(match.format)},
                   {"year", match.year},
                   {"ground", match.ground},
                   {"outcome", to_string(match.outcome)},
                   {"teams", json::array({team_to_json(match.teams[0]),
                                          team_to_json(match.teams[1])})}};
    return doc.dump();
}

const MatchRecord* Corpus::find(const std::string& match_id) const {
    for (const MatchRecord& m : matches) {
        if (m.match_id == match_id) return &m;
    }
    return nullptr;
}

Corpus load_corpus(std::istream& in) {
    Corpus corpus;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        MatchRecord match;
        const std::string prefix = "corpus line " + std::to_string(line_no) + ": ";
        try {
            match = parse_match_record(line);
        } catch (const InvariantError& e) {
            throw InvariantError(prefix + e.what());
        } catch (const FormatError& e) {
            throw FormatError(prefix + e.what());
        } catch (const DataError& e) {
            throw SchemaError(prefix + e.what());
        }
        if (!ids.insert(match.match_id).second) {
            throw DuplicateIdError("corpus line " + std::to_string(line_no) +
                                   ": duplicate match_id '" + match.match_id + "'");
        }
        corpus.matches.push_back(std::move(match));
    }
    return corpus;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open corpus file '" + path + "'");
    return load_corpus(in);
}

void PlayerStatsIndex::insert(const PlayerSeasonStats& row) {
    if (row.icc_points < 0 || row.icc_points > 1000) {
        throw RangeError("icc_points " + std::to_string(row.icc_points) + " for '" + row.player +
                         "' outside [0, 1000]");
    }
    if (row.batting_average < 0.0) {
        throw RangeError("negative batting_average for '" + row.player + "'");
    }
    const auto key = std::make_pair(row.player, row.year);
    if (!rows_.emplace(key, row).second) {
        throw DuplicateKeyError("duplicate player stats for (" + row.player + ", " +
                                std::to_string(row.year) + ")");
    }
}

std::optional<PlayerSeasonStats> PlayerStatsIndex::lookup(const std::string& player,
                                                          int year) const {
    const auto it = rows_.find(std::make_pair(player, year));
    if (it == rows_.end()) return std::nullopt;
    return it->second;
}

PlayerStatsIndex load_player_stats(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "player,year,icc_points,batting_average") {
        throw SchemaError("player stats file must start with header "
                          "'player,year,icc_points,batting_average'");
    }
    PlayerStatsIndex index;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string player, year_s, icc_s, avg_s;
        if (!std::getline(row, player, ',') || !std::getline(row, year_s, ',') ||
            !std::getline(row, icc_s, ',') || !std::getline(row, avg_s)) {
            throw SchemaError("player stats line " + std::to_string(line_no) +
                              ": expected 4 comma-separated fields");
        }
        PlayerSeasonStats stats;
        stats.player = player;
        try {
            stats.year = std::stoi(year_s);
            stats.icc_points = std::stoi(icc_s);
            stats.batting_average = std::stod(avg_s);
        } catch (const std::exception&) {
            throw SchemaError("player stats line " + std::to_string(line_no) +
                              ": malformed numeric field");
        }
        index.insert(stats);
    }
    return index;
}

PlayerStatsIndex load_player_stats_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open player stats file '" + path + "'");
    return load_player_stats(in);
}

std::string serialize_player_stats(const std::vector<PlayerSeasonStats>& rows) {
    std::ostringstream out;
    out << "player,year,icc_points,batting_average\n";
    for (const PlayerSeasonStats& r : rows) {
        out << r.player << ',' << r.year << ',' << r.icc_points << ',';
        // Batting averages are written with one decimal; the simulator only
        // generates tenths so the round trip is exact.
        const long long tenths = static_cast<long long>(r.batting_average * 10.0 + 0.5);
        out << (tenths / 10) << '.' << (tenths % 10) << '\n';
    }
    return out.str();
}

}  // namespace cricnet
