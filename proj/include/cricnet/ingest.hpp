#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cricnet/model.hpp"

namespace cricnet {

// Cricket overs notation "<int>" or "<int>.<ball>" with ball in 0..5.
// Returns total balls; parse_overs converts to decimal overs (balls / 6).
int parse_overs_balls(const std::string& text);
double parse_overs(const std::string& text);
std::string format_overs(int balls);

// One match document (schema version 1, one JSON object per corpus line).
// Unknown or missing keys raise SchemaError; invariant violations raise
// InvariantError. Parsing is deterministic.
MatchRecord parse_match_record(const std::string& text);

// Canonical serialization: compact JSON, keys in lexicographic order, all
// optional keys materialized. parse -> serialize is idempotent.
std::string serialize_match_record(const MatchRecord& match);

struct Corpus {
    std::vector<MatchRecord> matches;  // in file order

    const MatchRecord* find(const std::string& match_id) const;
};

// Line-delimited corpus; blank lines are skipped. Repeated match_id raises
// DuplicateIdError.
Corpus load_corpus(std::istream& in);
Corpus load_corpus_file(const std::string& path);

class PlayerStatsIndex {
  public:
    void insert(const PlayerSeasonStats& row);
    std::optional<PlayerSeasonStats> lookup(const std::string& player, int year) const;
    std::size_t size() const { return rows_.size(); }

  private:
    std::map<std::pair<std::string, int>, PlayerSeasonStats> rows_;
};

// CSV with exact header `player,year,icc_points,batting_average`. Duplicate
// (player, year) keys raise DuplicateKeyError; out-of-range values raise
// RangeError.
PlayerStatsIndex load_player_stats(std::istream& in);
PlayerStatsIndex load_player_stats_file(const std::string& path);

std::string serialize_player_stats(const std::vector<PlayerSeasonStats>& rows);

}  // namespace cricnet
