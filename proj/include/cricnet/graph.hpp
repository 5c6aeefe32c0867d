#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cricnet/model.hpp"

namespace cricnet {

// Weighted undirected batting-partnership network for one team in one match.
// Nodes are player ids in sorted order; an edge weight is the total runs the
// pair scored together across the team's innings in the match.
class PartnershipNetwork {
  public:
    using EdgeKey = std::pair<std::string, std::string>;  // lexicographically ordered pair

    PartnershipNetwork(std::string team, std::string match_id)
        : team_(std::move(team)), match_id_(std::move(match_id)) {}

    void add_partnership(const std::string& a, const std::string& b, long long runs);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::map<EdgeKey, long long>& edges() const { return edges_; }
    const std::string& team() const { return team_; }
    const std::string& match_id() const { return match_id_; }

    bool has_node(const std::string& player) const;
    // Number of distinct batting partners of a player.
    int degree(const std::string& player) const;
    long long total_weight() const;
    bool connected() const;
    // Node index sets of the connected components, each sorted.
    std::vector<std::vector<std::size_t>> components() const;

  private:
    std::string team_;
    std::string match_id_;
    std::vector<std::string> nodes_;               // sorted, unique
    std::map<EdgeKey, long long> edges_;
};

// Aggregates every innings of the set into one network (Test second innings
// pair weights are summed into the same edge). EmptyInningsError when no
// partnerships exist.
PartnershipNetwork build_network(const TeamInningsSet& innings_set, const std::string& match_id);

// Network of a single innings, for per-innings sensitivity runs.
PartnershipNetwork build_innings_network(const Innings& innings, const std::string& team,
                                         const std::string& match_id);

enum class GraphExportFormat { Dot, GraphMl, Json };

GraphExportFormat graph_export_format_from_string(const std::string& s);

// Stable-ordered text export. When betweenness scores are supplied they are
// attached as node annotations.
std::string export_graph(const PartnershipNetwork& net, GraphExportFormat format,
                         const std::map<std::string, double>* betweenness = nullptr);

}  // namespace cricnet
