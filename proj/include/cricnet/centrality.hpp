#pragma once

#include <map>
#include <optional>
#include <string>

#include "cricnet/graph.hpp"

namespace cricnet {

// Runs enter the shortest-path metric as d = 1 / (w + 1): heavier
// partnerships are shorter, and zero-run partnerships stay finite.
double edge_distance(long long weight);

// Relative tolerance for treating two accumulated path distances as equal.
inline constexpr double kPathTieTolerance = 1e-9;

bool nearly_equal_distance(double a, double b);

// Betweenness centrality on the run-weighted shortest-path metric: for each
// node i, the sum over unordered node pairs {j, l} (j != i != l) of the
// fraction of shortest j-l paths passing through i. Unnormalized; endpoints
// excluded. Throws DisconnectedError on a disconnected network.
std::map<std::string, double> weighted_betweenness(const PartnershipNetwork& net);

// Component-wise betweenness: each connected component is scored
// independently, so disconnected networks are accepted.
std::map<std::string, double> weighted_betweenness_by_component(const PartnershipNetwork& net);

// Degree-based centralization: omega = sum_i (k_max - k_i) / ((N-1)(N-2)),
// where k_i counts distinct batting partners. 0 for regular degree
// sequences, 1 for a star. Throws TooSmallError when N < 3.
double degree_centralization(const PartnershipNetwork& net);

struct CentralityReport {
    std::map<std::string, double> betweenness;
    std::optional<double> omega;  // absent when N < 3
    int n_players = 0;

    std::string to_json() const;
};

// Betweenness is computed per component (aggregated Test networks can be
// disconnected); omega over the full node set, or absent when N < 3.
CentralityReport compute_centrality_report(const PartnershipNetwork& net);

}  // namespace cricnet
