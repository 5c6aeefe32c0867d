#include "cricnet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "cricnet/errors.hpp"

namespace cricnet {

double edge_distance(long long weight) {
    return 1.0 / (static_cast<double>(weight) + 1.0);
}

bool nearly_equal_distance(double a, double b) {
    return std::abs(a - b) <= kPathTieTolerance * std::max(std::abs(a), std::abs(b));
}

namespace {

struct IndexedGraph {
    std::vector<std::string> nodes;
    std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;  // (neighbor, distance)
};

IndexedGraph index_graph(const PartnershipNetwork& net) {
    IndexedGraph g;
    g.nodes = net.nodes();
    g.adjacency.resize(g.nodes.size());
    const auto index_of = [&](const std::string& player) {
        return static_cast<std::size_t>(
            std::lower_bound(g.nodes.begin(), g.nodes.end(), player) - g.nodes.begin());
    };
    for (const auto& [key, weight] : net.edges()) {
        const std::size_t a = index_of(key.first);
        const std::size_t b = index_of(key.second);
        const double d = edge_distance(weight);
        g.adjacency[a].emplace_back(b, d);
        g.adjacency[b].emplace_back(a, d);
    }
    return g;
}

// Brandes-style accumulation restricted to one component. Sources are taken
// from `members`; each unordered pair ends up counted twice, so the caller
// halves the totals. Teams field at most 11 batsmen, so the O(n^2) Dijkstra
// is plenty.
void accumulate_betweenness(const IndexedGraph& g, const std::vector<std::size_t>& members,
                            std::vector<double>& score) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const std::size_t n = g.nodes.size();
    std::vector<double> dist(n);
    std::vector<bool> settled(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::vector<std::size_t>> preds(n);

    for (const std::size_t source : members) {
        dist.assign(n, kInf);
        settled.assign(n, false);
        dist[source] = 0.0;
        std::vector<std::size_t> order;
        order.reserve(members.size());
        for (;;) {
            std::size_t best = n;
            for (const std::size_t v : members) {
                if (!settled[v] && dist[v] < kInf && (best == n || dist[v] < dist[best])) best = v;
            }
            if (best == n) break;
            settled[best] = true;
            order.push_back(best);
            for (const auto& [u, d] : g.adjacency[best]) {
                if (!settled[u] && dist[best] + d < dist[u]) dist[u] = dist[best] + d;
            }
        }
        // Shortest-path DAG under the tie tolerance, then path counts in
        // settled (non-decreasing distance) order.
        for (const std::size_t v : order) {
            sigma[v] = 0.0;
            delta[v] = 0.0;
            preds[v].clear();
        }
        sigma[source] = 1.0;
        for (const std::size_t v : order) {
            if (v == source) continue;
            for (const auto& [u, d] : g.adjacency[v]) {
                if (dist[u] < dist[v] && nearly_equal_distance(dist[u] + d, dist[v])) {
                    preds[v].push_back(u);
                    sigma[v] += sigma[u];
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t v = *it;
            for (const std::size_t u : preds[v]) {
                delta[u] += sigma[u] / sigma[v] * (1.0 + delta[v]);
            }
            if (v != source) score[v] += delta[v];
        }
    }
}

}  // namespace

std::map<std::string, double> weighted_betweenness(const PartnershipNetwork& net) {
    if (net.nodes().empty()) throw DisconnectedError("betweenness of an empty network");
    if (!net.connected()) {
        throw DisconnectedError("network for team '" + net.team() + "' in match '" +
                                net.match_id() + "' is disconnected");
    }
    return weighted_betweenness_by_component(net);
}

std::map<std::string, double> weighted_betweenness_by_component(const PartnershipNetwork& net) {
    const IndexedGraph g = index_graph(net);
    std::vector<double> score(g.nodes.size(), 0.0);
    for (const std::vector<std::size_t>& component : net.components()) {
        accumulate_betweenness(g, component, score);
    }
    std::map<std::string, double> result;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        result[g.nodes[i]] = score[i] / 2.0;  // unordered pairs counted once
    }
    return result;
}

double degree_centralization(const PartnershipNetwork& net) {
    const std::size_t n = net.nodes().size();
    if (n < 3) {
        throw TooSmallError("centralization needs at least 3 players, got " + std::to_string(n));
    }
    std::vector<long long> degrees;
    degrees.reserve(n);
    for (const std::string& node : net.nodes()) degrees.push_back(net.degree(node));
    const long long k_max = *std::max_element(degrees.begin(), degrees.end());
    long long sum = 0;
    for (const long long k : degrees) sum += k_max - k;
    return static_cast<double>(sum) /
           (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

std::string CentralityReport::to_json() const {
    nlohmann::json scores = nlohmann::json::object();
    for (const auto& [player, value] : betweenness) scores[player] = value;
    nlohmann::json doc{{"betweenness", std::move(scores)}, {"n_players", n_players}};
    if (omega.has_value()) {
        doc["omega"] = *omega;
    } else {
        doc["omega"] = nullptr;
    }
    return doc.dump();
}

CentralityReport compute_centrality_report(const PartnershipNetwork& net) {
    CentralityReport report;
    report.betweenness = weighted_betweenness_by_component(net);
    report.n_players = static_cast<int>(net.nodes().size());
    if (report.n_players >= 3) report.omega = degree_centralization(net);
    return report;
}

}  // namespace cricnet
