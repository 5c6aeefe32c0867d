#include "cricnet/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cricnet/errors.hpp"

namespace cricnet {

using nlohmann::json;

void PartnershipNetwork::add_partnership(const std::string& a, const std::string& b,
                                         long long runs) {
    if (a == b) throw InvariantError("self-partnership for '" + a + "'");
    if (runs < 0) throw InvariantError("negative partnership runs");
    for (const std::string& player : {a, b}) {
        const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), player);
        if (it == nodes_.end() || *it != player) nodes_.insert(it, player);
    }
    const EdgeKey key = a < b ? EdgeKey{a, b} : EdgeKey{b, a};
    edges_[key] += runs;
}

bool PartnershipNetwork::has_node(const std::string& player) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), player);
}

int PartnershipNetwork::degree(const std::string& player) const {
    int d = 0;
    for (const auto& [key, weight] : edges_) {
        if (key.first == player || key.second == player) ++d;
    }
    return d;
}

long long PartnershipNetwork::total_weight() const {
    long long total = 0;
    for (const auto& [key, weight] : edges_) total += weight;
    return total;
}

std::vector<std::vector<std::size_t>> PartnershipNetwork::components() const {
    const std::size_t n = nodes_.size();
    std::vector<std::vector<std::size_t>> adjacency(n);
    const auto index_of = [&](const std::string& player) {
        return static_cast<std::size_t>(
            std::lower_bound(nodes_.begin(), nodes_.end(), player) - nodes_.begin());
    };
    for (const auto& [key, weight] : edges_) {
        const std::size_t a = index_of(key.first);
        const std::size_t b = index_of(key.second);
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    std::vector<std::vector<std::size_t>> result;
    std::vector<bool> visited(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> component;
        std::vector<std::size_t> stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (std::size_t u : adjacency[v]) {
                if (!visited[u]) {
                    visited[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

bool PartnershipNetwork::connected() const {
    return nodes_.size() <= 1 || components().size() == 1;
}

PartnershipNetwork build_network(const TeamInningsSet& innings_set, const std::string& match_id) {
    PartnershipNetwork net(innings_set.team, match_id);
    for (const Innings& innings : innings_set.innings) {
        for (const Partnership& p : innings.partnerships) {
            net.add_partnership(p.batsman_a, p.batsman_b, p.runs);
        }
    }
    if (net.nodes().empty()) {
        throw EmptyInningsError("team '" + innings_set.team + "' has no partnerships in match '" +
                                match_id + "'");
    }
    return net;
}

PartnershipNetwork build_innings_network(const Innings& innings, const std::string& team,
                                         const std::string& match_id) {
    PartnershipNetwork net(team, match_id);
    for (const Partnership& p : innings.partnerships) {
        net.add_partnership(p.batsman_a, p.batsman_b, p.runs);
    }
    if (net.nodes().empty()) {
        throw EmptyInningsError("innings of team '" + team + "' has no partnerships in match '" +
                                match_id + "'");
    }
    return net;
}

GraphExportFormat graph_export_format_from_string(const std::string& s) {
    if (s == "dot" || s == "DOT") return GraphExportFormat::Dot;
    if (s == "graphml" || s == "GRAPHML") return GraphExportFormat::GraphMl;
    if (s == "json" || s == "JSON") return GraphExportFormat::Json;
    throw UnsupportedFormatError("unsupported graph export format: '" + s + "'");
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string format_score(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

std::string export_dot(const PartnershipNetwork& net,
                       const std::map<std::string, double>* betweenness) {
    std::ostringstream out;
    out << "graph \"" << net.match_id() << "/" << net.team() << "\" {\n";
    for (const std::string& node : net.nodes()) {
        out << "  \"" << node << "\"";
        if (betweenness != nullptr) {
            const auto it = betweenness->find(node);
            if (it != betweenness->end()) {
                out << " [betweenness=" << format_score(it->second) << "]";
            }
        }
        out << ";\n";
    }
    for (const auto& [key, weight] : net.edges()) {
        out << "  \"" << key.first << "\" -- \"" << key.second << "\" [weight=" << weight
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_graphml(const PartnershipNetwork& net,
                           const std::map<std::string, double>* betweenness) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"w\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n";
    if (betweenness != nullptr) {
        out << "  <key id=\"bc\" for=\"node\" attr.name=\"betweenness\" attr.type=\"double\"/>\n";
    }
    out << "  <graph id=\"" << xml_escape(net.match_id() + "/" + net.team())
        << "\" edgedefault=\"undirected\">\n";
    for (const std::string& node : net.nodes()) {
        out << "    <node id=\"" << xml_escape(node) << "\"";
        bool annotated = false;
        if (betweenness != nullptr) {
            const auto it = betweenness->find(node);
            if (it != betweenness->end()) {
                out << ">\n      <data key=\"bc\">" << format_score(it->second)
                    << "</data>\n    </node>\n";
                annotated = true;
            }
        }
        if (!annotated) out << "/>\n";
    }
    std::size_t edge_id = 0;
    for (const auto& [key, weight] : net.edges()) {
        out << "    <edge id=\"e" << edge_id++ << "\" source=\"" << xml_escape(key.first)
            << "\" target=\"" << xml_escape(key.second) << "\">\n"
            << "      <data key=\"w\">" << weight << "</data>\n    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string export_json(const PartnershipNetwork& net,
                        const std::map<std::string, double>* betweenness) {
    json edges = json::array();
    for (const auto& [key, weight] : net.edges()) {
        edges.push_back(json{{"a", key.first}, {"b", key.second}, {"weight", weight}});
    }
    json doc{{"match_id", net.match_id()},
             {"team", net.team()},
             {"nodes", net.nodes()},
             {"edges", std::move(edges)}};
    if (betweenness != nullptr) {
        json scores = json::object();
        for (const auto& [node, score] : *betweenness) scores[node] = score;
        doc["betweenness"] = std::move(scores);
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string export_graph(const PartnershipNetwork& net, GraphExportFormat format,
                         const std::map<std::string, double>* betweenness) {
    switch (format) {
        case GraphExportFormat::Dot: return export_dot(net, betweenness);
        case GraphExportFormat::GraphMl: return export_graphml(net, betweenness);
        case GraphExportFormat::Json: return export_json(net, betweenness);
    }
    throw UnsupportedFormatError("unsupported graph export format");
}

}  // namespace cricnet
