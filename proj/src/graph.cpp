#include "qsg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

namespace qsg {

bool RegularGraph::has_edge(int i, int j) const {
    const auto& a = adjacency[i];
    return std::binary_search(a.begin(), a.end(), j);
}

bool RegularGraph::is_connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n;
}

void DisorderInstance::build_neighbor_csr() {
    int n = graph.n;
    nbr_offset.assign(n + 1, 0);
    for (const auto& e : graph.edges) {
        ++nbr_offset[e.first + 1];
        ++nbr_offset[e.second + 1];
    }
    for (int i = 0; i < n; ++i) nbr_offset[i + 1] += nbr_offset[i];
    nbr_index.assign(nbr_offset[n], 0);
    nbr_coupling.assign(nbr_offset[n], 0.0);
    std::vector<int> cursor(nbr_offset.begin(), nbr_offset.end() - 1);
    for (std::size_t k = 0; k < graph.edges.size(); ++k) {
        auto [i, j] = graph.edges[k];
        double c = couplings[k];
        nbr_index[cursor[i]] = j;
        nbr_coupling[cursor[i]++] = c;
        nbr_index[cursor[j]] = i;
        nbr_coupling[cursor[j]++] = c;
    }
}

bool Region::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

namespace {

// One pairing attempt: match degree-slots uniformly, rejecting self-loops
// and parallel edges; returns false when no suitable pair remains.
bool try_pairing(int n, int degree, Rng& rng, std::vector<std::vector<int>>& adj) {
    adj.assign(n, {});
    std::vector<int> points;  // vertex id repeated by remaining degree
    points.reserve(static_cast<std::size_t>(n) * degree);
    for (int v = 0; v < n; ++v)
        for (int d = 0; d < degree; ++d) points.push_back(v);

    auto adjacent = [&](int u, int v) {
        const auto& a = adj[u];
        return std::find(a.begin(), a.end(), v) != a.end();
    };

    while (!points.empty()) {
        bool matched = false;
        // rejection sampling, with an exact suitability scan as fallback
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::size_t ia = rng.below(points.size());
            std::size_t ib = rng.below(points.size() - 1);
            if (ib >= ia) ++ib;
            int u = points[ia], v = points[ib];
            if (u == v || adjacent(u, v)) continue;
            adj[u].push_back(v);
            adj[v].push_back(u);
            if (ia < ib) std::swap(ia, ib);
            points.erase(points.begin() + ia);
            points.erase(points.begin() + ib);
            matched = true;
            break;
        }
        if (matched) continue;
        bool any_suitable = false;
        for (std::size_t ia = 0; ia < points.size() && !any_suitable; ++ia)
            for (std::size_t ib = ia + 1; ib < points.size() && !any_suitable; ++ib)
                if (points[ia] != points[ib] && !adjacent(points[ia], points[ib]))
                    any_suitable = true;
        if (!any_suitable) return false;  // stalled, restart pairing
    }
    return true;
}

}  // namespace

RegularGraph generate_rrg(int n, int degree, uint64_t seed) {
    if (degree < 1 || n <= degree || (static_cast<long long>(n) * degree) % 2 != 0) {
        throw InfeasibleDegreeSequence("generate_rrg: need n > degree and n*degree even");
    }
    constexpr int max_pairing_restarts = 1000;
    constexpr int max_connectivity_retries = 100;

    RegularGraph g;
    g.n = n;
    g.degree = degree;
    for (int retry = 0; retry <= max_connectivity_retries; ++retry) {
        uint64_t sub_seed = retry == 0 ? seed : hash_combine(seed, 0xC0AEC7ull + retry);
        int restarts = 0;
        std::vector<std::vector<int>> adj;
        bool ok = false;
        for (; restarts <= max_pairing_restarts; ++restarts) {
            Rng rng(hash_combine(sub_seed, restarts));
            if (try_pairing(n, degree, rng, adj)) {
                ok = true;
                break;
            }
        }
        if (!ok) throw GenerationStalled("generate_rrg: pairing failed repeatedly");
        g.pairing_restarts += restarts;
        g.adjacency = std::move(adj);
        for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
        if (g.is_connected()) {
            g.connectivity_retries = retry;
            g.edges.clear();
            for (int i = 0; i < n; ++i)
                for (int j : g.adjacency[i])
                    if (i < j) g.edges.emplace_back(i, j);
            std::sort(g.edges.begin(), g.edges.end());
            return g;
        }
    }
    throw GenerationStalled("generate_rrg: no connected sample found");
}

DisorderInstance assign_couplings(const RegularGraph& graph, double j, uint64_t seed) {
    DisorderInstance inst;
    inst.graph = graph;
    inst.j = j;
    inst.seed = seed;
    Rng rng(seed);
    inst.couplings.reserve(graph.edges.size());
    for (std::size_t k = 0; k < graph.edges.size(); ++k) {
        inst.couplings.push_back(rng.coin() ? j : -j);
    }
    inst.build_neighbor_csr();
    return inst;
}

Region grow_random_region(const RegularGraph& graph, int size, uint64_t seed) {
    if (size < 1 || size > graph.n) throw std::invalid_argument("grow_random_region: bad size");
    Rng rng(seed);
    std::vector<char> in_region(graph.n, 0);
    std::set<int> boundary;  // sorted, so index selection is deterministic

    std::vector<int> chosen;
    int v0 = static_cast<int>(rng.below(graph.n));
    in_region[v0] = 1;
    chosen.push_back(v0);
    for (int w : graph.adjacency[v0]) boundary.insert(w);

    while (static_cast<int>(chosen.size()) < size) {
        if (boundary.empty()) throw EmptyBoundary("grow_random_region: disconnected graph");
        auto it = boundary.begin();
        std::advance(it, rng.below(boundary.size()));
        int u = *it;
        boundary.erase(it);
        in_region[u] = 1;
        chosen.push_back(u);
        for (int w : graph.adjacency[u])
            if (!in_region[w]) boundary.insert(w);
    }
    Region r;
    r.vertices = std::move(chosen);
    std::sort(r.vertices.begin(), r.vertices.end());
    r.target_size = size;
    return r;
}

std::vector<int> bfs_distances(const RegularGraph& graph, int source) {
    std::vector<int> dist(graph.n, -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : graph.adjacency[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::string instance_to_json(const DisorderInstance& inst) {
    nlohmann::json j;
    j["n"] = inst.graph.n;
    j["degree"] = inst.graph.degree;
    j["seed"] = inst.seed;
    auto edges = nlohmann::json::array();
    for (std::size_t k = 0; k < inst.graph.edges.size(); ++k) {
        edges.push_back({inst.graph.edges[k].first, inst.graph.edges[k].second, inst.couplings[k]});
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

DisorderInstance instance_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DisorderInstance inst;
    inst.graph.n = j.at("n").get<int>();
    inst.graph.degree = j.at("degree").get<int>();
    inst.seed = j.at("seed").get<uint64_t>();
    inst.graph.adjacency.assign(inst.graph.n, {});
    double jmag = 0.0;
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        double c = e.at(2).get<double>();
        inst.graph.edges.emplace_back(a, b);
        inst.couplings.push_back(c);
        inst.graph.adjacency[a].push_back(b);
        inst.graph.adjacency[b].push_back(a);
        jmag = std::max(jmag, std::abs(c));
    }
    inst.j = jmag;
    for (auto& a : inst.graph.adjacency) std::sort(a.begin(), a.end());
    inst.build_neighbor_csr();
    return inst;
}

void save_instance(const DisorderInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_instance: cannot open " + path);
    out << instance_to_json(inst) << "\n";
}

DisorderInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_instance: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return instance_from_json(text);
}

}  // namespace qsg
