#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsg/rng.hpp"

// Regular random graphs with +-J couplings: generation, distances, and
// connected random regions. Everything is immutable after construction
// and deterministic given (parameters, seed), on any platform.

namespace qsg {

struct InfeasibleDegreeSequence : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GenerationStalled : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyBoundary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegularGraph {
    int n = 0;
    int degree = 0;  // K+1
    std::vector<std::vector<int>> adjacency;    // sorted neighbor lists
    std::vector<std::pair<int, int>> edges;     // (i<j), lexicographic
    int connectivity_retries = 0;               // disconnected samples rejected
    int pairing_restarts = 0;

    bool has_edge(int i, int j) const;
    bool is_connected() const;
};

struct DisorderInstance {
    RegularGraph graph;
    std::vector<double> couplings;  // parallel to graph.edges, +-j
    double j = 1.0;
    uint64_t seed = 0;

    // CSR neighbor view used by the sampling inner loops
    std::vector<int> nbr_offset;   // size n+1
    std::vector<int> nbr_index;
    std::vector<double> nbr_coupling;

    void build_neighbor_csr();
};

struct Region {
    std::vector<int> vertices;  // sorted ascending
    int target_size = 0;

    bool contains(int v) const;
};

// Pairing model with restart-on-violation (Steger-Wormald refinement).
// Rejects disconnected samples, regenerating from a perturbed sub-seed.
RegularGraph generate_rrg(int n, int degree, uint64_t seed);

// Each edge gets +j or -j with probability 1/2, in canonical edge order.
DisorderInstance assign_couplings(const RegularGraph& graph, double j, uint64_t seed);

// Seed vertex uniform over V, then repeatedly absorb a vertex chosen
// uniformly from the region's vertex boundary (set semantics).
Region grow_random_region(const RegularGraph& graph, int size, uint64_t seed);

// Exact hop distances from source (-1 for unreachable vertices).
std::vector<int> bfs_distances(const RegularGraph& graph, int source);

// Instance file round trip: {"n","degree","seed","edges":[[i,j,Jij],...]}
std::string instance_to_json(const DisorderInstance& inst);
DisorderInstance instance_from_json(const std::string& text);
void save_instance(const DisorderInstance& inst, const std::string& path);
DisorderInstance load_instance(const std::string& path);

}  // namespace qsg
