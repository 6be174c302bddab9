#ifndef CORELENS_CENSUS_HPP
#define CORELENS_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "corelens/core_graph.hpp"

namespace corelens {

enum class CensusKind { node, stub };

/// Per-root hop-indexed counts. Node kind: counts[h] = nodes at exactly h
/// hops from the root (counts[0] = 1, sums to N). Stub kind: counts[h] =
/// total stubs (half-edge endpoints) of the nodes at hop h (counts[0] =
/// degree(root), sums to 2|E|). Length is eccentricity(root) + 1: vectors
/// are trimmed at the root's eccentricity, never zero-padded.
struct CensusVector {
    int root = 0;
    CensusKind kind = CensusKind::node;
    std::vector<std::int64_t> counts;

    bool operator==(const CensusVector&) const = default;
};

CensusVector node_census(const CoreGraph& g, int root);
CensusVector stub_census(const CoreGraph& g, int root);

/// Hop x count histogram aggregated over all roots: cells[h][k] = number of
/// roots whose node census at hop h equals k. Rows run to the graph
/// diameter; a root with eccentricity below h counts at k = 0, so every row
/// sums to N and cells[0][1] = N.
struct BMatrix {
    std::vector<std::vector<std::int64_t>> cells;

    int rows() const { return static_cast<int>(cells.size()); }
    int cols() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }

    bool operator==(const BMatrix&) const = default;
};

BMatrix bmatrix(const CoreGraph& g);

/// Hop-distance summary: per-node eccentricities, their extremes, and the
/// shortest cycle length (absent exactly when the graph is a tree).
struct DistanceSummary {
    std::vector<int> eccentricities;
    int diameter = 0;
    int radius = 0;
    std::optional<int> girth;
};

DistanceSummary distance_summary(const CoreGraph& g);

/// Result of iterative minimum-degree pruning. core_number[v] is the largest
/// k such that v survives in a maximal subgraph of minimum degree k.
/// shells[k] lists nodes with core number exactly k; shell_components[k]
/// splits each shell into connected components of the shell-induced subgraph.
struct KCoreDecomposition {
    std::vector<int> core_number;
    int max_core = 0;
    std::vector<std::vector<int>> shells;                        // index: k = 0..max_core
    std::vector<std::vector<std::vector<int>>> shell_components; // same indexing
};

KCoreDecomposition kcore(const CoreGraph& g);

/// Hop distances from root by breadth-first traversal.
std::vector<int> bfs_distances(const CoreGraph& g, int root);

} // namespace corelens

#endif
