#ifndef CORELENS_DETECTORS_HPP
#define CORELENS_DETECTORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corelens/core_graph.hpp"

namespace corelens {

enum class ElementKind { nodes, edges, subgraphs };

/// One located element: a single node, an edge, or a node set, with an
/// optional numeric annotation (clique size, chain length, cut size...).
struct Element {
    std::vector<int> nodes;
    double value = 0.0;

    bool operator==(const Element&) const = default;
};

/// A set of located elements. Members are kept in a stable order: by
/// smallest member id, then lexicographically on the sorted id sets.
struct ElementSet {
    ElementKind kind = ElementKind::nodes;
    std::string annotation; // meaning of Element::value, empty if unused
    std::vector<Element> members;

    std::int64_t count() const { return static_cast<std::int64_t>(members.size()); }
    bool operator==(const ElementSet&) const = default;
};

struct CutElements {
    ElementSet articulation_nodes; // kind nodes
    ElementSet bridge_edges;       // kind edges
};

/// Articulation nodes and bridge edges by a single low-link traversal.
CutElements cut_elements(const CoreGraph& g);

struct DegreeTargets {
    ElementSet hubs;      // degree strictly above the mean 2E/N
    ElementSet dead_ends; // degree-1 nodes
};

DegreeTargets degree_targets(const CoreGraph& g);

struct EccentricityTargets {
    ElementSet centers;            // eccentricity = radius
    ElementSet diameter_endpoints; // eccentricity = diameter
};

EccentricityTargets eccentricity_targets(const CoreGraph& g);

/// All maximal cliques of size >= min_size (pivoting enumeration).
ElementSet maximal_cliques(const CoreGraph& g, int min_size = 2);

/// Maximal connected node sets whose induced density >= density_threshold.
/// Exhaustive (exact) when N <= 12; clique-seeded greedy growth otherwise.
ElementSet clusters(const CoreGraph& g, double density_threshold = 0.8, int min_size = 4);

/// All chordless cycles of length 4..max_length, one canonical
/// rotation/reflection each (smallest id first, smaller neighbor next).
ElementSet lacunae(const CoreGraph& g, int max_length = 12);

/// Maximal open runs of degree-2 nodes, extended to an end node only when
/// that end has degree 1. Closed cycles are not chains. Keeps runs with at
/// least min_interior degree-2 nodes; members are in path order.
ElementSet chains(const CoreGraph& g, int min_interior = 1);

/// Nodes with two or more degree-1 neighbors, one member per such center:
/// [center, leaves...]. The center may have further non-leaf neighbors.
ElementSet stars(const CoreGraph& g);

struct GeodesicReport {
    int length = 0;
    std::int64_t count = 0;                  // distinct shortest paths (exact, DP)
    std::vector<std::vector<int>> paths;     // enumerated paths, up to path_cap
};

/// One shortest path between u and v plus the count of distinct shortest paths.
GeodesicReport geodesic_between(const CoreGraph& g, int u, int v, int path_cap = 1000);

/// Diameter length, the count of distinct diameter-length shortest paths over
/// all unordered node pairs, and up to path_cap of them enumerated.
GeodesicReport longest_geodesics(const CoreGraph& g, int path_cap = 1000);

/// Core = nodes of maximum core number, periphery = everything else. When
/// all core numbers coincide the split is degenerate (core = all nodes).
struct CorePeripheryPartition {
    std::vector<int> core;
    std::vector<int> periphery;
    int basis_shell = 0;
    bool degenerate = false;
};

CorePeripheryPartition core_periphery(const CoreGraph& g);

/// Balanced small edge cuts, reported as bottleneck regions. A cut of size
/// <= max_cut qualifies when its removal leaves exactly two components, each
/// holding >= balance*N nodes. Overlapping cuts merge into one region whose
/// member set is the common incident nodes (union if none are shared).
/// Exhaustive over bipartitions when N <= 12; bridge cuts only above that.
ElementSet bottlenecks(const CoreGraph& g, int max_cut = 3, double balance = 0.1);

} // namespace corelens

#endif
