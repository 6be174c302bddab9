#ifndef CORELENS_CORE_GRAPH_HPP
#define CORELENS_CORE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace corelens {

/// A simple undirected connected graph over dense ids 0..N-1: the core
/// topology left after every layer of semantic information has been
/// stripped away. Immutable after construction and safe to share across
/// threads. Node ids are arbitrary and non-persistent; everything derived
/// from a CoreGraph must be invariant under relabeling.
class CoreGraph {
public:
    /// Validates: ids in range, no self loops, no duplicate edges, connected.
    /// Edges are stored normalized ((u,v) with u < v, sorted).
    CoreGraph(int node_count, std::vector<std::pair<int, int>> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    double density() const;

    /// Identity of this concrete labeled instance (not an isomorphism
    /// invariant): FNV-1a over node count and the normalized edge list.
    std::uint64_t fingerprint() const;

    bool operator==(const CoreGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Token pairs as read from input, before any normalization. May contain
/// string labels, repeated pairs, self loops, and multiple components.
struct RawNetwork {
    std::vector<std::pair<std::string, std::string>> pairs;
};

/// Reads a line-oriented edge list: blank lines and lines starting with '#'
/// are skipped, every other line must hold exactly two whitespace-separated
/// tokens. Throws parse_error (with line number) otherwise.
RawNetwork parse_edge_list(std::istream& in);
RawNetwork parse_edge_list(const std::string& text);

/// Strips a raw network to the core layer: direction and self loops dropped,
/// duplicate edges merged, labels replaced by dense ids assigned in order of
/// first appearance. Returns one CoreGraph per connected component, ordered
/// by decreasing node count (ties by canonical code when computable, then by
/// decreasing edge count, then first-seen).
std::vector<CoreGraph> normalize_to_core(const RawNetwork& raw);

/// Relabels g by a bijection on 0..N-1. Throws std::invalid_argument if perm
/// is not a bijection on the id range.
CoreGraph permute_nodes(const CoreGraph& g, const std::vector<int>& perm);

/// Subgraph induced by `nodes` (must be connected), with ids remapped to
/// 0..|nodes|-1 in ascending order of the original ids.
CoreGraph induced_subgraph(const CoreGraph& g, const std::vector<int>& nodes);

} // namespace corelens

#endif
