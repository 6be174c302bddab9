#ifndef CORELENS_CLASSIFY_HPP
#define CORELENS_CLASSIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corelens/core_graph.hpp"

namespace corelens {

/// Every threshold used by categorize_graph lives here and is echoed into
/// the report, so heuristic judgments are reproducible and auditable.
struct ClassifyConfig {
    double near_tolerance = 0.1;     // epsilon for the near-variants
    double sf_exponent_lo = 1.8;     // accepted power-law exponent window
    double sf_exponent_hi = 3.5;
    double sf_top_decile_factor = 3.0; // top-decile degree share vs uniform
    double random_clustering_slack = 0.05;
    double random_clustering_factor = 3.0;
    double sw_clustering_factor = 5.0; // clustering vs degree-matched baseline
    double sw_path_factor = 1.5;       // mean path vs degree-matched baseline
    int heuristic_min_nodes = 10;      // scale-free/random/small-world need data
    std::uint64_t baseline_seed = 42;
    int baseline_samples = 3;
};

struct CategoryLabel {
    std::string name;     // tree, complete, regular, multipartite, scale-free, ...
    bool exact = false;
    bool near = false;    // set only when exact is false
    bool heuristic = false;
    double score = 0.0;   // in [0,1]; exact implies 1
    std::string evidence; // fitted exponent, variance ratio, thresholds used...
};

/// Whole-graph topology classification. Always carries at least one label
/// ("unclassified" when nothing fires). Bipartiteness (2-colorable, not
/// necessarily complete bipartite) is reported separately from the
/// complete-multipartite label.
struct CategoryReport {
    std::vector<CategoryLabel> labels;
    bool bipartite = false;
    int multipartite_k = 0; // parts when the multipartite label is exact, else 0
    std::string config_echo;

    bool has(const std::string& name) const;
    const CategoryLabel* find(const std::string& name) const;
};

CategoryReport categorize_graph(const CoreGraph& g, const ClassifyConfig& cfg);
CategoryReport categorize_graph(const CoreGraph& g, double near_tolerance = 0.1);

/// Mean of the per-node local clustering coefficients.
double mean_clustering(const CoreGraph& g);

} // namespace corelens

#endif
