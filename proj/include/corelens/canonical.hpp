#ifndef CORELENS_CANONICAL_HPP
#define CORELENS_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corelens/core_graph.hpp"

namespace corelens {

/// Exhaustive canonicalization is an oracle for desk-scale verification, not
/// a production isomorphism test; sizes above this limit are rejected.
inline constexpr int kCanonicalLimit = 10;

/// Byte sequence identifying the isomorphism class of a CoreGraph with
/// N <= kCanonicalLimit: two graphs have equal codes iff they are isomorphic.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;

    auto operator<=>(const CanonicalCode&) const = default;
};

/// Computes the canonical code by partition refinement (degree and hop-census
/// seeded) followed by exhaustive permutation within the refined cells,
/// keeping the minimal adjacency encoding. Throws std::invalid_argument when
/// N exceeds kCanonicalLimit.
CanonicalCode canonical_code(const CoreGraph& g);

struct EnumerationResult {
    std::int64_t count = 0;
    std::vector<CanonicalCode> codes; // one representative per class; empty in labelled mode
};

/// Brute-force enumeration of connected graphs on n nodes over all
/// 2^C(n,2) edge sets. Unlabelled mode (labelled = false) deduplicates by
/// canonical code and returns one code per isomorphism class; n is limited
/// to kCanonicalLimit. Labelled mode returns the exact count of connected
/// labelled graphs and supports n <= 6.
EnumerationResult enumerate_connected(int n, bool labelled = false);

} // namespace corelens

#endif
