#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/weights.hpp"

namespace hdx {

/// An (n+1)-partition of the vertices such that every n-simplex has exactly
/// one vertex in each side.
struct PartiteStructure {
    std::vector<std::vector<int>> sides;  // vertex ids per side, sorted
    std::unordered_map<int, int> side_of; // vertex id -> side index

    int side_count() const { return static_cast<int>(sides.size()); }
};

/// Recovers the partition (up to side relabeling) by BFS side-propagation
/// along shared (n-1)-faces, or returns nullopt when no valid coloring
/// exists. Throws when the 1-skeleton is disconnected or when the n-simplex
/// adjacency graph is disconnected (the propagation would be ambiguous).
std::optional<PartiteStructure> detect_partite(const SimplicialComplex& X);

/// Regularity of the top-coface counts. `simplex_count` is set when every
/// vertex lies in exactly K n-simplices; `per_side` when a partite structure
/// is given and each side has its own constant K_i.
struct Regularity {
    std::optional<long long> simplex_count;
    std::optional<std::vector<long long>> per_side;
};

Regularity check_regularity(const SimplicialComplex& X, const WeightFunction& m,
                            const PartiteStructure* partite = nullptr);

} // namespace hdx
