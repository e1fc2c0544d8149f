#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hdx/simplex.hpp"

namespace hdx {

/// A pure n-dimensional finite simplicial complex.
///
/// Every level k in [-1, n] keeps its simplices in a sorted, contiguous
/// index so that cochains are plain vectors and simplex -> row lookup is
/// O(1) amortized. The empty simplex is stored explicitly as the unique
/// (-1)-simplex. Purity and downward closure hold by construction: the
/// complex is always generated from its top-dimensional simplices.
///
/// Immutable after construction; safe to share across threads.
class SimplicialComplex {
public:
    int dimension() const { return n_; }

    /// Number of k-simplices, -1 <= k <= n. Levels outside that range are
    /// empty rather than an error.
    int count(int k) const;
    const std::vector<Simplex>& simplices(int k) const;
    const Simplex& simplex(int k, int idx) const;

    /// Index of `s` within its level, or -1 when the simplex is absent.
    int index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const;

    /// Indices (in level k+1) of the cofaces of the idx-th k-simplex.
    const std::vector<int>& cofaces(int k, int idx) const;
    /// Indices (in level k-1) of the facets of the idx-th k-simplex.
    const std::vector<int>& faces(int k, int idx) const;

    /// Sorted ids of the vertices present in the complex.
    std::vector<int> vertex_ids() const;

    /// True if the 1-skeleton is connected (union-find on edges).
    bool skeleton_connected() const;

    friend SimplicialComplex build_complex(const std::vector<std::vector<int>>& top_simplices);

private:
    int slot(int k) const { return k + 1; }

    int n_ = 0;
    std::vector<std::vector<Simplex>> faces_;        // [k+1] -> sorted simplices
    std::vector<std::vector<std::vector<int>>> cofaces_; // [k+1][idx] -> level k+1 indices
    std::vector<std::vector<std::vector<int>>> facets_;  // [k+1][idx] -> level k-1 indices
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (int x : v)
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h;
        }
    };
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index_; // [k+1]
};

/// Builds the downward closure of the given top simplices.
/// All sets must have the same size n+1 and be distinct.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& top_simplices);

/// X(U_0, ..., U_k): indices of the k-simplices with exactly one vertex in
/// each of the pairwise disjoint vertex sets U_i (k = parts.size() - 1).
std::vector<int> simplices_spanning(const SimplicialComplex& X,
                                    const std::vector<std::vector<int>>& parts);

} // namespace hdx
