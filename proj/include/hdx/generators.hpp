#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "hdx/complex.hpp"
#include "hdx/simplex.hpp"

namespace hdx {

/// All (n+1)-subsets of {0, ..., N-1}; K-regular with K = C(N-1, n).
SimplicialComplex complete_complex(int N, int n);

/// All transversals of sides of the given sizes (vertices numbered
/// consecutively side by side); partite-regular with K_i = prod_{j != i} m_j.
SimplicialComplex complete_partite(std::span<const int> side_sizes);

/// The boundary of the (n+1)-simplex: all (n+1)-subsets of {0, ..., n+1}.
SimplicialComplex simplex_boundary(int n);

/// Keeps each (n+1)-subset of {0..N-1} independently with probability p and
/// retries until all links of dimension >= 1 (including the complex itself)
/// are connected. Throws after max_retries failures.
SimplicialComplex random_pure_complex(int N, int n, double p, std::uint64_t seed,
                                      int max_retries = 100);

/// True when every link of dimension >= 1 (tau of dim <= n-2, including the
/// empty simplex) has a connected 1-skeleton. On failure the offending tau
/// is reported through the out parameter.
bool all_links_connected(const SimplicialComplex& X, Simplex* offending = nullptr);

} // namespace hdx
