#include "hdx/generators.hpp"

#include <stdexcept>
#include <string>

#include "hdx/rng.hpp"

namespace hdx {

namespace {

void subsets_of_size(int N, int size, std::vector<int>& current,
                     std::vector<std::vector<int>>& out, int start) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (int v = start; v <= N - (size - static_cast<int>(current.size())); ++v) {
        current.push_back(v);
        subsets_of_size(N, size, current, out, v + 1);
        current.pop_back();
    }
}

std::vector<std::vector<int>> all_subsets(int N, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    subsets_of_size(N, size, current, out, 0);
    return out;
}

} // namespace

SimplicialComplex complete_complex(int N, int n) {
    if (N < n + 1)
        throw std::invalid_argument("complete_complex needs N >= n+1");
    return build_complex(all_subsets(N, n + 1));
}

SimplicialComplex simplex_boundary(int n) {
    auto tops = all_subsets(n + 2, n + 1);
    return build_complex(tops);
}

SimplicialComplex complete_partite(std::span<const int> side_sizes) {
    int sides = static_cast<int>(side_sizes.size());
    if (sides < 1)
        throw std::invalid_argument("complete_partite needs at least one side");
    std::vector<int> offset(sides + 1, 0);
    for (int i = 0; i < sides; ++i) {
        if (side_sizes[i] < 1)
            throw std::invalid_argument("side sizes must be >= 1");
        offset[i + 1] = offset[i] + side_sizes[i];
    }

    // All transversals: one vertex from each side.
    std::vector<std::vector<int>> tops;
    std::vector<int> pick(sides, 0);
    while (true) {
        std::vector<int> top(sides);
        for (int i = 0; i < sides; ++i)
            top[i] = offset[i] + pick[i];
        tops.push_back(std::move(top));
        int i = sides - 1;
        while (i >= 0 && ++pick[i] == side_sizes[i])
            pick[i--] = 0;
        if (i < 0)
            break;
    }
    return build_complex(tops);
}

bool all_links_connected(const SimplicialComplex& X, Simplex* offending) {
    for (int k = -1; k <= X.dimension() - 2; ++k) {
        for (const Simplex& tau : X.simplices(k)) {
            // The 1-skeleton of X_tau, without building the link: vertices v
            // with tau+v in X, edges {u,v} with tau+u+v in X.
            std::vector<int> verts;
            for (const Simplex& s : X.simplices(k + 1))
                if (s.contains(tau))
                    verts.push_back(s.difference(tau).vertices()[0]);
            if (verts.size() <= 1)
                continue; // cannot happen for pure complexes of dim >= k+2
            std::unordered_map<int, int> pos;
            for (int i = 0; i < static_cast<int>(verts.size()); ++i)
                pos[verts[i]] = i;
            std::vector<int> parent(verts.size());
            for (std::size_t i = 0; i < verts.size(); ++i)
                parent[i] = static_cast<int>(i);
            auto find = [&](int a) {
                while (parent[a] != a)
                    a = parent[a] = parent[parent[a]];
                return a;
            };
            for (const Simplex& s : X.simplices(k + 2)) {
                if (!s.contains(tau))
                    continue;
                Simplex rest = s.difference(tau);
                int a = pos.at(rest.vertices()[0]);
                int b = pos.at(rest.vertices()[1]);
                parent[find(a)] = find(b);
            }
            int root = find(0);
            for (std::size_t i = 1; i < verts.size(); ++i)
                if (find(static_cast<int>(i)) != root) {
                    if (offending)
                        *offending = tau;
                    return false;
                }
        }
    }
    return true;
}

SimplicialComplex random_pure_complex(int N, int n, double p, std::uint64_t seed,
                                      int max_retries) {
    if (!(p > 0) || p > 1)
        throw std::invalid_argument("keep probability must lie in (0, 1]");
    auto candidates = all_subsets(N, n + 1);
    Rng rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<std::vector<int>> tops;
        for (const auto& c : candidates)
            if (rng.uniform() < p)
                tops.push_back(c);
        if (tops.empty())
            continue;
        SimplicialComplex X = build_complex(tops);
        if (all_links_connected(X))
            return X;
    }
    throw std::runtime_error("random_pure_complex: no connected-link complex after " +
                             std::to_string(max_retries) + " attempts");
}

} // namespace hdx
