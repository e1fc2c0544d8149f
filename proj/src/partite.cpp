#include "hdx/partite.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace hdx {

namespace {

// Adjacency of n-simplices via shared (n-1)-faces.
std::vector<std::vector<int>> top_adjacency(const SimplicialComplex& X) {
    int n = X.dimension();
    std::vector<std::vector<int>> adj(X.count(n));
    for (int fi = 0; fi < X.count(n - 1); ++fi) {
        const auto& tops = X.cofaces(n - 1, fi);
        for (std::size_t a = 0; a < tops.size(); ++a)
            for (std::size_t b = a + 1; b < tops.size(); ++b) {
                adj[tops[a]].push_back(tops[b]);
                adj[tops[b]].push_back(tops[a]);
            }
    }
    return adj;
}

} // namespace

std::optional<PartiteStructure> detect_partite(const SimplicialComplex& X) {
    if (!X.skeleton_connected())
        throw std::invalid_argument("detect_partite: 1-skeleton is disconnected");

    int n = X.dimension();
    int tops = X.count(n);
    std::unordered_map<int, int> color; // vertex id -> side

    if (n == 0) {
        // A 0-dimensional complex is 1-partite with a single side.
        PartiteStructure ps;
        ps.sides.assign(1, X.vertex_ids());
        for (int v : ps.sides[0])
            ps.side_of[v] = 0;
        return ps;
    }

    auto adj = top_adjacency(X);

    // Seed coloring, then propagate: moving across a shared (n-1)-face
    // forces the new vertex into the side of the dropped vertex.
    const Simplex& seed = X.simplex(n, 0);
    for (int i = 0; i <= n; ++i)
        color[seed.vertices()[i]] = i;

    std::vector<char> visited(tops, 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        const Simplex& cur = X.simplex(n, t);
        for (int u : adj[t]) {
            const Simplex& nxt = X.simplex(n, u);
            Simplex added = nxt.difference(cur);
            Simplex dropped = cur.difference(nxt);
            int forced = color.at(dropped.vertices()[0]);
            auto [it, inserted] = color.emplace(added.vertices()[0], forced);
            if (!inserted && it->second != forced)
                return std::nullopt;
            if (!visited[u]) {
                visited[u] = 1;
                ++reached;
                queue.push_back(u);
            }
        }
    }
    if (reached != tops)
        throw std::runtime_error(
            "detect_partite: top-simplex adjacency is disconnected, coloring is ambiguous");

    // Validation pass: every top simplex must be rainbow.
    std::vector<char> hit(n + 1);
    for (int t = 0; t < tops; ++t) {
        std::fill(hit.begin(), hit.end(), 0);
        for (int v : X.simplex(n, t).vertices()) {
            int c = color.at(v);
            if (hit[c]++)
                return std::nullopt;
        }
    }

    PartiteStructure ps;
    ps.sides.resize(n + 1);
    for (int v : X.vertex_ids()) {
        int c = color.at(v);
        ps.sides[c].push_back(v);
        ps.side_of[v] = c;
    }
    for (auto& side : ps.sides)
        std::sort(side.begin(), side.end());
    return ps;
}

Regularity check_regularity(const SimplicialComplex& X, const WeightFunction& m,
                            const PartiteStructure* partite) {
    int n = X.dimension();
    std::unordered_map<int, long long> tops_at; // vertex id -> # containing n-simplices
    for (int v : X.vertex_ids())
        tops_at[v] = 0;
    for (const Simplex& s : X.simplices(n))
        for (int v : s.vertices())
            ++tops_at[v];

    double nfact = 1;
    for (int i = 2; i <= n; ++i)
        nfact *= i;

    Regularity out;
    bool global = true;
    long long K = tops_at.begin()->second;
    for (const auto& [v, c] : tops_at)
        if (c != K) {
            global = false;
            break;
        }
    if (global) {
        // Cross-check against the homogeneous weight identity m({v}) = n! K.
        bool weight_matches = true;
        for (int i = 0; i < X.count(0); ++i)
            if (std::abs(m.at(0, i) - nfact * static_cast<double>(K)) >
                1e-9 * nfact * static_cast<double>(K)) {
                weight_matches = false;
                break;
            }
        if (weight_matches)
            out.simplex_count = K;
    }

    if (partite) {
        std::vector<long long> per_side(partite->side_count(), -1);
        bool ok = true;
        for (int i = 0; i < partite->side_count() && ok; ++i) {
            for (int v : partite->sides[i]) {
                long long c = tops_at.at(v);
                if (per_side[i] < 0)
                    per_side[i] = c;
                else if (per_side[i] != c) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok)
            out.per_side = std::move(per_side);
    }
    return out;
}

} // namespace hdx
