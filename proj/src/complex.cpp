#include "hdx/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hdx {

namespace {

// Union-find over a contiguous id range.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int SimplicialComplex::count(int k) const {
    if (k < -1 || k > n_)
        return 0;
    return static_cast<int>(faces_[slot(k)].size());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    static const std::vector<Simplex> kEmpty;
    if (k < -1 || k > n_)
        return kEmpty;
    return faces_[slot(k)];
}

const Simplex& SimplicialComplex::simplex(int k, int idx) const {
    return faces_[slot(k)].at(idx);
}

int SimplicialComplex::index_of(const Simplex& s) const {
    int k = s.dim();
    if (k < -1 || k > n_)
        return -1;
    const auto& map = index_[slot(k)];
    auto it = map.find(s.vertices());
    return it == map.end() ? -1 : it->second;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s) >= 0; }

const std::vector<int>& SimplicialComplex::cofaces(int k, int idx) const {
    return cofaces_[slot(k)].at(idx);
}

const std::vector<int>& SimplicialComplex::faces(int k, int idx) const {
    return facets_[slot(k)].at(idx);
}

std::vector<int> SimplicialComplex::vertex_ids() const {
    std::vector<int> ids;
    ids.reserve(count(0));
    for (const Simplex& v : simplices(0))
        ids.push_back(v.vertices()[0]);
    return ids;
}

bool SimplicialComplex::skeleton_connected() const {
    int nv = count(0);
    if (nv <= 1)
        return true;
    DisjointSets ds(nv);
    for (const Simplex& e : simplices(1)) {
        Simplex a = Simplex::of({e.vertices()[0]});
        Simplex b = Simplex::of({e.vertices()[1]});
        ds.unite(index_of(a), index_of(b));
    }
    int root = ds.find(0);
    for (int i = 1; i < nv; ++i)
        if (ds.find(i) != root)
            return false;
    return true;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& top_simplices) {
    if (top_simplices.empty())
        throw std::invalid_argument("no top simplices given");

    std::size_t size = top_simplices.front().size();
    if (size == 0)
        throw std::invalid_argument("empty top simplex");
    for (const auto& t : top_simplices)
        if (t.size() != size)
            throw std::invalid_argument("inconsistent top simplex sizes");

    std::vector<Simplex> tops;
    tops.reserve(top_simplices.size());
    for (const auto& t : top_simplices)
        tops.push_back(Simplex::of(t));
    std::sort(tops.begin(), tops.end());
    if (std::adjacent_find(tops.begin(), tops.end()) != tops.end())
        throw std::invalid_argument("duplicate top simplices");

    SimplicialComplex X;
    X.n_ = static_cast<int>(size) - 1;
    X.faces_.resize(X.n_ + 2);

    // Downward closure, one level at a time starting from the top.
    X.faces_[X.slot(X.n_)] = std::move(tops);
    for (int k = X.n_ - 1; k >= -1; --k) {
        std::set<Simplex> level;
        for (const Simplex& s : X.faces_[X.slot(k + 1)])
            for (const Simplex& f : s.facets())
                level.insert(f);
        if (k == -1)
            level.insert(Simplex());
        X.faces_[X.slot(k)].assign(level.begin(), level.end());
    }

    X.index_.resize(X.n_ + 2);
    for (int k = -1; k <= X.n_; ++k) {
        auto& map = X.index_[X.slot(k)];
        const auto& level = X.faces_[X.slot(k)];
        map.reserve(level.size() * 2);
        for (int i = 0; i < static_cast<int>(level.size()); ++i)
            map.emplace(level[i].vertices(), i);
    }

    X.cofaces_.resize(X.n_ + 2);
    X.facets_.resize(X.n_ + 2);
    for (int k = -1; k <= X.n_; ++k) {
        X.cofaces_[X.slot(k)].resize(X.faces_[X.slot(k)].size());
        X.facets_[X.slot(k)].resize(X.faces_[X.slot(k)].size());
    }
    for (int k = 0; k <= X.n_; ++k) {
        const auto& level = X.faces_[X.slot(k)];
        for (int i = 0; i < static_cast<int>(level.size()); ++i) {
            if (k == 0) {
                // The unique facet of a vertex is the empty simplex.
                X.facets_[X.slot(0)][i] = {0};
                X.cofaces_[X.slot(-1)][0].push_back(i);
                continue;
            }
            for (const Simplex& f : level[i].facets()) {
                int fi = X.index_of(f);
                X.facets_[X.slot(k)][i].push_back(fi);
                X.cofaces_[X.slot(k - 1)][fi].push_back(i);
            }
        }
    }
    return X;
}

std::vector<int> simplices_spanning(const SimplicialComplex& X,
                                    const std::vector<std::vector<int>>& parts) {
    int k = static_cast<int>(parts.size()) - 1;
    if (k < 0 || k > X.dimension())
        throw std::invalid_argument("bad number of vertex sets");

    std::unordered_map<int, int> part_of;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        for (int v : parts[i]) {
            auto [it, inserted] = part_of.emplace(v, i);
            if (!inserted && it->second != i)
                throw std::invalid_argument("vertex sets overlap");
        }

    std::vector<int> hits;
    std::vector<int> seen(parts.size());
    const auto& level = X.simplices(k);
    for (int idx = 0; idx < static_cast<int>(level.size()); ++idx) {
        std::fill(seen.begin(), seen.end(), 0);
        bool good = true;
        for (int v : level[idx].vertices()) {
            auto it = part_of.find(v);
            if (it == part_of.end() || seen[it->second]++) {
                good = false;
                break;
            }
        }
        if (good)
            hits.push_back(idx);
    }
    return hits;
}

} // namespace hdx
