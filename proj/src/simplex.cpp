#include "hdx/simplex.hpp"

#include <algorithm>

namespace hdx {

Simplex Simplex::of(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("simplex has a repeated vertex");
    if (!vertices.empty() && vertices.front() < 0)
        throw std::invalid_argument("vertex ids must be non-negative");
    Simplex s;
    s.verts_ = std::move(vertices);
    return s;
}

Simplex Simplex::of(std::initializer_list<int> vertices) {
    return of(std::vector<int>(vertices));
}

bool Simplex::has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::contains(const Simplex& face) const {
    return std::includes(verts_.begin(), verts_.end(), face.verts_.begin(), face.verts_.end());
}

Simplex Simplex::disjoint_union(const Simplex& other) const {
    std::vector<int> merged;
    merged.reserve(verts_.size() + other.verts_.size());
    std::merge(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
               std::back_inserter(merged));
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw std::invalid_argument("simplices are not disjoint");
    Simplex s;
    s.verts_ = std::move(merged);
    return s;
}

Simplex Simplex::difference(const Simplex& other) const {
    std::vector<int> rest;
    std::set_difference(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                        std::back_inserter(rest));
    Simplex s;
    s.verts_ = std::move(rest);
    return s;
}

Simplex Simplex::with_vertex(int v) const {
    if (has_vertex(v))
        throw std::invalid_argument("vertex already present");
    std::vector<int> verts = verts_;
    verts.insert(std::lower_bound(verts.begin(), verts.end(), v), v);
    Simplex s;
    s.verts_ = std::move(verts);
    return s;
}

Simplex Simplex::without_vertex(int v) const {
    std::vector<int> verts;
    verts.reserve(verts_.size());
    for (int u : verts_)
        if (u != v)
            verts.push_back(u);
    if (verts.size() == verts_.size())
        throw std::invalid_argument("vertex not present");
    Simplex s;
    s.verts_ = std::move(verts);
    return s;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (verts_.empty())
        return out;
    out.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        Simplex f;
        f.verts_.reserve(verts_.size() - 1);
        for (std::size_t j = 0; j < verts_.size(); ++j)
            if (j != i)
                f.verts_.push_back(verts_[j]);
        out.push_back(std::move(f));
    }
    return out;
}

std::string to_string(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s.vertices()[i]);
    }
    out += "}";
    return out;
}

} // namespace hdx
