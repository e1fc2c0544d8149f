#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdx {

/// A simplex stored as a strictly increasing list of vertex ids.
/// The empty list is the unique (-1)-dimensional simplex.
class Simplex {
public:
    Simplex() = default;

    /// Builds a simplex from arbitrary vertex ids; sorts them and rejects
    /// duplicates or negative ids.
    static Simplex of(std::vector<int> vertices);
    static Simplex of(std::initializer_list<int> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    bool is_empty() const { return verts_.empty(); }
    const std::vector<int>& vertices() const { return verts_; }

    bool has_vertex(int v) const;
    /// Subset test: is `face` a (not necessarily proper) face of this simplex?
    bool contains(const Simplex& face) const;

    /// Merge of vertex sets; throws if the two simplices share a vertex.
    Simplex disjoint_union(const Simplex& other) const;
    /// Vertices of this simplex that are not in `other`.
    Simplex difference(const Simplex& other) const;
    Simplex with_vertex(int v) const;
    Simplex without_vertex(int v) const;

    /// All faces of codimension one, in the order induced by dropping the
    /// i-th vertex.
    std::vector<Simplex> facets() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        return a.verts_ <=> b.verts_;
    }

private:
    std::vector<int> verts_;
};

std::string to_string(const Simplex& s);

} // namespace hdx
