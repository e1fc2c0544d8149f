#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/overlap.hpp"
#include "hdx/weights.hpp"

namespace hdx {

/// Parsed complex file: header line "dim n", then one line per top simplex
/// with space-separated vertex ids, optionally followed by "w <weight>".
struct ComplexFile {
    int n = 0;
    std::vector<std::vector<int>> tops;
    std::vector<double> top_weights; // 1.0 where no weight was given
    bool any_weights = false;

    SimplicialComplex build() const;
    WeightFunction weights(const SimplicialComplex& X) const;
};

ComplexFile read_complex_file(std::istream& in);
ComplexFile read_complex_file(const std::string& path);

void write_complex_file(std::ostream& out, const SimplicialComplex& X,
                        const std::vector<double>* top_weights = nullptr);

/// Vertex-set file: one line per set, space-separated vertex ids.
std::vector<std::vector<int>> read_vertex_sets(std::istream& in);
std::vector<std::vector<int>> read_vertex_sets(const std::string& path);

/// Point-map file: one line per vertex, "id x_1 ... x_n".
PointMap read_point_map(std::istream& in);
PointMap read_point_map(const std::string& path);

} // namespace hdx
