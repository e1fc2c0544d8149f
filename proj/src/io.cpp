#include "hdx/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hdx {

namespace {

std::runtime_error parse_error(int line_no, const std::string& what) {
    return std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

bool skippable(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return c == '#';
    return true;
}

} // namespace

ComplexFile read_complex_file(std::istream& in) {
    ComplexFile file;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line))
            continue;
        std::istringstream ss(line);
        if (!have_header) {
            std::string tag;
            ss >> tag >> file.n;
            if (tag != "dim" || ss.fail() || file.n < 0)
                throw parse_error(line_no, "expected header 'dim n'");
            have_header = true;
            continue;
        }
        std::vector<int> verts;
        double weight = 1.0;
        bool has_weight = false;
        std::string tok;
        while (ss >> tok) {
            if (tok == "w") {
                if (!(ss >> weight) || !(weight > 0))
                    throw parse_error(line_no, "expected a positive weight after 'w'");
                has_weight = true;
                break;
            }
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v < 0)
                    throw std::invalid_argument(tok);
                verts.push_back(v);
            } catch (const std::exception&) {
                throw parse_error(line_no, "bad vertex id '" + tok + "'");
            }
        }
        if (static_cast<int>(verts.size()) != file.n + 1)
            throw parse_error(line_no, "top simplex needs exactly n+1 vertex ids");
        file.tops.push_back(std::move(verts));
        file.top_weights.push_back(weight);
        file.any_weights = file.any_weights || has_weight;
    }
    if (!have_header)
        throw std::runtime_error("empty complex file");
    if (file.tops.empty())
        throw std::runtime_error("complex file lists no top simplices");
    return file;
}

ComplexFile read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return read_complex_file(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

SimplicialComplex ComplexFile::build() const { return build_complex(tops); }

WeightFunction ComplexFile::weights(const SimplicialComplex& X) const {
    if (!any_weights)
        return homogeneous_weight(X);
    // The complex sorts its top simplices; realign the weights.
    std::vector<double> aligned(X.count(X.dimension()), 1.0);
    for (std::size_t i = 0; i < tops.size(); ++i) {
        int idx = X.index_of(Simplex::of(tops[i]));
        aligned[idx] = top_weights[i];
    }
    return weight_from_top(X, aligned);
}

void write_complex_file(std::ostream& out, const SimplicialComplex& X,
                        const std::vector<double>* top_weights) {
    int n = X.dimension();
    out << "dim " << n << "\n";
    for (int i = 0; i < X.count(n); ++i) {
        const auto& verts = X.simplex(n, i).vertices();
        for (std::size_t j = 0; j < verts.size(); ++j)
            out << (j ? " " : "") << verts[j];
        if (top_weights)
            out << " w " << (*top_weights)[i];
        out << "\n";
    }
}

std::vector<std::vector<int>> read_vertex_sets(std::istream& in) {
    std::vector<std::vector<int>> sets;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line))
            continue;
        std::istringstream ss(line);
        std::vector<int> set;
        std::string tok;
        while (ss >> tok) {
            if (tok == "empty") // marker for an explicitly empty set
                continue;
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v < 0)
                    throw std::invalid_argument(tok);
                set.push_back(v);
            } catch (const std::exception&) {
                throw parse_error(line_no, "bad vertex id '" + tok + "'");
            }
        }
        sets.push_back(std::move(set));
    }
    return sets;
}

std::vector<std::vector<int>> read_vertex_sets(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return read_vertex_sets(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

PointMap read_point_map(std::istream& in) {
    PointMap map;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line))
            continue;
        std::istringstream ss(line);
        int id;
        if (!(ss >> id) || id < 0)
            throw parse_error(line_no, "expected a vertex id");
        std::vector<double> xs;
        double x;
        while (ss >> x)
            xs.push_back(x);
        if (xs.empty())
            throw parse_error(line_no, "vertex " + std::to_string(id) + " has no coordinates");
        if (map.dim == 0)
            map.dim = static_cast<int>(xs.size());
        else if (map.dim != static_cast<int>(xs.size()))
            throw parse_error(line_no, "inconsistent point dimensions");
        if (map.coords.count(id))
            throw parse_error(line_no, "vertex " + std::to_string(id) + " listed twice");
        map.coords[id] = Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
    }
    if (map.coords.empty())
        throw std::runtime_error("empty point map");
    return map;
}

PointMap read_point_map(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return read_point_map(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

} // namespace hdx
