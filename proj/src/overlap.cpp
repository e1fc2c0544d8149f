#include "hdx/overlap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "hdx/mixing.hpp"
#include "hdx/rng.hpp"

namespace hdx {

namespace {

constexpr double kBaryTol = 1e-9;
constexpr double kNudge = 1e-7;

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() * b.y() - a.y() * b.x();
}

// Caratheodory fallback: x is in conv(points) iff it is in the hull of some
// affinely independent subset.
bool in_hull_subset_search(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& x,
                           double tol) {
    int count = static_cast<int>(points.size());
    int dim = static_cast<int>(x.size());
    double scale = 1.0 + x.norm();
    for (const auto& p : points)
        scale = std::max(scale, 1.0 + p.norm());

    int max_size = std::min(count, dim + 1);
    for (unsigned mask = 1; mask < (1u << count); ++mask) {
        int size = __builtin_popcount(mask);
        if (size > max_size)
            continue;
        std::vector<int> idx;
        for (int i = 0; i < count; ++i)
            if (mask & (1u << i))
                idx.push_back(i);

        const Eigen::VectorXd& base = points[idx[0]];
        Eigen::MatrixXd edges(dim, size - 1);
        for (int j = 1; j < size; ++j)
            edges.col(j - 1) = points[idx[j]] - base;
        if (size > 1) {
            Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(edges);
            qr.setThreshold(1e-12);
            if (qr.rank() < size - 1)
                continue; // affinely dependent subset; a smaller one covers it
            Eigen::VectorXd c = qr.solve(x - base);
            if ((edges * c - (x - base)).norm() > tol * scale)
                continue;
            double lambda0 = 1.0 - c.sum();
            if (lambda0 < -tol || (c.array() < -tol).any())
                continue;
            return true;
        }
        if ((points[idx[0]] - x).norm() <= tol * scale)
            return true;
    }
    return false;
}

} // namespace

const Eigen::VectorXd& PointMap::at(int vertex_id) const {
    auto it = coords.find(vertex_id);
    if (it == coords.end())
        throw std::invalid_argument("point map is missing vertex " + std::to_string(vertex_id));
    return it->second;
}

bool point_in_hull(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& x,
                   double tol) {
    if (points.empty())
        return false;
    int dim = static_cast<int>(x.size());

    if (static_cast<int>(points.size()) == dim + 1) {
        // Barycentric solve against the full-dimensional simplex.
        Eigen::MatrixXd A(dim + 1, dim + 1);
        for (int j = 0; j <= dim; ++j) {
            A.block(0, j, dim, 1) = points[j];
            A(dim, j) = 1.0;
        }
        Eigen::VectorXd rhs(dim + 1);
        rhs.head(dim) = x;
        rhs(dim) = 1.0;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        lu.setThreshold(1e-12);
        if (lu.isInvertible()) {
            Eigen::VectorXd b = lu.solve(rhs);
            return (b.array() >= -tol).all();
        }
        // degenerate image: fall through
    }
    return in_hull_subset_search(points, x, tol);
}

bool point_in_image(const SimplicialComplex& X, const Simplex& sigma, const PointMap& f,
                    const Eigen::VectorXd& x, double tol) {
    if (!X.contains(sigma))
        throw std::invalid_argument("simplex not in the complex");
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(sigma.vertices().size());
    for (int v : sigma.vertices())
        pts.push_back(f.at(v));
    return point_in_hull(pts, x, tol);
}

int depth(const SimplicialComplex& X, const PointMap& f, const Eigen::VectorXd& x) {
    int n = X.dimension();
    int count = 0;
    for (const Simplex& sigma : X.simplices(n)) {
        std::vector<Eigen::VectorXd> pts;
        pts.reserve(n + 1);
        for (int v : sigma.vertices())
            pts.push_back(f.at(v));
        if (point_in_hull(pts, x, kBaryTol))
            ++count;
    }
    return count;
}

namespace {

// Flat planar view of the embedded complex for the 2d algorithms.
struct PlanarScene {
    std::vector<std::array<Eigen::Vector2d, 3>> triangles;
    std::vector<std::array<Eigen::Vector2d, 2>> segments; // images of X(1)
    std::vector<Eigen::Vector2d> vertices;
    double scale = 1.0;
};

PlanarScene make_scene(const SimplicialComplex& X, const PointMap& f) {
    PlanarScene scene;
    for (const Simplex& t : X.simplices(2)) {
        std::array<Eigen::Vector2d, 3> tri;
        for (int i = 0; i < 3; ++i)
            tri[i] = f.at(t.vertices()[i]).head<2>();
        scene.triangles.push_back(tri);
    }
    for (const Simplex& e : X.simplices(1)) {
        scene.segments.push_back({f.at(e.vertices()[0]).head<2>(), f.at(e.vertices()[1]).head<2>()});
    }
    for (int v : X.vertex_ids())
        scene.vertices.push_back(f.at(v).head<2>());
    for (const auto& p : scene.vertices)
        scene.scale = std::max(scene.scale, p.norm());
    return scene;
}

bool triangle_degenerate(const std::array<Eigen::Vector2d, 3>& t, double scale) {
    return std::abs(cross2(t[1] - t[0], t[2] - t[0])) <= 1e-9 * scale * scale;
}

int planar_depth(const PlanarScene& scene, const Eigen::Vector2d& x) {
    int count = 0;
    for (const auto& t : scene.triangles) {
        double det = cross2(t[1] - t[0], t[2] - t[0]);
        if (std::abs(det) <= 1e-15 * scene.scale * scene.scale) {
            std::vector<Eigen::VectorXd> pts{t[0], t[1], t[2]};
            if (point_in_hull(pts, x, kBaryTol))
                ++count;
            continue;
        }
        double b0 = cross2(t[1] - x, t[2] - x) / det;
        double b1 = cross2(t[2] - x, t[0] - x) / det;
        double b2 = cross2(t[0] - x, t[1] - x) / det;
        if (b0 >= -kBaryTol && b1 >= -kBaryTol && b2 >= -kBaryTol)
            ++count;
    }
    return count;
}

// Proper intersection of two segments, tolerant at the endpoints.
std::optional<Eigen::Vector2d> segment_intersection(const std::array<Eigen::Vector2d, 2>& s,
                                                    const std::array<Eigen::Vector2d, 2>& t,
                                                    double scale) {
    Eigen::Vector2d r = s[1] - s[0];
    Eigen::Vector2d q = t[1] - t[0];
    double denom = cross2(r, q);
    if (std::abs(denom) <= 1e-14 * scale * scale)
        return std::nullopt;
    double a = cross2(t[0] - s[0], q) / denom;
    double b = cross2(t[0] - s[0], r) / denom;
    const double eps = 1e-12;
    if (a < -eps || a > 1 + eps || b < -eps || b > 1 + eps)
        return std::nullopt;
    return s[0] + a * r;
}

// Directions (angles) in which arrangement edges leave the point c.
std::vector<double> emanating_angles(const PlanarScene& scene, const Eigen::Vector2d& c) {
    std::vector<double> angles;
    double near = 1e-9 * scene.scale;
    for (const auto& seg : scene.segments) {
        Eigen::Vector2d d = seg[1] - seg[0];
        double len2 = d.squaredNorm();
        if (len2 <= near * near)
            continue;
        double t = (c - seg[0]).dot(d) / len2;
        Eigen::Vector2d closest = seg[0] + std::clamp(t, 0.0, 1.0) * d;
        if ((closest - c).norm() > near)
            continue;
        double theta = std::atan2(d.y(), d.x());
        bool at_start = (c - seg[0]).norm() <= near;
        bool at_end = (c - seg[1]).norm() <= near;
        if (!at_end)
            angles.push_back(theta); // towards seg[1]
        if (!at_start)
            angles.push_back(theta > 0 ? theta - M_PI : theta + M_PI);
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 angles.end());
    return angles;
}

} // namespace

OverlapReport overlap_exact_2d(const SimplicialComplex& X, const PointMap& f) {
    if (X.dimension() != 2)
        throw std::invalid_argument("overlap_exact_2d needs a 2-dimensional complex");
    if (f.dim != 2)
        throw std::invalid_argument("overlap_exact_2d needs planar points");

    PointMap points = f;
    PlanarScene scene = make_scene(X, points);

    // General-position guard: perturb collinear triangle images.
    bool degenerate = false;
    for (int round = 0; round < 3; ++round) {
        bool bad = false;
        for (const auto& t : scene.triangles)
            bad = bad || triangle_degenerate(t, scene.scale);
        if (!bad)
            break;
        degenerate = true;
        Rng rng(0x9e0913u + round);
        for (auto& [id, p] : points.coords) {
            p.x() += rng.uniform(-1e-9, 1e-9) * scene.scale;
            p.y() += rng.uniform(-1e-9, 1e-9) * scene.scale;
        }
        scene = make_scene(X, points);
    }

    // Candidate points of the arrangement: vertices and edge crossings.
    std::vector<Eigen::Vector2d> candidates = scene.vertices;
    for (std::size_t i = 0; i < scene.segments.size(); ++i)
        for (std::size_t j = i + 1; j < scene.segments.size(); ++j)
            if (auto p = segment_intersection(scene.segments[i], scene.segments[j], scene.scale))
                candidates.push_back(*p);

    OverlapReport report;
    report.method = "exact-2d";
    report.degenerate_flagged = degenerate;
    report.witness = Eigen::Vector2d::Zero();

    auto consider = [&](const Eigen::Vector2d& p) {
        int d = planar_depth(scene, p);
        if (d > report.depth) {
            report.depth = d;
            report.witness = p;
        }
    };

    // Depth is constant on open cells; probe each cell incident to each
    // candidate through short nudges along the sector bisectors.
    for (const Eigen::Vector2d& c : candidates) {
        std::vector<double> angles = emanating_angles(scene, c);
        if (angles.empty()) {
            consider(c);
            continue;
        }
        for (std::size_t i = 0; i < angles.size(); ++i) {
            double next = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + 2 * M_PI;
            double mid = (angles[i] + next) / 2;
            Eigen::Vector2d dir(std::cos(mid), std::sin(mid));
            consider(c + kNudge * scene.scale * dir);
        }
    }
    for (const auto& t : scene.triangles)
        consider((t[0] + t[1] + t[2]) / 3.0);

    report.overlap = static_cast<double>(report.depth) / X.count(2);
    return report;
}

OverlapReport overlap_sampled(const SimplicialComplex& X, const PointMap& f,
                              int num_points, std::uint64_t seed) {
    int n = X.dimension();
    if (f.dim != n)
        throw std::invalid_argument("point map dimension must match the complex");

    OverlapReport report;
    report.method = "sampled";
    report.witness = Eigen::VectorXd::Zero(n);

    Eigen::VectorXd lo = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
    Eigen::VectorXd hi = -lo;
    for (int v : X.vertex_ids()) {
        lo = lo.cwiseMin(f.at(v));
        hi = hi.cwiseMax(f.at(v));
    }

    auto consider = [&](const Eigen::VectorXd& p) {
        int d = depth(X, f, p);
        if (d > report.depth) {
            report.depth = d;
            report.witness = p;
        }
    };

    // Simplex-image centroids always participate, so a nonempty complex
    // reports depth >= 1 even with zero random samples.
    for (const Simplex& sigma : X.simplices(n)) {
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int v : sigma.vertices())
            centroid += f.at(v);
        consider(centroid / (n + 1));
    }

    Rng rng(seed);
    Eigen::VectorXd p(n);
    for (int s = 0; s < num_points; ++s) {
        for (int i = 0; i < n; ++i)
            p[i] = rng.uniform(lo[i], hi[i]);
        consider(p);
    }

    report.overlap = static_cast<double>(report.depth) / X.count(n);
    return report;
}

double overlap_bound(double lambda, int n, double pach_constant, OverlapVariant variant) {
    if (!(pach_constant > 0) || pach_constant > 1)
        throw std::invalid_argument("pach constant must lie in (0, 1]");
    if (n < 1)
        throw std::invalid_argument("overlap bound needs n >= 1");
    double nfact = 1;
    for (int i = 2; i <= n; ++i)
        nfact *= i;
    if (variant == OverlapVariant::NonPartite) {
        double cn = static_cast<double>(constant_C(n));
        return nfact * pach_constant *
               (std::pow(pach_constant / (n + 1), n) - (n + 1) * cn * lambda);
    }
    double cn = static_cast<double>(constant_C_partite(n));
    return pach_constant * (std::pow(pach_constant, n) - cn * lambda);
}

} // namespace hdx
