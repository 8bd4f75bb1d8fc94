#include "teprobe/boundary_mesh.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace teprobe {

BoundaryMesh::BoundaryMesh(std::vector<Eigen::Vector2d> nodes)
    : nodes_(std::move(nodes)) {
    const int n = static_cast<int>(nodes_.size());
    if (n < 3) throw std::invalid_argument("boundary loop needs at least 3 nodes");

    // signed area decides which perpendicular of the tangent points outward
    double area2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto& a = nodes_[i];
        const auto& b = nodes_[(i + 1) % n];
        area2 += a.x() * b.y() - b.x() * a.y();
    }
    if (area2 == 0.0) throw std::invalid_argument("degenerate boundary loop");
    const double orient = area2 > 0.0 ? 1.0 : -1.0;  // +1: counterclockwise

    lengths_.resize(n);
    tangents_.resize(n);
    normals_.resize(n);
    for (int i = 0; i < n; ++i) {
        const Eigen::Vector2d d = nodes_[(i + 1) % n] - nodes_[i];
        const double len = d.norm();
        if (!(len > 0.0)) throw std::invalid_argument("zero-length boundary segment");
        lengths_[i] = len;
        tangents_[i] = d / len;
        normals_[i] = orient * Eigen::Vector2d(tangents_[i].y(), -tangents_[i].x());
    }
}

Eigen::Vector2d BoundaryMesh::segment_point(int i, double xi) const {
    if (!(xi >= -1.0 && xi <= 1.0))
        throw std::domain_error("segment_point: xi outside [-1, 1]");
    const Eigen::Vector2d& a = nodes_[i];
    const Eigen::Vector2d& b = nodes_[(i + 1) % size()];
    return a + 0.5 * (1.0 + xi) * (b - a);
}

double BoundaryMesh::perimeter() const {
    double sum = 0.0;
    for (double l : lengths_) sum += l;
    return sum;
}

void BoundaryMesh::dump_nodes(std::ostream& os) const {
    for (const auto& p : nodes_) os << p.x() << ' ' << p.y() << '\n';
}

BoundaryMesh build_disk_mesh(double radius, int segment_count) {
    if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
    if (segment_count < 8)
        throw std::invalid_argument("disk mesh needs at least 8 segments");
    std::vector<Eigen::Vector2d> nodes(segment_count);
    for (int i = 0; i < segment_count; ++i) {
        const double th = 2.0 * M_PI * i / segment_count;
        nodes[i] = radius * Eigen::Vector2d(std::cos(th), std::sin(th));
    }
    return BoundaryMesh(std::move(nodes));
}

}  // namespace teprobe
