#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

namespace teprobe {

// Closed polygonal discretization of a boundary curve. Segment i runs from
// nodes[i] to nodes[(i+1) % size()]; normals are unit, constant per segment
// and point out of the enclosed region. Immutable after construction.
class BoundaryMesh {
public:
    // nodes must form a simple closed loop (>= 3 points, nonzero segment
    // lengths). Orientation may be either way; outward normals are resolved
    // from the signed area.
    explicit BoundaryMesh(std::vector<Eigen::Vector2d> nodes);

    int size() const { return static_cast<int>(nodes_.size()); }
    const Eigen::Vector2d& node(int i) const { return nodes_[i]; }
    double length(int i) const { return lengths_[i]; }
    const Eigen::Vector2d& normal(int i) const { return normals_[i]; }
    const Eigen::Vector2d& tangent(int i) const { return tangents_[i]; }

    const std::vector<Eigen::Vector2d>& nodes() const { return nodes_; }

    // Affine map from the reference element [-1,1] onto segment i:
    // xi=-1 -> nodes[i], xi=+1 -> nodes[i+1]. Throws std::domain_error for
    // xi outside [-1,1].
    Eigen::Vector2d segment_point(int i, double xi) const;

    double perimeter() const;

    // Plain-text dump, one node per line: "x y".
    void dump_nodes(std::ostream& os) const;

private:
    std::vector<Eigen::Vector2d> nodes_;
    std::vector<double> lengths_;
    std::vector<Eigen::Vector2d> normals_;
    std::vector<Eigen::Vector2d> tangents_;
};

// N equally spaced nodes on a circle of the given radius, centered at the
// origin. Requires radius > 0 and segment_count >= 8 (coarser meshes break
// the quadrature assumptions); throws std::invalid_argument otherwise.
BoundaryMesh build_disk_mesh(double radius, int segment_count);

}  // namespace teprobe
