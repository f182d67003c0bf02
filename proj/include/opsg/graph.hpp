#ifndef OPSG_GRAPH_HPP
#define OPSG_GRAPH_HPP

#include <set>
#include <utility>
#include <vector>

#include "opsg/geometry.hpp"

namespace opsg {

using Edge = std::pair<int, int>; // normalized i < j

// Straight-line graph over a point set. Edges are stored sorted and
// deduplicated; the no-crossing invariant is checked by is_plane(), not at
// construction (intermediate states may be queried).
class PlaneGraph {
public:
    PlaneGraph(PointSet base, std::vector<Edge> edges);

    const PointSet& base() const { return base_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return base_.size(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int i, int j) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

private:
    PointSet base_;
    std::vector<Edge> edges_;
};

struct OpennessReport {
    std::vector<std::pair<int, double>> per_vertex; // (vertex, max incident angle)
    double graph_openness = 0.0;
};

// Counterclockwise gaps between radially consecutive edges at v, summing to
// 2*pi. Degree <= 1 yields the single value 2*pi.
std::vector<double> incident_angles(const PlaneGraph& g, int v);

// Largest incident angle at v; 2*pi for degree <= 1.
double vertex_openness(const PlaneGraph& g, int v);

OpennessReport openness(const PlaneGraph& g);

// True iff no two edges properly cross and no edge passes through a vertex.
bool is_plane(const PlaneGraph& g);

struct Classification {
    bool spanning_tree = false;
    bool spanning_path = false;
    bool triangulation = false;
    int max_degree = 0;
};

// Requires is_plane(g). Spanning tree = connected with n-1 edges; spanning
// path additionally has max degree <= 2; triangulation is recognized by the
// Euler count 3n-3-h plus presence of all hull edges (n >= 3).
Classification classify(const PlaneGraph& g);

bool is_connected(const PlaneGraph& g);

} // namespace opsg

#endif
