#include "opsg/graph.hpp"

#include <algorithm>
#include <cmath>

namespace opsg {

PlaneGraph::PlaneGraph(PointSet base, std::vector<Edge> edges)
    : base_(std::move(base)), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.first == e.second) throw Error("self-loop edge");
        if (e.first < 0 || e.second < 0 || e.first >= base_.size() ||
            e.second >= base_.size())
            throw Error("edge index out of range");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool PlaneGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

int PlaneGraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<int> PlaneGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        if (e.second == v) out.push_back(e.first);
    }
    return out;
}

std::vector<double> incident_angles(const PlaneGraph& g, int v) {
    const std::vector<int> nbr = g.neighbors(v);
    if (nbr.size() <= 1) return {kTwoPi};

    std::vector<double> dirs;
    dirs.reserve(nbr.size());
    const Point& p = g.base()[v];
    for (int u : nbr) {
        const Point& q = g.base()[u];
        dirs.push_back(std::atan2(q.y - p.y, q.x - p.x));
    }
    std::sort(dirs.begin(), dirs.end());
    std::vector<double> gaps;
    gaps.reserve(dirs.size());
    for (size_t i = 1; i < dirs.size(); ++i) gaps.push_back(dirs[i] - dirs[i - 1]);
    gaps.push_back(kTwoPi - (dirs.back() - dirs.front()));
    return gaps;
}

double vertex_openness(const PlaneGraph& g, int v) {
    const std::vector<double> gaps = incident_angles(g, v);
    return *std::max_element(gaps.begin(), gaps.end());
}

OpennessReport openness(const PlaneGraph& g) {
    OpennessReport rep;
    rep.graph_openness = kTwoPi;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const double o = vertex_openness(g, v);
        rep.per_vertex.emplace_back(v, o);
        rep.graph_openness = std::min(rep.graph_openness, o);
    }
    return rep;
}

bool is_plane(const PlaneGraph& g) {
    const auto& es = g.edges();
    const PointSet& s = g.base();
    for (size_t i = 0; i < es.size(); ++i) {
        const Point& a = s[es[i].first];
        const Point& b = s[es[i].second];
        for (size_t j = i + 1; j < es.size(); ++j) {
            if (segments_intersect(a, b, s[es[j].first], s[es[j].second])) return false;
        }
        for (int v = 0; v < s.size(); ++v) {
            if (v == es[i].first || v == es[i].second) continue;
            if (orientation(a, b, s[v]) == Orientation::Collinear &&
                dot(s[v] - a, s[v] - b) < 0.0)
                return false;
        }
    }
    return true;
}

bool is_connected(const PlaneGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.first)].push_back(e.second);
        adj[static_cast<size_t>(e.second)].push_back(e.first);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++count;
        for (int u : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    return count == n;
}

Classification classify(const PlaneGraph& g) {
    Classification c;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) c.max_degree = std::max(c.max_degree, g.degree(v));

    const bool connected = is_connected(g);
    c.spanning_tree = connected && g.edge_count() == n - 1;
    c.spanning_path = c.spanning_tree && c.max_degree <= 2;

    if (n >= 3) {
        const std::vector<int> hull = convex_hull(g.base());
        const int h = static_cast<int>(hull.size());
        if (g.edge_count() == 3 * n - 3 - h) {
            bool hull_edges_present = true;
            for (int i = 0; i < h && hull_edges_present; ++i)
                hull_edges_present =
                    g.has_edge(hull[static_cast<size_t>(i)],
                               hull[static_cast<size_t>((i + 1) % h)]);
            c.triangulation = hull_edges_present;
        }
    }
    return c;
}

} // namespace opsg
