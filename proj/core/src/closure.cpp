#include "rectcontact/closure.hpp"

#include <algorithm>

namespace rectcontact {

CVertex Closure::index_of(VertexId id) const {
    auto it = g_index_.find(id);
    if (it == g_index_.end())
        throw input_error("unknown vertex id " + std::to_string(id));
    return it->second;
}

size_t Closure::inner_face_ordinal(size_t face_index) const {
    return inner_ordinal_[face_index];
}

bool Closure::is_outer_vertex(CVertex v) const {
    if (is_face_vertex(v))
        return false;
    VertexId id = g_id(v);
    const auto& of = base().outer_face();
    return std::find(of.begin(), of.end(), id) != of.end();
}

std::pair<int, int> Closure::pair_copies(VertexId u, VertexId v) const {
    if (u > v)
        std::swap(u, v);
    auto it = pairs_.find({u, v});
    if (it == pairs_.end())
        throw input_error("no edge pair between " + std::to_string(u) +
                          " and " + std::to_string(v));
    return it->second;
}

std::pair<int, int> Closure::half_edges(VertexId v) const {
    auto it = halves_.find(v);
    if (it == halves_.end())
        throw input_error("vertex " + std::to_string(v) +
                          " is not an outer vertex");
    return it->second;
}

int Closure::loose_edge(size_t face_index, VertexId v) const {
    auto it = loose_.find({face_index, v});
    if (it == loose_.end())
        throw input_error("no loose edge between face " +
                          std::to_string(face_index) + " and vertex " +
                          std::to_string(v));
    return it->second;
}

int Closure::edge_by_id(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end())
        throw input_error("unknown closure edge id '" + id + "'");
    return it->second;
}

size_t Closure::rotation_position(const EdgeEnd& end) const {
    return end_pos_[end.edge][end.side];
}

size_t Closure::num_edge_ends() const {
    size_t n = 0;
    for (const auto& r : rot_)
        n += r.size();
    return n;
}

Closure Closure::build(const PlaneGraph& g) {
    Closure c;
    c.base_ = std::make_shared<PlaneGraph>(g);
    const PlaneGraph& base = *c.base_;

    for (VertexId v : base.vertices()) {
        c.g_index_[v] = static_cast<CVertex>(c.g_ids_.size());
        c.g_ids_.push_back(v);
    }
    int n = c.num_g_vertices();

    const auto& fs = base.faces();
    c.fv_of_face_.assign(fs.size(), -1);
    c.inner_ordinal_.assign(fs.size(), 0);
    size_t ordinal = 0;
    for (size_t fi = 0; fi < fs.size(); ++fi) {
        if (fs[fi].outer)
            continue;
        c.inner_ordinal_[fi] = ordinal++;
        c.fv_of_face_[fi] = n + static_cast<CVertex>(c.face_of_fv_.size());
        c.face_of_fv_.push_back(fi);
    }
    c.rot_.resize(n + c.face_of_fv_.size());

    auto pair_name = [](VertexId u, VertexId v, bool right) {
        return "{" + std::to_string(u) + "," + std::to_string(v) +
               (right ? "}:R" : "}:L");
    };

    // Edge pairs. Copy identity: each copy is embedded against one of the two
    // faces of the original edge. Seen from the smaller endpoint s toward t,
    // the R copy lies on the side of face_of(t->s) and comes first in ccw
    // rotation at s.
    for (VertexId u : base.vertices()) {
        for (VertexId v : base.rotation(u)) {
            if (v < u)
                continue;
            size_t face_uv = base.face_of(Dart{u, v});
            size_t face_vu = base.face_of(Dart{v, u});
            ClosureEdge right{EdgeKind::Pair,
                              {c.g_index_[u], c.g_index_[v]},
                              pair_name(u, v, true),
                              face_vu};
            ClosureEdge left{EdgeKind::Pair,
                             {c.g_index_[u], c.g_index_[v]},
                             pair_name(u, v, false),
                             face_uv};
            int ri = static_cast<int>(c.edges_.size());
            c.edges_.push_back(right);
            int li = static_cast<int>(c.edges_.size());
            c.edges_.push_back(left);
            c.pairs_[{u, v}] = {ri, li};
        }
    }

    // Loose edges, one per (inner face, boundary vertex).
    for (size_t fi = 0; fi < fs.size(); ++fi) {
        if (fs[fi].outer)
            continue;
        for (VertexId v : fs[fi].vertices) {
            ClosureEdge e{EdgeKind::Loose,
                          {c.g_index_[v], c.fv_of_face_[fi]},
                          "f#" + std::to_string(c.inner_ordinal_[fi]) + ":" +
                              std::to_string(v),
                          0};
            c.loose_[{fi, v}] = static_cast<int>(c.edges_.size());
            c.edges_.push_back(e);
        }
    }

    // Half-edges, two per outer vertex. outR precedes outL in ccw rotation.
    for (VertexId v : base.outer_face()) {
        ClosureEdge r{EdgeKind::Half, {c.g_index_[v], -1},
                      std::to_string(v) + ":outR", 0};
        ClosureEdge l{EdgeKind::Half, {c.g_index_[v], -1},
                      std::to_string(v) + ":outL", 0};
        int ri = static_cast<int>(c.edges_.size());
        c.edges_.push_back(r);
        int li = static_cast<int>(c.edges_.size());
        c.edges_.push_back(l);
        c.halves_[v] = {ri, li};
    }

    for (size_t i = 0; i < c.edges_.size(); ++i)
        c.by_id_[c.edges_[i].id] = static_cast<int>(i);

    // Rotation at a G-vertex v: for each neighbor w in ccw order append the
    // two pair copies (the face_of(w->v)-side copy first), then the content
    // of the angle between w and the next neighbor: that angle lies in
    // face_of(v->w) and holds either the loose edge to that face or, for the
    // outer angle of an outer vertex, the two half-edges (outR then outL).
    for (VertexId v : base.vertices()) {
        CVertex iv = c.g_index_[v];
        auto& rot = c.rot_[iv];
        const auto& nbrs = base.rotation(v);
        for (VertexId w : nbrs) {
            size_t face_vw = base.face_of(Dart{v, w});
            size_t face_wv = base.face_of(Dart{w, v});
            auto [ri, li] = c.pairs_[{std::min(v, w), std::max(v, w)}];
            int first = (c.edges_[ri].side_face == face_wv) ? ri : li;
            int second = (first == ri) ? li : ri;
            int vside = c.edges_[first].ends[0] == iv ? 0 : 1;
            rot.push_back({first, vside});
            rot.push_back({second, vside});
            if (fs[face_vw].outer) {
                auto [hr, hl] = c.halves_[v];
                rot.push_back({hr, 0});
                rot.push_back({hl, 0});
            } else {
                rot.push_back({c.loose_[{face_vw, v}], 0});
            }
        }
    }

    // Rotation at a face vertex: loose edges to the boundary in ccw order.
    for (size_t fi = 0; fi < fs.size(); ++fi) {
        if (fs[fi].outer)
            continue;
        auto& rot = c.rot_[c.fv_of_face_[fi]];
        for (VertexId v : fs[fi].vertices)
            rot.push_back({c.loose_[{fi, v}], 1});
    }

    // End-position lookup.
    c.end_pos_.assign(c.edges_.size(),
                      {static_cast<size_t>(-1), static_cast<size_t>(-1)});
    for (size_t v = 0; v < c.rot_.size(); ++v)
        for (size_t p = 0; p < c.rot_[v].size(); ++p) {
            const auto& end = c.rot_[v][p];
            c.end_pos_[end.edge][end.side] = p;
        }

    size_t n_inner = c.face_of_fv_.size();
    if (c.num_edge_ends() != 4 * (static_cast<size_t>(n) + n_inner))
        throw internal_error("closure edge-end count does not match "
                             "4*(vertices + inner faces)");
    return c;
}

} // namespace rectcontact
