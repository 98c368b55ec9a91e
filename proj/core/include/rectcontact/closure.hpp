#pragma once

#include "rectcontact/plane_graph.hpp"

#include <array>
#include <memory>

namespace rectcontact {

/// Closure vertex index: 0..n-1 are the G-vertices (in vertices() order),
/// n.. are face vertices of the inner faces.
using CVertex = int;

enum class EdgeKind { Pair, Loose, Half };

struct ClosureEdge {
    EdgeKind kind;
    CVertex ends[2];      // Pair: both G-vertices; Loose: {g-vertex, face-vertex};
                          // Half: {outer g-vertex, -1}
    std::string id;       // stable spec id
    size_t side_face = 0; // Pair only: index into base().faces() of the face
                          // this copy is embedded against
};

struct EdgeEnd {
    int edge = -1;
    int side = 0; // which of ClosureEdge::ends this end sits at
    friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// The closure of an MTP-graph: every G-edge doubled into an edge pair, a
/// face vertex per inner face joined by loose edges to its boundary, and two
/// half-edges per outer vertex embedded into the outer face. Immutable.
class Closure {
public:
    static Closure build(const PlaneGraph& g);

    const PlaneGraph& base() const { return *base_; }
    int num_g_vertices() const { return static_cast<int>(g_ids_.size()); }
    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_inner_faces() const { return static_cast<int>(face_of_fv_.size()); }

    VertexId g_id(CVertex v) const { return g_ids_[v]; }
    CVertex index_of(VertexId id) const;
    bool is_face_vertex(CVertex v) const { return v >= num_g_vertices(); }
    /// PlaneGraph face index represented by face vertex v.
    size_t face_of_face_vertex(CVertex v) const {
        return face_of_fv_[v - num_g_vertices()];
    }
    /// Face vertex for a PlaneGraph face index, or -1 for the outer face.
    CVertex face_vertex(size_t face_index) const { return fv_of_face_[face_index]; }
    /// k-th inner face (id order used in loose-edge names).
    size_t inner_face_ordinal(size_t face_index) const;

    const std::vector<ClosureEdge>& edges() const { return edges_; }
    const ClosureEdge& edge(int e) const { return edges_[e]; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<EdgeEnd>& rotation(CVertex v) const { return rot_[v]; }

    bool is_outer_vertex(CVertex v) const;

    CVertex other_end(int e, CVertex v) const {
        const auto& ed = edges_[e];
        return ed.ends[0] == v ? ed.ends[1] : ed.ends[0];
    }

    /// Pair copies of G-edge {u,v}: first = R slot, second = L slot
    /// (relative to the endpoint of smaller id).
    std::pair<int, int> pair_copies(VertexId u, VertexId v) const;
    /// Half-edges of outer vertex v: {outR, outL}. outR precedes outL in the
    /// ccw rotation at v.
    std::pair<int, int> half_edges(VertexId v) const;
    /// Loose edge between inner face (by face index) and G-vertex id.
    int loose_edge(size_t face_index, VertexId v) const;

    int edge_by_id(const std::string& id) const;

    /// Position of a specific end in the rotation of the vertex it sits at.
    size_t rotation_position(const EdgeEnd& end) const;

    /// Number of edge ends; equals 4 * (num G-vertices + inner faces).
    size_t num_edge_ends() const;

private:
    std::shared_ptr<const PlaneGraph> base_;
    std::vector<VertexId> g_ids_;
    std::map<VertexId, CVertex> g_index_;
    std::vector<size_t> face_of_fv_;
    std::vector<CVertex> fv_of_face_;
    std::vector<size_t> inner_ordinal_;
    std::vector<ClosureEdge> edges_;
    std::vector<std::vector<EdgeEnd>> rot_;
    std::map<std::pair<VertexId, VertexId>, std::pair<int, int>> pairs_;
    std::map<VertexId, std::pair<int, int>> halves_;
    std::map<std::pair<size_t, VertexId>, int> loose_;
    std::map<std::string, int> by_id_;
    std::vector<std::array<size_t, 2>> end_pos_; // per edge: rotation position of each end
};

} // namespace rectcontact
