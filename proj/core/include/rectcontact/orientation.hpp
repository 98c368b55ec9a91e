#pragma once

#include "rectcontact/closure.hpp"

#include <functional>
#include <memory>

namespace rectcontact {

/// A 4-orientation of a closure: every vertex (G-vertices and face vertices)
/// has outdegree exactly 4. Half-edges carry a free direction bit, although
/// in any valid orientation of an MTP closure they point outward.
struct FourOrientation {
    std::shared_ptr<const Closure> closure;
    /// Per edge: which of ClosureEdge::ends is the tail. Half edges: 0 means
    /// out of the outer vertex, 1 means in.
    std::vector<std::int8_t> tail;

    CVertex tail_vertex(int e) const {
        return closure->edge(e).ends[tail[e]];
    }
    CVertex head_vertex(int e) const {
        return closure->edge(e).ends[1 - tail[e]];
    }
    bool out_at(int e, CVertex v) const { return tail_vertex(e) == v; }

    /// True for uni-directed edge pairs (both copies the same way).
    bool pair_unidirected(VertexId u, VertexId v) const;

    int outdegree(CVertex v) const;

    /// Canonical serialization (edge ids in id order with tail vertex);
    /// equal strings iff equal orientations.
    std::string key() const;
};

bool check_outdegrees(const FourOrientation& o);

struct CycleWitness {
    std::vector<VertexId> cycle;      // simple cycle of G, as given
    std::vector<int> pointing_inside; // closure edge indices, tail on cycle
    size_t count() const { return pointing_inside.size(); }
};

/// Edges pointing inside the simple G-cycle c (tail on the cycle, edge in
/// the open interior of the doubled cycle). Lemma-2 quantity.
CycleWitness edges_pointing_inside(const FourOrientation& o,
                                   const std::vector<VertexId>& cycle);

struct EnumerateOptions {
    size_t max_closure_edges = 60; // size guard
    size_t cap = 0;                // stop after this many results; 0 = all
};

/// Emits every distinct 4-orientation of closure(g) exactly once, in a
/// deterministic order. Returns the number emitted. The consumer gets each
/// orientation by const reference and may copy it.
size_t enumerate_orientations(const std::shared_ptr<const Closure>& closure,
                              const std::function<void(const FourOrientation&)>& sink,
                              const EnumerateOptions& opts = {});

/// Theorem-2 construction: a valid 4-orientation for any MTP-graph, built by
/// the inductive contraction of 4-faces / edges and deterministic rebalancing.
FourOrientation construct_orientation(const PlaneGraph& g);
FourOrientation construct_orientation(const std::shared_ptr<const Closure>& closure);

} // namespace rectcontact
