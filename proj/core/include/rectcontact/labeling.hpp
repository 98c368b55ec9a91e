#pragma once

#include "rectcontact/orientation.hpp"

namespace rectcontact {

enum class EdgeSide { Left, Right };

/// Side of a directed pair edge: Right when the 2-gon enclosed by its edge
/// pair lies on the left while travelling the edge, Left otherwise.
EdgeSide edge_side(const FourOrientation& o, int pair_edge);

/// Pair-edge type in the successor structure: left/right x uni/bi.
enum class PairEdgeType { RightUni, LeftUni, RightBi, LeftBi };
PairEdgeType pair_edge_type(const FourOrientation& o, int pair_edge);

/// The outgoing edge continuing a walk through the head of e: the second
/// outgoing edge ccw after e for right edges, the third for left edges.
/// e must be a directed pair edge (its head is a G-vertex).
int successor(const FourOrientation& o, int pair_edge);

struct SuccessorWalk {
    int start = -1;
    std::vector<int> edges; // pair edges, each the successor of the previous
    int terminal = -1;      // half-edge reached, -1 if the walk was cut short
};

/// Follows successors from start until a half-edge is reached. Throws
/// internal_error on a cycle or when a loose edge interrupts the walk (which
/// cannot happen after 5-face stacking).
SuccessorWalk successor_walk(const FourOrientation& o, int start);

/// Per-step wedge counts of the successor structure: for a chain of edges
/// where each is the successor of the previous, total outgoing edges seen in
/// the left and right wedges, via the 16-entry transition table.
std::pair<int, int> wedge_census(const FourOrientation& o,
                                 const std::vector<int>& walk_edges);
std::pair<int, int> wedge_table_entry(PairEdgeType from, PairEdgeType to);

/// A stacked copy of the graph: one new vertex in every 5-face, oriented so
/// that successor walks never run into an inner loose edge.
struct StackedAugmentation {
    PlaneGraph graph;
    std::shared_ptr<const Closure> closure;
    FourOrientation orientation;
    /// base closure pair edge -> stacked closure pair edge
    std::vector<int> pair_map;
    /// base 5-face (face index) -> stacked pair edge out of the face's
    /// pendant vertex toward the new vertex
    std::map<size_t, int> five_face_slot;
};

StackedAugmentation stack_five_faces(const FourOrientation& o);

/// A 4-orientation plus colors 0..3 on the outgoing edges at G-vertices.
struct CornerEdgeLabeling {
    FourOrientation orientation;
    std::vector<std::int8_t> color; // per closure edge; -1 = uncolored

    std::string key() const;
};

/// Lemma-3 coloring: stack 5-faces, follow every successor walk to one of
/// the eight outer half-edges, color accordingly, then un-stack.
CornerEdgeLabeling color_from_orientation(const FourOrientation& o);

/// Local rules: (i) outgoing colors 0,1,2,3 in ccw order at every G-vertex,
/// (ii) incoming wedge between colors i,i+1 holds only incoming pair edges
/// colored i+2 or i+3, uni pairs colored {i-1,i}, bi pairs {i,i+2},
/// face-vertex outgoing edges uncolored.
ValidationReport validate_labeling(const CornerEdgeLabeling& l);

} // namespace rectcontact
