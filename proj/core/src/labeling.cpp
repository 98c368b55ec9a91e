#include "rectcontact/labeling.hpp"

#include <algorithm>
#include <sstream>

namespace rectcontact {

EdgeSide edge_side(const FourOrientation& o, int e) {
    const Closure& c = *o.closure;
    const auto& ed = c.edge(e);
    if (ed.kind != EdgeKind::Pair)
        throw input_error("edge_side is defined for pair edges only");
    CVertex t = o.tail_vertex(e);
    CVertex h = o.head_vertex(e);
    size_t face_behind = c.base().face_of(Dart{c.g_id(h), c.g_id(t)});
    return ed.side_face == face_behind ? EdgeSide::Right : EdgeSide::Left;
}

PairEdgeType pair_edge_type(const FourOrientation& o, int e) {
    const Closure& c = *o.closure;
    const auto& ed = c.edge(e);
    bool uni = o.pair_unidirected(c.g_id(ed.ends[0]), c.g_id(ed.ends[1]));
    bool right = edge_side(o, e) == EdgeSide::Right;
    if (right)
        return uni ? PairEdgeType::RightUni : PairEdgeType::RightBi;
    return uni ? PairEdgeType::LeftUni : PairEdgeType::LeftBi;
}

namespace {

bool edge_out_at(const FourOrientation& o, const EdgeEnd& end, CVertex v) {
    const auto& ed = o.closure->edge(end.edge);
    if (ed.kind == EdgeKind::Half)
        return o.tail[end.edge] == 0;
    return ed.ends[o.tail[end.edge]] == v;
}

// outgoing edges at v in ccw order starting just after `from_pos`
std::vector<int> outgoing_ccw_from(const FourOrientation& o, CVertex v,
                                   size_t from_pos) {
    const auto& rot = o.closure->rotation(v);
    std::vector<int> out;
    size_t deg = rot.size();
    for (size_t s = 1; s <= deg; ++s) {
        const auto& end = rot[(from_pos + s) % deg];
        if (edge_out_at(o, end, v))
            out.push_back(end.edge);
    }
    return out;
}

} // namespace

int successor(const FourOrientation& o, int e) {
    const Closure& c = *o.closure;
    if (c.edge(e).kind != EdgeKind::Pair)
        throw input_error("successor is defined for pair edges only");
    CVertex v = o.head_vertex(e);
    if (c.is_face_vertex(v))
        throw internal_error("pair edge heading into a face vertex");
    EdgeEnd head_end{e, static_cast<int>(1 - o.tail[e])};
    size_t pos = c.rotation_position(head_end);
    auto out = outgoing_ccw_from(o, v, pos);
    if (out.size() != 4)
        throw internal_error("head vertex does not have outdegree 4");
    return edge_side(o, e) == EdgeSide::Right ? out[1] : out[2];
}

SuccessorWalk successor_walk(const FourOrientation& o, int start) {
    const Closure& c = *o.closure;
    SuccessorWalk w;
    w.start = start;
    std::vector<bool> on_walk(c.num_edges(), false);
    int cur = start;
    while (true) {
        if (on_walk[cur])
            throw internal_error("successor walk closed a cycle");
        on_walk[cur] = true;
        w.edges.push_back(cur);
        int nxt = successor(o, cur);
        EdgeKind k = c.edge(nxt).kind;
        if (k == EdgeKind::Half) {
            w.terminal = nxt;
            return w;
        }
        if (k == EdgeKind::Loose)
            throw internal_error("successor walk ran into a loose edge; "
                                 "5-faces must be stacked first");
        cur = nxt;
    }
}

std::pair<int, int> wedge_table_entry(PairEdgeType from, PairEdgeType to) {
    // Wedges between the edge pair of e and the edge pair of suc(e) at their
    // shared vertex: outgoing edges strictly between, not counting the two
    // pair twins themselves. Left wedge = clockwise side, right wedge = ccw.
    auto is_right = [](PairEdgeType t) {
        return t == PairEdgeType::RightUni || t == PairEdgeType::RightBi;
    };
    int left = is_right(from) ? 2 : 1;
    int right = is_right(from) ? 1 : 2;
    if (from == PairEdgeType::RightBi)
        left -= 1; // twin of e is the outgoing edge on the clockwise side
    if (from == PairEdgeType::LeftBi)
        right -= 1; // twin of e is the first outgoing edge ccw
    if (to == PairEdgeType::RightUni)
        left -= 1; // twin of suc(e) sits just ccw of it, in the left wedge
    if (to == PairEdgeType::LeftUni)
        right -= 1; // twin of suc(e) sits just cw of it, in the right wedge
    return {left, right};
}

std::pair<int, int> wedge_census(const FourOrientation& o,
                                 const std::vector<int>& walk_edges) {
    int left = 0, right = 0;
    for (size_t i = 0; i + 1 < walk_edges.size(); ++i) {
        if (successor(o, walk_edges[i]) != walk_edges[i + 1])
            throw input_error("wedge_census requires a successor chain");
        auto [l, r] = wedge_table_entry(pair_edge_type(o, walk_edges[i]),
                                        pair_edge_type(o, walk_edges[i + 1]));
        left += l;
        right += r;
    }
    return {left, right};
}

// --- stacking ---

StackedAugmentation stack_five_faces(const FourOrientation& o) {
    const Closure& c = *o.closure;
    const PlaneGraph& g = c.base();
    const auto& fs = g.faces();

    std::map<VertexId, std::vector<VertexId>> rot;
    for (VertexId v : g.vertices())
        rot[v] = g.rotation(v);
    std::vector<VertexId> vertices = g.vertices();
    VertexId next_id = 0;
    for (VertexId v : vertices)
        next_id = std::max(next_id, v + 1);

    struct Stacked {
        size_t face;
        VertexId v, u, w;
    };
    std::vector<Stacked> stacked;

    for (size_t fi = 0; fi < fs.size(); ++fi) {
        if (fs[fi].outer || fs[fi].length() != 5)
            continue;
        // pendant vertex: its loose edge points into the face vertex
        VertexId pv = -1;
        for (VertexId x : fs[fi].vertices) {
            int le = c.loose_edge(fi, x);
            if (o.tail_vertex(le) == c.index_of(x)) {
                if (pv != -1)
                    throw internal_error("5-face with two incoming loose "
                                         "edges");
                pv = x;
            }
        }
        if (pv == -1)
            throw internal_error("5-face without an incoming loose edge");
        const auto& bnd = fs[fi].vertices; // ccw
        size_t j = 0;
        while (bnd[j] != pv)
            ++j;
        VertexId v = pv;
        VertexId nxt = bnd[(j + 1) % 5];   // ccw after v
        VertexId prv = bnd[(j + 4) % 5];   // cw after v
        VertexId u = bnd[(j + 3) % 5];     // second after v in cw order
        VertexId u_nxt = bnd[(j + 4) % 5]; // ccw after u — equals prv
        VertexId u_prv = bnd[(j + 2) % 5]; // cw after u
        VertexId w = next_id++;
        vertices.push_back(w);

        // v's angle in the face lies between the darts to nxt and prv; u's
        // between the darts to u_nxt and u_prv. Insert w inside both angles.
        auto insert_after = [&](VertexId at, VertexId after, VertexId check) {
            auto& r = rot[at];
            auto it = std::find(r.begin(), r.end(), after);
            if (it == r.end())
                throw internal_error("stacking anchor missing");
            auto nit = it + 1 == r.end() ? r.begin() : it + 1;
            if (*nit != check)
                throw internal_error("face angle is not free for stacking");
            r.insert(it + 1, w);
        };
        insert_after(v, nxt, prv);
        insert_after(u, u_nxt, u_prv);
        rot[w] = {v, u};
        stacked.push_back({fi, v, u, w});
    }

    StackedAugmentation out;
    out.graph = PlaneGraph(vertices, rot, g.outer_face());
    auto rep = validate_mtp(out.graph);
    if (!rep.ok())
        throw internal_error("stacked graph is not an MTP-graph:\n" +
                             rep.to_string());
    out.closure = std::make_shared<const Closure>(Closure::build(out.graph));
    const Closure& c2 = *out.closure;
    const auto& fs2 = out.graph.faces();

    FourOrientation o2;
    o2.closure = out.closure;
    o2.tail.assign(c2.num_edges(), 0);

    // carried-over pair edges keep their tails; slots are stable because
    // stacking does not disturb the relative embedding of existing edges
    out.pair_map.assign(c.num_edges(), -1);
    for (VertexId p : g.vertices())
        for (VertexId q : g.rotation(p)) {
            if (q < p)
                continue;
            auto [r1, l1] = c.pair_copies(p, q);
            auto [r2, l2] = c2.pair_copies(p, q);
            out.pair_map[r1] = r2;
            out.pair_map[l1] = l2;
            for (auto [src, dst] : {std::pair{r1, r2}, std::pair{l1, l2}}) {
                CVertex t = o.tail_vertex(src);
                VertexId tid = c.g_id(t);
                o2.tail[dst] = (c2.edge(dst).ends[0] == c2.index_of(tid)) ? 0 : 1;
            }
        }

    // new faces per stacked vertex
    std::map<VertexId, std::pair<size_t, size_t>> new_faces; // w -> (f1, f2)
    for (const auto& st : stacked) {
        size_t f1 = static_cast<size_t>(-1), f2 = static_cast<size_t>(-1);
        for (size_t fi = 0; fi < fs2.size(); ++fi) {
            if (fs2[fi].outer)
                continue;
            const auto& b = fs2[fi].vertices;
            if (std::find(b.begin(), b.end(), st.w) == b.end())
                continue;
            if (b.size() == 4)
                f1 = fi;
            else if (b.size() == 5)
                f2 = fi;
        }
        if (f1 == static_cast<size_t>(-1) || f2 == static_cast<size_t>(-1))
            throw internal_error("stacked faces not found");
        new_faces[st.w] = {f1, f2};

        // v-w pair: a ccw 2-gon; the copy on the f2 side goes out of v
        auto [rvw, lvw] = c2.pair_copies(st.v, st.w);
        int f2_copy = (c2.edge(rvw).side_face == f2) ? rvw : lvw;
        int f1_copy = (f2_copy == rvw) ? lvw : rvw;
        if (c2.edge(f1_copy).side_face != f1)
            throw internal_error("v-w copies not split by f1/f2");
        o2.tail[f2_copy] = c2.edge(f2_copy).ends[0] == c2.index_of(st.v) ? 0 : 1;
        o2.tail[f1_copy] = c2.edge(f1_copy).ends[0] == c2.index_of(st.w) ? 0 : 1;
        out.five_face_slot[st.face] = f2_copy;

        // both u-w copies out of w
        auto [ruw, luw] = c2.pair_copies(st.u, st.w);
        for (int e : {ruw, luw})
            o2.tail[e] = c2.edge(e).ends[0] == c2.index_of(st.w) ? 0 : 1;
    }

    // loose edges: every face of the stacked graph is a 4-face except the f2
    // faces, whose fifth loose edge goes out of the stacked vertex
    for (size_t fi = 0; fi < fs2.size(); ++fi) {
        if (fs2[fi].outer)
            continue;
        CVertex fv = c2.face_vertex(fi);
        VertexId pendant = -1;
        if (fs2[fi].length() == 5) {
            VertexId w = -1;
            for (const auto& st : stacked)
                if (new_faces[st.w].second == fi)
                    w = st.w;
            if (w == -1)
                throw internal_error("unexpected 5-face after stacking");
            pendant = w;
        }
        for (VertexId x : fs2[fi].vertices) {
            int le = c2.loose_edge(fi, x);
            if (x == pendant)
                o2.tail[le] = c2.edge(le).ends[0] == c2.index_of(x) ? 0 : 1;
            else
                o2.tail[le] = c2.edge(le).ends[0] == fv ? 0 : 1;
        }
    }

    if (!check_outdegrees(o2))
        throw internal_error("stacked orientation fails the outdegree check");
    out.orientation = std::move(o2);
    return out;
}

// --- coloring ---

std::string CornerEdgeLabeling::key() const {
    std::string s = orientation.key();
    s.push_back('|');
    for (auto c : color)
        s.push_back(static_cast<char>('a' + (c + 1)));
    return s;
}

namespace {

std::vector<std::int8_t> half_edge_colors(const Closure& c) {
    std::vector<std::int8_t> color(c.num_edges(), -1);
    const auto& outer = c.base().outer_face();
    for (size_t i = 0; i < 4; ++i) {
        auto [hr, hl] = c.half_edges(outer[i]);
        color[hr] = static_cast<std::int8_t>(i);
        color[hl] = static_cast<std::int8_t>((i + 1) % 4);
    }
    return color;
}

} // namespace

CornerEdgeLabeling color_from_orientation(const FourOrientation& o) {
    StackedAugmentation aug = stack_five_faces(o);
    const Closure& c2 = *aug.closure;
    const FourOrientation& o2 = aug.orientation;

    std::vector<std::int8_t> color2 = half_edge_colors(c2);
    std::vector<bool> on_walk(c2.num_edges(), false);
    std::vector<int> stack;
    for (int e = 0; e < c2.num_edges(); ++e) {
        if (c2.edge(e).kind != EdgeKind::Pair || color2[e] >= 0)
            continue;
        stack.clear();
        int cur = e;
        std::int8_t base = -1;
        while (true) {
            if (color2[cur] >= 0) {
                base = color2[cur];
                break;
            }
            if (on_walk[cur])
                throw internal_error("successor walk closed a cycle; the "
                                     "input is not a valid 4-orientation");
            on_walk[cur] = true;
            stack.push_back(cur);
            int nxt = successor(o2, cur);
            EdgeKind k = c2.edge(nxt).kind;
            if (k == EdgeKind::Loose)
                throw internal_error("successor walk hit a loose edge after "
                                     "stacking");
            cur = nxt;
        }
        for (int s : stack) {
            color2[s] = base;
            on_walk[s] = false;
        }
    }

    const Closure& c = *o.closure;
    CornerEdgeLabeling l;
    l.orientation = o;
    l.color = half_edge_colors(c);
    for (int e = 0; e < c.num_edges(); ++e)
        if (c.edge(e).kind == EdgeKind::Pair)
            l.color[e] = color2[aug.pair_map[e]];
    // outgoing loose edges (concave corners of 5-faces) inherit the color of
    // the pair edge toward the stacked vertex, which sits in the same angle
    for (const auto& [face, slot] : aug.five_face_slot) {
        VertexId pv = c.g_id(o.tail_vertex(c.loose_edge(
            face, c.base().faces()[face].vertices[0]))); // placeholder
        // find the pendant vertex properly
        pv = -1;
        for (VertexId x : c.base().faces()[face].vertices) {
            int le = c.loose_edge(face, x);
            if (o.tail_vertex(le) == c.index_of(x))
                pv = x;
        }
        if (pv == -1)
            throw internal_error("pendant vertex vanished");
        l.color[c.loose_edge(face, pv)] = color2[slot];
    }

    auto rep = validate_labeling(l);
    if (!rep.ok())
        throw internal_error("coloring violates the corner-edge-labeling "
                             "rules:\n" +
                             rep.to_string());
    return l;
}

// --- validation ---

ValidationReport validate_labeling(const CornerEdgeLabeling& l) {
    ValidationReport rep;
    const FourOrientation& o = l.orientation;
    const Closure& c = *o.closure;
    if (l.color.size() != static_cast<size_t>(c.num_edges())) {
        rep.add("color-size", "color table size mismatch");
        return rep;
    }

    for (CVertex v = 0; v < c.num_vertices(); ++v) {
        const auto& rot = c.rotation(v);
        if (c.is_face_vertex(v)) {
            for (const auto& end : rot) {
                if (edge_out_at(o, end, v) && l.color[end.edge] != -1)
                    rep.add("face-vertex-colored",
                            "outgoing edge at a face vertex carries a color");
            }
            continue;
        }
        VertexId vid = c.g_id(v);
        // outgoing edges in rotation order with their colors
        std::vector<std::pair<size_t, std::int8_t>> outs;
        for (size_t p = 0; p < rot.size(); ++p)
            if (edge_out_at(o, rot[p], v)) {
                std::int8_t col = l.color[rot[p].edge];
                if (col < 0) {
                    rep.add("uncolored-outgoing",
                            "outgoing edge at vertex " + std::to_string(vid) +
                                " has no color");
                    col = -1;
                }
                outs.push_back({p, col});
            }
        if (outs.size() != 4) {
            rep.add("outdegree", "vertex " + std::to_string(vid) +
                                     " has outdegree " +
                                     std::to_string(outs.size()));
            continue;
        }
        size_t zero = 4;
        for (size_t i = 0; i < 4; ++i)
            if (outs[i].second == 0)
                zero = i;
        if (zero == 4) {
            rep.add("rule-i", "vertex " + std::to_string(vid) +
                                  " has no outgoing edge of color 0");
            continue;
        }
        bool ccw_ok = true;
        for (size_t i = 0; i < 4; ++i)
            if (outs[(zero + i) % 4].second != static_cast<std::int8_t>(i))
                ccw_ok = false;
        if (!ccw_ok) {
            rep.add("rule-i", "outgoing colors at vertex " +
                                  std::to_string(vid) +
                                  " are not 0,1,2,3 in ccw order");
            continue;
        }
        // rule (ii): wedge after outgoing color i holds incoming pair edges
        // colored i+2 or i+3 only
        size_t deg = rot.size();
        for (size_t i = 0; i < 4; ++i) {
            size_t from = outs[(zero + i) % 4].first;
            size_t to = outs[(zero + (i + 1) % 4) % 4].first;
            for (size_t p = (from + 1) % deg; p != to; p = (p + 1) % deg) {
                const auto& end = rot[p];
                if (edge_out_at(o, end, v))
                    rep.add("rule-i", "unexpected outgoing edge inside a "
                                      "wedge at vertex " +
                                          std::to_string(vid));
                const auto& ed = c.edge(end.edge);
                if (ed.kind != EdgeKind::Pair)
                    continue;
                int col = l.color[end.edge];
                int want1 = static_cast<int>((i + 2) % 4);
                int want2 = static_cast<int>((i + 3) % 4);
                if (col != want1 && col != want2)
                    rep.add("rule-ii",
                            "incoming edge " + ed.id + " in wedge " +
                                std::to_string(i) + " at vertex " +
                                std::to_string(vid) + " has color " +
                                std::to_string(col));
            }
        }
    }

    // pair color patterns
    for (VertexId u : c.base().vertices())
        for (VertexId v : c.base().rotation(u)) {
            if (v < u)
                continue;
            auto [r, lft] = c.pair_copies(u, v);
            int cr = l.color[r], cl = l.color[lft];
            if (cr < 0 || cl < 0) {
                rep.add("uncolored-pair", "pair {" + std::to_string(u) + "," +
                                              std::to_string(v) +
                                              "} not fully colored");
                continue;
            }
            bool uni = o.pair_unidirected(u, v);
            int diff = ((cl - cr) % 4 + 4) % 4;
            if (uni && diff != 1)
                rep.add("pair-pattern",
                        "uni-directed pair {" + std::to_string(u) + "," +
                            std::to_string(v) + "} colored " +
                            std::to_string(cr) + "/" + std::to_string(cl) +
                            ", expected colors i-1 (right) and i (left)");
            if (!uni && diff != 2)
                rep.add("pair-pattern",
                        "bi-directed pair {" + std::to_string(u) + "," +
                            std::to_string(v) + "} colored " +
                            std::to_string(cr) + "/" + std::to_string(cl) +
                            ", expected colors i and i+2");
        }
    return rep;
}

} // namespace rectcontact
