#include "rectcontact/orientation.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>

// Theorem-2 style construction. The graph is contracted step by step down to
// a 4-cycle (Case 1: identify the opposite pair of an inner 4-face at
// distance >= 4 in G - E(C); Case 2: contract an edge lying on no 4-cycle,
// chosen inside an inclusion-minimal nonempty 4-cycle), the base orientation
// is fixed, and each contraction is then undone while lifting the
// orientation and rebalancing outdegrees.
//
// Orientation state is tracked per G-edge as the number of copies directed
// out of one endpoint (0, 1 or 2) plus, per inner 5-face, the boundary
// vertex whose loose edge points into the face vertex ("pendant" vertex).

namespace rectcontact {

namespace {

struct WorkEdge {
    VertexId a = -1, b = -1;
    int out_at_a = -1; // copies directed out of a (0..2); -1 while unset
    bool alive = true;

    int out_at(VertexId v) const { return v == a ? out_at_a : 2 - out_at_a; }
    void set_out_at(VertexId v, int k) { out_at_a = (v == a) ? k : 2 - k; }
};

struct WorkFace {
    std::vector<VertexId> bnd; // trace order; inner faces ccw
    VertexId pendant = -1;     // 5-faces: vertex with the outgoing loose edge
    bool alive = true;
    bool outer = false;

    bool contains(VertexId v) const {
        return std::find(bnd.begin(), bnd.end(), v) != bnd.end();
    }
};

struct EdgeSnap {
    int idx;
    VertexId a, b;
    bool alive;
};

struct FaceSnap {
    int idx;
    std::vector<VertexId> bnd;
    VertexId pendant;
    bool alive;
};

struct Record {
    int kind = 0; // 1 = face contraction, 2 = edge contraction
    VertexId u = -1, v = -1, a = -1, b = -1;
    int f_id = -1;               // case 1: removed 4-face
    int fl_id = -1, fr_id = -1;  // case 2: the two shrunk faces
    int e_idx = -1;              // case 2: contracted edge
    int e_ua = -1, e_ub = -1, e_va = -1, e_vb = -1; // case 1 cycle edges
    std::vector<VertexId> rot_u, rot_v, rot_a, rot_b;
    std::vector<EdgeSnap> edge_snaps;
    std::vector<FaceSnap> face_snaps;
    bool v_was_outer = false;
};

using EdgeKey = std::pair<VertexId, VertexId>;

EdgeKey key_of(VertexId x, VertexId y) {
    return {std::min(x, y), std::max(x, y)};
}

class Solver {
public:
    explicit Solver(const PlaneGraph& g) {
        const auto& fs = g.faces();
        faces_.resize(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) {
            faces_[i].bnd = fs[i].vertices;
            faces_[i].outer = fs[i].outer;
            if (!fs[i].outer && fs[i].vertices.size() == 4)
                four_faces_.insert(static_cast<int>(i));
            for (VertexId v : fs[i].vertices)
                faces_at_[v].insert(static_cast<int>(i));
        }
        for (VertexId v : g.vertices())
            rot_[v] = g.rotation(v);
        for (VertexId v : g.vertices())
            for (VertexId w : g.rotation(v)) {
                if (w < v)
                    continue;
                int idx = static_cast<int>(edges_.size());
                edges_.push_back(WorkEdge{v, w, -1, true});
                edge_idx_[{v, w}] = idx;
            }
        outer_ring_ = g.outer_face();
        alive_ = g.vertices().size();
    }

    void run() {
        while (alive_ > 4) {
            if (!four_faces_.empty())
                contract_face();
            else
                contract_edge();
        }
        orient_base();
        while (!trail_.empty()) {
            Record rec = std::move(trail_.back());
            trail_.pop_back();
            if (rec.kind == 1)
                undo_face(rec);
            else
                undo_edge(rec);
        }
    }

    FourOrientation extract(const std::shared_ptr<const Closure>& closure) const {
        const Closure& c = *closure;
        FourOrientation o;
        o.closure = closure;
        o.tail.assign(c.num_edges(), 0);
        for (const auto& [key, idx] : edge_idx_) {
            const WorkEdge& we = edges_[idx];
            auto [r, l] = c.pair_copies(key.first, key.second);
            CVertex small = c.index_of(key.first);
            int out_small = we.out_at(key.first);
            auto set_tail = [&](int e, CVertex t) {
                o.tail[e] = (c.edge(e).ends[0] == t) ? 0 : 1;
            };
            if (out_small == 2) {
                set_tail(r, small);
                set_tail(l, small);
            } else if (out_small == 0) {
                CVertex big = c.index_of(key.second);
                set_tail(r, big);
                set_tail(l, big);
            } else {
                // bi-directed: any copy split balances outdegrees; fix the
                // R copy out of the smaller endpoint
                set_tail(r, small);
                set_tail(l, c.index_of(key.second));
            }
        }
        const auto& fs = c.base().faces();
        for (size_t fi = 0; fi < fs.size(); ++fi) {
            if (fs[fi].outer)
                continue;
            const WorkFace& wf = faces_[fi];
            CVertex fv = c.face_vertex(fi);
            for (VertexId v : fs[fi].vertices) {
                int e = c.loose_edge(fi, v);
                bool out_at_vertex = (wf.pendant == v);
                o.tail[e] = out_at_vertex
                                ? (c.edge(e).ends[0] == c.index_of(v) ? 0 : 1)
                                : (c.edge(e).ends[0] == fv ? 0 : 1);
            }
        }
        // half edges already 0 = out
        if (!check_outdegrees(o))
            throw internal_error("constructed orientation fails the "
                                 "outdegree check");
        return o;
    }

private:
    std::map<VertexId, std::vector<VertexId>> rot_;
    std::map<EdgeKey, int> edge_idx_;
    std::vector<WorkEdge> edges_;
    std::vector<WorkFace> faces_;
    std::map<VertexId, std::set<int>> faces_at_;
    std::set<int> four_faces_;
    std::vector<VertexId> outer_ring_;
    size_t alive_ = 0;
    std::vector<Record> trail_;

    bool is_outer(VertexId v) const {
        return std::find(outer_ring_.begin(), outer_ring_.end(), v) !=
               outer_ring_.end();
    }

    int edge_at(VertexId x, VertexId y) const {
        auto it = edge_idx_.find(key_of(x, y));
        if (it == edge_idx_.end())
            throw internal_error("missing edge during construction");
        return it->second;
    }

    // distance(u,v) >= 4 with the listed edges removed? bounded BFS depth 3
    bool distance_at_least_4(VertexId u, VertexId v,
                             const std::set<EdgeKey>& skip) const {
        std::map<VertexId, int> dist;
        std::deque<VertexId> queue{u};
        dist[u] = 0;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            if (dist[x] >= 3)
                continue;
            for (VertexId y : rot_.at(x)) {
                if (skip.count(key_of(x, y)))
                    continue;
                if (dist.count(y))
                    continue;
                if (y == v)
                    return false;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        return true;
    }

    std::vector<VertexId> segment(const std::vector<VertexId>& rot,
                                  VertexId after, VertexId before) const {
        size_t n = rot.size();
        size_t i = 0;
        while (i < n && rot[i] != after)
            ++i;
        if (i == n)
            throw internal_error("segment endpoint missing in rotation");
        std::vector<VertexId> seg;
        for (size_t s = 1; s <= n; ++s) {
            VertexId w = rot[(i + s) % n];
            if (w == before)
                return seg;
            seg.push_back(w);
        }
        throw internal_error("segment end missing in rotation");
    }

    void snapshot_faces_at(Record& rec, VertexId v,
                           std::set<int>& done) const {
        auto it = faces_at_.find(v);
        if (it == faces_at_.end())
            return;
        for (int fi : it->second)
            if (done.insert(fi).second)
                rec.face_snaps.push_back(FaceSnap{fi, faces_[fi].bnd,
                                                  faces_[fi].pendant,
                                                  faces_[fi].alive});
    }

    void relabel_faces(VertexId from, VertexId to,
                       const std::set<int>& exclude) {
        auto it = faces_at_.find(from);
        if (it == faces_at_.end())
            return;
        std::set<int> moved = it->second;
        for (int fi : moved) {
            if (exclude.count(fi))
                continue;
            auto& f = faces_[fi];
            for (auto& x : f.bnd)
                if (x == from)
                    x = to;
            faces_at_[to].insert(fi);
        }
        for (int fi : moved)
            if (!exclude.count(fi))
                faces_at_[from].erase(fi);
    }

    // move every non-cycle edge of v onto u
    void relabel_edges(Record& rec, VertexId v, VertexId u,
                       const std::set<VertexId>& skip_neighbors) {
        for (VertexId w : rec.rot_v) {
            if (skip_neighbors.count(w))
                continue;
            int idx = edge_at(v, w);
            rec.edge_snaps.push_back(
                EdgeSnap{idx, edges_[idx].a, edges_[idx].b, edges_[idx].alive});
            if (edge_idx_.count(key_of(u, w)))
                throw internal_error("contraction would create a parallel "
                                     "edge");
            edge_idx_.erase(key_of(v, w));
            if (edges_[idx].a == v)
                edges_[idx].a = u;
            else
                edges_[idx].b = u;
            edge_idx_[key_of(u, w)] = idx;
            for (auto& x : rot_[w])
                if (x == v)
                    x = u;
        }
    }

    void contract_face() {
        int f_id = *four_faces_.begin();
        Record rec;
        rec.kind = 1;
        rec.f_id = f_id;

        // pick the first opposite pair at distance >= 4 in G - E(C),
        // scanning 4-faces in id order
        VertexId u = -1, v = -1, a = -1, b = -1;
        int chosen = -1;
        for (int fi : four_faces_) {
            const auto& bnd = faces_[fi].bnd;
            std::set<EdgeKey> skip;
            for (size_t i = 0; i < 4; ++i)
                skip.insert(key_of(bnd[i], bnd[(i + 1) % 4]));
            for (int p = 0; p < 2; ++p) {
                VertexId cu = bnd[p], cv = bnd[p + 2];
                if (distance_at_least_4(cu, cv, skip)) {
                    if (cu > cv)
                        std::swap(cu, cv);
                    u = cu;
                    v = cv;
                    // a follows u on the ccw boundary, b precedes it
                    size_t iu = 0;
                    while (bnd[iu] != u)
                        ++iu;
                    a = bnd[(iu + 1) % 4];
                    b = bnd[(iu + 3) % 4];
                    if (bnd[(iu + 2) % 4] != v)
                        throw internal_error("opposite pair mismatch");
                    chosen = fi;
                    break;
                }
            }
            if (chosen >= 0)
                break;
        }
        if (chosen < 0)
            throw internal_error("no contractible opposite pair in any inner "
                                 "4-face");
        rec.u = u;
        rec.v = v;
        rec.a = a;
        rec.b = b;
        rec.f_id = chosen;
        rec.rot_u = rot_[u];
        rec.rot_v = rot_[v];
        rec.rot_a = rot_[a];
        rec.rot_b = rot_[b];
        rec.e_ua = edge_at(u, a);
        rec.e_ub = edge_at(u, b);
        rec.e_va = edge_at(v, a);
        rec.e_vb = edge_at(v, b);
        std::set<int> snapped;
        snapshot_faces_at(rec, u, snapped);
        snapshot_faces_at(rec, v, snapped);
        rec.v_was_outer = is_outer(v);

        // delete the duplicate edges v-a, v-b
        for (int idx : {rec.e_va, rec.e_vb}) {
            rec.edge_snaps.push_back(
                EdgeSnap{idx, edges_[idx].a, edges_[idx].b, edges_[idx].alive});
            edges_[idx].alive = false;
            edge_idx_.erase(key_of(edges_[idx].a, edges_[idx].b));
        }
        relabel_edges(rec, v, u, {a, b});

        // splice rotations: rot(x) = [a] + seg_v(a..b) + [b] + seg_u(b..a)
        std::vector<VertexId> seg_v = segment(rec.rot_v, a, b);
        std::vector<VertexId> seg_u = segment(rec.rot_u, b, a);
        std::vector<VertexId> merged;
        merged.push_back(a);
        merged.insert(merged.end(), seg_v.begin(), seg_v.end());
        merged.push_back(b);
        merged.insert(merged.end(), seg_u.begin(), seg_u.end());
        rot_[u] = std::move(merged);
        rot_.erase(v);
        // a and b lose their darts toward v
        auto drop = [&](VertexId w) {
            auto& r = rot_[w];
            r.erase(std::find(r.begin(), r.end(), v));
        };
        drop(a);
        drop(b);

        // faces: remove f, move the rest of v's faces to u
        auto& f = faces_[chosen];
        f.alive = false;
        four_faces_.erase(chosen);
        for (VertexId x : {u, v, a, b})
            faces_at_[x].erase(chosen);
        relabel_faces(v, u, {chosen});
        faces_at_.erase(v);

        if (rec.v_was_outer)
            for (auto& x : outer_ring_)
                if (x == v)
                    x = u;

        --alive_;
        trail_.push_back(std::move(rec));
    }

    // dart -> face map over alive faces
    std::map<std::pair<VertexId, VertexId>, int> dart_faces() const {
        std::map<std::pair<VertexId, VertexId>, int> m;
        for (size_t fi = 0; fi < faces_.size(); ++fi) {
            if (!faces_[fi].alive)
                continue;
            const auto& bnd = faces_[fi].bnd;
            for (size_t i = 0; i < bnd.size(); ++i)
                m[{bnd[i], bnd[(i + 1) % bnd.size()]}] = static_cast<int>(fi);
        }
        return m;
    }

    void contract_edge() {
        // all inner faces are 5-faces here; 4-cycles exist (the outer ring)
        auto darts = dart_faces();
        // enumerate 4-cycles via common-neighbor pairs
        std::set<std::array<VertexId, 4>> cycles;
        for (const auto& [p, rp] : rot_) {
            for (size_t i = 0; i < rp.size(); ++i)
                for (size_t j = i + 1; j < rp.size(); ++j) {
                    VertexId q = rp[i], s = rp[j];
                    // common neighbors of q and s other than p
                    const auto& rq = rot_.at(q);
                    for (VertexId z : rq) {
                        if (z == p)
                            continue;
                        if (std::find(rot_.at(s).begin(), rot_.at(s).end(),
                                      z) == rot_.at(s).end())
                            continue;
                        // cycle p-q-z-s; canonical key
                        std::array<VertexId, 4> cyc{p, q, z, s};
                        size_t mi = 0;
                        for (size_t t = 1; t < 4; ++t)
                            if (cyc[t] < cyc[mi])
                                mi = t;
                        std::array<VertexId, 4> c1{cyc[mi], cyc[(mi + 1) % 4],
                                                   cyc[(mi + 2) % 4],
                                                   cyc[(mi + 3) % 4]};
                        std::array<VertexId, 4> c2{cyc[mi], cyc[(mi + 3) % 4],
                                                   cyc[(mi + 2) % 4],
                                                   cyc[(mi + 1) % 4]};
                        cycles.insert(std::min(c1, c2));
                    }
                }
        }
        if (cycles.empty())
            throw internal_error("no 4-cycle found although the outer ring "
                                 "is one");

        size_t alive_faces = 0;
        for (const auto& f : faces_)
            if (f.alive)
                ++alive_faces;

        // interior face-set of a 4-cycle: the side not holding the outer face
        auto interior_of =
            [&](const std::array<VertexId, 4>& cyc) -> std::set<int> {
            std::set<EdgeKey> cyc_edges;
            for (size_t i = 0; i < 4; ++i)
                cyc_edges.insert(key_of(cyc[i], cyc[(i + 1) % 4]));
            std::set<int> region;
            std::deque<int> queue;
            for (size_t i = 0; i < 4; ++i) {
                auto it = darts.find({cyc[i], cyc[(i + 1) % 4]});
                if (it == darts.end())
                    throw internal_error("cycle dart without a face");
                if (region.insert(it->second).second)
                    queue.push_back(it->second);
            }
            bool outer_in_region = false;
            while (!queue.empty()) {
                int fi = queue.front();
                queue.pop_front();
                if (faces_[fi].outer)
                    outer_in_region = true;
                const auto& bnd = faces_[fi].bnd;
                for (size_t i = 0; i < bnd.size(); ++i) {
                    VertexId x = bnd[i], y = bnd[(i + 1) % bnd.size()];
                    if (cyc_edges.count(key_of(x, y)))
                        continue;
                    int nf = darts.at({y, x});
                    if (region.insert(nf).second)
                        queue.push_back(nf);
                }
            }
            if (!outer_in_region)
                return region;
            std::set<int> inside;
            for (size_t fi = 0; fi < faces_.size(); ++fi)
                if (faces_[fi].alive && !region.count(static_cast<int>(fi)))
                    inside.insert(static_cast<int>(fi));
            return inside;
        };

        size_t best = alive_faces + 1;
        std::optional<std::set<int>> best_interior;
        std::array<VertexId, 4> best_cyc{};
        for (const auto& cyc : cycles) {
            auto inside = interior_of(cyc);
            if (inside.empty())
                throw internal_error("empty 4-cycle interior in the all-5-face "
                                     "case");
            if (inside.size() < best) {
                best = inside.size();
                best_interior = std::move(inside);
                best_cyc = cyc;
            }
        }
        if (!best_interior)
            throw internal_error("no 4-cycle with a measurable interior");

        // lexicographically smallest edge strictly inside the cycle: both
        // incident faces interior and the edge not on the cycle
        std::set<EdgeKey> on_cycle;
        for (size_t i = 0; i < 4; ++i)
            on_cycle.insert(key_of(best_cyc[i], best_cyc[(i + 1) % 4]));
        int e_idx = -1;
        EdgeKey e_key{};
        for (const auto& [key, idx] : edge_idx_) {
            if (on_cycle.count(key))
                continue;
            int fa = darts.at({key.first, key.second});
            int fb = darts.at({key.second, key.first});
            if (best_interior->count(fa) && best_interior->count(fb)) {
                e_idx = idx;
                e_key = key;
                break; // edge_idx_ iterates in key order
            }
        }
        if (e_idx < 0)
            throw internal_error("no edge strictly inside the minimal "
                                 "4-cycle");

        VertexId u = e_key.first, v = e_key.second;
        if (!distance_at_least_4(u, v, {e_key}))
            throw internal_error("chosen edge lies on a 4-cycle");

        Record rec;
        rec.kind = 2;
        rec.u = u;
        rec.v = v;
        rec.e_idx = e_idx;
        rec.rot_u = rot_[u];
        rec.rot_v = rot_[v];
        rec.fl_id = darts.at({u, v});
        rec.fr_id = darts.at({v, u});
        std::set<int> snapped;
        snapshot_faces_at(rec, u, snapped);
        snapshot_faces_at(rec, v, snapped);
        rec.v_was_outer = is_outer(v);

        rec.edge_snaps.push_back(EdgeSnap{e_idx, edges_[e_idx].a,
                                          edges_[e_idx].b,
                                          edges_[e_idx].alive});
        edges_[e_idx].alive = false;
        edge_idx_.erase(e_key);
        relabel_edges(rec, v, u, {u});

        // splice: replace the v entry at u with v's fan (v's rotation minus
        // u, starting after u)
        std::vector<VertexId> fan = segment(rec.rot_v, u, u);
        std::vector<VertexId> merged;
        for (VertexId w : rec.rot_u) {
            if (w == v)
                merged.insert(merged.end(), fan.begin(), fan.end());
            else
                merged.push_back(w);
        }
        rot_[u] = std::move(merged);
        rot_.erase(v);

        // the two faces of e shrink by one vertex (5 -> 4)
        for (int fi : {rec.fl_id, rec.fr_id}) {
            auto& f = faces_[fi];
            if (f.bnd.size() != 5)
                throw internal_error("edge contraction on a non-5-face");
            f.bnd.erase(std::find(f.bnd.begin(), f.bnd.end(), v));
            faces_at_[v].erase(fi);
            four_faces_.insert(fi);
        }
        relabel_faces(v, u, {rec.fl_id, rec.fr_id});
        faces_at_.erase(v);

        if (rec.v_was_outer)
            for (auto& x : outer_ring_)
                if (x == v)
                    x = u;

        --alive_;
        trail_.push_back(std::move(rec));
    }

    void orient_base() {
        if (alive_ != 4)
            throw internal_error("base case is not a 4-cycle");
        size_t edge_count = 0;
        for (const auto& [key, idx] : edge_idx_) {
            (void)key;
            (void)idx;
            ++edge_count;
        }
        if (edge_count != 4)
            throw internal_error("base 4-cycle has extra edges");
        for (size_t i = 0; i < 4; ++i) {
            VertexId p = outer_ring_[i];
            VertexId q = outer_ring_[(i + 1) % 4];
            edges_[edge_at(p, q)].set_out_at(p, 2);
        }
    }

    int outdeg(VertexId x) const {
        int out = 0;
        for (VertexId w : rot_.at(x)) {
            const WorkEdge& e = edges_[edge_at(x, w)];
            out += e.out_at(x);
        }
        for (int fi : faces_at_.at(x))
            if (faces_[fi].alive && faces_[fi].pendant == x)
                ++out;
        if (is_outer(x))
            out += 2;
        return out;
    }

    void restore_structure(const Record& rec) {
        rot_[rec.u] = rec.rot_u;
        rot_[rec.v] = rec.rot_v;
        if (rec.kind == 1) {
            rot_[rec.a] = rec.rot_a;
            rot_[rec.b] = rec.rot_b;
        }
        // undo neighbor relabeling: any u entry in a neighbor of v that was
        // moved goes back to v
        for (auto it = rec.edge_snaps.rbegin(); it != rec.edge_snaps.rend();
             ++it) {
            WorkEdge& e = edges_[it->idx];
            EdgeKey cur = key_of(e.a, e.b);
            bool was_alive = e.alive;
            if (was_alive)
                edge_idx_.erase(cur);
            if (!was_alive) {
                // deleted edge resurrects
                e.alive = true;
            } else if (!(e.a == it->a && e.b == it->b)) {
                // relabeled edge: fix the rotation entry at the far vertex
                VertexId w = (it->a == rec.v) ? it->b : it->a;
                for (auto& x : rot_[w])
                    if (x == rec.u && w != rec.a && w != rec.b)
                        x = rec.v;
            }
            e.a = it->a;
            e.b = it->b;
            edge_idx_[key_of(e.a, e.b)] = it->idx;
        }
        // faces
        for (auto it = rec.face_snaps.rbegin(); it != rec.face_snaps.rend();
             ++it) {
            WorkFace& f = faces_[it->idx];
            // detach current incidence
            for (VertexId x : f.bnd)
                faces_at_[x].erase(it->idx);
            bool was_four =
                f.alive && !f.outer && f.bnd.size() == 4;
            if (was_four)
                four_faces_.erase(it->idx);
            VertexId cur_pendant = f.pendant;
            f.bnd = it->bnd;
            f.alive = it->alive;
            // pendants assigned at deeper levels survive the restore, but a
            // face that lives on v's side must point at v again
            if (cur_pendant == rec.u && f.contains(rec.v) &&
                !f.contains(rec.u))
                f.pendant = rec.v;
            else
                f.pendant = cur_pendant;
            if (f.alive) {
                for (VertexId x : f.bnd)
                    faces_at_[x].insert(it->idx);
                if (!f.outer && f.bnd.size() == 4)
                    four_faces_.insert(it->idx);
            }
        }
        if (rec.v_was_outer)
            for (auto& x : outer_ring_)
                if (x == rec.u)
                    x = rec.v;
        ++alive_;
    }

    void undo_face(const Record& rec) {
        // remember the merged cycle-edge states before overwriting
        int s_a = edges_[rec.e_ua].out_at(rec.u);
        int s_b = edges_[rec.e_ub].out_at(rec.u);
        restore_structure(rec);

        // lift: v's cycle edges copy the merged ones, u's point out of u
        edges_[rec.e_va].set_out_at(rec.v, s_a);
        edges_[rec.e_vb].set_out_at(rec.v, s_b);
        edges_[rec.e_ua].set_out_at(rec.u, 2);
        edges_[rec.e_ub].set_out_at(rec.u, 2);

        int i = outdeg(rec.u) - 4;
        if (i < 0 || outdeg(rec.v) != 4 - i)
            throw internal_error("face-contraction lift unbalanced");
        // reverse i edge-disjoint paths u,w,v with w in {a,b}, scanning the
        // rotation order at u
        std::vector<VertexId> ws;
        for (VertexId w : rot_.at(rec.u))
            if ((w == rec.a || w == rec.b) &&
                std::find(ws.begin(), ws.end(), w) == ws.end())
                ws.push_back(w);
        while (i > 0) {
            bool done = false;
            for (VertexId w : ws) {
                WorkEdge& uw = edges_[edge_at(rec.u, w)];
                WorkEdge& wv = edges_[edge_at(w, rec.v)];
                if (uw.out_at(rec.u) >= 1 && wv.out_at(w) >= 1) {
                    uw.set_out_at(rec.u, uw.out_at(rec.u) - 1);
                    wv.set_out_at(w, wv.out_at(w) - 1);
                    --i;
                    done = true;
                    break;
                }
            }
            if (!done)
                throw internal_error("no reversible u,w,v path left");
        }
        if (outdeg(rec.u) != 4 || outdeg(rec.v) != 4)
            throw internal_error("face-contraction rebalancing failed");
    }

    void undo_edge(const Record& rec) {
        restore_structure(rec);

        int out_u = 0;
        for (VertexId w : rot_.at(rec.u)) {
            if (w == rec.v)
                continue;
            out_u += edges_[edge_at(rec.u, w)].out_at(rec.u);
        }
        for (int fi : faces_at_.at(rec.u))
            if (faces_[fi].alive && fi != rec.fl_id && fi != rec.fr_id &&
                faces_[fi].pendant == rec.u)
                ++out_u;
        if (is_outer(rec.u))
            out_u += 2;

        int k = 4 - out_u;
        if (k < 0 || k > 4)
            throw internal_error("edge-contraction lift out of range");
        int c = std::min(2, k);
        int f1u = std::min(1, k - c);
        int f2u = k - c - f1u;
        edges_[rec.e_idx].set_out_at(rec.u, c);
        faces_[rec.fl_id].pendant = f1u ? rec.u : rec.v;
        faces_[rec.fr_id].pendant = f2u ? rec.u : rec.v;
        if (outdeg(rec.u) != 4 || outdeg(rec.v) != 4)
            throw internal_error("edge-contraction rebalancing failed");
    }
};

} // namespace

FourOrientation
construct_orientation(const std::shared_ptr<const Closure>& closure) {
    const PlaneGraph& g = closure->base();
    auto rep = validate_mtp(g);
    if (!rep.ok())
        throw input_error("construct_orientation requires an MTP-graph:\n" +
                          rep.to_string());
    Solver solver(g);
    solver.run();
    return solver.extract(closure);
}

FourOrientation construct_orientation(const PlaneGraph& g) {
    auto closure = std::make_shared<const Closure>(Closure::build(g));
    return construct_orientation(closure);
}

} // namespace rectcontact
