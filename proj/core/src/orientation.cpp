#include "rectcontact/orientation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace rectcontact {

bool FourOrientation::pair_unidirected(VertexId u, VertexId v) const {
    auto [r, l] = closure->pair_copies(u, v);
    return tail[r] == tail[l];
}

int FourOrientation::outdegree(CVertex v) const {
    int out = 0;
    for (const auto& end : closure->rotation(v)) {
        const auto& e = closure->edge(end.edge);
        if (e.kind == EdgeKind::Half) {
            out += tail[end.edge] == 0 ? 1 : 0;
        } else {
            out += (e.ends[tail[end.edge]] == v) ? 1 : 0;
        }
    }
    return out;
}

std::string FourOrientation::key() const {
    std::string s;
    s.reserve(tail.size());
    for (auto t : tail)
        s.push_back(t ? '1' : '0');
    return s;
}

bool check_outdegrees(const FourOrientation& o) {
    const Closure& c = *o.closure;
    for (CVertex v = 0; v < c.num_vertices(); ++v)
        if (o.outdegree(v) != 4)
            return false;
    return true;
}

// --- edges pointing inside a cycle (Lemma 2 quantity) ---

CycleWitness edges_pointing_inside(const FourOrientation& o,
                                   const std::vector<VertexId>& cycle) {
    const Closure& c = *o.closure;
    const PlaneGraph& g = c.base();
    size_t k = cycle.size();
    if (k < 3)
        throw input_error("cycle must have at least 3 vertices");
    {
        std::set<VertexId> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != k)
            throw input_error("cycle repeats a vertex");
    }
    for (size_t i = 0; i < k; ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % k]))
            throw input_error("consecutive cycle vertices are not adjacent");

    // Decide which traversal direction has the interior on the left: flood
    // faces from the left side of the darts; the side not containing the
    // outer face is the interior.
    std::set<std::pair<VertexId, VertexId>> cyc_edges;
    for (size_t i = 0; i < k; ++i) {
        VertexId a = cycle[i], b = cycle[(i + 1) % k];
        cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }
    const auto& fs = g.faces();
    auto flood_left = [&](const std::vector<VertexId>& cyc) {
        std::set<size_t> region;
        std::deque<size_t> queue;
        for (size_t i = 0; i < cyc.size(); ++i) {
            size_t f = g.face_of(Dart{cyc[i], cyc[(i + 1) % cyc.size()]});
            if (region.insert(f).second)
                queue.push_back(f);
        }
        while (!queue.empty()) {
            size_t f = queue.front();
            queue.pop_front();
            const auto& walk = fs[f];
            for (size_t i = 0; i < walk.darts.size(); ++i) {
                const Dart& d = walk.darts[i];
                std::pair<VertexId, VertexId> key{std::min(d.from, d.to),
                                                  std::max(d.from, d.to)};
                if (cyc_edges.count(key))
                    continue;
                size_t nf = g.face_of(Dart{d.to, d.from});
                if (region.insert(nf).second)
                    queue.push_back(nf);
            }
        }
        return region;
    };

    std::vector<VertexId> oriented = cycle;
    std::set<size_t> interior = flood_left(oriented);
    bool contains_outer = false;
    for (size_t f : interior)
        if (fs[f].outer)
            contains_outer = true;
    if (contains_outer) {
        std::reverse(oriented.begin(), oriented.end());
        interior = flood_left(oriented);
        for (size_t f : interior)
            if (fs[f].outer)
                throw internal_error("cycle interior contains the outer face "
                                     "on both sides");
    }

    // With the interior on the left of (c_j -> c_{j+1}), the inside angular
    // sector at c_j runs ccw from the pair block toward c_{j+1} to the pair
    // block toward c_{j-1}, both exclusive.
    CycleWitness w;
    w.cycle = cycle;
    size_t n = oriented.size();
    for (size_t j = 0; j < n; ++j) {
        VertexId vj = oriented[j];
        VertexId nxt = oriented[(j + 1) % n];
        VertexId prv = oriented[(j + n - 1) % n];
        CVertex iv = c.index_of(vj);
        const auto& rot = c.rotation(iv);
        auto [rn, ln] = c.pair_copies(vj, nxt);
        auto [rp, lp] = c.pair_copies(vj, prv);
        size_t pos_n = std::max(c.rotation_position(
                                    {rn, c.edge(rn).ends[0] == iv ? 0 : 1}),
                                c.rotation_position(
                                    {ln, c.edge(ln).ends[0] == iv ? 0 : 1}));
        size_t pos_p = std::min(c.rotation_position(
                                    {rp, c.edge(rp).ends[0] == iv ? 0 : 1}),
                                c.rotation_position(
                                    {lp, c.edge(lp).ends[0] == iv ? 0 : 1}));
        // the two copies toward one neighbor occupy adjacent positions; the
        // block toward nxt ends at pos_n, the block toward prv starts at
        // pos_p, but as cyclic positions we must walk from pos_n+1 ccw until
        // hitting the prv block.
        size_t deg = rot.size();
        auto block_of = [&](size_t pos) -> VertexId {
            const auto& end = rot[pos];
            const auto& ed = c.edge(end.edge);
            if (ed.kind != EdgeKind::Pair)
                return -1;
            CVertex other = ed.ends[0] == iv ? ed.ends[1] : ed.ends[0];
            return c.g_id(other);
        };
        (void)pos_p;
        for (size_t step = 1; step < deg; ++step) {
            size_t pos = (pos_n + step) % deg;
            if (block_of(pos) == prv)
                break;
            const auto& end = rot[pos];
            const auto& ed = c.edge(end.edge);
            if (ed.kind == EdgeKind::Half) {
                continue; // half-edges live in the outer face, never inside
            }
            if (o.tail_vertex(end.edge) == iv)
                w.pointing_inside.push_back(end.edge);
        }
    }
    std::sort(w.pointing_inside.begin(), w.pointing_inside.end());
    return w;
}

// --- exhaustive enumeration ---

namespace {

struct EnumState {
    const Closure* c;
    std::vector<std::int8_t> tail;
    std::vector<int> out;      // current outdegree per closure vertex
    std::vector<int> free_cnt; // unassigned ends per closure vertex
    const std::function<void(const FourOrientation&)>* sink;
    std::shared_ptr<const Closure> holder;
    size_t emitted = 0;
    size_t cap = 0;
    bool stop = false;
};

void enum_rec(EnumState& st, const std::vector<int>& order, size_t i) {
    if (st.stop)
        return;
    const Closure& c = *st.c;
    if (i == order.size()) {
        FourOrientation o{st.holder, st.tail};
        // half-edges must come out outward at outer vertices in any valid
        // orientation of an MTP closure; forced by counting, asserted here.
        for (int e = 0; e < c.num_edges(); ++e)
            if (c.edge(e).kind == EdgeKind::Half && st.tail[e] != 0)
                throw internal_error("enumeration produced an inward "
                                     "half-edge");
        (*st.sink)(o);
        ++st.emitted;
        if (st.cap && st.emitted >= st.cap)
            st.stop = true;
        return;
    }
    int e = order[i];
    CVertex a = c.edge(e).ends[0];
    CVertex b = c.edge(e).ends[1];
    for (int side = 0; side < 2; ++side) {
        CVertex t = side == 0 ? a : b;
        CVertex h = side == 0 ? b : a;
        // prune: tail vertex exceeds outdegree 4, or a vertex can no longer
        // reach outdegree 4
        if (st.out[t] + 1 > 4)
            continue;
        st.tail[e] = static_cast<std::int8_t>(side);
        st.out[t] += 1;
        st.free_cnt[a] -= 1;
        st.free_cnt[b] -= 1;
        bool feasible = st.out[t] + st.free_cnt[t] >= 4 &&
                        st.out[h] + st.free_cnt[h] >= 4;
        if (feasible)
            enum_rec(st, order, i + 1);
        st.out[t] -= 1;
        st.free_cnt[a] += 1;
        st.free_cnt[b] += 1;
        if (st.stop)
            return;
    }
}

} // namespace

size_t enumerate_orientations(const std::shared_ptr<const Closure>& closure,
                              const std::function<void(const FourOrientation&)>& sink,
                              const EnumerateOptions& opts) {
    const Closure& c = *closure;
    size_t full_edges = 0;
    for (const auto& e : c.edges())
        if (e.kind != EdgeKind::Half)
            ++full_edges;
    if (full_edges > opts.max_closure_edges)
        throw input_error("closure has " + std::to_string(full_edges) +
                          " edges, beyond the enumeration guard of " +
                          std::to_string(opts.max_closure_edges));

    EnumState st;
    st.c = &c;
    st.holder = closure;
    st.sink = &sink;
    st.cap = opts.cap;
    st.tail.assign(c.num_edges(), 0);
    st.out.assign(c.num_vertices(), 0);
    st.free_cnt.assign(c.num_vertices(), 0);

    // half-edges are forced outward (outdegree counting); fix them first
    std::vector<int> order;
    for (int e = 0; e < c.num_edges(); ++e) {
        const auto& ed = c.edge(e);
        if (ed.kind == EdgeKind::Half) {
            st.tail[e] = 0;
            st.out[ed.ends[0]] += 1;
        } else {
            order.push_back(e);
            st.free_cnt[ed.ends[0]] += 1;
            st.free_cnt[ed.ends[1]] += 1;
        }
    }
    // group ends vertex by vertex so pruning bites early: sort edges by
    // min(endpoint indices)
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto& ex = c.edge(x);
        const auto& ey = c.edge(y);
        int mx = std::min(ex.ends[0], ex.ends[1]);
        int my = std::min(ey.ends[0], ey.ends[1]);
        if (mx != my)
            return mx < my;
        return x < y;
    });
    enum_rec(st, order, 0);
    return st.emitted;
}

} // namespace rectcontact
