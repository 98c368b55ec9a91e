#include "rectcontact/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace rectcontact {

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    if (ok()) {
        os << "valid";
        return os.str();
    }
    for (const auto& i : issues)
        os << i.code << ": " << i.message << "\n";
    return os.str();
}

PlaneGraph::PlaneGraph(std::vector<VertexId> vertices,
                       std::map<VertexId, std::vector<VertexId>> rotations,
                       std::vector<VertexId> outer_face)
    : vertices_(std::move(vertices)),
      rotations_(std::move(rotations)),
      outer_face_(std::move(outer_face)) {}

const std::vector<VertexId>& PlaneGraph::rotation(VertexId v) const {
    auto it = rotations_.find(v);
    if (it == rotations_.end())
        throw input_error("unknown vertex id " + std::to_string(v));
    return it->second;
}

size_t PlaneGraph::num_edges() const {
    size_t ends = 0;
    for (const auto& [v, rot] : rotations_)
        ends += rot.size();
    return ends / 2;
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
    const auto& rot = rotation(u);
    return std::find(rot.begin(), rot.end(), v) != rot.end();
}

size_t PlaneGraph::rotation_index(VertexId from, VertexId to) const {
    const auto& rot = rotation(from);
    auto it = std::find(rot.begin(), rot.end(), to);
    if (it == rot.end())
        throw input_error("dart " + std::to_string(from) + "->" +
                          std::to_string(to) + " does not exist");
    return static_cast<size_t>(it - rot.begin());
}

Dart PlaneGraph::face_next(const Dart& d) const {
    const auto& rot = rotation(d.to);
    size_t i = rotation_index(d.to, d.from);
    size_t n = rot.size();
    return Dart{d.to, rot[(i + n - 1) % n]};
}

void PlaneGraph::build_faces() const {
    if (faces_built_)
        return;
    faces_.clear();
    face_of_.clear();
    std::set<Dart> seen;
    for (VertexId v : vertices_) {
        for (VertexId w : rotation(v)) {
            Dart start{v, w};
            if (seen.count(start))
                continue;
            FacialWalk walk;
            Dart d = start;
            do {
                if (seen.count(d))
                    throw input_error("rotation system is inconsistent: dart "
                                      "revisited during face trace");
                seen.insert(d);
                face_of_[d] = faces_.size();
                walk.darts.push_back(d);
                walk.vertices.push_back(d.from);
                d = face_next(d);
            } while (!(d == start));
            faces_.push_back(std::move(walk));
        }
    }
    // The declared outer face lists its vertices ccw; the trace of the outer
    // face (face on the left) visits them in the reverse cyclic order.
    if (outer_face_.size() == 4) {
        std::vector<VertexId> rev(outer_face_.rbegin(), outer_face_.rend());
        for (auto& f : faces_) {
            if (f.vertices.size() != 4)
                continue;
            for (size_t shift = 0; shift < 4; ++shift) {
                bool match = true;
                for (size_t k = 0; k < 4; ++k)
                    if (f.vertices[(shift + k) % 4] != rev[k]) {
                        match = false;
                        break;
                    }
                if (match) {
                    f.outer = true;
                    break;
                }
            }
            if (f.outer)
                break;
        }
    }
    faces_built_ = true;
}

const std::vector<FacialWalk>& PlaneGraph::faces() const {
    build_faces();
    return faces_;
}

size_t PlaneGraph::face_of(const Dart& d) const {
    build_faces();
    auto it = face_of_.find(d);
    if (it == face_of_.end())
        throw input_error("dart not part of the graph");
    return it->second;
}

ValidationReport PlaneGraph::validate_structure() const {
    ValidationReport rep;
    std::set<VertexId> vs(vertices_.begin(), vertices_.end());
    if (vs.size() != vertices_.size())
        rep.add("duplicate-vertex", "vertex list contains duplicates");
    if (rotations_.size() != vertices_.size())
        rep.add("rotation-mismatch",
                "rotation table does not cover the vertex list exactly");
    for (const auto& [v, rot] : rotations_) {
        if (!vs.count(v))
            rep.add("rotation-mismatch",
                    "rotation given for unknown vertex " + std::to_string(v));
        std::set<VertexId> nb;
        for (VertexId w : rot) {
            if (w == v)
                rep.add("loop", "loop at vertex " + std::to_string(v));
            if (!vs.count(w))
                rep.add("dangling-dart", "vertex " + std::to_string(v) +
                                             " lists unknown neighbor " +
                                             std::to_string(w));
            if (!nb.insert(w).second)
                rep.add("parallel-edge",
                        "parallel edge between " + std::to_string(v) + " and " +
                            std::to_string(w));
        }
    }
    if (!rep.ok())
        return rep;
    // every dart has a twin
    for (const auto& [v, rot] : rotations_)
        for (VertexId w : rot) {
            const auto& back = rotations_.at(w);
            if (std::find(back.begin(), back.end(), v) == back.end())
                rep.add("missing-twin", "dart " + std::to_string(v) + "->" +
                                            std::to_string(w) +
                                            " has no twin");
        }
    if (!rep.ok())
        return rep;
    // connectivity
    if (!vertices_.empty()) {
        std::set<VertexId> reached;
        std::deque<VertexId> queue{vertices_.front()};
        reached.insert(vertices_.front());
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : rotation(v))
                if (reached.insert(w).second)
                    queue.push_back(w);
        }
        if (reached.size() != vertices_.size())
            rep.add("disconnected", "graph is not connected");
    }
    if (outer_face_.size() != 4) {
        rep.add("outer-face-length", "outer face has length " +
                                         std::to_string(outer_face_.size()) +
                                         ", expected 4");
        return rep;
    }
    for (VertexId v : outer_face_)
        if (!vs.count(v)) {
            rep.add("outer-face-unknown-vertex",
                    "outer face lists unknown vertex " + std::to_string(v));
            return rep;
        }
    if (rep.ok()) {
        bool found = false;
        for (const auto& f : faces())
            if (f.outer)
                found = true;
        if (!found)
            rep.add("outer-face-not-facial",
                    "declared outer face is not a traced face of the "
                    "embedding");
    }
    return rep;
}

ValidationReport validate_mtp(const PlaneGraph& g) {
    ValidationReport rep = g.validate_structure();
    if (!rep.ok())
        return rep;
    // triangle-freeness of the abstract graph, not just of the faces
    for (VertexId u : g.vertices())
        for (VertexId v : g.rotation(u)) {
            if (v < u)
                continue;
            for (VertexId w : g.rotation(v)) {
                if (w <= v || w == u)
                    continue;
                if (g.adjacent(u, w)) {
                    rep.add("triangle", "triangle {" + std::to_string(u) +
                                            "," + std::to_string(v) + "," +
                                            std::to_string(w) + "}");
                }
            }
        }
    if (!rep.ok())
        return rep;
    for (const auto& f : g.faces()) {
        std::set<VertexId> distinct(f.vertices.begin(), f.vertices.end());
        if (distinct.size() != f.vertices.size()) {
            rep.add("face-not-simple",
                    "face through vertex " + std::to_string(f.vertices[0]) +
                        " repeats a vertex; faces must be simple cycles");
            continue;
        }
        if (f.outer)
            continue;
        if (f.length() != 4 && f.length() != 5) {
            std::string verts;
            for (VertexId v : f.vertices)
                verts += std::to_string(v) + " ";
            rep.add("face-length", "inner face ( " + verts + ") has length " +
                                       std::to_string(f.length()) +
                                       ", expected 4 or 5");
        }
    }
    return rep;
}

std::vector<FacialWalk> faces(const PlaneGraph& g) { return g.faces(); }

} // namespace rectcontact
