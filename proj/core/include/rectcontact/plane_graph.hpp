#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rectcontact {

using VertexId = std::int64_t;

struct ValidationIssue {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    void add(std::string code, std::string message) {
        issues.push_back({std::move(code), std::move(message)});
    }
    bool has(const std::string& code) const {
        for (const auto& i : issues)
            if (i.code == code)
                return true;
        return false;
    }
    std::string to_string() const;
};

/// Raised when the library reaches a state that a theorem rules out.
/// Always indicates a bug (or a corrupted input that slipped validation).
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised for malformed or contract-violating inputs.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Dart {
    VertexId from = -1;
    VertexId to = -1;
    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct FacialWalk {
    std::vector<Dart> darts;          // in traversal order, face on the left
    std::vector<VertexId> vertices;   // tails of the darts
    bool outer = false;
    size_t length() const { return darts.size(); }
};

/// Simple plane graph given as a rotation system plus a distinguished
/// quadrangular outer face. Immutable after construction.
class PlaneGraph {
public:
    PlaneGraph() = default;
    PlaneGraph(std::vector<VertexId> vertices,
               std::map<VertexId, std::vector<VertexId>> rotations,
               std::vector<VertexId> outer_face);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<VertexId>& rotation(VertexId v) const;
    const std::vector<VertexId>& outer_face() const { return outer_face_; }

    size_t num_vertices() const { return vertices_.size(); }
    size_t num_edges() const;
    size_t degree(VertexId v) const { return rotation(v).size(); }
    bool has_vertex(VertexId v) const { return rotations_.count(v) != 0; }
    bool adjacent(VertexId u, VertexId v) const;

    /// Index of `to` in rotation(from); throws input_error if absent.
    size_t rotation_index(VertexId from, VertexId to) const;

    /// Next dart of the face on the left of d (prev-in-ccw rule).
    Dart face_next(const Dart& d) const;

    /// All facial walks; result is cached. Outer walk flagged. Requires a
    /// structurally consistent rotation system.
    const std::vector<FacialWalk>& faces() const;

    /// Face index containing dart d (into faces()).
    size_t face_of(const Dart& d) const;

    /// Structural consistency only: symmetric rotations, no loops or
    /// parallel edges, connected, outer face present with length 4.
    ValidationReport validate_structure() const;

private:
    std::vector<VertexId> vertices_;
    std::map<VertexId, std::vector<VertexId>> rotations_;
    std::vector<VertexId> outer_face_;

    mutable std::vector<FacialWalk> faces_;
    mutable std::map<Dart, size_t> face_of_;
    mutable bool faces_built_ = false;

    void build_faces() const;
};

/// Accepts iff g is simple, connected, triangle-free, has the declared
/// outer 4-face, and every inner face is a simple 4- or 5-cycle.
ValidationReport validate_mtp(const PlaneGraph& g);

/// Facial walks of g (thin wrapper so callers need not keep the graph).
std::vector<FacialWalk> faces(const PlaneGraph& g);

} // namespace rectcontact
