#ifndef POLYKRON_PLANAR_HPP
#define POLYKRON_PLANAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polykron/graph.hpp"

namespace polykron {

// A combinatorial embedding: per-vertex cyclic order of incident darts.
// Dart id = 2*edge_token + side; side 0 points u->v, side 1 points v->u.
struct Embedding {
  Multigraph g;
  std::vector<std::vector<int>> rot;

  int dart_tail(int d) const {
    const MEdge& e = g.edges[d >> 1];
    return (d & 1) ? e.v : e.u;
  }
  int dart_head(int d) const {
    const MEdge& e = g.edges[d >> 1];
    return (d & 1) ? e.u : e.v;
  }
  static int dart_twin(int d) { return d ^ 1; }
};

struct Face {
  std::vector<int> verts;  // closed boundary walk (one entry per dart)
  std::vector<int> darts;
};

struct FaceSet {
  std::vector<Face> faces;
  int p = 0, q = 0;
  int outer = 0;                 // designated face (deterministic convention)
  bool merged_outer = false;     // disconnected input: outer faces merged
  std::vector<int> outer_group;  // per-component designated outer faces

  // Face count with the shared outer face of a disconnected embedding
  // counted once.
  int face_count() const;
};

struct FaceStats {
  int p = 0, q = 0, r = 0;
  std::map<int, int> r_k;  // k-gon counts
};

// Absent iff the input is non-planar. Multigraphs (loops, parallel edges)
// are supported. Disconnected inputs embed per component with the outer
// faces merged (flagged in the traced FaceSet).
std::optional<Embedding> planar_embed(const Multigraph& g);
std::optional<Embedding> planar_embed(const Graph& g);

bool is_planar(const Multigraph& g);
bool is_planar(const Graph& g);

// Trace all face walks of the embedding. Throws CorruptRotation if the
// rotation system is inconsistent.
FaceSet faces(const Embedding& e);
FaceStats face_stats(const FaceSet& fs);

// Canonical key of a closed walk: minimal rotation over both directions.
std::vector<int> canonical_face_key(const std::vector<int>& walk);

bool is_polyhedron(const Graph& g);
bool is_outerplanar(const Graph& g);
bool is_quadrangulation(const Graph& g);

struct OddFacePattern {
  std::vector<int> odd_faces;  // indices into the FaceSet
  // vertex-set intersections, keyed by index pairs/triples into odd_faces
  std::map<std::pair<int, int>, std::vector<int>> pairwise;
  std::map<std::vector<int>, std::vector<int>> triples;
};

OddFacePattern odd_face_pattern(const Graph& g, const Embedding& e);
OddFacePattern odd_face_pattern_from(const FaceSet& fs);

// Dual multigraph of a connected embedding: one vertex per face, one edge
// per edge of g joining the two incident faces.
Multigraph planar_dual(const Embedding& e, const FaceSet& fs);

}  // namespace polykron

#endif
