#include "orthotwin/specimen.hpp"

#include <algorithm>
#include <cmath>

namespace otw {

int octant_of(const Vec3& x) {
  if (x.min_abs() <= 1e-9) return 0;
  bool px = x.x > 0, py = x.y > 0, pz = x.z > 0;
  if (px && py && pz) return 1;
  if (!px && py && pz) return 2;
  if (px && !py && pz) return 3;
  if (px && py && !pz) return 4;
  if (!px && !py && !pz) return 5;
  if (px && !py && !pz) return 6;
  if (!px && py && !pz) return 7;
  return 8;  // (!px, !py, pz)
}

std::array<int, 3> octant_signs(int octant) {
  switch (octant) {
    case 1: return {+1, +1, +1};
    case 2: return {-1, +1, +1};
    case 3: return {+1, -1, +1};
    case 4: return {+1, +1, -1};
    case 5: return {-1, -1, -1};
    case 6: return {+1, -1, -1};
    case 7: return {-1, +1, -1};
    case 8: return {-1, -1, +1};
    default: throw Error(ErrorCode::BadInput, "octant index must be in 1..8");
  }
}

Parallelepiped::Parallelepiped(const Vec3& origin_, const std::array<Vec3, 3>& edges_)
    : origin(origin_), edges(edges_) {
  Mat3 e = Mat3::from_rows(edges[0], edges[1], edges[2]);
  if (std::abs(e.det()) <= 1e-12)
    throw Error(ErrorCode::DegenerateSpecimen, "edge vectors are linearly dependent");
  bool used[9] = {};
  for (const Corner& c : corners()) {
    if (c.octant == 0 || used[c.octant])
      throw Error(ErrorCode::DegenerateSpecimen, "corners do not occupy distinct octants");
    used[c.octant] = true;
  }
}

Parallelepiped Parallelepiped::axis_aligned(const Vec3& origin, const Vec3& lengths) {
  return Parallelepiped(origin, {Vec3{lengths.x, 0, 0}, Vec3{0, lengths.y, 0}, Vec3{0, 0, lengths.z}});
}

Vec3 Parallelepiped::center() const { return origin + (edges[0] + edges[1] + edges[2]) * 0.5; }

std::array<UnitVec3, 3> Parallelepiped::edge_directions() const {
  return {UnitVec3::normalize(edges[0]), UnitVec3::normalize(edges[1]),
          UnitVec3::normalize(edges[2])};
}

std::array<UnitVec3, 3> Parallelepiped::face_normals() const {
  return {UnitVec3::normalize(edges[1].cross(edges[2])),
          UnitVec3::normalize(edges[2].cross(edges[0])),
          UnitVec3::normalize(edges[0].cross(edges[1]))};
}

std::array<Parallelepiped::Corner, 8> Parallelepiped::corners() const {
  // Octants are taken in the box frame (axes parallel to the edges), the
  // coordinate convention of the corner construction.
  std::array<Corner, 8> out;
  Mat3 frame = Mat3::from_rows(edges[0], edges[1], edges[2]).transpose().inverse();
  Vec3 c = center();
  int k = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) {
        Vec3 pos = origin + edges[0] * i + edges[1] * j + edges[2] * l;
        out[k++] = Corner{pos, octant_of(frame * (pos - c))};
      }
  return out;
}

EdgeVerdict edge_admissible(int s, const UnitVec3& dir, const LatticeParams& params) {
  if (in_M(s, dir, params)) return {dir, true, EdgeVia::M};
  if (in_UinvSq_Minv(s, dir, params)) return {dir, true, EdgeVia::UinvSqMinv};
  return {dir, false, EdgeVia::None};
}

FaceVerdict face_admissible(int s, const UnitVec3& normal, const LatticeParams& params) {
  if (in_N(s, normal, params)) return {normal, true, FaceVia::N};
  NormalVerdict v = classify_normal(s, normal, params);
  if (v.in_UsqNinv) return {normal, true, FaceVia::UsqNinv};
  return {normal, false, FaceVia::None};
}

AdmissibilityReport classify_specimen(int s, const Parallelepiped& box,
                                      const LatticeParams& params) {
  auto dirs = box.edge_directions();
  auto normals = box.face_normals();

  // Assemble the twelve edges (four parallel copies per direction) and six
  // faces (two per normal); parallel copies share a verdict by construction.
  std::array<EdgeVerdict, 12> edges = {
      edge_admissible(s, dirs[0], params), edge_admissible(s, dirs[0], params),
      edge_admissible(s, dirs[0], params), edge_admissible(s, dirs[0], params),
      edge_admissible(s, dirs[1], params), edge_admissible(s, dirs[1], params),
      edge_admissible(s, dirs[1], params), edge_admissible(s, dirs[1], params),
      edge_admissible(s, dirs[2], params), edge_admissible(s, dirs[2], params),
      edge_admissible(s, dirs[2], params), edge_admissible(s, dirs[2], params)};
  std::array<FaceVerdict, 6> faces = {
      face_admissible(s, normals[0], params), face_admissible(s, normals[0], params),
      face_admissible(s, normals[1], params), face_admissible(s, normals[1], params),
      face_admissible(s, normals[2], params), face_admissible(s, normals[2], params)};

  bool all_edges = std::all_of(edges.begin(), edges.end(),
                               [](const EdgeVerdict& e) { return e.admissible; });
  return AdmissibilityReport{s, edges, faces, all_edges};
}

}  // namespace otw
