#pragma once

#include <array>

#include "orthotwin/maxdirs.hpp"

namespace otw {

// Convex parallelepiped specimen. Corners are tagged with the octant index
// (1..8, antipodal pairs (k, k+4)) of their position relative to the center;
// construction requires independent edges and one corner per octant.
// Throws DegenerateSpecimen otherwise.
struct Parallelepiped {
  Vec3 origin;
  std::array<Vec3, 3> edges;

  Parallelepiped(const Vec3& origin, const std::array<Vec3, 3>& edges);

  static Parallelepiped axis_aligned(const Vec3& origin = {0, 0, 0},
                                     const Vec3& lengths = {1, 1, 1});

  struct Corner {
    Vec3 position;
    int octant;  // 1..8
  };

  std::array<UnitVec3, 3> edge_directions() const;
  std::array<UnitVec3, 3> face_normals() const;  // one per parallel face pair
  std::array<Corner, 8> corners() const;
  Vec3 center() const;
};

// Octant index 1..8 of a point with no vanishing component (0 otherwise).
int octant_of(const Vec3& x);
std::array<int, 3> octant_signs(int octant);

enum class EdgeVia { M, UinvSqMinv, None };
enum class FaceVia { N, UsqNinv, None };

struct EdgeVerdict {
  UnitVec3 dir;
  bool admissible;
  EdgeVia via;
};

struct FaceVerdict {
  UnitVec3 normal;
  bool admissible;
  FaceVia via;
};

EdgeVerdict edge_admissible(int s, const UnitVec3& dir, const LatticeParams& params);
FaceVerdict face_admissible(int s, const UnitVec3& normal, const LatticeParams& params);

struct AdmissibilityReport {
  int variant = 0;
  std::array<EdgeVerdict, 12> edges;  // four parallel edges per direction
  std::array<FaceVerdict, 6> faces;   // opposite faces share a line
  bool domain_admissible = false;     // all twelve edges admissible
};

AdmissibilityReport classify_specimen(int s, const Parallelepiped& box,
                                      const LatticeParams& params);

}  // namespace otw
