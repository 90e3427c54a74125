#pragma once

#include "vfib/cover.hpp"
#include "vfib/graph_manifold.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vfib::tv {

// The auxiliary simple closed curve l_r in F_1: an a-segment next to every
// c[1,j] on side r, a b-segment alongside each band between c[2,j] and
// c[n,j], and connector arcs parallel to existing curve arcs. The block
// sequence advances by (p+1)/2 for l_1 and (p-1)/2 for l_2, so the cycle
// closes after exactly p steps.
struct LCurve {
  int id = 0;    // 1 or 2
  int step = 0;
  std::vector<int> visit_order;  // blocks in traversal order, starting at 0
  bool closed = false;           // single cycle through all p blocks
  bool simple = false;           // structural: no shared segments
  // Connectors, by block j: parallel to slot 3 of (j+step, j) and to
  // slot 1 of (j, j+step).
  std::vector<cover::CurveId> connector3, connector1;
};

std::pair<LCurve, LCurve> build_l_curves(const cover::MarkedCurveSystem& system);

// A vertical torus of the twist family: either a boundary-parallel copy of
// T_1^j inside a hub sheet, or the torus over an l-curve.
struct VerticalTorusSpec {
  enum class Kind { BoundaryParallel, LCurve };
  Kind kind = Kind::BoundaryParallel;
  int block = -1;   // BoundaryParallel only
  int lcurve = 0;   // 1 or 2, LCurve only
  int sheet = 1;    // 1 or 2
  std::string id() const;
  friend bool operator==(const VerticalTorusSpec&, const VerticalTorusSpec&) = default;
  friend auto operator<=>(const VerticalTorusSpec&, const VerticalTorusSpec&) = default;
};

// Case 1: 2p boundary-parallel + 4 l-curve tori. Case 2: the 4 l-curve tori
// only. Pairwise disjointness of the quotient curves is asserted.
std::vector<VerticalTorusSpec> build_gamma(const cover::MarkedCurveSystem& system,
                                           const std::pair<LCurve, LCurve>& lcurves);

// A lifted odd-slot arc: copy r in {0, 2n} distinguishes the two lifts over
// the quotient arc, sheet s the two sheets of the free double cover.
struct ArcId {
  cover::CurveId curve;
  int slot = 0;
  int copy = 0;
  int sheet = 1;
  std::string to_string() const;
  friend bool operator==(const ArcId&, const ArcId&) = default;
  friend auto operator<=>(const ArcId&, const ArcId&) = default;
};

struct IntersectionRecord {
  ArcId arc;
  int torus = -1;  // index into the gamma family
  std::string torus_id;
  int count = 0;
  std::vector<int> signs;  // one entry of +1/-1 per crossing; tail end first
};

// Signed crossing data for every lifted odd arc against every torus of the
// family; zero-count pairs are omitted. Crossings with a boundary-parallel
// torus sit at the arc ends on T_1^j (tail positive, head negative);
// crossings with an l-curve torus sit at the arc ends adjacent to c[1,j]
// (a-segments) and, in Case 2, to the interior cone classes (b-segments).
std::vector<IntersectionRecord> compute_intersections(
    const cover::MarkedCurveSystem& system, const std::vector<VerticalTorusSpec>& gamma);

// Independent recomputation: walk the marked points, locate each crossing
// branch from the cyclic angular order and the traversal direction, and take
// the crossing sign from the half-angle of the branch against the segment
// orientation. Agreement with compute_intersections is a certificate check.
std::vector<IntersectionRecord> compute_intersections_oracle(
    const cover::MarkedCurveSystem& system, const std::vector<VerticalTorusSpec>& gamma);

bool same_records(std::vector<IntersectionRecord> a, std::vector<IntersectionRecord> b);

// Per-block singular data of the induced foliations on the punctured
// vertical annuli: every even-slot family crosses its band from one
// boundary torus to the other, slot-2 opposite to slot-4, with 2 singular
// points per annulus in the knot case and 1 in the two-component case.
struct SingularFamilyCheck {
  int block = 0;
  int slot = 0;
  cover::BoundaryCircle tail, head;  // uniform over the family
  bool uniform = false;
  bool crosses_band = false;
};

struct ProfileReport {
  bool ok = false;
  int singular_points_per_annulus = 0;
  bool slot2_slot4_alternate = false;
  std::vector<SingularFamilyCheck> families;
};

ProfileReport singular_point_profile(const cover::MarkedCurveSystem& system,
                                     tangle::LinkClass link_class);

struct RemarkVerdict {
  std::string name;
  bool pass = false;
  std::vector<std::string> counterexamples;
};

struct RemarkVerdicts {
  bool ok = false;
  std::vector<RemarkVerdict> verdicts;
};

// Case 1: the slot-1/slot-3 families meet the boundary-parallel union twice
// with opposite signs, the slot-5 family once positively, nothing else
// meets it; the l-curve tori meet every slot-1 and slot-3 arc exactly once,
// negatively, and miss slot 5. Case 2: every odd slot meets the l-curve
// tori negatively, once for l in {1,2,3,n} and twice for 3 < l < n.
RemarkVerdicts verify_sign_remarks(const cover::MarkedCurveSystem& system,
                                   const std::vector<VerticalTorusSpec>& gamma,
                                   const std::vector<IntersectionRecord>& records);

}  // namespace vfib::tv
