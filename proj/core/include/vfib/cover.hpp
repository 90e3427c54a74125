#pragma once

#include "vfib/numeric.hpp"
#include "vfib/seifert.hpp"
#include "vfib/tangle.hpp"

#include <string>
#include <vector>

namespace vfib::cover {

using tangle::CaseTag;

// The p^2-fold cover tower F -> F' -> S^2(p,...,p), built from two p-fold
// cyclic covers. F' keeps (n-2)p cone points of order p; F is a smooth
// closed orientable surface whose genus is fixed by 2 - 2g = p^2 * chi_orb.
struct CoverTower {
  int p = 0;
  int n = 0;
  CaseTag case_tag = CaseTag::NotApplicable;
  int fprime_cone_points = 0;   // (n-2)p
  Int f_genus;
  Rat chi_orb;                  // chi of the base orbifold
  Rat chi_fprime;               // p * chi_orb
  Int chi_f;                    // p^2 * chi_orb, always an integer here
  std::vector<int> h1_images;   // on x_1..x_n: 1, p-1, 0, ..., 0
  std::vector<int> h2_images;   // on y_1..y_{(n-2)p}: all 1
};

// Requires Case 1 / Case 2 applicability (throws std::invalid_argument
// otherwise; a fractional genus would be a logic error and cannot occur on
// gated input).
CoverTower build_cover_tower(const tangle::MontesinosLink& link);

// Boundary circles of the bands F_2^j: beta_1^j on the left of the core
// curve, beta_2^j on the right.
enum class Side : int { Beta1 = 1, Beta2 = 2 };

struct BoundaryCircle {
  int block = 0;  // 0..p-1
  Side side = Side::Beta1;
  friend bool operator==(const BoundaryCircle&, const BoundaryCircle&) = default;
  friend auto operator<=>(const BoundaryCircle&, const BoundaryCircle&) = default;
};

// Marked point c[cls, block]: cls = 1, 2 are the two branch classes covering
// c_1, c_2; cls = 3..n are the cone-point classes. block in 0..p-1.
struct MarkedPoint {
  int cls = 0;
  int block = 0;
  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
  friend auto operator<=>(const MarkedPoint&, const MarkedPoint&) = default;
};

// Curve L[i,k], indices 0..p-1. Diagonal curves L[j,j] are the band cores.
struct CurveId {
  int i = 0;
  int k = 0;
  bool diagonal() const { return i == k; }
  friend bool operator==(const CurveId&, const CurveId&) = default;
  friend auto operator<=>(const CurveId&, const CurveId&) = default;
};

struct ArcEnd {
  BoundaryCircle circle;
  MarkedPoint adjacent;  // the marked point this endpoint sits next to
  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

// One of the 2n arcs an off-diagonal curve is cut into by the bands.
// Odd slots lie in F_1, even slots inside a band and carry a marked point.
// tail/head are stored for the original orientation; the system-level
// reorientation state decides how they are read.
struct Arc {
  CurveId curve;
  int slot = 0;          // 1..2n
  int band_block = -1;   // even slots only
  MarkedPoint carried;   // even slots only
  ArcEnd tail, head;

  bool in_f1() const { return slot % 2 == 1; }
};

class MarkedCurveSystem {
 public:
  MarkedCurveSystem(int p, int n, CaseTag case_tag, Int chi_f);

  int p() const { return p_; }
  int n() const { return n_; }
  CaseTag case_tag() const { return case_tag_; }
  const Int& chi_f() const { return chi_f_; }
  bool arcs_built() const { return !arcs_.empty(); }
  bool reoriented() const { return reoriented_; }

  // Original-orientation angle class of curve c against the diagonal
  // reference curve at pt, in units of 2*pi/p. Throws if not incident.
  int angle_class(CurveId c, MarkedPoint pt) const;

  // Angle after the reorientation step, in half units of pi/p, mod 2p.
  // (Flipping a curve shifts its angle by pi = p half-units.)
  int half_angle(CurveId c, MarkedPoint pt) const;

  // The reorientation flips exactly the curves with 1 <= i-k <= (p-1)/2
  // (difference taken as a nonnegative residue mod p).
  bool flipped(CurveId c) const;

  // Marked points visited by c, in original orientation order:
  // c[n,i], c[n-1,i], ..., c[3,i], c[2,k], c[1,k].
  std::vector<MarkedPoint> points_on_curve(CurveId c) const;

  std::vector<CurveId> curves_through(MarkedPoint pt) const;

  // Even slot of curve c at incident point pt: 2 at c[1,k], 4 at c[2,k],
  // 2m at c[m,i].
  int even_slot_at(CurveId c, MarkedPoint pt) const;

  // Successor/predecessor slot along the curve's *final* orientation
  // (ascending for flipped curves, descending otherwise).
  int next_slot(CurveId c, int slot) const;
  int prev_slot(CurveId c, int slot) const;

  const Arc& arc(CurveId c, int slot) const;
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Endpoints honouring the reorientation state.
  const ArcEnd& oriented_tail(const Arc& a) const;
  const ArcEnd& oriented_head(const Arc& a) const;

  friend MarkedCurveSystem decompose_arcs(MarkedCurveSystem system);
  friend MarkedCurveSystem reorient_curves(MarkedCurveSystem system);

 private:
  int arc_index(CurveId c, int slot) const;

  int p_, n_;
  CaseTag case_tag_;
  Int chi_f_;
  bool reoriented_ = false;
  std::vector<Arc> arcs_;  // off-diagonal curves x 2n slots
};

// The p^2 curves with the incidence and angle data of the covered equator
// system. Arcs are not yet decomposed.
MarkedCurveSystem build_curve_system(const CoverTower& tower);

// Cut every off-diagonal curve into its 2n arcs. Endpoints are derived from
// the angle data at the marked points, not copied from a table.
MarkedCurveSystem decompose_arcs(MarkedCurveSystem system);

// Flip the orientation of every curve with 1 <= i-k <= (p-1)/2. Afterwards
// all angles against the diagonals lie in (pi, 2pi) at c[1,j] and in
// (0, pi) at every other marked point; this is asserted.
MarkedCurveSystem reorient_curves(MarkedCurveSystem system);

struct ConnectivityEdge {
  CurveId curve;
  int slot = 0;
  BoundaryCircle from, to;
};

struct ConnectivityReport {
  int node_count = 0;          // 2p boundary circles
  bool connected = false;
  // The two arc families (L^5 of (j+1,j)) and (L^1 of (j+1,j)) already span
  // all boundary circles; checked separately from full reachability.
  bool witness_family_spans = false;
  std::vector<ConnectivityEdge> spanning_tree;
};

ConnectivityReport check_f1_connected(const MarkedCurveSystem& system);

// V - E + F of the cell structure the curve system induces on F, via face
// tracing in the rotation system given by the angle classes. Must equal
// p^2 * chi_orb; the face count is 2p^2 (two polygon families covering the
// two hemispheres downstairs).
struct CellStructure {
  Int vertices, edges, faces;
  Int euler_characteristic() const { return vertices - edges + faces; }
};

CellStructure cell_structure(const MarkedCurveSystem& system);

std::string curve_incidence_dot(const MarkedCurveSystem& system);
std::string f1_boundary_dot(const MarkedCurveSystem& system);

std::string label(const BoundaryCircle& c);
std::string label(const MarkedPoint& pt);
std::string label(const CurveId& c);

}  // namespace vfib::cover
