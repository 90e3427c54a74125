#include "vfib/cover.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace vfib::cover {

CoverTower build_cover_tower(const tangle::MontesinosLink& link) {
  auto report = tangle::validate_theorem_hypotheses(link);
  if (!report.applicable())
    throw std::invalid_argument("cover tower requires Case 1/Case 2 input: " + report.reason);

  CoverTower tower;
  tower.p = static_cast<int>(report.p);
  tower.n = link.n();
  tower.case_tag = report.case_tag;
  tower.fprime_cone_points = (tower.n - 2) * tower.p;
  tower.chi_orb = seifert::orbifold_euler_char(link);
  tower.chi_fprime = tower.chi_orb * tower.p;
  Rat chi_f = tower.chi_orb * tower.p * tower.p;
  if (den(chi_f) != 1) throw std::logic_error("p^2 * chi_orb is not an integer");
  tower.chi_f = num(chi_f);
  Int two_g = 2 - tower.chi_f;
  if (two_g % 2 != 0 || two_g < 0) throw std::logic_error("genus is not a nonnegative integer");
  tower.f_genus = two_g / 2;

  tower.h1_images.assign(tower.n, 0);
  tower.h1_images[0] = 1;
  tower.h1_images[1] = tower.p - 1;  // -1 mod p
  tower.h2_images.assign(tower.fprime_cone_points, 1);
  return tower;
}

MarkedCurveSystem::MarkedCurveSystem(int p, int n, CaseTag case_tag, Int chi_f)
    : p_(p), n_(n), case_tag_(case_tag), chi_f_(std::move(chi_f)) {}

MarkedCurveSystem build_curve_system(const CoverTower& tower) {
  return MarkedCurveSystem(tower.p, tower.n, tower.case_tag, tower.chi_f);
}

int MarkedCurveSystem::angle_class(CurveId c, MarkedPoint pt) const {
  const int p = p_;
  if (pt.cls == 1 || pt.cls == 2) {
    if (c.k != pt.block)
      throw std::invalid_argument("curve " + label(c) + " does not pass " + label(pt));
    return pt.cls == 1 ? static_cast<int>(mod_p(c.i - c.k, p))
                       : static_cast<int>(mod_p(c.k - c.i, p));
  }
  if (pt.cls < 3 || pt.cls > n_) throw std::invalid_argument("bad marked point class");
  if (c.i != pt.block)
    throw std::invalid_argument("curve " + label(c) + " does not pass " + label(pt));
  return static_cast<int>(mod_p(c.k - c.i, p));
}

bool MarkedCurveSystem::flipped(CurveId c) const {
  long long d = mod_p(c.i - c.k, p_);
  return d >= 1 && d <= (p_ - 1) / 2;
}

int MarkedCurveSystem::half_angle(CurveId c, MarkedPoint pt) const {
  int h = 2 * angle_class(c, pt) + (flipped(c) ? p_ : 0);
  return h % (2 * p_);
}

std::vector<MarkedPoint> MarkedCurveSystem::points_on_curve(CurveId c) const {
  std::vector<MarkedPoint> pts;
  pts.reserve(n_);
  for (int m = n_; m >= 3; --m) pts.push_back({m, c.i});
  pts.push_back({2, c.k});
  pts.push_back({1, c.k});
  return pts;
}

std::vector<CurveId> MarkedCurveSystem::curves_through(MarkedPoint pt) const {
  std::vector<CurveId> out;
  out.reserve(p_);
  for (int t = 0; t < p_; ++t)
    out.push_back(pt.cls <= 2 ? CurveId{t, pt.block} : CurveId{pt.block, t});
  return out;
}

int MarkedCurveSystem::even_slot_at(CurveId c, MarkedPoint pt) const {
  angle_class(c, pt);  // incidence check
  if (pt.cls == 1) return 2;
  if (pt.cls == 2) return 4;
  return 2 * pt.cls;
}

int MarkedCurveSystem::next_slot(CurveId c, int slot) const {
  const int m = 2 * n_;
  return flipped(c) ? slot % m + 1 : (slot == 1 ? m : slot - 1);
}

int MarkedCurveSystem::prev_slot(CurveId c, int slot) const {
  const int m = 2 * n_;
  return flipped(c) ? (slot == 1 ? m : slot - 1) : slot % m + 1;
}

int MarkedCurveSystem::arc_index(CurveId c, int slot) const {
  if (c.diagonal()) throw std::invalid_argument("diagonal curves carry no arcs");
  if (slot < 1 || slot > 2 * n_) throw std::invalid_argument("slot out of range");
  int off = c.i * (p_ - 1) + (c.k < c.i ? c.k : c.k - 1);
  return off * 2 * n_ + slot - 1;
}

const Arc& MarkedCurveSystem::arc(CurveId c, int slot) const {
  if (!arcs_built()) throw std::logic_error("arcs not decomposed yet");
  return arcs_[arc_index(c, slot)];
}

const ArcEnd& MarkedCurveSystem::oriented_tail(const Arc& a) const {
  return reoriented_ && flipped(a.curve) ? a.head : a.tail;
}

const ArcEnd& MarkedCurveSystem::oriented_head(const Arc& a) const {
  return reoriented_ && flipped(a.curve) ? a.tail : a.head;
}

MarkedCurveSystem decompose_arcs(MarkedCurveSystem system) {
  const int p = system.p_, n = system.n_;
  system.arcs_.assign(static_cast<std::size_t>(p) * (p - 1) * 2 * n, Arc{});

  for (int i = 0; i < p; ++i) {
    for (int k = 0; k < p; ++k) {
      if (i == k) continue;
      CurveId c{i, k};

      // Even arcs first: the slot containing a marked point crosses its band
      // from one boundary circle to the other; the exit side is the side the
      // curve's direction points to (angles measured against the band core).
      for (const MarkedPoint& pt : system.points_on_curve(c)) {
        int slot = system.even_slot_at(c, pt);
        int a = system.angle_class(c, pt);
        Side exit = (a >= 1 && a <= (p - 1) / 2) ? Side::Beta1 : Side::Beta2;
        Side enter = exit == Side::Beta1 ? Side::Beta2 : Side::Beta1;
        Arc arc;
        arc.curve = c;
        arc.slot = slot;
        arc.band_block = pt.block;
        arc.carried = pt;
        arc.tail = ArcEnd{BoundaryCircle{pt.block, enter}, pt};
        arc.head = ArcEnd{BoundaryCircle{pt.block, exit}, pt};
        system.arcs_[system.arc_index(c, slot)] = arc;
      }

      // Odd arcs are stitched between consecutive even arcs. In the original
      // orientation the curve passes slots 2n, 2n-1, ..., 1, so the odd slot
      // o starts where even slot o+1 exits and ends where even slot o-1
      // enters (indices cyclic in 1..2n).
      for (int o = 1; o <= 2 * n; o += 2) {
        const Arc& after = system.arcs_[system.arc_index(c, o + 1)];
        const Arc& before = system.arcs_[system.arc_index(c, o == 1 ? 2 * n : o - 1)];
        Arc arc;
        arc.curve = c;
        arc.slot = o;
        arc.tail = after.head;
        arc.head = before.tail;
        system.arcs_[system.arc_index(c, o)] = arc;
      }
    }
  }
  return system;
}

MarkedCurveSystem reorient_curves(MarkedCurveSystem system) {
  if (!system.arcs_built()) throw std::logic_error("decompose_arcs must run first");
  system.reoriented_ = true;

  // Post-reorientation angle ranges: (pi, 2pi) at c[1,j], (0, pi) elsewhere.
  const int p = system.p_;
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) {
      if (i == k) continue;
      for (const MarkedPoint& pt : system.points_on_curve({i, k})) {
        int h = system.half_angle({i, k}, pt);
        bool upper = h > p && h < 2 * p;
        bool expect_upper = pt.cls == 1;
        if (upper != expect_upper)
          throw std::logic_error("reorientation angle range violated at " + label(pt));
      }
    }
  return system;
}

namespace {

int node_id(const BoundaryCircle& c) {
  return c.block * 2 + (c.side == Side::Beta1 ? 0 : 1);
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

ConnectivityReport check_f1_connected(const MarkedCurveSystem& system) {
  if (!system.arcs_built()) throw std::logic_error("decompose_arcs must run first");
  const int p = system.p();
  ConnectivityReport report;
  report.node_count = 2 * p;

  UnionFind uf(2 * p);
  for (const Arc& a : system.arcs()) {
    if (!a.in_f1()) continue;
    if (uf.unite(node_id(a.tail.circle), node_id(a.head.circle)))
      report.spanning_tree.push_back(
          {a.curve, a.slot, a.tail.circle, a.head.circle});
  }
  report.connected = static_cast<int>(report.spanning_tree.size()) == 2 * p - 1;

  UnionFind witness(2 * p);
  int joined = 0;
  for (int j = 0; j < p; ++j) {
    CurveId c{(j + 1) % p, j};
    for (int slot : {5, 1}) {
      const Arc& a = system.arc(c, slot);
      if (witness.unite(node_id(a.tail.circle), node_id(a.head.circle))) ++joined;
    }
  }
  report.witness_family_spans = joined == 2 * p - 1;
  return report;
}

CellStructure cell_structure(const MarkedCurveSystem& system) {
  const int p = system.p(), n = system.n();
  const int vertex_count = n * p;
  auto vertex_id = [p](const MarkedPoint& pt) { return (pt.cls - 1) * p + pt.block; };

  // Darts: two per cell edge, attached at their vertex on the ray of the
  // curve's tangent there (outgoing at the angle class, incoming opposite).
  struct Dart {
    int vertex;
    int ray;   // half-angle units, 0..2p-1
    int twin;
  };
  std::vector<Dart> darts;

  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) {
      CurveId c{i, k};
      auto pts = system.points_on_curve(c);
      for (int m = 0; m < n; ++m) {
        const MarkedPoint& from = pts[m];
        const MarkedPoint& to = pts[(m + 1) % n];
        int ray_out = 2 * system.angle_class(c, from) % (2 * p);
        int ray_in = (2 * system.angle_class(c, to) + p) % (2 * p);
        int d0 = static_cast<int>(darts.size());
        darts.push_back({vertex_id(from), ray_out, d0 + 1});
        darts.push_back({vertex_id(to), ray_in, d0});
      }
    }

  // Rotation: darts at a vertex ordered counterclockwise by ray.
  std::vector<std::vector<std::pair<int, int>>> at_vertex(vertex_count);
  for (int d = 0; d < static_cast<int>(darts.size()); ++d)
    at_vertex[darts[d].vertex].push_back({darts[d].ray, d});
  std::vector<int> rotation_next(darts.size());
  for (auto& list : at_vertex) {
    std::sort(list.begin(), list.end());
    for (std::size_t s = 0; s < list.size(); ++s)
      rotation_next[list[s].second] = list[(s + 1) % list.size()].second;
  }

  // Faces are the orbits of twin-then-rotate.
  std::vector<bool> seen(darts.size(), false);
  Int faces = 0;
  for (int d = 0; d < static_cast<int>(darts.size()); ++d) {
    if (seen[d]) continue;
    ++faces;
    int cur = d;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = rotation_next[darts[cur].twin];
    }
  }

  CellStructure cells;
  cells.vertices = vertex_count;
  cells.edges = Int(n) * p * p;
  cells.faces = faces;
  return cells;
}

std::string label(const BoundaryCircle& c) {
  return (c.side == Side::Beta1 ? "b1[" : "b2[") + std::to_string(c.block) + "]";
}

std::string label(const MarkedPoint& pt) {
  return "c[" + std::to_string(pt.cls) + "," + std::to_string(pt.block) + "]";
}

std::string label(const CurveId& c) {
  return "L(" + std::to_string(c.i) + "," + std::to_string(c.k) + ")";
}

std::string curve_incidence_dot(const MarkedCurveSystem& system) {
  const int p = system.p(), n = system.n();
  std::ostringstream out;
  out << "graph curve_incidence {\n";
  for (int cls = 1; cls <= n; ++cls)
    for (int j = 0; j < p; ++j)
      out << "  v" << cls << "_" << j << " [label=\"" << label(MarkedPoint{cls, j})
          << "\"];\n";
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) {
      CurveId c{i, k};
      auto pts = system.points_on_curve(c);
      for (int m = 0; m < n; ++m) {
        const MarkedPoint& a = pts[m];
        const MarkedPoint& b = pts[(m + 1) % n];
        out << "  v" << a.cls << "_" << a.block << " -- v" << b.cls << "_" << b.block
            << " [label=\"" << label(c) << "\"];\n";
      }
    }
  out << "}\n";
  return out.str();
}

std::string f1_boundary_dot(const MarkedCurveSystem& system) {
  const int p = system.p();
  std::ostringstream out;
  out << "graph f1_boundary {\n";
  for (int j = 0; j < p; ++j) {
    out << "  b1_" << j << " [label=\"" << label(BoundaryCircle{j, Side::Beta1}) << "\"];\n";
    out << "  b2_" << j << " [label=\"" << label(BoundaryCircle{j, Side::Beta2}) << "\"];\n";
  }
  auto node = [](const BoundaryCircle& c) {
    return (c.side == Side::Beta1 ? "b1_" : "b2_") + std::to_string(c.block);
  };
  for (const Arc& a : system.arcs()) {
    if (!a.in_f1()) continue;
    out << "  " << node(a.tail.circle) << " -- " << node(a.head.circle) << " [label=\""
        << label(a.curve) << "#" << a.slot << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vfib::cover
