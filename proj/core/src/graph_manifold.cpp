#include "vfib/graph_manifold.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace vfib::gm {

GluingMatrices gluing_matrices(const BasisChange& basis, const Int& e_tilde) {
  if (basis.det() != 1) throw std::invalid_argument("basis change must have determinant 1");
  const Int &a = basis.a, &b = basis.b, &c = basis.c, &d = basis.d;
  GluingMatrices g;
  g.g1 = {-a, b, -c, d};
  g.g2 = {-a, a * e_tilde - b, c, d - c * e_tilde};
  g.g1_inv = {-d, b, -c, a};
  g.g2_inv = {c * e_tilde - d, a * e_tilde - b, c, a};
  if (!(g.g1 * g.g1_inv == Mat2::identity()) || !(g.g1_inv * g.g1 == Mat2::identity()))
    throw std::logic_error("G1 inverse does not invert");
  if (!(g.g2 * g.g2_inv == Mat2::identity()) || !(g.g2_inv * g.g2 == Mat2::identity()))
    throw std::logic_error("G2 inverse does not invert");
  return g;
}

JsjGraph build_jsj_graph(tangle::CaseTag case_tag, int p, bool doubled, const Int& e_tilde,
                         const GluingMatrices& gluing) {
  if (case_tag == tangle::CaseTag::NotApplicable)
    throw std::invalid_argument("decomposition graph requires gated input");
  JsjGraph g;
  g.doubled = doubled;
  g.p = p;
  g.e_tilde = e_tilde;

  if (!doubled) {
    g.vertices.push_back({true, -1, 0, "Y1"});
    for (int j = 0; j < p; ++j)
      g.vertices.push_back({false, j, 0, "M2[" + std::to_string(j) + "]"});
    for (int j = 0; j < p; ++j) {
      g.edges.push_back({0, 1 + j, 1, j, 0, gluing.g1, "T1[" + std::to_string(j) + "]"});
      g.edges.push_back({0, 1 + j, 2, j, 0, gluing.g2, "T2[" + std::to_string(j) + "]"});
    }
    return g;
  }

  // Hubs first, then block (j, s) at index 2 + 2j + (s-1). T1 stays on the
  // block's sheet; T2 crosses to the other hub.
  g.vertices.push_back({true, -1, 1, "Y1[1]"});
  g.vertices.push_back({true, -1, 2, "Y1[2]"});
  auto block_index = [](int j, int s) { return 2 + 2 * j + (s - 1); };
  for (int j = 0; j < p; ++j)
    for (int s = 1; s <= 2; ++s)
      g.vertices.push_back(
          {false, j, s, "M2[" + std::to_string(j) + "," + std::to_string(s) + "]"});
  for (int j = 0; j < p; ++j)
    for (int s = 1; s <= 2; ++s) {
      g.edges.push_back({s - 1, block_index(j, s), 1, j, s, gluing.g1,
                         "T1[" + std::to_string(j) + "," + std::to_string(s) + "]"});
      g.edges.push_back({(3 - s) - 1, block_index(j, s), 2, j, s, gluing.g2,
                         "T2[" + std::to_string(j) + "," + std::to_string(s) + "]"});
    }
  return g;
}

namespace {

int swapped_vertex(const JsjGraph& g, int v) {
  const auto& vert = g.vertices[v];
  for (int w = 0; w < static_cast<int>(g.vertices.size()); ++w) {
    const auto& cand = g.vertices[w];
    if (cand.hub == vert.hub && cand.block == vert.block && cand.sheet == 3 - vert.sheet)
      return w;
  }
  return -1;
}

}  // namespace

bool has_free_sheet_involution(const JsjGraph& g) {
  if (!g.doubled) return false;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    int w = swapped_vertex(g, v);
    if (w < 0 || w == v) return false;
    if (swapped_vertex(g, w) != v) return false;
  }
  // Edges must map to edges, with no fixed edge.
  for (const auto& e : g.edges) {
    bool found = false;
    for (const auto& f : g.edges) {
      if (f.r == e.r && f.block == e.block && f.sheet == 3 - e.sheet &&
          f.from == swapped_vertex(g, e.from) && f.to == swapped_vertex(g, e.to)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
    if (e.sheet == 3 - e.sheet) return false;
  }
  return true;
}

bool projects_two_to_one(const JsjGraph& doubled, const JsjGraph& single) {
  if (!doubled.doubled || single.doubled || doubled.p != single.p) return false;
  std::map<std::pair<bool, int>, int> vertex_fibers;
  for (const auto& v : doubled.vertices) ++vertex_fibers[{v.hub, v.block}];
  for (const auto& v : single.vertices)
    if (vertex_fibers[{v.hub, v.block}] != 2) return false;
  if (vertex_fibers.size() != single.vertices.size()) return false;
  std::map<std::pair<int, int>, int> edge_fibers;
  for (const auto& e : doubled.edges) ++edge_fibers[{e.r, e.block}];
  for (const auto& e : single.edges)
    if (edge_fibers[{e.r, e.block}] != 2) return false;
  if (edge_fibers.size() != single.edges.size()) return false;
  return true;
}

std::string jsj_dot(const JsjGraph& g) {
  std::ostringstream out;
  out << "graph jsj" << (g.doubled ? "_double" : "") << " {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out << "  n" << v << " [label=\"" << g.vertices[v].id << "\""
        << (g.vertices[v].hub ? ", shape=doublecircle" : "") << "];\n";
  for (const auto& e : g.edges)
    out << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.id << "\"];\n";
  out << "}\n";
  return out.str();
}

WangYuSolution solve_wang_yu(int p, const Int& c, const Int& e) {
  if (e == 0) throw std::invalid_argument("e = 0 admits no horizontal surface here");
  if (c == 0 || p <= 0) throw std::invalid_argument("bad Wang-Yu parameters");
  // lambda_bar / lambda = c*e / (2p); primitive with lambda > 0.
  Rat ratio(c * e, Int(2) * p);
  WangYuSolution sol{den(ratio), num(ratio)};
  if (Rat(-e) * sol.lambda + make_rat(Int(2) * p, c) * sol.lambda_bar != 0)
    throw std::logic_error("Wang-Yu solution does not satisfy the system");
  if (den(make_rat(Int(2) * sol.lambda, c)) != 1)
    throw std::logic_error("(2/c)*lambda is not an integer");
  return sol;
}

std::vector<std::vector<Rat>> wang_yu_matrix(int p, const Int& c, const Int& e) {
  std::vector<std::vector<Rat>> m(p + 1, std::vector<Rat>(p + 1, Rat(0)));
  m[0][0] = Rat(-e);
  for (int i = 1; i <= p; ++i) {
    m[0][i] = make_rat(Int(2), c);
    m[i][0] = make_rat(Int(2), c);
  }
  return m;
}

WangYuSolution solve_wang_yu_general(int p, const Int& c, const Int& e) {
  if (e == 0) throw std::invalid_argument("e = 0 admits no horizontal surface here");
  auto printed = wang_yu_matrix(p, c, e);

  // Only the first row of the printed system is a constraint (the remaining
  // rows produce the free integers); add the block-symmetry rows and take
  // the kernel.
  std::vector<std::vector<Rat>> constrained;
  constrained.push_back(printed[0]);
  for (int j = 1; j < p; ++j) {
    std::vector<Rat> row(p + 1, Rat(0));
    row[j] = 1;
    row[j + 1] = -1;
    constrained.push_back(std::move(row));
  }

  auto basis = kernel_basis(std::move(constrained), p + 1);
  if (basis.size() != 1) throw std::logic_error("Wang-Yu kernel is not one-dimensional");
  auto v = primitive_integer_vector(basis.front());
  if (v[0] < 0)
    for (auto& x : v) x = -x;
  if (v[0] == 0) throw std::logic_error("Wang-Yu kernel has lambda = 0");
  for (int j = 2; j <= p; ++j)
    if (v[j] != v[1]) throw std::logic_error("block coefficients not symmetric");
  if (den(make_rat(Int(2) * v[0], c)) != 1)
    throw std::logic_error("(2/c)*lambda is not an integer");
  return {v[0], v[1]};
}

GeneralSlopes general_slope_ratios(const BasisChange& basis, const Int& e_tilde) {
  const Int &a = basis.a, &c = basis.c, &d = basis.d;
  auto [eps1, eps2] = derive_epsilons(c, e_tilde);
  GeneralSlopes s;
  s.t1 = make_rat(-eps1 * c * e_tilde - 2 * d, 2 * c);
  s.t2 = make_rat(2 * d - (2 - eps2) * c * e_tilde, 2 * c);
  s.tbar1 = make_rat(-2 * eps1 - a * c * e_tilde, e_tilde * c * c);
  s.tbar2 = make_rat(2 * eps2 + a * c * e_tilde, e_tilde * c * c);
  s.tbar3 = -(s.tbar1 + s.tbar2);
  return s;
}

std::pair<int, int> derive_epsilons(const Int& c, const Int& e_tilde) {
  if (c == 0 || e_tilde == 0) throw std::invalid_argument("derive_epsilons: c*e_tilde == 0");
  std::vector<std::pair<int, int>> admissible;
  for (int eps1 : {-1, 1})
    for (int eps2 : {-1, 1}) {
      // Sum of the H1 boundary slopes over the blocks must vanish:
      // p * [(-eps1*c*et - 2d) + (2d - (2-eps2)*c*et)] / (2c) = 0
      // reduces to c*et*(eps2 - eps1 - 2) = 0.
      if (c * e_tilde * (eps2 - eps1 - 2) == 0) admissible.push_back({eps1, eps2});
    }
  if (admissible.size() != 1) throw std::logic_error("epsilon signs are not unique");
  return admissible.front();
}

HorizontalSolution compute_boundary_slopes(tangle::LinkClass cls, const BasisChange& basis,
                                           const Int& e_tilde, const WangYuSolution& wy) {
  const Int& et = e_tilde;
  bool odd = et % 2 != 0;
  if (cls == tangle::LinkClass::Knot && !odd)
    throw std::invalid_argument("knot case requires odd e_tilde");
  if (cls == tangle::LinkClass::TwoComponentLink && (odd || et == 0))
    throw std::invalid_argument("two-component case requires even nonzero e_tilde");
  auto canonical = BasisChange::canonical(cls);
  if (basis.a != canonical.a || basis.b != canonical.b || basis.c != canonical.c ||
      basis.d != canonical.d)
    throw std::invalid_argument("integer slope tables assume the canonical basis change");

  HorizontalSolution sol;
  sol.link_class = cls;
  sol.e_tilde = et;
  sol.lambda = wy.lambda;
  sol.lambda_bar = wy.lambda_bar;
  auto [eps1, eps2] = derive_epsilons(basis.c, et);
  sol.eps1 = eps1;
  sol.eps2 = eps2;
  sol.semibundle = eps1 == -eps2;

  if (cls == tangle::LinkClass::Knot) {
    sol.t1 = {(et - 1) / 2, 1};
    sol.t2 = {(1 - et) / 2, 1};
    sol.tbar1 = {(1 - et) / 2, et};
    sol.tbar2 = {(1 + et) / 2, et};
    sol.tbar3 = {-1, et};
  } else {
    sol.t1 = {et / 2 - 1, 1};
    sol.t2 = {1 - et / 2, 1};
    sol.tbar1 = {1 - et / 2, et / 2};
    sol.tbar2 = {1 + et / 2, et / 2};
    Int m = ((et % 4) + 4) % 4;
    sol.tbar3 = m == 2 ? SlopePair{-2, et / 2} : SlopePair{-1, et / 4};
  }

  auto general = general_slope_ratios(basis, et);
  if (sol.t1.ratio() != general.t1 || sol.t2.ratio() != general.t2 ||
      sol.tbar1.ratio() != general.tbar1 || sol.tbar2.ratio() != general.tbar2 ||
      sol.tbar3.ratio() != general.tbar3)
    throw std::logic_error("integer slope table disagrees with the general formulas");
  return sol;
}

SemibundleReport verify_semibundle(const HorizontalSolution& sol, int p) {
  SemibundleReport rep;
  auto check = [&rep](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  auto component_count = [](const Int& lam, const Int& u) -> Int {
    Rat q = make_rat(lam, u);
    if (den(q) != 1) throw std::logic_error("non-integral boundary component count");
    return abs(num(q));
  };

  Int c1 = component_count(sol.lambda, sol.t1.u);
  Int c2 = component_count(sol.lambda, sol.t2.u);
  Int cb1 = component_count(sol.lambda_bar, sol.tbar1.u);
  Int cb2 = component_count(sol.lambda_bar, sol.tbar2.u);
  Int cb3 = component_count(sol.lambda_bar, sol.tbar3.u);
  rep.boundary_components_t3 = cb3;

  check("h1-boundary-count-t1", c1 == 1, "|lambda/u1| = " + c1.str());
  check("h1-boundary-count-t2", c2 == 1, "|lambda/u2| = " + c2.str());
  check("h2-boundary-count-t1", cb1 == 1, "|lambda_bar/ubar1| = " + cb1.str());
  check("h2-boundary-count-t2", cb2 == 1, "|lambda_bar/ubar2| = " + cb2.str());

  Int expected_t3 = 1;
  if (sol.link_class == tangle::LinkClass::TwoComponentLink &&
      ((sol.e_tilde % 4) + 4) % 4 == 0)
    expected_t3 = 2;
  check("h2-boundary-count-t3", cb3 == expected_t3,
        "|lambda_bar/ubar3| = " + cb3.str() + ", expected " + expected_t3.str());

  check("epsilon-opposition", sol.eps1 == -sol.eps2 && sol.eps2 == 1,
        "eps1 = " + std::to_string(sol.eps1) + ", eps2 = " + std::to_string(sol.eps2));

  Rat h1_sum = (sol.t1.ratio() + sol.t2.ratio()) * p;
  check("h1-slope-sum", h1_sum == 0, "sum over blocks = " + fraction_string(h1_sum));

  Rat block_sum = sol.tbar1.ratio() + sol.tbar2.ratio() + sol.tbar3.ratio();
  check("h2-block-slope-sum", block_sum == 0, "per-block sum = " + fraction_string(block_sum));

  Int c = BasisChange::canonical(sol.link_class).c;
  Rat expected_ratio = make_rat(Int(-4), sol.e_tilde * c * c);
  check("tbar3-ratio", sol.tbar3.ratio() == expected_ratio,
        "tbar3/ubar3 = " + fraction_string(sol.tbar3.ratio()) + ", -4/(e~c^2) = " +
            fraction_string(expected_ratio));

  rep.ok = true;
  for (const auto& ch : rep.checks) rep.ok = rep.ok && ch.pass;
  return rep;
}

}  // namespace vfib::gm
