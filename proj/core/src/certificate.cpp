#include "vfib/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vfib::cert {

using nlohmann::json;
using tangle::CaseTag;
using tangle::LinkClass;

namespace {

struct CheckSink {
  std::vector<CheckEntry>* checks;
  bool all_pass = true;

  void add(std::string name, std::string anchor, bool pass, std::string detail = "") {
    checks->push_back({std::move(name), std::move(anchor), pass, std::move(detail)});
    all_pass = all_pass && pass;
  }
};

cover::CurveId rotate(cover::CurveId c, int p) { return {(c.i + 1) % p, (c.k + 1) % p}; }

// The diagonal rotation relabels every index by +1; it normalizes the band
// family, so arcs, angles and records must all be carried along by it.
bool arcs_equivariant(const cover::MarkedCurveSystem& system) {
  const int p = system.p();
  auto rot_point = [p](cover::MarkedPoint pt) {
    return cover::MarkedPoint{pt.cls, (pt.block + 1) % p};
  };
  auto rot_circle = [p](cover::BoundaryCircle c) {
    return cover::BoundaryCircle{(c.block + 1) % p, c.side};
  };
  for (const cover::Arc& a : system.arcs()) {
    cover::CurveId rc = rotate(a.curve, p);
    const cover::Arc& b = system.arc(rc, a.slot);
    if (!(b.tail.circle == rot_circle(a.tail.circle)) ||
        !(b.head.circle == rot_circle(a.head.circle)) ||
        !(b.tail.adjacent == rot_point(a.tail.adjacent)) ||
        !(b.head.adjacent == rot_point(a.head.adjacent)))
      return false;
    for (const auto& pt : system.points_on_curve(a.curve))
      if (system.angle_class(a.curve, pt) != system.angle_class(rc, rot_point(pt)))
        return false;
  }
  return true;
}

bool records_equivariant(const cover::MarkedCurveSystem& system,
                         const std::vector<tv::VerticalTorusSpec>& gamma,
                         const std::vector<tv::IntersectionRecord>& records) {
  const int p = system.p();
  std::map<tv::VerticalTorusSpec, int> torus_index;
  for (int t = 0; t < static_cast<int>(gamma.size()); ++t) torus_index[gamma[t]] = t;

  auto rotated_torus = [&](const tv::VerticalTorusSpec& spec) {
    tv::VerticalTorusSpec out = spec;
    if (spec.kind == tv::VerticalTorusSpec::Kind::BoundaryParallel)
      out.block = (spec.block + 1) % p;
    return torus_index.at(out);
  };

  std::vector<tv::IntersectionRecord> mapped;
  mapped.reserve(records.size());
  for (const auto& rec : records) {
    tv::IntersectionRecord m = rec;
    m.arc.curve = rotate(rec.arc.curve, p);
    m.torus = rotated_torus(gamma[rec.torus]);
    m.torus_id = gamma[m.torus].id();
    mapped.push_back(std::move(m));
  }
  return tv::same_records(std::move(mapped), records);
}

bool lift_symmetry(const std::vector<tv::VerticalTorusSpec>& gamma,
                   const std::vector<tv::IntersectionRecord>& records, int n) {
  std::map<tv::VerticalTorusSpec, int> torus_index;
  for (int t = 0; t < static_cast<int>(gamma.size()); ++t) torus_index[gamma[t]] = t;

  auto mapped = [&](const tv::IntersectionRecord& rec, int copy, int sheet) {
    tv::IntersectionRecord m = rec;
    m.arc.copy = copy;
    m.arc.sheet = sheet;
    tv::VerticalTorusSpec spec = gamma[rec.torus];
    spec.sheet = sheet;
    m.torus = torus_index.at(spec);
    m.torus_id = spec.id();
    return m;
  };

  std::vector<tv::IntersectionRecord> copy_swapped, sheet_swapped;
  for (const auto& rec : records) {
    copy_swapped.push_back(mapped(rec, rec.arc.copy == 0 ? 2 * n : 0, rec.arc.sheet));
    sheet_swapped.push_back(mapped(rec, rec.arc.copy, 3 - rec.arc.sheet));
  }
  return tv::same_records(copy_swapped, records) && tv::same_records(sheet_swapped, records);
}

}  // namespace

FibrationCertificate run_certificate(const tangle::MontesinosLink& link) {
  FibrationCertificate cert;
  cert.input = link;
  cert.applicability = tangle::validate_theorem_hypotheses(link);

  if (!cert.applicability.applicable()) {
    cert.outcome = Outcome::NotApplicable;
    cert.reason = cert.applicability.reason;
    // Record the invariants when they are defined, for the diagnostic.
    if (cert.applicability.equal_denominators) {
      cert.invariants = seifert::compute_invariants(link);
      cert.link_class = tangle::component_count(link);
    }
    return cert;
  }

  CheckSink sink{&cert.checks};
  try {
    const int p = static_cast<int>(cert.applicability.p);
    const int n = link.n();
    cert.link_class = tangle::component_count(link);
    const bool knot = *cert.link_class == LinkClass::Knot;
    cert.extrapolated = cert.applicability.case_tag == CaseTag::Case2 && !knot;

    cert.invariants = seifert::compute_invariants(link);
    sink.add("sl2tilde-geometry", "geometry-classification",
             cert.invariants->geometry == seifert::Geometry::SL2Tilde,
             "e(W_K) = " + fraction_string(cert.invariants->euler_number_wk) +
                 ", chi_orb = " + fraction_string(cert.invariants->chi_orb));

    cert.euler_data = seifert::cover_euler_data(link);
    sink.add("euler-parity", "cover-euler-share",
             cert.euler_data->e_tilde_odd == knot &&
                 cert.euler_data->e == cert.euler_data->e_tilde * p,
             "e = " + cert.euler_data->e.str() + ", e~ = " + cert.euler_data->e_tilde.str());
    Rat e_check = cert.invariants->euler_number_wk * p * p;
    sink.add("euler-number-cover", "cover-euler-share",
             e_check == Rat(cert.euler_data->e),
             "p^2 * e(W_K) = " + fraction_string(e_check));

    cert.tower = cover::build_cover_tower(link);
    sink.add("cover-genus", "cover-tower-genus", cert.tower->f_genus >= 0,
             "genus " + cert.tower->f_genus.str());

    auto system = cover::reorient_curves(
        cover::decompose_arcs(cover::build_curve_system(*cert.tower)));

    cert.cells = cover::cell_structure(system);
    sink.add("cell-euler-characteristic", "cell-count-genus",
             cert.cells->euler_characteristic() == cert.tower->chi_f &&
                 cert.cells->faces == Int(2) * p * p,
             "V - E + F = " + cert.cells->euler_characteristic().str() + ", faces = " +
                 cert.cells->faces.str());

    sink.add("arc-count", "band-arc-decomposition",
             static_cast<int>(system.arcs().size()) == 2 * n * p * (p - 1),
             std::to_string(system.arcs().size()) + " arcs");
    sink.add("deck-equivariance", "rotation-symmetry", arcs_equivariant(system));

    cert.connectivity = cover::check_f1_connected(system);
    sink.add("f1-connected", "hub-connectivity",
             cert.connectivity->connected && cert.connectivity->witness_family_spans,
             std::to_string(cert.connectivity->node_count) + " nodes");

    auto basis = gm::BasisChange::canonical(*cert.link_class);
    auto gluing = gm::gluing_matrices(basis, cert.euler_data->e_tilde);
    sink.add("gluing-matrices", "block-gluing",
             gluing.g1.det() == -1 && gluing.g2.det() == -1 &&
                 gluing.g1 * gluing.g1_inv == gm::Mat2::identity() &&
                 gluing.g2 * gluing.g2_inv == gm::Mat2::identity());

    cert.wang_yu = gm::solve_wang_yu(p, basis.c, cert.euler_data->e);
    auto wy_general = gm::solve_wang_yu_general(p, basis.c, cert.euler_data->e);
    sink.add("wang-yu-dual-route", "horizontal-system",
             cert.wang_yu->lambda == wy_general.lambda &&
                 cert.wang_yu->lambda_bar == wy_general.lambda_bar,
             "(lambda, lambda_bar) = (" + cert.wang_yu->lambda.str() + ", " +
                 cert.wang_yu->lambda_bar.str() + ")");

    cert.horizontal = gm::compute_boundary_slopes(*cert.link_class, basis,
                                                  cert.euler_data->e_tilde, *cert.wang_yu);
    cert.semibundle = gm::verify_semibundle(*cert.horizontal, p);
    sink.add("semibundle", "semibundle-conditions", cert.semibundle->ok);

    auto single = gm::build_jsj_graph(cert.applicability.case_tag, p, false,
                                      cert.euler_data->e_tilde, gluing);
    auto doubled = gm::build_jsj_graph(cert.applicability.case_tag, p, true,
                                       cert.euler_data->e_tilde, gluing);
    sink.add("jsj-counts", "decomposition-graph",
             static_cast<int>(single.vertices.size()) == p + 1 &&
                 static_cast<int>(single.edges.size()) == 2 * p &&
                 static_cast<int>(doubled.vertices.size()) == 2 * p + 2 &&
                 static_cast<int>(doubled.edges.size()) == 4 * p);
    sink.add("jsj-involution", "double-cover-symmetry",
             gm::has_free_sheet_involution(doubled) && gm::projects_two_to_one(doubled, single));

    cert.profile = tv::singular_point_profile(system, *cert.link_class);
    sink.add("singular-profile", "block-foliation-profile", cert.profile->ok,
             std::to_string(cert.profile->singular_points_per_annulus) +
                 " singular points per annulus");

    auto lcurves = tv::build_l_curves(system);
    sink.add("l-curves-close", "twist-curve-cycles",
             lcurves.first.closed && lcurves.second.closed && lcurves.first.simple &&
                 lcurves.second.simple,
             "steps " + std::to_string(lcurves.first.step) + ", " +
                 std::to_string(lcurves.second.step));

    cert.gamma = tv::build_gamma(system, lcurves);
    std::size_t expected =
        cert.applicability.case_tag == CaseTag::Case1 ? 2 * p + 4 : 4;
    sink.add("gamma-size", "twist-torus-family", cert.gamma.size() == expected,
             std::to_string(cert.gamma.size()) + " tori");

    cert.records = tv::compute_intersections(system, cert.gamma);
    auto oracle = tv::compute_intersections_oracle(system, cert.gamma);
    sink.add("sign-oracle-agreement", "angular-order-crossings",
             tv::same_records(cert.records, oracle),
             std::to_string(cert.records.size()) + " nonzero records");
    sink.add("lift-symmetry", "fiber-lift-copies",
             lift_symmetry(cert.gamma, cert.records, n));
    sink.add("record-equivariance", "rotation-symmetry",
             records_equivariant(system, cert.gamma, cert.records));

    cert.remarks = tv::verify_sign_remarks(system, cert.gamma, cert.records);
    sink.add("sign-remarks", "crossing-sign-remarks", cert.remarks->ok);

    cert.outcome = sink.all_pass ? Outcome::Pass : Outcome::Fail;
    if (!sink.all_pass) {
      for (const auto& ch : cert.checks)
        if (!ch.pass) {
          cert.reason = "check failed: " + ch.name;
          break;
        }
    }
  } catch (const std::exception& ex) {
    cert.outcome = Outcome::Fail;
    cert.reason = ex.what();
  }
  return cert;
}

namespace {

json slope_json(const gm::SlopePair& s) {
  return json{{"t", s.t.str()}, {"u", s.u.str()}};
}

json circle_json(const cover::BoundaryCircle& c) {
  return json{{"block", c.block}, {"side", c.side == cover::Side::Beta1 ? 1 : 2}};
}

}  // namespace

std::string certificate_json(const FibrationCertificate& cert) {
  json root;

  json input;
  input["notation"] = tangle::format_montesinos(cert.input);
  input["n"] = cert.input.n();
  json tangles = json::array();
  for (const auto& t : cert.input.tangles)
    tangles.push_back(json{{"q", std::to_string(t.q)}, {"p", std::to_string(t.p)}});
  input["tangles"] = tangles;
  input["link_class"] =
      cert.link_class ? tangle::to_string(*cert.link_class) : "unknown";
  root["input"] = input;

  json app;
  app["applicable"] = cert.applicability.applicable();
  app["case"] = tangle::to_string(cert.applicability.case_tag);
  app["equal_denominators"] = cert.applicability.equal_denominators;
  app["p"] = cert.applicability.p;
  app["p_odd"] = cert.applicability.p_odd;
  app["p_ge_3"] = cert.applicability.p_ge_3;
  app["sum_q"] = cert.applicability.sum_q.str();
  app["sum_q_nonzero"] = cert.applicability.sum_q_nonzero;
  app["reason"] = cert.applicability.reason;
  app["extrapolated"] = cert.extrapolated;
  root["applicability"] = app;

  if (cert.invariants) {
    json inv;
    inv["euler_number_wk"] = fraction_string(cert.invariants->euler_number_wk);
    inv["chi_orb"] = fraction_string(cert.invariants->chi_orb);
    inv["geometry"] =
        cert.invariants->geometry == seifert::Geometry::SL2Tilde ? "SL2~" : "other";
    if (cert.invariants->geometry != seifert::Geometry::SL2Tilde)
      inv["other_reason"] = cert.invariants->other_reason;
    if (cert.euler_data) {
      inv["e"] = cert.euler_data->e.str();
      inv["e_tilde"] = cert.euler_data->e_tilde.str();
      inv["e_tilde_parity"] = cert.euler_data->e_tilde_odd ? "odd" : "even";
    }
    if (cert.tower) {
      inv["genus"] = cert.tower->f_genus.str();
      inv["chi_f"] = cert.tower->chi_f.str();
      inv["chi_fprime"] = fraction_string(cert.tower->chi_fprime);
      inv["fprime_cone_points"] = cert.tower->fprime_cone_points;
      inv["h1_images"] = cert.tower->h1_images;
      inv["h2_images"] = cert.tower->h2_images;
    }
    if (cert.cells) {
      inv["cells"] = json{{"vertices", cert.cells->vertices.str()},
                          {"edges", cert.cells->edges.str()},
                          {"faces", cert.cells->faces.str()}};
    }
    root["invariants"] = inv;
  } else {
    root["invariants"] = nullptr;
  }

  if (cert.connectivity) {
    json conn;
    conn["node_count"] = cert.connectivity->node_count;
    conn["connected"] = cert.connectivity->connected;
    conn["witness_family_spans"] = cert.connectivity->witness_family_spans;
    json tree = json::array();
    for (const auto& e : cert.connectivity->spanning_tree)
      tree.push_back(json{{"arc", cover::label(e.curve) + "#" + std::to_string(e.slot)},
                          {"from", circle_json(e.from)},
                          {"to", circle_json(e.to)}});
    conn["spanning_tree"] = tree;
    root["connectivity"] = conn;
  } else {
    root["connectivity"] = nullptr;
  }

  if (cert.horizontal && cert.semibundle) {
    json sb;
    sb["lambda"] = cert.horizontal->lambda.str();
    sb["lambda_bar"] = cert.horizontal->lambda_bar.str();
    sb["e_tilde"] = cert.horizontal->e_tilde.str();
    sb["eps1"] = cert.horizontal->eps1;
    sb["eps2"] = cert.horizontal->eps2;
    sb["slopes"] = json{{"t1", slope_json(cert.horizontal->t1)},
                        {"t2", slope_json(cert.horizontal->t2)},
                        {"tbar1", slope_json(cert.horizontal->tbar1)},
                        {"tbar2", slope_json(cert.horizontal->tbar2)},
                        {"tbar3", slope_json(cert.horizontal->tbar3)}};
    sb["boundary_components_t3"] = cert.semibundle->boundary_components_t3.str();
    json checks = json::array();
    for (const auto& ch : cert.semibundle->checks)
      checks.push_back(json{{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    sb["checks"] = checks;
    sb["ok"] = cert.semibundle->ok;
    root["semibundle"] = sb;
  } else {
    root["semibundle"] = nullptr;
  }

  if (cert.profile) {
    json prof;
    prof["ok"] = cert.profile->ok;
    prof["singular_points_per_annulus"] = cert.profile->singular_points_per_annulus;
    prof["slot2_slot4_alternate"] = cert.profile->slot2_slot4_alternate;
    json fams = json::array();
    for (const auto& f : cert.profile->families)
      fams.push_back(json{{"block", f.block},
                          {"slot", f.slot},
                          {"tail", circle_json(f.tail)},
                          {"head", circle_json(f.head)},
                          {"uniform", f.uniform},
                          {"crosses_band", f.crosses_band}});
    prof["families"] = fams;
    root["singular_profile"] = prof;
  } else {
    root["singular_profile"] = nullptr;
  }

  json gamma = json::array();
  for (const auto& g : cert.gamma) {
    json t;
    t["id"] = g.id();
    t["kind"] = g.kind == tv::VerticalTorusSpec::Kind::BoundaryParallel ? "boundary-parallel"
                                                                        : "l-curve";
    if (g.kind == tv::VerticalTorusSpec::Kind::BoundaryParallel)
      t["block"] = g.block;
    else
      t["lcurve"] = g.lcurve;
    t["sheet"] = g.sheet;
    gamma.push_back(t);
  }
  root["gamma"] = gamma;

  json records = json::array();
  for (const auto& r : cert.records) {
    json rec;
    rec["arc"] = json{{"i", r.arc.curve.i},
                      {"k", r.arc.curve.k},
                      {"slot", r.arc.slot},
                      {"copy", r.arc.copy},
                      {"sheet", r.arc.sheet}};
    rec["torus"] = r.torus_id;
    rec["count"] = r.count;
    rec["signs"] = r.signs;
    records.push_back(rec);
  }
  root["records"] = records;

  if (cert.remarks) {
    json rv;
    rv["ok"] = cert.remarks->ok;
    json verdicts = json::array();
    for (const auto& v : cert.remarks->verdicts)
      verdicts.push_back(json{{"name", v.name},
                              {"pass", v.pass},
                              {"counterexamples", v.counterexamples}});
    rv["verdicts"] = verdicts;
    root["remark_verdicts"] = rv;
  } else {
    root["remark_verdicts"] = nullptr;
  }

  json anchors = json::array();
  for (const auto& ch : cert.checks)
    anchors.push_back(json{{"check", ch.name},
                           {"anchor", ch.anchor},
                           {"pass", ch.pass},
                           {"detail", ch.detail}});
  root["anchors"] = anchors;

  root["verdict"] = to_string(cert.outcome);
  if (!cert.reason.empty()) root["reason"] = cert.reason;

  return root.dump(2) + "\n";
}

std::string certificate_text(const FibrationCertificate& cert, bool color) {
  std::ostringstream out;
  auto mark = [color](bool pass) {
    if (!color) return std::string(pass ? "[ok]  " : "[FAIL]");
    return pass ? std::string("\033[32m[ok]\033[0m  ") : std::string("\033[31m[FAIL]\033[0m");
  };

  out << "input: " << tangle::format_montesinos(cert.input);
  if (cert.link_class) out << "   [" << tangle::to_string(*cert.link_class) << "]";
  out << "\n";
  out << "applicability: " << tangle::to_string(cert.applicability.case_tag);
  if (cert.applicability.applicable())
    out << " (p = " << cert.applicability.p << ", n = " << cert.input.n() << ")";
  else
    out << " -- " << cert.applicability.reason;
  if (cert.extrapolated) out << "   [combined two-component argument]";
  out << "\n";
  if (cert.invariants) {
    out << "e(W_K) = " << fraction_string(cert.invariants->euler_number_wk)
        << "   chi_orb = " << fraction_string(cert.invariants->chi_orb) << "   geometry: "
        << (cert.invariants->geometry == seifert::Geometry::SL2Tilde ? "SL2~" : "other")
        << "\n";
  }
  if (cert.euler_data && cert.tower)
    out << "e = " << cert.euler_data->e.str() << "   e~ = " << cert.euler_data->e_tilde.str()
        << "   genus(F) = " << cert.tower->f_genus.str() << "\n";
  if (cert.horizontal)
    out << "(lambda, lambda_bar) = (" << cert.horizontal->lambda.str() << ", "
        << cert.horizontal->lambda_bar.str() << ")   gamma: " << cert.gamma.size()
        << " tori   records: " << cert.records.size() << "\n";
  for (const auto& ch : cert.checks) {
    out << mark(ch.pass) << " " << ch.name;
    if (!ch.detail.empty()) out << " -- " << ch.detail;
    out << "\n";
  }
  out << "verdict: " << to_string(cert.outcome);
  if (!cert.reason.empty()) out << " (" << cert.reason << ")";
  out << "\n";
  return out.str();
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::NotApplicable: return "NOT_APPLICABLE";
    default: return "FAIL";
  }
}

}  // namespace vfib::cert
