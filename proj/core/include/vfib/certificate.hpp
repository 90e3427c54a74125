#pragma once

#include "vfib/cover.hpp"
#include "vfib/graph_manifold.hpp"
#include "vfib/seifert.hpp"
#include "vfib/tangle.hpp"
#include "vfib/transversality.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vfib::cert {

enum class Outcome { Pass, NotApplicable, Fail };

// One verified proof obligation. The anchor is a stable identifier of the
// obligation, carried into the emitted certificate.
struct CheckEntry {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

struct FibrationCertificate {
  tangle::MontesinosLink input;
  tangle::ApplicabilityReport applicability;
  Outcome outcome = Outcome::Fail;
  std::string reason;  // NotApplicable / Fail explanation
  bool extrapolated = false;  // Case 2 with two components: combined argument

  std::optional<tangle::LinkClass> link_class;
  std::optional<seifert::SeifertInvariants> invariants;
  std::optional<seifert::CoverEulerData> euler_data;
  std::optional<cover::CoverTower> tower;
  std::optional<cover::CellStructure> cells;
  std::optional<cover::ConnectivityReport> connectivity;
  std::optional<gm::WangYuSolution> wang_yu;
  std::optional<gm::HorizontalSolution> horizontal;
  std::optional<gm::SemibundleReport> semibundle;
  std::optional<tv::ProfileReport> profile;
  std::vector<tv::VerticalTorusSpec> gamma;
  std::vector<tv::IntersectionRecord> records;
  std::optional<tv::RemarkVerdicts> remarks;
  std::vector<CheckEntry> checks;

  bool passed() const { return outcome == Outcome::Pass; }
};

// Runs the full verification chain and aggregates every obligation.
// PASS needs all of: applicability, the geometric invariants, F_1
// connectivity, the semi-bundle conditions, the singular profile, the
// torus family, the sign remarks, and the internal cross-checks (dual-route
// sign records, lift symmetry, rotation equivariance, cell-count genus).
FibrationCertificate run_certificate(const tangle::MontesinosLink& link);

// Deterministic JSON: object keys sorted, every mathematical integer and
// rational rendered as a decimal or "num/den" string.
std::string certificate_json(const FibrationCertificate& cert);

std::string certificate_text(const FibrationCertificate& cert, bool color);

const char* to_string(Outcome o);

}  // namespace vfib::cert
