#pragma once

#include "vfib/numeric.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vfib::tangle {

// One rational tangle q/p. Stored exactly as written: no reduction, q may be
// negative or exceed p. (Downstream formulas only consume sums and residues;
// reducing would destroy the tangle structure.)
struct TangleFraction {
  long long q = 0;
  long long p = 0;  // >= 2

  friend bool operator==(const TangleFraction&, const TangleFraction&) = default;
};

// Cyclic rational-tangle decomposition of a classic Montesinos link.
// The list order is kept as given; no canonical rotation is applied.
struct MontesinosLink {
  std::vector<TangleFraction> tangles;

  int n() const { return static_cast<int>(tangles.size()); }
  Int sum_q() const;

  friend bool operator==(const MontesinosLink&, const MontesinosLink&) = default;
};

enum class LinkClass { Knot, TwoComponentLink };

enum class CaseTag { Case1, Case2, NotApplicable };

struct ApplicabilityReport {
  bool equal_denominators = false;
  bool p_odd = false;
  bool p_ge_3 = false;
  bool sum_q_nonzero = false;
  CaseTag case_tag = CaseTag::NotApplicable;
  std::string reason;        // set when NotApplicable
  long long p = 0;           // common denominator (0 if unequal)
  Int sum_q;

  bool applicable() const { return case_tag != CaseTag::NotApplicable; }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Grammar: '(' frac (',' frac)* ')' with frac := ['-'] digits '/' digits.
// Whitespace-insensitive. Rejects empty lists and denominators < 2.
MontesinosLink parse_montesinos(std::string_view text);

// Inverse of parse_montesinos up to whitespace: parse(format(k)) == k.
std::string format_montesinos(const MontesinosLink& link);

// Knot iff the numerator sum is odd (equal odd denominators assumed by the
// caller's hypothesis gate).
LinkClass component_count(const MontesinosLink& link);

// Hypothesis gate for the certificate pipeline. Inapplicability is data,
// never an error.
ApplicabilityReport validate_theorem_hypotheses(const MontesinosLink& link);

const char* to_string(LinkClass c);
const char* to_string(CaseTag c);

}  // namespace vfib::tangle
