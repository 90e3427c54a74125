#pragma once

#include "vfib/numeric.hpp"
#include "vfib/tangle.hpp"

#include <string>

namespace vfib::seifert {

enum class Geometry { SL2Tilde, Other };

// Invariants of the double branched cover W_K and its base orbifold.
// geometry == SL2Tilde exactly when e(W_K) != 0 and chi_orb < 0.
struct SeifertInvariants {
  Rat euler_number_wk;
  Rat chi_orb;
  Geometry geometry = Geometry::Other;
  std::string other_reason;  // which condition failed, when geometry == Other
};

// Euler data of the p^2-fold cover Y -> F: e is the Euler number of the
// circle bundle, e_tilde = e/p the per-block share. The equal split
// e^1 = ... = e^p = e_tilde is hard-coded.
struct CoverEulerData {
  Int e;
  Int e_tilde;        // = -sum(q_i)
  bool e_tilde_odd = false;  // odd exactly when K is a knot
};

// e(W_K) = -(sum q_i)/p, exact and reduced. Throws std::invalid_argument on
// unequal denominators.
Rat euler_number(const tangle::MontesinosLink& link);

// chi_orb(B_K) = 2 - n + n/p. Throws on unequal denominators.
Rat orbifold_euler_char(const tangle::MontesinosLink& link);

Geometry classify_geometry(const Rat& euler_number_wk, const Rat& chi_orb,
                           std::string* other_reason = nullptr);

SeifertInvariants compute_invariants(const tangle::MontesinosLink& link);

// Requires Case 1/Case 2 applicability; throws if sum(q_i) == 0.
CoverEulerData cover_euler_data(const tangle::MontesinosLink& link);

}  // namespace vfib::seifert
