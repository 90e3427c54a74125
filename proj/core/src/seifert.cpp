#include "vfib/seifert.hpp"

#include <stdexcept>

namespace vfib::seifert {

namespace {

long long common_denominator(const tangle::MontesinosLink& link) {
  if (link.tangles.empty()) throw std::invalid_argument("empty tangle list");
  long long p = link.tangles.front().p;
  for (const auto& t : link.tangles)
    if (t.p != p) throw std::invalid_argument("denominators are not all equal");
  return p;
}

}  // namespace

Rat euler_number(const tangle::MontesinosLink& link) {
  long long p = common_denominator(link);
  return make_rat(-link.sum_q(), Int(p));
}

Rat orbifold_euler_char(const tangle::MontesinosLink& link) {
  long long p = common_denominator(link);
  long long n = link.n();
  return Rat(2 - n) + make_rat(Int(n), Int(p));
}

Geometry classify_geometry(const Rat& euler_number_wk, const Rat& chi_orb,
                           std::string* other_reason) {
  if (euler_number_wk == 0) {
    if (other_reason) *other_reason = "e(W_K) = 0";
    return Geometry::Other;
  }
  if (chi_orb >= 0) {
    if (other_reason) *other_reason = "chi_orb >= 0";
    return Geometry::Other;
  }
  return Geometry::SL2Tilde;
}

SeifertInvariants compute_invariants(const tangle::MontesinosLink& link) {
  SeifertInvariants inv;
  inv.euler_number_wk = euler_number(link);
  inv.chi_orb = orbifold_euler_char(link);
  inv.geometry = classify_geometry(inv.euler_number_wk, inv.chi_orb, &inv.other_reason);
  return inv;
}

CoverEulerData cover_euler_data(const tangle::MontesinosLink& link) {
  long long p = common_denominator(link);
  Int sum = link.sum_q();
  if (sum == 0) throw std::invalid_argument("numerator sum is zero; no cover Euler data");
  CoverEulerData data;
  data.e_tilde = -sum;
  data.e = data.e_tilde * p;
  data.e_tilde_odd = data.e_tilde % 2 != 0;
  return data;
}

}  // namespace vfib::seifert
