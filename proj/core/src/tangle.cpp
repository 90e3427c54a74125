#include "vfib/tangle.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace vfib::tangle {

Int MontesinosLink::sum_q() const {
  Int s = 0;
  for (const auto& t : tangles) s += t.q;
  return s;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected ") + what, pos_);
    ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long long digits(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(std::string("expected ") + what, pos_);
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int d = text_[pos_] - '0';
      if (value > (std::numeric_limits<long long>::max() - d) / 10)
        throw ParseError("integer out of range", start);
      value = value * 10 + d;
      ++pos_;
    }
    return value;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

TangleFraction parse_fraction(Cursor& cur) {
  std::size_t start = cur.pos();
  bool neg = cur.consume('-');
  long long q = cur.digits("numerator");
  cur.expect('/', "'/'");
  std::size_t den_pos = cur.pos();
  long long p = cur.digits("denominator");
  if (p < 2) throw ParseError("denominator must be >= 2", den_pos);
  (void)start;
  return TangleFraction{neg ? -q : q, p};
}

}  // namespace

MontesinosLink parse_montesinos(std::string_view text) {
  Cursor cur(text);
  cur.expect('(', "'('");
  MontesinosLink link;
  if (cur.peek() == ')') throw ParseError("empty tangle list", cur.pos());
  link.tangles.push_back(parse_fraction(cur));
  while (cur.consume(',')) link.tangles.push_back(parse_fraction(cur));
  cur.expect(')', "')'");
  if (!cur.eof()) throw ParseError("trailing characters after ')'", cur.pos());
  return link;
}

std::string format_montesinos(const MontesinosLink& link) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < link.tangles.size(); ++i) {
    if (i) out << ", ";
    out << link.tangles[i].q << '/' << link.tangles[i].p;
  }
  out << ')';
  return out.str();
}

LinkClass component_count(const MontesinosLink& link) {
  return link.sum_q() % 2 != 0 ? LinkClass::Knot : LinkClass::TwoComponentLink;
}

ApplicabilityReport validate_theorem_hypotheses(const MontesinosLink& link) {
  ApplicabilityReport rep;
  rep.sum_q = link.sum_q();
  rep.sum_q_nonzero = rep.sum_q != 0;

  rep.equal_denominators = true;
  for (const auto& t : link.tangles)
    if (t.p != link.tangles.front().p) rep.equal_denominators = false;
  if (link.tangles.empty()) rep.equal_denominators = false;

  if (rep.equal_denominators) {
    rep.p = link.tangles.front().p;
    rep.p_odd = rep.p % 2 != 0;
    rep.p_ge_3 = rep.p >= 3;
  }

  auto fail = [&rep](std::string why) {
    rep.case_tag = CaseTag::NotApplicable;
    rep.reason = std::move(why);
    return rep;
  };

  if (!rep.equal_denominators) return fail("denominators are not all equal");
  if (!rep.p_odd) return fail("p is even");
  if (!rep.p_ge_3) return fail("p < 3");
  if (link.n() < 3) return fail("fewer than three tangles");
  if (!rep.sum_q_nonzero) return fail("numerator sum is zero (e(W_K) = 0)");
  if (link.n() == 3) {
    if (rep.p < 5) return fail("n = 3 requires p >= 5 (chi_orb = 0 at p = 3)");
    rep.case_tag = CaseTag::Case1;
  } else {
    rep.case_tag = CaseTag::Case2;
  }
  return rep;
}

const char* to_string(LinkClass c) {
  return c == LinkClass::Knot ? "knot" : "two-component link";
}

const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Case1: return "Case 1";
    case CaseTag::Case2: return "Case 2";
    default: return "not applicable";
  }
}

}  // namespace vfib::tangle
