#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "liespec/root_system.hpp"

namespace liespec {

/// A Lebesgue exponent in (0, inf]. Infinity is a distinguished value whose
/// reciprocal is exactly 0.
class LebesgueExponent {
 public:
  LebesgueExponent(Rat value);  // NOLINT: implicit by design
  LebesgueExponent(long value) : LebesgueExponent(Rat(static_cast<long>(value))) {}
  LebesgueExponent(int value) : LebesgueExponent(Rat(value)) {}
  static LebesgueExponent infinity();

  /// Parses "inf" or a rational literal "n" / "n/d".
  static LebesgueExponent parse(const std::string& text);

  bool is_infinite() const { return infinite_; }
  const Rat& value() const;  // throws InvalidExponent when infinite
  Rat reciprocal() const;    // 0 when infinite

  bool operator<=(const Rat& rhs) const { return !infinite_ && value_ <= rhs; }
  bool operator>=(const Rat& rhs) const { return infinite_ || value_ >= rhs; }

  std::string str() const;

 private:
  LebesgueExponent() : infinite_(true) {}
  bool infinite_ = false;
  Rat value_;
};

enum class Strictness { GE, GT };

/// Every scale of the regularity bookkeeping for one group and one (p, q):
/// alpha = 1/2 - 1/p, the projection exponent sigma(q), the scale-invariant
/// index s0 = d/2 - 2/p - d/q and the reverse index s0R = m/2 - 2/p + sigma(q).
struct ExponentProfile {
  GroupFamily family;
  int d = 0;  // group dimension
  int m = 0;  // number of squares in the spectral parametrisation
  Rat p;
  LebesgueExponent q = LebesgueExponent::infinity();
  Rat alpha;
  Rat sigma_q;
  Rat s0;
  Rat s0R;
  Strictness strictness = Strictness::GT;
};

/// Breakpoint 2(d+1)/(d-1) between the two projection-exponent branches.
Rat sigma_breakpoint(int d);

/// Spectral-projection exponent:
///   (d-1)/2 (1/2 - 1/q)  for 2 <= q <= 2(d+1)/(d-1),
///   (d-1)/2 - d/q        beyond the breakpoint (including q = inf).
/// Throws InvalidExponent for q < 2 or d < 2.
Rat sigma(int d, const LebesgueExponent& q);

ExponentProfile profile(const RootSystem& rs, const Rat& p, const LebesgueExponent& q);
ExponentProfile profile(const GroupFamily& family, const Rat& p, const LebesgueExponent& q);

/// (2 + 8/l, 2 + 4(d+l)/(d l)): below the first threshold no previous
/// diagonal estimate applies, and [2, second] is the new-index window.
std::pair<Rat, Rat> zhang_thresholds(const GroupFamily& family);

std::vector<ExponentProfile> profile_grid(const RootSystem& rs, const std::vector<Rat>& p_grid,
                                          const std::vector<LebesgueExponent>& q_grid);

const char* strictness_name(Strictness s);

/// CSV rows: family,rank,d,m,p,q,alpha,sigma_q,s0,s0R,strictness,p1_zhang,p2_zhang.
std::string to_csv(const std::vector<ExponentProfile>& profiles);

nlohmann::ordered_json to_json(const std::vector<ExponentProfile>& profiles);

}  // namespace liespec
