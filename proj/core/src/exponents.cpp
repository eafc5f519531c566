#include "liespec/exponents.hpp"

#include <sstream>

#include "liespec/errors.hpp"

namespace liespec {

LebesgueExponent::LebesgueExponent(Rat value) : infinite_(false), value_(std::move(value)) {
  if (value_ <= 0) {
    throw InvalidExponent("Lebesgue exponent must be positive, got " + rat_to_string(value_));
  }
}

LebesgueExponent LebesgueExponent::infinity() { return LebesgueExponent(); }

LebesgueExponent LebesgueExponent::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") {
    return infinity();
  }
  return LebesgueExponent(parse_rational(text));
}

const Rat& LebesgueExponent::value() const {
  if (infinite_) {
    throw InvalidExponent("infinite exponent has no finite value");
  }
  return value_;
}

Rat LebesgueExponent::reciprocal() const {
  if (infinite_) {
    return Rat(0);
  }
  return 1 / value_;
}

std::string LebesgueExponent::str() const {
  return infinite_ ? std::string("inf") : rat_to_string(value_);
}

Rat sigma_breakpoint(int d) {
  if (d < 2) {
    throw InvalidExponent("sigma requires dimension >= 2");
  }
  return frac(2 * (d + 1), d - 1);
}

Rat sigma(int d, const LebesgueExponent& q) {
  const Rat qstar = sigma_breakpoint(d);
  if (!(q >= Rat(2))) {
    throw InvalidExponent("sigma requires q >= 2, got " + q.str());
  }
  if (q <= qstar) {
    return frac(d - 1, 2) * (frac(1, 2) - q.reciprocal());
  }
  return frac(d - 1, 2) - d * q.reciprocal();
}

ExponentProfile profile(const RootSystem& rs, const Rat& p, const LebesgueExponent& q) {
  if (rs.rank() < 2) {
    throw UnsupportedRank("exponent profiles need rank >= 2; rank-1 groups are spheres and "
                          "handled by the classical sphere estimates");
  }
  if (p < 2) {
    throw InvalidExponent("profile requires p in [2, inf), got " + rat_to_string(p));
  }
  if (!(q >= Rat(2))) {
    throw InvalidExponent("profile requires q in [2, inf], got " + q.str());
  }
  ExponentProfile out{rs.family, rs.group_dim, rs.m_spec(), p, q, {}, {}, {}, {}, Strictness::GT};
  out.alpha = frac(1, 2) - 1 / p;
  out.sigma_q = sigma(rs.group_dim, q);
  out.s0 = frac(rs.group_dim, 2) - Rat(2) / p - rs.group_dim * q.reciprocal();
  out.s0R = frac(rs.m_spec(), 2) - Rat(2) / p + out.sigma_q;
  out.strictness = rs.m_spec() >= 5 ? Strictness::GE : Strictness::GT;
  return out;
}

ExponentProfile profile(const GroupFamily& family, const Rat& p, const LebesgueExponent& q) {
  if (family.rank() < 2) {
    throw UnsupportedRank("exponent profiles need rank >= 2");
  }
  return profile(build_root_system(family), p, q);
}

std::pair<Rat, Rat> zhang_thresholds(const GroupFamily& family) {
  if (family.rank() < 2) {
    throw UnsupportedRank("thresholds need rank >= 2");
  }
  const RootSystem rs = build_root_system(family);
  const long l = rs.rank();
  const long d = rs.group_dim;
  return {Rat(2) + frac(8, l), Rat(2) + frac(4 * (d + l), d * l)};
}

std::vector<ExponentProfile> profile_grid(const RootSystem& rs, const std::vector<Rat>& p_grid,
                                          const std::vector<LebesgueExponent>& q_grid) {
  std::vector<ExponentProfile> out;
  out.reserve(p_grid.size() * q_grid.size());
  for (const auto& p : p_grid) {
    for (const auto& q : q_grid) {
      out.push_back(profile(rs, p, q));
    }
  }
  return out;
}

const char* strictness_name(Strictness s) { return s == Strictness::GE ? "GE" : "GT"; }

std::string to_csv(const std::vector<ExponentProfile>& profiles) {
  std::ostringstream out;
  out << "family,rank,d,m,p,q,alpha,sigma_q,s0,s0R,strictness,p1_zhang,p2_zhang\n";
  for (const auto& pr : profiles) {
    const auto [p1, p2] = zhang_thresholds(pr.family);
    out << pr.family.label_name() << "," << pr.family.rank() << "," << pr.d << "," << pr.m << ","
        << rat_to_string(pr.p) << "," << pr.q.str() << "," << rat_to_string(pr.alpha) << ","
        << rat_to_string(pr.sigma_q) << "," << rat_to_string(pr.s0) << ","
        << rat_to_string(pr.s0R) << "," << strictness_name(pr.strictness) << ","
        << rat_to_string(p1) << "," << rat_to_string(p2) << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const std::vector<ExponentProfile>& profiles) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& pr : profiles) {
    const auto [p1, p2] = zhang_thresholds(pr.family);
    nlohmann::ordered_json j;
    j["family"] = pr.family.label_name();
    j["rank"] = pr.family.rank();
    j["d"] = pr.d;
    j["m"] = pr.m;
    j["p"] = rat_to_string(pr.p);
    j["q"] = pr.q.str();
    j["alpha"] = rat_to_string(pr.alpha);
    j["sigma_q"] = rat_to_string(pr.sigma_q);
    j["s0"] = rat_to_string(pr.s0);
    j["s0R"] = rat_to_string(pr.s0R);
    j["strictness"] = strictness_name(pr.strictness);
    j["p1_zhang"] = rat_to_string(p1);
    j["p2_zhang"] = rat_to_string(p2);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace liespec
