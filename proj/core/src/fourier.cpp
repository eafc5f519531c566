#include "liespec/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "liespec/errors.hpp"

namespace liespec {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

std::complex<double> gaussian(std::uint64_t& state) {
  const double u = 1.0 - uniform01(state);  // (0, 1]
  const double v = uniform01(state);
  const double r = std::sqrt(-2.0 * std::log(u));
  return {r * std::cos(kTwoPi * v), r * std::sin(kTwoPi * v)};
}

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

int next_pow2(long long n) {
  long long p = 1;
  while (p < n) {
    p <<= 1;
  }
  return static_cast<int>(p);
}

void validate(const QuadratureConfig& cfg, long long max_frequency) {
  if (!is_power_of_two(cfg.sample_count)) {
    throw InvalidArgument("sample_count must be a positive power of two, got " +
                          std::to_string(cfg.sample_count));
  }
  if (cfg.sample_count < 2 * max_frequency + 2) {
    throw NyquistViolation("sample_count " + std::to_string(cfg.sample_count) +
                           " below the Nyquist margin " + std::to_string(2 * max_frequency + 2));
  }
}

struct Nodes {
  std::vector<double> tau;     // in [0, 2 pi)
  std::vector<double> weight;  // sums to 2 pi
};

/// Gauss-Legendre nodes by Newton iteration on the recurrence; standard
/// construction, mapped from [-1, 1] to [0, 2 pi].
Nodes gauss_legendre_nodes(int n) {
  Nodes out;
  out.tau.resize(n);
  out.weight.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
      }
      pp = n * (x * p0 - p1) / (x * x - 1);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        break;
      }
    }
    const double w = 2.0 / ((1 - x * x) * pp * pp);
    out.tau[i] = M_PI * (1 - x);
    out.tau[n - 1 - i] = M_PI * (1 + x);
    out.weight[i] = M_PI * w;
    out.weight[n - 1 - i] = M_PI * w;
  }
  return out;
}

/// Signal samples on the trapezoid grid tau_k = 2 pi k / N. Roots of unity
/// are tabulated once so e^{iR tau_k} is an exact table lookup at (Rk mod N).
std::vector<std::complex<double>> sample_trapezoid(
    const std::map<long long, std::complex<double>>& coeffs, int n,
    const std::map<long long, double>* freq_weights = nullptr) {
  std::vector<std::complex<double>> unity(n);
  for (int k = 0; k < n; ++k) {
    unity[k] = std::polar(1.0, kTwoPi * k / n);
  }
  std::vector<std::complex<double>> vals(n, {0.0, 0.0});
  for (const auto& [freq, amp] : coeffs) {
    const std::complex<double> a = freq_weights ? amp * freq_weights->at(freq) : amp;
    if (a == std::complex<double>{0.0, 0.0}) {
      continue;
    }
    const long long step = ((freq % n) + n) % n;
    long long idx = 0;
    for (int k = 0; k < n; ++k) {
      vals[k] += a * unity[idx];
      idx += step;
      if (idx >= n) {
        idx -= n;
      }
    }
  }
  return vals;
}

double integrate_abs_pow(const std::map<long long, std::complex<double>>& coeffs, double p,
                         const QuadratureConfig& cfg,
                         const std::map<long long, double>* freq_weights = nullptr) {
  const double half_p = p / 2.0;
  double acc = 0;
  if (cfg.scheme == QuadScheme::Trapezoid) {
    const auto vals = sample_trapezoid(coeffs, cfg.sample_count, freq_weights);
    for (const auto& v : vals) {
      acc += std::pow(std::norm(v), half_p);
    }
    return acc * (kTwoPi / cfg.sample_count);
  }
  const Nodes nodes = gauss_legendre_nodes(cfg.sample_count);
  for (int k = 0; k < cfg.sample_count; ++k) {
    std::complex<double> v{0.0, 0.0};
    for (const auto& [freq, amp] : coeffs) {
      const std::complex<double> a = freq_weights ? amp * freq_weights->at(freq) : amp;
      v += a * std::polar(1.0, freq * nodes.tau[k]);
    }
    acc += nodes.weight[k] * std::pow(std::norm(v), half_p);
  }
  return acc;
}

}  // namespace

long long TimeSeriesSpec::max_frequency() const {
  long long m = 0;
  for (const auto& [freq, amp] : coeffs) {
    if (freq < 0) {
      throw InvalidArgument("frequencies must be non-negative");
    }
    m = std::max(m, freq);
  }
  return m;
}

double TimeSeriesSpec::period() const { return kTwoPi * b_gamma.get_d(); }

QuadratureConfig default_quadrature(long long max_R) {
  if (max_R < 0 || max_R > (1LL << 28)) {
    throw ResourceLimit("default_quadrature: frequency out of range");
  }
  return {next_pow2(4 * (max_R + 1)), QuadScheme::Trapezoid};
}

std::complex<double> orthogonality_integral(long long R1, long long R2, const Rat& b_gamma,
                                            const QuadratureConfig& cfg) {
  if (R1 < 0 || R2 < 0) {
    throw InvalidArgument("frequencies must be non-negative");
  }
  if (b_gamma <= 0) {
    throw InvalidArgument("b_gamma must be positive");
  }
  validate(cfg, std::max(R1, R2));
  const long long delta = R1 - R2;
  const double scale = b_gamma.get_d();
  std::complex<double> acc{0.0, 0.0};
  if (cfg.scheme == QuadScheme::Trapezoid) {
    const int n = cfg.sample_count;
    const long long step = ((delta % n) + n) % n;
    long long idx = 0;
    for (int k = 0; k < n; ++k) {
      acc += std::polar(1.0, kTwoPi * idx / n);
      idx += step;
      if (idx >= n) {
        idx -= n;
      }
    }
    return acc * (kTwoPi / n) * scale;
  }
  const Nodes nodes = gauss_legendre_nodes(cfg.sample_count);
  for (int k = 0; k < cfg.sample_count; ++k) {
    acc += nodes.weight[k] * std::polar(1.0, delta * nodes.tau[k]);
  }
  return acc * scale;
}

double lp_time_norm(const TimeSeriesSpec& ts, const Rat& p, const QuadratureConfig& cfg) {
  if (p < 1) {
    throw InvalidExponent("lp_time_norm requires p >= 1, got " + rat_to_string(p));
  }
  if (ts.b_gamma <= 0) {
    throw InvalidArgument("b_gamma must be positive");
  }
  validate(cfg, ts.max_frequency());
  const double pd = p.get_d();
  const double integral = integrate_abs_pow(ts.coeffs, pd, cfg) * ts.b_gamma.get_d();
  return std::pow(integral, 1.0 / pd);
}

double wainger_ratio(const TimeSeriesSpec& ts, const Rat& p, const QuadratureConfig& cfg) {
  if (p <= 2) {
    throw InvalidExponent("wainger_ratio requires p > 2, got " + rat_to_string(p));
  }
  const auto zero_it = ts.coeffs.find(0);
  if (zero_it != ts.coeffs.end() && zero_it->second != std::complex<double>{0.0, 0.0}) {
    throw InvalidArgument("wainger_ratio requires a_0 = 0");
  }
  validate(cfg, ts.max_frequency());

  bool any_nonzero = false;
  std::map<long long, double> weights;
  const double alpha = 0.5 - 1.0 / p.get_d();
  for (const auto& [freq, amp] : ts.coeffs) {
    weights[freq] = freq > 0 ? std::pow(static_cast<double>(freq), alpha) : 0.0;
    if (freq > 0 && amp != std::complex<double>{0.0, 0.0}) {
      any_nonzero = true;
    }
  }
  if (!any_nonzero) {
    throw ZeroDenominator("all coefficients vanish");
  }
  const double num = std::pow(integrate_abs_pow(ts.coeffs, p.get_d(), cfg), 1.0 / p.get_d());
  const double den = std::sqrt(integrate_abs_pow(ts.coeffs, 2.0, cfg, &weights));
  if (den == 0) {
    throw ZeroDenominator("weighted denominator vanishes");
  }
  return num / den;
}

SuiteReport run_orthogonality_suite(const Rat& b_gamma, long long r_max, double tolerance) {
  const QuadratureConfig cfg = default_quadrature(r_max);
  const double period = kTwoPi * b_gamma.get_d();
  double max_err = 0;
  for (long long r1 = 0; r1 <= r_max; ++r1) {
    for (long long r2 = 0; r2 <= r_max; ++r2) {
      const std::complex<double> got = orthogonality_integral(r1, r2, b_gamma, cfg);
      const double expected = r1 == r2 ? period : 0.0;
      max_err = std::max(max_err, std::abs(got - expected) / period);
    }
  }
  SuiteReport report{"orthogonality", max_err <= tolerance, max_err, {}};
  report.details["r_max"] = r_max;
  report.details["sample_count"] = cfg.sample_count;
  report.details["b_gamma"] = rat_to_string(b_gamma);
  report.details["tolerance"] = tolerance;
  return report;
}

SuiteReport run_parseval_suite(const Rat& b_gamma, std::uint64_t seed, int samples,
                               double tolerance) {
  double max_err = 0;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t state = seed + 0x6a09e667f3bcc909ULL * static_cast<std::uint64_t>(i + 1);
    TimeSeriesSpec ts;
    ts.b_gamma = b_gamma;
    const int support = 1 + static_cast<int>(splitmix64(state) % 64);
    for (int k = 0; k < support; ++k) {
      const long long freq = static_cast<long long>(splitmix64(state) % 257);
      ts.coeffs[freq] = gaussian(state);
    }
    double sum_sq = 0;
    for (const auto& [freq, amp] : ts.coeffs) {
      sum_sq += std::norm(amp);
    }
    const double expected = ts.period() * sum_sq;
    const double norm = lp_time_norm(ts, Rat(2), default_quadrature(ts.max_frequency()));
    max_err = std::max(max_err, std::abs(norm * norm - expected) / expected);
  }
  SuiteReport report{"parseval", max_err <= tolerance, max_err, {}};
  report.details["samples"] = samples;
  report.details["seed"] = seed;
  report.details["b_gamma"] = rat_to_string(b_gamma);
  report.details["tolerance"] = tolerance;
  return report;
}

SuiteReport run_wainger_suite(std::uint64_t seed, int samples, double tolerance) {
  double max_diff = 0;
  double max_ratio = 0;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t state = seed + 0xbb67ae8584caa73bULL * static_cast<std::uint64_t>(i + 1);
    TimeSeriesSpec ts;
    const int support = 1 + static_cast<int>(splitmix64(state) % 64);
    for (int k = 0; k < support; ++k) {
      const long long freq = 1 + static_cast<long long>(splitmix64(state) % 256);
      ts.coeffs[freq] = gaussian(state);
    }
    const Rat p = i % 2 == 0 ? Rat(4) : Rat(6);
    const int base = next_pow2(8 * (ts.max_frequency() + 1));
    const double r1 = wainger_ratio(ts, p, {base, QuadScheme::Trapezoid});
    const double r2 = wainger_ratio(ts, p, {base * 2, QuadScheme::Trapezoid});
    max_diff = std::max(max_diff, std::abs(r1 - r2) / r1);
    max_ratio = std::max(max_ratio, r1);
  }
  SuiteReport report{"wainger", max_diff <= tolerance, max_diff, {}};
  report.details["samples"] = samples;
  report.details["seed"] = seed;
  report.details["max_ratio"] = max_ratio;
  report.details["tolerance"] = tolerance;
  return report;
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["pass"] = report.pass;
  j["max_error"] = report.max_error;
  j["details"] = report.details;
  return j;
}

}  // namespace liespec
