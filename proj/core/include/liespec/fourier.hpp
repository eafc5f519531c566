#pragma once

#include <nlohmann/json.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "liespec/rational.hpp"

namespace liespec {

/// Finitely many complex amplitudes indexed by non-negative integer
/// frequencies R; stands in for projection values at a fixed point.
/// The underlying signal is sum_R a_R e^{i R t / b_gamma} on [0, T] with
/// T = 2 pi b_gamma (kept as the exact multiple of 2 pi).
struct TimeSeriesSpec {
  std::map<long long, std::complex<double>> coeffs;
  Rat b_gamma = Rat(1);

  long long max_frequency() const;
  double period() const;  // T = 2 pi b_gamma, as a double
};

enum class QuadScheme { Trapezoid, GaussLegendre };

struct QuadratureConfig {
  int sample_count = 0;  // power of two
  QuadScheme scheme = QuadScheme::Trapezoid;
};

/// Trapezoid grid with sample_count = next power of two >= 4 (max_R + 1);
/// exact for trigonometric polynomials below the Nyquist limit.
QuadratureConfig default_quadrature(long long max_R);

/// Integral of e^{i (R1 - R2) t / b_gamma} over one period [0, 2 pi b_gamma].
/// Equals T when R1 = R2 and vanishes otherwise.
std::complex<double> orthogonality_integral(long long R1, long long R2, const Rat& b_gamma,
                                            const QuadratureConfig& cfg);

/// (integral_0^T |sum_R a_R e^{i R t / b_gamma}|^p dt)^{1/p} by quadrature.
double lp_time_norm(const TimeSeriesSpec& ts, const Rat& p, const QuadratureConfig& cfg);

/// || sum a_R e^{iR tau} ||_{L^p[0,2pi]} / || sum R^alpha a_R e^{iR tau} ||_{L^2[0,2pi]}
/// with alpha = 1/2 - 1/p. Requires p > 2 and a_0 = 0.
double wainger_ratio(const TimeSeriesSpec& ts, const Rat& p, const QuadratureConfig& cfg);

struct SuiteReport {
  std::string suite;
  bool pass = false;
  double max_error = 0;
  nlohmann::ordered_json details;
};

/// Gram matrix of {e^{iRt/b_gamma} : R <= r_max} against T * Identity.
SuiteReport run_orthogonality_suite(const Rat& b_gamma, long long r_max, double tolerance);

/// Random coefficient vectors: squared L2 norm against T * sum |a_R|^2.
SuiteReport run_parseval_suite(const Rat& b_gamma, std::uint64_t seed, int samples,
                               double tolerance);

/// Random vectors with a_0 = 0, p alternating in {4, 6}: ratio stability
/// under doubling of the quadrature resolution, plus the running maximum.
SuiteReport run_wainger_suite(std::uint64_t seed, int samples, double tolerance);

nlohmann::ordered_json to_json(const SuiteReport& report);

}  // namespace liespec
