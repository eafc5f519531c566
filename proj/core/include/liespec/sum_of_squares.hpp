#pragma once

#include <string>
#include <vector>

#include "liespec/rational.hpp"

namespace liespec {

enum class CountVariant { AllIntegers, PositiveOnly };
enum class CountBackend { BruteForce, ThetaConvolution, DivisorFormula };

/// counts[R] = number of ordered s-tuples with squares summing to R,
/// for R = 0..R_max. AllIntegers counts tuples over Z (signs and zeros
/// distinct), PositiveOnly over {1, 2, ...}.
struct RepCountTable {
  int s = 0;
  CountVariant variant = CountVariant::AllIntegers;
  long long R_max = 0;
  CountBackend backend = CountBackend::ThetaConvolution;
  std::vector<Int> counts;
};

struct BruteOptions {
  // The literal product guard from the operation contract plus an estimate
  // of the actual enumeration cost (lattice points of the search ball).
  long long product_budget = 48'000;          // bound on s * R_max
  double point_budget = 4e9;                  // bound on enumerated points
  int threads = 1;
};

/// Direct lattice enumeration. For AllIntegers the non-negative orthant is
/// enumerated and each tuple weighted 2^(#nonzero) for the sign choices.
RepCountTable count_brute(int s, long long R_max, CountVariant variant,
                          const BruteOptions& options = {});

/// Coefficients of the s-th power of the square-indicator series, by
/// truncated Cauchy convolution in exact integers.
RepCountTable count_theta(int s, long long R_max, CountVariant variant);

/// Classical divisor-sum formulas, AllIntegers only:
///   s=2: 4 (d_{1 mod 4}(R) - d_{3 mod 4}(R));  s=4: 8 sum_{d|R, 4 !| d} d.
/// Throws UnsupportedS for s outside {2, 4}.
RepCountTable count_divisor_formula(int s, long long R_max);

/// Empirical growth data for counts over [R_lo, R_hi] (AllIntegers):
///  - s >= 5: min/max of r(R) / R^((s-2)/2)
///  - s  = 4: max of r(R) / (R log log R)
///  - s  = 3: max of r(R) / (sqrt(R) log(4R) log log(4R)) over nonzero r,
///            plus the count of R with r(R) = 0 and the largest such R.
struct GrowthReport {
  int s = 0;
  long long R_lo = 0;
  long long R_hi = 0;
  double c1_hat = 0;            // s >= 5
  double c2_hat = 0;            // s >= 5
  double max_ratio = 0;         // s = 3, 4
  long long zero_count = 0;     // s = 3
  long long largest_zero_R = -1;
};

GrowthReport growth_report(int s, long long R_lo, long long R_hi);

/// CSV rows: s,variant,backend,R,count.
std::string to_csv(const RepCountTable& table);

const char* variant_name(CountVariant v);
const char* backend_name(CountBackend b);

}  // namespace liespec
