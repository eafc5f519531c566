#include "liespec/sum_of_squares.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <thread>

#include "liespec/errors.hpp"

namespace liespec {

namespace {

long long isqrt_floor(long long n) {
  if (n < 0) {
    return -1;
  }
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

/// Estimated lattice points enumerated by the non-negative orthant scan:
/// the orthant slice of the s-ball of radius sqrt(R), padded for boundary
/// effects.
double orthant_point_estimate(int s, long long R_max) {
  const double shalf = s / 2.0;
  const double log_vol = shalf * std::log(M_PI) + shalf * std::log(static_cast<double>(R_max) + 1.0) -
                         std::lgamma(shalf + 1.0) - s * std::log(2.0);
  const double interior = std::exp(log_vol);
  // Boundary term: surface count grows like s * R^{(s-1)/2} / 2^s.
  const double boundary =
      s * std::exp((shalf - 0.5) * std::log(static_cast<double>(R_max) + 1.0) - s * std::log(2.0) +
                   shalf * std::log(M_PI) - std::lgamma(shalf + 0.5));
  return interior + boundary + 1000.0;
}

void brute_scan(int s, long long R_max, CountVariant variant, int thread_id, int threads,
                std::vector<std::uint64_t>& counts) {
  const long long top = isqrt_floor(R_max);
  const int lo_coord = variant == CountVariant::PositiveOnly ? 1 : 0;

  // depth-first over coordinates; `base` is the partial sum of squares and
  // `weight` the accumulated sign multiplicity (AllIntegers only).
  auto recurse = [&](auto&& self, int depth, long long base, std::uint64_t weight) -> void {
    const long long rem = R_max - base;
    const long long hi = isqrt_floor(rem);
    if (depth == s - 1) {
      if (variant == CountVariant::AllIntegers) {
        if (lo_coord == 0) {
          counts[base] += weight;
        }
        for (long long v = 1; v <= hi; ++v) {
          counts[base + v * v] += 2 * weight;
        }
      } else {
        for (long long v = 1; v <= hi; ++v) {
          counts[base + v * v] += weight;
        }
      }
      return;
    }
    for (long long v = lo_coord; v <= hi; ++v) {
      const std::uint64_t w =
          (variant == CountVariant::AllIntegers && v > 0) ? 2 * weight : weight;
      self(self, depth + 1, base + v * v, w);
    }
  };

  if (s == 1) {
    if (thread_id != 0) {
      return;
    }
    recurse(recurse, 0, 0, 1);
    return;
  }
  // Outermost coordinate is dealt round-robin across threads: small values
  // carry the most work, so striding balances better than chunking.
  for (long long v = lo_coord; v <= top; ++v) {
    if ((v - lo_coord) % threads != thread_id) {
      continue;
    }
    const std::uint64_t w = (variant == CountVariant::AllIntegers && v > 0) ? 2 : 1;
    recurse(recurse, 1, v * v, w);
  }
}

}  // namespace

RepCountTable count_brute(int s, long long R_max, CountVariant variant,
                          const BruteOptions& options) {
  if (s < 1 || R_max < 0) {
    throw InvalidArgument("count_brute requires s >= 1 and R_max >= 0");
  }
  if (static_cast<long long>(s) * R_max > options.product_budget) {
    std::ostringstream msg;
    msg << "s * R_max = " << static_cast<long long>(s) * R_max << " exceeds the brute budget "
        << options.product_budget;
    throw ResourceLimit(msg.str());
  }
  if (orthant_point_estimate(s, R_max) > options.point_budget) {
    throw ResourceLimit("brute enumeration would visit too many lattice points");
  }

  const int threads = std::max(1, options.threads);
  std::vector<std::vector<std::uint64_t>> local(
      threads, std::vector<std::uint64_t>(static_cast<std::size_t>(R_max) + 1, 0));
  if (threads == 1) {
    brute_scan(s, R_max, variant, 0, 1, local[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] { brute_scan(s, R_max, variant, t, threads, local[t]); });
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  RepCountTable table{s, variant, R_max, CountBackend::BruteForce, {}};
  table.counts.resize(static_cast<std::size_t>(R_max) + 1);
  for (long long r = 0; r <= R_max; ++r) {
    std::uint64_t total = 0;
    for (int t = 0; t < threads; ++t) {
      total += local[t][r];
    }
    table.counts[r] = Int(static_cast<unsigned long>(total));
  }
  return table;
}

RepCountTable count_theta(int s, long long R_max, CountVariant variant) {
  if (s < 1 || R_max < 0) {
    throw InvalidArgument("count_theta requires s >= 1 and R_max >= 0");
  }
  if (R_max > 2'000'000) {
    throw ResourceLimit("count_theta: R_max above 2000000");
  }
  const std::size_t n = static_cast<std::size_t>(R_max) + 1;
  std::vector<Int> cur(n), next(n);
  cur[0] = 1;
  for (int power = 0; power < s; ++power) {
    for (auto& x : next) {
      x = 0;
    }
    if (variant == CountVariant::AllIntegers) {
      for (std::size_t r = 0; r < n; ++r) {
        next[r] = cur[r];  // k = 0 term
      }
    }
    for (long long k = 1; k * k <= R_max; ++k) {
      const std::size_t k2 = static_cast<std::size_t>(k * k);
      if (variant == CountVariant::AllIntegers) {
        for (std::size_t r = k2; r < n; ++r) {
          mpz_addmul_ui(next[r].get_mpz_t(), cur[r - k2].get_mpz_t(), 2);
        }
      } else {
        for (std::size_t r = k2; r < n; ++r) {
          next[r] += cur[r - k2];
        }
      }
    }
    cur.swap(next);
  }
  RepCountTable table{s, variant, R_max, CountBackend::ThetaConvolution, {}};
  table.counts = std::move(cur);
  return table;
}

RepCountTable count_divisor_formula(int s, long long R_max) {
  if (s != 2 && s != 4) {
    throw UnsupportedS("divisor formulas exist for s = 2 and s = 4 only, got s = " +
                       std::to_string(s));
  }
  if (R_max < 0) {
    throw InvalidArgument("R_max must be >= 0");
  }
  if (R_max > 50'000'000) {
    throw ResourceLimit("count_divisor_formula: R_max above 50000000");
  }
  const std::size_t n = static_cast<std::size_t>(R_max) + 1;
  std::vector<long long> acc(n, 0);
  if (s == 2) {
    for (long long d = 1; d <= R_max; ++d) {
      const int sign = d % 4 == 1 ? 1 : (d % 4 == 3 ? -1 : 0);
      if (sign == 0) {
        continue;
      }
      for (long long m = d; m <= R_max; m += d) {
        acc[m] += sign;
      }
    }
  } else {
    for (long long d = 1; d <= R_max; ++d) {
      if (d % 4 == 0) {
        continue;
      }
      for (long long m = d; m <= R_max; m += d) {
        acc[m] += d;
      }
    }
  }
  RepCountTable table{s, CountVariant::AllIntegers, R_max, CountBackend::DivisorFormula, {}};
  table.counts.resize(n);
  table.counts[0] = 1;
  const long factor = s == 2 ? 4 : 8;
  for (std::size_t r = 1; r < n; ++r) {
    table.counts[r] = Int(factor) * Int(static_cast<long>(acc[r]));
  }
  return table;
}

GrowthReport growth_report(int s, long long R_lo, long long R_hi) {
  if (s < 3) {
    throw InvalidArgument("growth_report requires s >= 3");
  }
  if (R_lo < 2 || (s == 3 && R_lo < 4) || (s == 4 && R_lo < 3)) {
    throw InvalidArgument("R_lo too small for the s = " + std::to_string(s) +
                          " normalization to be positive");
  }
  if (R_hi < R_lo) {
    throw InvalidArgument("empty range");
  }
  if (R_hi > 2'000'000) {
    throw ResourceLimit("growth_report: R_hi above 2000000");
  }

  const RepCountTable table = count_theta(s, R_hi, CountVariant::AllIntegers);
  GrowthReport report{s, R_lo, R_hi, 0, 0, 0, 0, -1};
  bool first = true;
  for (long long r = R_lo; r <= R_hi; ++r) {
    const double count = table.counts[r].get_d();
    const double x = static_cast<double>(r);
    if (s >= 5) {
      const double ratio = count / std::pow(x, (s - 2) / 2.0);
      if (first) {
        report.c1_hat = report.c2_hat = ratio;
        first = false;
      } else {
        report.c1_hat = std::min(report.c1_hat, ratio);
        report.c2_hat = std::max(report.c2_hat, ratio);
      }
    } else if (s == 4) {
      report.max_ratio = std::max(report.max_ratio, count / (x * std::log(std::log(x))));
    } else {
      if (count == 0) {
        ++report.zero_count;
        report.largest_zero_R = r;
      } else {
        const double norm = std::sqrt(x) * std::log(4 * x) * std::log(std::log(4 * x));
        report.max_ratio = std::max(report.max_ratio, count / norm);
      }
    }
  }
  return report;
}

const char* variant_name(CountVariant v) {
  return v == CountVariant::AllIntegers ? "all" : "positive";
}

const char* backend_name(CountBackend b) {
  switch (b) {
    case CountBackend::BruteForce:
      return "brute";
    case CountBackend::ThetaConvolution:
      return "theta";
    case CountBackend::DivisorFormula:
      return "divisor";
  }
  return "?";
}

std::string to_csv(const RepCountTable& table) {
  std::ostringstream out;
  out << "s,variant,backend,R,count\n";
  for (long long r = 0; r <= table.R_max; ++r) {
    out << table.s << "," << variant_name(table.variant) << "," << backend_name(table.backend)
        << "," << r << "," << table.counts[r].get_str() << "\n";
  }
  return out.str();
}

}  // namespace liespec
