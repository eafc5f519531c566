#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "liespec/root_system.hpp"

namespace liespec {

/// Shifted highest-weight coefficients: nu_j >= 1 for every component.
/// (The unshifted coefficients are nu_j - 1.)
struct HighestWeight {
  std::vector<int> nu;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// One integer point of the spectrum: the eigenvalue is R / (b_table * gamma).
struct EigenvalueRecord {
  long long R = 0;
  std::vector<HighestWeight> weights;  // sorted lexicographically
  std::vector<Int> weyl_dims;          // parallel to weights; empty if skipped
  Int mult = 0;                        // sum of squared dimensions; 0 if skipped

  long long count() const { return static_cast<long long>(weights.size()); }  // N_R
};

struct SpectrumTable {
  GroupFamily family;
  long long R_max = 0;
  std::vector<EigenvalueRecord> records;  // strictly increasing in R
};

struct EnumerationOptions {
  unsigned long long cell_budget = 500'000'000;  // max search-box cells
  bool with_dimensions = true;
  int threads = 1;
  // Overrides the derived per-component search bound (testing hook for the
  // box-enlargement completeness check).
  std::optional<long long> box_override;
};

/// Per-family closed-form eigenvalue numerator R (sum of squares minus the
/// closed-form R0). Throws DimensionMismatch / InvalidArgument.
long long eigenvalue_closed_form(const RootSystem& rs, const HighestWeight& nu);

/// Root-theoretic eigenvalue numerator: with w the weight sum of (nu_j - 1)
/// fundamental weights, returns c^2 (<w+eta, w+eta> - <eta, eta>) exactly.
long long eigenvalue_root_form(const RootSystem& rs, const HighestWeight& nu);

/// n = A nu. Satisfies sum n_k^2 - R0 = eigenvalue_root_form(rs, nu).
std::vector<long long> integer_vector(const RootSystem& rs, const HighestWeight& nu);

/// Dimension of the irreducible representation with the given weight:
/// product over positive roots of (w+eta, a) / (eta, a), an exact integer.
Int weyl_dimension(const RootSystem& rs, const HighestWeight& nu);

/// Per-component cap of the enumeration box: every weight with eigenvalue
/// numerator <= R_max has |nu|_2 <= sqrt(R_max + R0) / sigma_min(A).
long long search_box_bound(const RootSystem& rs, long long R_max);

/// Complete table of all R <= R_max. The search box is derived from the
/// smallest singular value of A, so no admissible weight is missed.
SpectrumTable enumerate_spectrum(const RootSystem& rs, long long R_max,
                                 const EnumerationOptions& options = {});

/// CSV rows: family,rank,R,N_R,mult,weights with weight tuples dash-joined
/// and records separated by semicolons (e.g. "1-1;2-1").
std::string to_csv(const SpectrumTable& table);

nlohmann::ordered_json to_json(const SpectrumTable& table);

}  // namespace liespec
