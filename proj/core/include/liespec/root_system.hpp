#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "liespec/rational.hpp"

namespace liespec {

enum class FamilyLabel { A, B, C, D, E8, F4, G2 };

/// A simple-group family label with its rank, validated at construction.
///
/// Validity windows: A requires rank >= 1, B >= 2, C >= 3, D >= 4; the
/// exceptional labels carry fixed ranks 8, 4 and 2.
class GroupFamily {
 public:
  GroupFamily(FamilyLabel label, int rank);

  /// Parses "A3", "B2", ..., "E8", "F4", "G2". E6/E7 are rejected with
  /// UnsupportedFamily, other unknown text with InvalidArgument.
  static GroupFamily parse(std::string_view text);

  FamilyLabel label() const { return label_; }
  int rank() const { return rank_; }

  /// Short label without the rank: "A", "B", ..., "E8", "F4", "G2".
  std::string label_name() const;
  /// Full name with rank, e.g. "A3" or "G2".
  std::string name() const;

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;

 private:
  FamilyLabel label_;
  int rank_;
};

using IntMatrix = std::vector<std::vector<long long>>;

/// Exact root and weight data for one family at one rank, together with
/// the integer constants consumed by the spectrum machinery.
///
/// All coordinate data is exact rational in the ambient orthonormal basis.
/// Values are immutable after construction and safe to share across threads.
struct RootSystem {
  GroupFamily family;
  int ambient_dim;

  std::vector<RatVec> positive_roots;  // lexicographic coordinate order
  std::vector<RatVec> simple_roots;
  std::vector<RatVec> fundamental_weights;
  RatVec weyl_vector;       // half the sum of positive roots
  RatVec highest_long_root;

  long long b_root;   // <a,a> + 2<a,eta> for the highest long root a
  long long scale_c;  // least c making c*omega_j integral for every j
  long long b_table;  // c^2 * b_root
  long long r0;       // <c*eta, c*eta>

  IntMatrix matrix_a;  // m_spec x rank, full column rank
  int group_dim;       // 2 * |positive_roots| + rank

  int rank() const { return family.rank(); }
  int m_spec() const { return static_cast<int>(matrix_a.size()); }
};

/// Builds the full root system. Throws InvalidRank / UnsupportedFamily.
RootSystem build_root_system(const GroupFamily& family);

/// The integer matrix mapping shifted weight coefficients to the squared
/// coordinates of the eigenvalue formula (m_spec rows, rank columns).
IntMatrix matrix_A(const GroupFamily& family);

/// Closed-form constants b and R0 per family, as published; the derived
/// b_table/r0 of build_root_system must reproduce them exactly.
long long closed_form_b(const GroupFamily& family);
long long closed_form_r0(const GroupFamily& family);

/// Stable-key-order JSON: family, rank, ambient_dim, roots (as [num,den]
/// pairs), b_root, c, b_table, R0, matrix_A (row-major), group_dim.
nlohmann::ordered_json to_json(const RootSystem& rs);

}  // namespace liespec
