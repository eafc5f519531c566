#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <liespec/errors.hpp>
#include <liespec/root_system.hpp>

#include <algorithm>
#include <vector>

using namespace liespec;

namespace {

// Families at the ranks exercised throughout this suite.
std::vector<GroupFamily> sample_families() {
  std::vector<GroupFamily> out;
  for (int l = 1; l <= 8; ++l) out.emplace_back(FamilyLabel::A, l);
  for (int l = 2; l <= 8; ++l) out.emplace_back(FamilyLabel::B, l);
  for (int l = 3; l <= 8; ++l) out.emplace_back(FamilyLabel::C, l);
  for (int l = 4; l <= 8; ++l) out.emplace_back(FamilyLabel::D, l);
  out.emplace_back(FamilyLabel::E8, 8);
  out.emplace_back(FamilyLabel::F4, 4);
  out.emplace_back(FamilyLabel::G2, 2);
  return out;
}

// Fraction-free determinant (Bareiss); independent rank oracle.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int gram_det(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::vector<std::vector<Int>> g(cols, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < rows; ++k) {
        acc += Int(static_cast<long>(a[k][i])) * Int(static_cast<long>(a[k][j]));
      }
      g[i][j] = acc;
    }
  }
  return bareiss_det(g);
}

}  // namespace

TEST_CASE("rank validity windows") {
  CHECK_THROWS_AS(GroupFamily(FamilyLabel::A, 0), InvalidRank);
  CHECK_THROWS_AS(GroupFamily(FamilyLabel::B, 1), InvalidRank);
  CHECK_THROWS_AS(GroupFamily(FamilyLabel::C, 2), InvalidRank);
  CHECK_THROWS_AS(GroupFamily(FamilyLabel::D, 3), InvalidRank);
  CHECK_THROWS_AS(GroupFamily(FamilyLabel::E8, 7), InvalidRank);
  CHECK_THROWS_AS(GroupFamily(FamilyLabel::F4, 5), InvalidRank);
  CHECK_THROWS_AS(GroupFamily(FamilyLabel::G2, 3), InvalidRank);
  CHECK_NOTHROW(GroupFamily(FamilyLabel::A, 1));
  CHECK_NOTHROW(GroupFamily(FamilyLabel::D, 4));
}

TEST_CASE("family parsing") {
  CHECK(GroupFamily::parse("A3") == GroupFamily(FamilyLabel::A, 3));
  CHECK(GroupFamily::parse("g2") == GroupFamily(FamilyLabel::G2, 2));
  CHECK(GroupFamily::parse("E8").label() == FamilyLabel::E8);
  CHECK_THROWS_AS(GroupFamily::parse("E6"), UnsupportedFamily);
  CHECK_THROWS_AS(GroupFamily::parse("E7"), UnsupportedFamily);
  CHECK_THROWS_AS(GroupFamily::parse("X4"), InvalidArgument);
  CHECK_THROWS_AS(GroupFamily::parse("B"), InvalidArgument);
  CHECK_THROWS_AS(GroupFamily::parse("B1"), InvalidRank);
}

TEST_CASE("inner product basics") {
  CHECK(inner({1, 0}, {0, 1}) == 0);
  const RatVec eta_g2{-1, -2, 3};
  CHECK(inner(eta_g2, eta_g2) == 14);
  const RatVec high_g2{-1, -1, 2};
  CHECK(inner(high_g2, eta_g2) == 9);
  CHECK_THROWS_AS(inner({1, 0}, {1, 0, 0}), DimensionMismatch);
}

TEST_CASE("positive root counts and group dimensions") {
  for (const auto& fam : sample_families()) {
    const RootSystem rs = build_root_system(fam);
    const long long l = fam.rank();
    long long expected_roots = 0;
    long long expected_dim = 0;
    switch (fam.label()) {
      case FamilyLabel::A:
        expected_roots = l * (l + 1) / 2;
        expected_dim = l * (l + 2);
        break;
      case FamilyLabel::B:
        expected_roots = l * l;
        expected_dim = l * (2 * l + 1);
        break;
      case FamilyLabel::C:
        expected_roots = l * l;
        expected_dim = l * (2 * l + 1);
        break;
      case FamilyLabel::D:
        expected_roots = l * (l - 1);
        expected_dim = l * (2 * l - 1);
        break;
      case FamilyLabel::E8:
        expected_roots = 120;
        expected_dim = 248;
        break;
      case FamilyLabel::F4:
        expected_roots = 24;
        expected_dim = 52;
        break;
      case FamilyLabel::G2:
        expected_roots = 6;
        expected_dim = 14;
        break;
    }
    CAPTURE(fam.name());
    CHECK(static_cast<long long>(rs.positive_roots.size()) == expected_roots);
    CHECK(rs.group_dim == expected_dim);
    CHECK(static_cast<int>(rs.simple_roots.size()) == fam.rank());
    CHECK(static_cast<int>(rs.fundamental_weights.size()) == fam.rank());
  }
}

TEST_CASE("fundamental weight duality (omega_i, alpha_j) = delta_ij (alpha_j, alpha_j)/2") {
  for (const auto& fam : sample_families()) {
    const RootSystem rs = build_root_system(fam);
    CAPTURE(fam.name());
    for (int i = 0; i < fam.rank(); ++i) {
      for (int j = 0; j < fam.rank(); ++j) {
        const Rat lhs = inner(rs.fundamental_weights[i], rs.simple_roots[j]);
        const Rat rhs = i == j ? inner(rs.simple_roots[j], rs.simple_roots[j]) / 2 : Rat(0);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("Weyl vector pairs as half the root square with every simple root") {
  for (const auto& fam : sample_families()) {
    const RootSystem rs = build_root_system(fam);
    CAPTURE(fam.name());
    for (const auto& alpha : rs.simple_roots) {
      CHECK(inner(rs.weyl_vector, alpha) == inner(alpha, alpha) / 2);
    }
  }
}

TEST_CASE("known Weyl vectors") {
  CHECK(build_root_system({FamilyLabel::G2, 2}).weyl_vector == RatVec{-1, -2, 3});
  CHECK(build_root_system({FamilyLabel::F4, 4}).weyl_vector ==
        RatVec{Rat(11, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2)});
  CHECK(build_root_system({FamilyLabel::E8, 8}).weyl_vector ==
        RatVec{0, 1, 2, 3, 4, 5, 6, 23});
  CHECK(build_root_system({FamilyLabel::A, 1}).weyl_vector == RatVec{Rat(1, 2), Rat(-1, 2)});
  // Classical closed forms at one larger rank each.
  const RootSystem b3 = build_root_system({FamilyLabel::B, 3});
  CHECK(b3.weyl_vector == RatVec{Rat(5, 2), Rat(3, 2), Rat(1, 2)});
  const RootSystem c3 = build_root_system({FamilyLabel::C, 3});
  CHECK(c3.weyl_vector == RatVec{3, 2, 1});
  const RootSystem d4 = build_root_system({FamilyLabel::D, 4});
  CHECK(d4.weyl_vector == RatVec{3, 2, 1, 0});
}

TEST_CASE("b from the highest long root matches the per-family closed forms") {
  for (const auto& fam : sample_families()) {
    const RootSystem rs = build_root_system(fam);
    const long long l = fam.rank();
    long long expected = 0;
    switch (fam.label()) {
      case FamilyLabel::A:
        expected = 2 * l + 2;
        break;
      case FamilyLabel::B:
        expected = 4 * l - 2;
        break;
      case FamilyLabel::C:
        expected = 4 * (l + 1);
        break;
      case FamilyLabel::D:
        expected = 4 * l - 4;
        break;
      case FamilyLabel::E8:
        expected = 60;
        break;
      case FamilyLabel::F4:
        expected = 18;
        break;
      case FamilyLabel::G2:
        expected = 24;
        break;
    }
    CAPTURE(fam.name());
    CHECK(rs.b_root == expected);
  }
}

TEST_CASE("highest long root: a root, longest, and maximal in the root order") {
  for (const auto& fam : sample_families()) {
    const RootSystem rs = build_root_system(fam);
    CAPTURE(fam.name());
    CHECK(std::find(rs.positive_roots.begin(), rs.positive_roots.end(), rs.highest_long_root) !=
          rs.positive_roots.end());
    const Rat high_norm = inner(rs.highest_long_root, rs.highest_long_root);
    for (const auto& root : rs.positive_roots) {
      CHECK(inner(root, root) <= high_norm);
      const auto coeffs = solve_in_basis(rs.simple_roots, add(rs.highest_long_root, scale(-1, root)));
      REQUIRE(coeffs.has_value());
      for (const auto& c : *coeffs) {
        CHECK(c >= 0);
      }
    }
  }
}

TEST_CASE("integerizing scale c") {
  CHECK(build_root_system({FamilyLabel::A, 4}).scale_c == 5);
  CHECK(build_root_system({FamilyLabel::B, 3}).scale_c == 2);
  CHECK(build_root_system({FamilyLabel::C, 3}).scale_c == 1);
  CHECK(build_root_system({FamilyLabel::D, 5}).scale_c == 2);
  CHECK(build_root_system({FamilyLabel::E8, 8}).scale_c == 2);
  CHECK(build_root_system({FamilyLabel::F4, 4}).scale_c == 2);
  CHECK(build_root_system({FamilyLabel::G2, 2}).scale_c == 1);
}

TEST_CASE("derived b_table and R0 reproduce the closed-form constants") {
  for (const auto& fam : sample_families()) {
    const RootSystem rs = build_root_system(fam);
    CAPTURE(fam.name());
    CHECK(rs.b_table == rs.scale_c * rs.scale_c * rs.b_root);
    CHECK(rs.b_table == closed_form_b(fam));
    CHECK(rs.r0 == closed_form_r0(fam));
  }
}

TEST_CASE("fixed constant rows") {
  CHECK(closed_form_b({FamilyLabel::G2, 2}) == 24);
  CHECK(closed_form_r0({FamilyLabel::G2, 2}) == 14);
  CHECK(closed_form_b({FamilyLabel::F4, 4}) == 72);
  CHECK(closed_form_r0({FamilyLabel::F4, 4}) == 156);
  CHECK(closed_form_b({FamilyLabel::E8, 8}) == 240);
  CHECK(closed_form_r0({FamilyLabel::E8, 8}) == 2480);
  // Rank-1 sanity: b = 2*2^3 = 16, R0 = 2.
  const RootSystem a1 = build_root_system({FamilyLabel::A, 1});
  CHECK(a1.b_root == 4);
  CHECK(a1.scale_c == 2);
  CHECK(a1.b_table == 16);
  CHECK(a1.r0 == 2);
}

TEST_CASE("matrix A fixed entries and shape") {
  CHECK(matrix_A({FamilyLabel::G2, 2}) == IntMatrix{{1, 1}, {1, 2}, {0, 1}});
  CHECK(matrix_A({FamilyLabel::F4, 4}) ==
        IntMatrix{{2, 4, 3, 2}, {2, 2, 1, 0}, {0, 2, 1, 0}, {0, 0, 1, 0}});
  const IntMatrix c3 = matrix_A({FamilyLabel::C, 3});
  // upper-triangular ones times (1,1,1) gives (3,2,1)
  std::vector<long long> prod(3, 0);
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) {
      prod[k] += c3[k][j];
    }
  }
  CHECK(prod == std::vector<long long>{3, 2, 1});

  for (const auto& fam : sample_families()) {
    const IntMatrix a = matrix_A(fam);
    CAPTURE(fam.name());
    const int expected_rows =
        (fam.label() == FamilyLabel::A || fam.label() == FamilyLabel::G2) ? fam.rank() + 1
                                                                          : fam.rank();
    CHECK(static_cast<int>(a.size()) == expected_rows);
    CHECK(gram_det(a) != 0);  // full column rank
  }
}

TEST_CASE("positive roots are sorted lexicographically") {
  const RootSystem rs = build_root_system({FamilyLabel::G2, 2});
  const std::vector<RatVec> expected{
      {-2, 1, 1}, {-1, -1, 2}, {-1, 0, 1}, {0, -1, 1}, {1, -2, 1}, {1, -1, 0},
  };
  CHECK(rs.positive_roots == expected);
}

TEST_CASE("JSON serialization is stable and complete") {
  const RootSystem rs = build_root_system({FamilyLabel::G2, 2});
  const auto j = to_json(rs);
  const std::vector<std::string> keys = {"family", "rank",    "ambient_dim", "roots",
                                         "b_root", "c",       "b_table",     "R0",
                                         "matrix_A", "group_dim"};
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    REQUIRE(i < keys.size());
    CHECK(it.key() == keys[i]);
  }
  CHECK(j["family"] == "G2");
  CHECK(j["rank"] == 2);
  CHECK(j["ambient_dim"] == 3);
  CHECK(j["b_root"] == 24);
  CHECK(j["c"] == 1);
  CHECK(j["b_table"] == 24);
  CHECK(j["R0"] == 14);
  CHECK(j["group_dim"] == 14);
  CHECK(j["roots"].size() == 6);
  CHECK(j["roots"][0] == nlohmann::ordered_json({{-2, 1}, {1, 1}, {1, 1}}));
  CHECK(j["matrix_A"] == nlohmann::ordered_json({{1, 1}, {1, 2}, {0, 1}}));
  CHECK(to_json(rs).dump() == j.dump());
}
