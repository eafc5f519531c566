#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <liespec/errors.hpp>
#include <liespec/spectrum.hpp>

#include <set>
#include <vector>

using namespace liespec;

namespace {

// Walks the box [1, cap]^rank, calling fn on every weight.
template <typename Fn>
void for_each_weight(int rank, int cap, Fn&& fn) {
  std::vector<int> nu(rank, 1);
  while (true) {
    fn(nu);
    int j = rank - 1;
    while (j >= 0 && nu[j] == cap) {
      nu[j] = 1;
      --j;
    }
    if (j < 0) {
      return;
    }
    ++nu[j];
  }
}

long long sum_of_squares_minus_r0(const RootSystem& rs, const HighestWeight& nu) {
  long long ss = 0;
  for (long long n : integer_vector(rs, nu)) {
    ss += n * n;
  }
  return ss - rs.r0;
}

}  // namespace

TEST_CASE("closed-form examples") {
  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  CHECK(eigenvalue_closed_form(g2, {{1, 1}}) == 0);
  CHECK(eigenvalue_closed_form(g2, {{2, 1}}) == 12);
  const RootSystem f4 = build_root_system({FamilyLabel::F4, 4});
  CHECK(eigenvalue_closed_form(f4, {{1, 1, 1, 1}}) == 0);
  // The fourth squared coordinate is nu_3 (the only weight with a last
  // ambient component), pinned here against the matrix route.
  CHECK(eigenvalue_closed_form(f4, {{1, 1, 1, 2}}) == 48);
  CHECK(eigenvalue_closed_form(f4, {{1, 1, 1, 2}}) == eigenvalue_root_form(f4, {{1, 1, 1, 2}}));
  CHECK(eigenvalue_closed_form(f4, {{1, 1, 2, 1}}) == eigenvalue_root_form(f4, {{1, 1, 2, 1}}));
}

TEST_CASE("root-form examples") {
  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  CHECK(eigenvalue_root_form(g2, {{1, 1}}) == 0);
  CHECK(eigenvalue_root_form(g2, {{2, 1}}) == 12);
  const RootSystem a1 = build_root_system({FamilyLabel::A, 1});
  for (int k = 0; k <= 6; ++k) {
    CHECK(eigenvalue_root_form(a1, {{k + 1}}) == 2 * k * (k + 2));
    CHECK(eigenvalue_closed_form(a1, {{k + 1}}) == 2 * k * (k + 2));
  }
}

TEST_CASE("integer vector examples") {
  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  CHECK(integer_vector(g2, {{1, 1}}) == std::vector<long long>{2, 3, 1});
  CHECK(integer_vector(g2, {{2, 1}}) == std::vector<long long>{3, 4, 1});
  const RootSystem e8 = build_root_system({FamilyLabel::E8, 8});
  long long ss = 0;
  for (long long n : integer_vector(e8, {{1, 1, 1, 1, 1, 1, 1, 1}})) {
    ss += n * n;
  }
  CHECK(ss == 2480);
}

TEST_CASE("argument validation") {
  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  CHECK_THROWS_AS(eigenvalue_closed_form(g2, {{1, 1, 1}}), DimensionMismatch);
  CHECK_THROWS_AS(eigenvalue_root_form(g2, {{1}}), DimensionMismatch);
  CHECK_THROWS_AS(integer_vector(g2, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(weyl_dimension(g2, {{1, -1}}), InvalidArgument);
}

TEST_CASE("three eigenvalue routes agree on small boxes") {
  std::vector<std::pair<GroupFamily, int>> cases = {
      {{FamilyLabel::A, 2}, 3}, {{FamilyLabel::A, 3}, 3}, {{FamilyLabel::B, 2}, 3},
      {{FamilyLabel::B, 3}, 3}, {{FamilyLabel::C, 3}, 3}, {{FamilyLabel::D, 4}, 3},
      {{FamilyLabel::F4, 4}, 3}, {{FamilyLabel::G2, 2}, 4}, {{FamilyLabel::E8, 8}, 2},
  };
  for (const auto& [fam, cap] : cases) {
    const RootSystem rs = build_root_system(fam);
    CAPTURE(fam.name());
    for_each_weight(fam.rank(), cap, [&](const std::vector<int>& nu) {
      const HighestWeight w{nu};
      const long long closed = eigenvalue_closed_form(rs, w);
      CHECK(closed == eigenvalue_root_form(rs, w));
      CHECK(closed == sum_of_squares_minus_r0(rs, w));
    });
  }
}

TEST_CASE("eigenvalue numerators are positive off the trivial weight") {
  for (const auto& fam : {GroupFamily{FamilyLabel::A, 3}, GroupFamily{FamilyLabel::B, 2},
                          GroupFamily{FamilyLabel::D, 4}, GroupFamily{FamilyLabel::G2, 2}}) {
    const RootSystem rs = build_root_system(fam);
    const std::vector<int> trivial(fam.rank(), 1);
    for_each_weight(fam.rank(), 3, [&](const std::vector<int>& nu) {
      const long long r = eigenvalue_closed_form(rs, {nu});
      if (nu == trivial) {
        CHECK(r == 0);
      } else {
        CHECK(r > 0);
      }
    });
  }
}

TEST_CASE("weights map injectively to integer vectors") {
  for (const auto& fam : {GroupFamily{FamilyLabel::D, 4}, GroupFamily{FamilyLabel::F4, 4}}) {
    const RootSystem rs = build_root_system(fam);
    std::set<std::vector<long long>> images;
    int total = 0;
    for_each_weight(fam.rank(), 3, [&](const std::vector<int>& nu) {
      images.insert(integer_vector(rs, {nu}));
      ++total;
    });
    CHECK(static_cast<int>(images.size()) == total);
  }
}

TEST_CASE("Weyl dimensions") {
  const RootSystem a1 = build_root_system({FamilyLabel::A, 1});
  CHECK(weyl_dimension(a1, {{1}}) == 1);
  CHECK(weyl_dimension(a1, {{2}}) == 2);
  CHECK(weyl_dimension(a1, {{5}}) == 5);

  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  CHECK(weyl_dimension(g2, {{1, 1}}) == 1);
  CHECK(weyl_dimension(g2, {{1, 2}}) == 14);  // adjoint
  CHECK(weyl_dimension(g2, {{2, 1}}) == 7);   // vector representation

  const RootSystem a2 = build_root_system({FamilyLabel::A, 2});
  CHECK(weyl_dimension(a2, {{2, 2}}) == 8);  // adjoint
  CHECK(weyl_dimension(a2, {{2, 1}}) == 3);
  CHECK(weyl_dimension(a2, {{3, 1}}) == 6);

  const RootSystem b2 = build_root_system({FamilyLabel::B, 2});
  CHECK(weyl_dimension(b2, {{1, 2}}) == 4);  // spin representation
  CHECK(weyl_dimension(b2, {{2, 1}}) == 5);  // vector representation

  const RootSystem f4 = build_root_system({FamilyLabel::F4, 4});
  CHECK(weyl_dimension(f4, {{2, 1, 1, 1}}) == 52);  // adjoint: highest root is omega_1

  const RootSystem e8 = build_root_system({FamilyLabel::E8, 8});
  CHECK(weyl_dimension(e8, {{1, 1, 1, 1, 1, 1, 1, 1}}) == 1);
  CHECK(weyl_dimension(e8, {{1, 1, 1, 1, 1, 1, 1, 2}}) == 248);  // adjoint: highest root is omega_8
}

TEST_CASE("spectrum enumeration basics") {
  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  const SpectrumTable t0 = enumerate_spectrum(g2, 0);
  REQUIRE(t0.records.size() == 1);
  CHECK(t0.records[0].R == 0);
  CHECK(t0.records[0].count() == 1);
  CHECK(t0.records[0].weights[0] == HighestWeight{{1, 1}});
  CHECK(t0.records[0].mult == 1);

  const SpectrumTable t12 = enumerate_spectrum(g2, 12);
  REQUIRE(t12.records.size() == 2);
  CHECK(t12.records[0].R == 0);
  CHECK(t12.records[1].R == 12);
  CHECK(t12.records[1].count() == 1);
  CHECK(t12.records[1].weights[0] == HighestWeight{{2, 1}});
  CHECK(t12.records[1].weyl_dims[0] == 7);
  CHECK(t12.records[1].mult == 49);
}

TEST_CASE("partition identity: table counts equal a direct box scan") {
  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  const long long r_max = 100;
  const SpectrumTable table = enumerate_spectrum(g2, r_max);
  long long table_total = 0;
  for (const auto& rec : table.records) {
    table_total += rec.count();
  }
  long long scan_total = 0;
  for_each_weight(2, 30, [&](const std::vector<int>& nu) {
    if (eigenvalue_closed_form(g2, {nu}) <= r_max) {
      ++scan_total;
    }
  });
  CHECK(table_total == scan_total);
}

TEST_CASE("box enlargement leaves the table unchanged") {
  for (const auto& fam : {GroupFamily{FamilyLabel::G2, 2}, GroupFamily{FamilyLabel::B, 2},
                          GroupFamily{FamilyLabel::C, 3}}) {
    const RootSystem rs = build_root_system(fam);
    const long long r_max = 200;
    const long long bound = search_box_bound(rs, r_max);
    EnumerationOptions bigger;
    bigger.box_override = bound + 1;
    CAPTURE(fam.name());
    CHECK(to_csv(enumerate_spectrum(rs, r_max)) == to_csv(enumerate_spectrum(rs, r_max, bigger)));
  }
}

TEST_CASE("thread count does not change the table") {
  const RootSystem f4 = build_root_system({FamilyLabel::F4, 4});
  EnumerationOptions two;
  two.threads = 2;
  CHECK(to_csv(enumerate_spectrum(f4, 300)) == to_csv(enumerate_spectrum(f4, 300, two)));
}

TEST_CASE("cell budget is enforced") {
  const RootSystem e8 = build_root_system({FamilyLabel::E8, 8});
  CHECK_THROWS_AS(enumerate_spectrum(e8, 2000), ResourceLimit);
  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  EnumerationOptions tiny;
  tiny.cell_budget = 10;
  CHECK_THROWS_AS(enumerate_spectrum(g2, 1000, tiny), ResourceLimit);
}

TEST_CASE("records are strictly increasing in R and weights sorted") {
  const RootSystem b2 = build_root_system({FamilyLabel::B, 2});
  const SpectrumTable table = enumerate_spectrum(b2, 500);
  for (std::size_t i = 1; i < table.records.size(); ++i) {
    CHECK(table.records[i - 1].R < table.records[i].R);
  }
  for (const auto& rec : table.records) {
    CHECK(rec.count() >= 1);
    for (std::size_t i = 1; i < rec.weights.size(); ++i) {
      CHECK(rec.weights[i - 1].nu < rec.weights[i].nu);
    }
    for (const auto& d : rec.weyl_dims) {
      CHECK(d > 0);
    }
  }
}

TEST_CASE("CSV and JSON export shapes") {
  const RootSystem g2 = build_root_system({FamilyLabel::G2, 2});
  const SpectrumTable table = enumerate_spectrum(g2, 12);
  const std::string csv = to_csv(table);
  CHECK(csv ==
        "family,rank,R,N_R,mult,weights\n"
        "G2,2,0,1,1,1-1\n"
        "G2,2,12,1,49,2-1\n");
  const auto j = to_json(table);
  CHECK(j["family"] == "G2");
  CHECK(j["R_max"] == 12);
  CHECK(j["records"].size() == 2);
  CHECK(j["records"][1]["N_R"] == 1);
  CHECK(j["records"][1]["weights"][0] == nlohmann::ordered_json::array({2, 1}));
}
