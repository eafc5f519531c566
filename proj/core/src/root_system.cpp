#include "liespec/root_system.hpp"

#include <algorithm>
#include <cctype>

#include "liespec/errors.hpp"

namespace liespec {

namespace {

RatVec unit(int dim, int k) {
  RatVec v(dim, Rat(0));
  v[k] = 1;
  return v;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) {
      return c < 0;
    }
  }
  return false;
}

long long to_ll(const Rat& r, const char* what) {
  if (r.get_den() != 1) {
    throw InternalInconsistency(std::string(what) + " is not an integer");
  }
  if (!r.get_num().fits_slong_p()) {
    throw InternalInconsistency(std::string(what) + " overflows long");
  }
  return r.get_num().get_si();
}

struct RawData {
  int ambient_dim = 0;
  std::vector<RatVec> positive_roots;
  std::vector<RatVec> simple_roots;
  std::vector<RatVec> fundamental_weights;
  RatVec highest_long_root;
};

RawData build_type_a(int l) {
  RawData d;
  const int n = l + 1;
  d.ambient_dim = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RatVec r(n, Rat(0));
      r[i] = 1;
      r[j] = -1;
      d.positive_roots.push_back(r);
    }
  }
  for (int j = 0; j < l; ++j) {
    RatVec a(n, Rat(0));
    a[j] = 1;
    a[j + 1] = -1;
    d.simple_roots.push_back(a);
  }
  for (int j = 1; j <= l; ++j) {
    RatVec w(n);
    for (int k = 1; k <= n; ++k) {
      w[k - 1] = Rat(k <= j ? n - j : -j, n);
    }
    d.fundamental_weights.push_back(w);
  }
  RatVec high(n, Rat(0));
  high[0] = 1;
  high[n - 1] = -1;
  d.highest_long_root = high;
  return d;
}

RawData build_type_b(int l) {
  RawData d;
  d.ambient_dim = l;
  for (int i = 0; i < l; ++i) {
    d.positive_roots.push_back(unit(l, i));  // short roots
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      RatVec p(l, Rat(0)), m(l, Rat(0));
      p[i] = 1;
      p[j] = 1;
      m[i] = 1;
      m[j] = -1;
      d.positive_roots.push_back(p);
      d.positive_roots.push_back(m);
    }
  }
  for (int j = 0; j < l - 1; ++j) {
    RatVec a(l, Rat(0));
    a[j] = 1;
    a[j + 1] = -1;
    d.simple_roots.push_back(a);
  }
  d.simple_roots.push_back(unit(l, l - 1));
  for (int j = 1; j < l; ++j) {
    RatVec w(l, Rat(0));
    for (int k = 0; k < j; ++k) {
      w[k] = 1;
    }
    d.fundamental_weights.push_back(w);
  }
  d.fundamental_weights.push_back(RatVec(l, Rat(1, 2)));
  RatVec high(l, Rat(0));
  high[0] = 1;
  high[1] = 1;
  d.highest_long_root = high;
  return d;
}

RawData build_type_c(int l) {
  RawData d;
  d.ambient_dim = l;
  for (int i = 0; i < l; ++i) {
    RatVec r(l, Rat(0));
    r[i] = 2;
    d.positive_roots.push_back(r);  // long roots
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      RatVec p(l, Rat(0)), m(l, Rat(0));
      p[i] = 1;
      p[j] = 1;
      m[i] = 1;
      m[j] = -1;
      d.positive_roots.push_back(p);
      d.positive_roots.push_back(m);
    }
  }
  for (int j = 0; j < l - 1; ++j) {
    RatVec a(l, Rat(0));
    a[j] = 1;
    a[j + 1] = -1;
    d.simple_roots.push_back(a);
  }
  RatVec last(l, Rat(0));
  last[l - 1] = 2;
  d.simple_roots.push_back(last);
  for (int j = 1; j <= l; ++j) {
    RatVec w(l, Rat(0));
    for (int k = 0; k < j; ++k) {
      w[k] = 1;
    }
    d.fundamental_weights.push_back(w);
  }
  RatVec high(l, Rat(0));
  high[0] = 2;
  d.highest_long_root = high;
  return d;
}

RawData build_type_d(int l) {
  RawData d;
  d.ambient_dim = l;
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      RatVec p(l, Rat(0)), m(l, Rat(0));
      p[i] = 1;
      p[j] = 1;
      m[i] = 1;
      m[j] = -1;
      d.positive_roots.push_back(p);
      d.positive_roots.push_back(m);
    }
  }
  for (int j = 0; j < l - 1; ++j) {
    RatVec a(l, Rat(0));
    a[j] = 1;
    a[j + 1] = -1;
    d.simple_roots.push_back(a);
  }
  RatVec last(l, Rat(0));
  last[l - 2] = 1;
  last[l - 1] = 1;
  d.simple_roots.push_back(last);
  for (int j = 1; j <= l - 2; ++j) {
    RatVec w(l, Rat(0));
    for (int k = 0; k < j; ++k) {
      w[k] = 1;
    }
    d.fundamental_weights.push_back(w);
  }
  RatVec wm(l, Rat(1, 2)), wp(l, Rat(1, 2));
  wm[l - 1] = Rat(-1, 2);
  d.fundamental_weights.push_back(wm);
  d.fundamental_weights.push_back(wp);
  RatVec high(l, Rat(0));
  high[0] = 1;
  high[1] = 1;
  d.highest_long_root = high;
  return d;
}

RawData build_type_e8() {
  RawData d;
  d.ambient_dim = 8;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      RatVec p(8, Rat(0)), m(8, Rat(0));
      p[j] = 1;
      p[i] = 1;
      m[j] = 1;
      m[i] = -1;
      d.positive_roots.push_back(p);
      d.positive_roots.push_back(m);
    }
  }
  // Half-sum roots: (1/2)(±e1 ± ... ± e7 + e8), even number of minus signs.
  for (int mask = 0; mask < 128; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) {
      continue;
    }
    RatVec r(8);
    for (int k = 0; k < 7; ++k) {
      r[k] = Rat((mask >> k) & 1 ? -1 : 1, 2);
    }
    r[7] = Rat(1, 2);
    d.positive_roots.push_back(r);
  }

  RatVec a1(8, Rat(-1, 2));
  a1[0] = Rat(1, 2);
  a1[7] = Rat(1, 2);
  d.simple_roots.push_back(a1);
  RatVec a2(8, Rat(0));
  a2[0] = 1;
  a2[1] = 1;
  d.simple_roots.push_back(a2);
  for (int j = 3; j <= 8; ++j) {
    RatVec a(8, Rat(0));
    a[j - 2] = 1;
    a[j - 3] = -1;
    d.simple_roots.push_back(a);
  }

  auto half = [](std::initializer_list<int> twice) {
    RatVec v;
    for (int t : twice) {
      v.push_back(Rat(t, 2));
    }
    return v;
  };
  d.fundamental_weights = {
      half({0, 0, 0, 0, 0, 0, 0, 4}),   half({1, 1, 1, 1, 1, 1, 1, 5}),
      half({-1, 1, 1, 1, 1, 1, 1, 7}),  half({0, 0, 2, 2, 2, 2, 2, 10}),
      half({0, 0, 0, 2, 2, 2, 2, 8}),   half({0, 0, 0, 0, 2, 2, 2, 6}),
      half({0, 0, 0, 0, 0, 2, 2, 4}),   half({0, 0, 0, 0, 0, 0, 2, 2}),
  };
  RatVec high(8, Rat(0));
  high[6] = 1;
  high[7] = 1;
  d.highest_long_root = high;
  return d;
}

RawData build_type_f4() {
  RawData d;
  d.ambient_dim = 4;
  for (int i = 0; i < 4; ++i) {
    d.positive_roots.push_back(unit(4, i));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      RatVec p(4, Rat(0)), m(4, Rat(0));
      p[i] = 1;
      p[j] = 1;
      m[i] = 1;
      m[j] = -1;
      d.positive_roots.push_back(p);
      d.positive_roots.push_back(m);
    }
  }
  for (int mask = 0; mask < 8; ++mask) {
    RatVec r(4);
    r[0] = Rat(1, 2);
    for (int k = 0; k < 3; ++k) {
      r[k + 1] = Rat((mask >> k) & 1 ? -1 : 1, 2);
    }
    d.positive_roots.push_back(r);
  }

  d.simple_roots = {
      {0, 1, -1, 0},
      {0, 0, 1, -1},
      {0, 0, 0, 1},
      {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)},
  };
  d.fundamental_weights = {
      {1, 1, 0, 0},
      {2, 1, 1, 0},
      {Rat(3, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)},
      {1, 0, 0, 0},
  };
  d.highest_long_root = {1, 1, 0, 0};
  return d;
}

RawData build_type_g2() {
  RawData d;
  d.ambient_dim = 3;  // roots lie in the plane orthogonal to e1+e2+e3
  d.positive_roots = {
      {1, -1, 0}, {0, -1, 1}, {-1, 0, 1}, {-2, 1, 1}, {1, -2, 1}, {-1, -1, 2},
  };
  d.simple_roots = {
      {1, -1, 0},
      {-2, 1, 1},
  };
  d.fundamental_weights = {
      {0, -1, 1},
      {-1, -1, 2},
  };
  d.highest_long_root = {-1, -1, 2};
  return d;
}

}  // namespace

GroupFamily::GroupFamily(FamilyLabel label, int rank) : label_(label), rank_(rank) {
  const auto fail = [&](const std::string& why) { throw InvalidRank(why); };
  switch (label) {
    case FamilyLabel::A:
      if (rank < 1) fail("type A requires rank >= 1, got " + std::to_string(rank));
      break;
    case FamilyLabel::B:
      if (rank < 2) fail("type B requires rank >= 2, got " + std::to_string(rank));
      break;
    case FamilyLabel::C:
      if (rank < 3) fail("type C requires rank >= 3, got " + std::to_string(rank));
      break;
    case FamilyLabel::D:
      if (rank < 4) fail("type D requires rank >= 4, got " + std::to_string(rank));
      break;
    case FamilyLabel::E8:
      if (rank != 8) fail("E8 has fixed rank 8, got " + std::to_string(rank));
      break;
    case FamilyLabel::F4:
      if (rank != 4) fail("F4 has fixed rank 4, got " + std::to_string(rank));
      break;
    case FamilyLabel::G2:
      if (rank != 2) fail("G2 has fixed rank 2, got " + std::to_string(rank));
      break;
  }
}

GroupFamily GroupFamily::parse(std::string_view text) {
  if (text.empty()) {
    throw InvalidArgument("empty family name");
  }
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string_view digits = text.substr(1);
  int rank = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InvalidArgument("malformed family name '" + std::string(text) + "'");
    }
    rank = rank * 10 + (ch - '0');
    if (rank > 1000) {
      throw InvalidRank("rank too large in '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) {
    throw InvalidArgument("family name '" + std::string(text) + "' is missing its rank");
  }
  switch (letter) {
    case 'A':
      return {FamilyLabel::A, rank};
    case 'B':
      return {FamilyLabel::B, rank};
    case 'C':
      return {FamilyLabel::C, rank};
    case 'D':
      return {FamilyLabel::D, rank};
    case 'E':
      if (rank == 6 || rank == 7) {
        throw UnsupportedFamily("E" + std::to_string(rank) +
                                " carries no tabulated spectral data here");
      }
      return {FamilyLabel::E8, rank};
    case 'F':
      return {FamilyLabel::F4, rank};
    case 'G':
      return {FamilyLabel::G2, rank};
    default:
      throw InvalidArgument("unknown family letter in '" + std::string(text) + "'");
  }
}

std::string GroupFamily::label_name() const {
  switch (label_) {
    case FamilyLabel::A:
      return "A";
    case FamilyLabel::B:
      return "B";
    case FamilyLabel::C:
      return "C";
    case FamilyLabel::D:
      return "D";
    case FamilyLabel::E8:
      return "E8";
    case FamilyLabel::F4:
      return "F4";
    case FamilyLabel::G2:
      return "G2";
  }
  return "?";
}

std::string GroupFamily::name() const {
  switch (label_) {
    case FamilyLabel::E8:
    case FamilyLabel::F4:
    case FamilyLabel::G2:
      return label_name();
    default:
      return label_name() + std::to_string(rank_);
  }
}

IntMatrix matrix_A(const GroupFamily& family) {
  const int l = family.rank();
  IntMatrix a;
  switch (family.label()) {
    case FamilyLabel::A: {
      a.assign(l + 1, std::vector<long long>(l));
      for (int j = 1; j <= l; ++j) {
        a[0][j - 1] = l + 1 - j;
        a[l][j - 1] = j;
      }
      for (int k = 2; k <= l; ++k) {
        for (int j = 1; j <= l; ++j) {
          a[k - 1][j - 1] = (j <= k - 1) ? -j : (l + 1 - j);
        }
      }
      break;
    }
    case FamilyLabel::B: {
      a.assign(l, std::vector<long long>(l, 0));
      for (int k = 1; k <= l - 1; ++k) {
        for (int j = k; j <= l - 1; ++j) {
          a[k - 1][j - 1] = 2;
        }
        a[k - 1][l - 1] = 1;
      }
      a[l - 1][l - 1] = 1;
      break;
    }
    case FamilyLabel::C: {
      a.assign(l, std::vector<long long>(l, 0));
      for (int k = 1; k <= l; ++k) {
        for (int j = k; j <= l; ++j) {
          a[k - 1][j - 1] = 1;
        }
      }
      break;
    }
    case FamilyLabel::D: {
      a.assign(l, std::vector<long long>(l, 0));
      for (int k = 1; k <= l - 2; ++k) {
        for (int j = k; j <= l - 2; ++j) {
          a[k - 1][j - 1] = 2;
        }
        a[k - 1][l - 2] = 1;
        a[k - 1][l - 1] = 1;
      }
      a[l - 2][l - 2] = 1;
      a[l - 2][l - 1] = 1;
      a[l - 1][l - 2] = -1;
      a[l - 1][l - 1] = 1;
      break;
    }
    case FamilyLabel::E8: {
      a = {
          {0, 1, -1, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0},  {0, 1, 1, 2, 0, 0, 0, 0},
          {0, 1, 1, 2, 2, 0, 0, 0},  {0, 1, 1, 2, 2, 2, 0, 0},  {0, 1, 1, 2, 2, 2, 2, 0},
          {0, 1, 1, 2, 2, 2, 2, 2},  {4, 5, 7, 10, 8, 6, 4, 2},
      };
      break;
    }
    case FamilyLabel::F4: {
      a = {
          {2, 4, 3, 2},
          {2, 2, 1, 0},
          {0, 2, 1, 0},
          {0, 0, 1, 0},
      };
      break;
    }
    case FamilyLabel::G2: {
      a = {
          {1, 1},
          {1, 2},
          {0, 1},
      };
      break;
    }
  }
  return a;
}

long long closed_form_b(const GroupFamily& family) {
  const long long l = family.rank();
  switch (family.label()) {
    case FamilyLabel::A:
      return 2 * (l + 1) * (l + 1) * (l + 1);
    case FamilyLabel::B:
      return 16 * l - 8;
    case FamilyLabel::C:
      return 4 * (l + 1);
    case FamilyLabel::D:
      return 16 * l - 16;
    case FamilyLabel::E8:
      return 240;
    case FamilyLabel::F4:
      return 72;
    case FamilyLabel::G2:
      return 24;
  }
  return 0;
}

long long closed_form_r0(const GroupFamily& family) {
  const long long l = family.rank();
  switch (family.label()) {
    case FamilyLabel::A: {
      long long sum = 0;
      for (long long k = 1; k <= l + 1; ++k) {
        const long long t = l - 2 * (k - 1);
        sum += t * t;
      }
      return (l + 1) * (l + 1) * sum / 4;  // exact: sum or (l+1)^2 is 0 mod 4
    }
    case FamilyLabel::B: {
      long long sum = 0;
      for (long long k = 1; k <= l; ++k) {
        const long long t = 2 * (l - k) + 1;
        sum += t * t;
      }
      return sum;
    }
    case FamilyLabel::C:
      return l * (l + 1) * (2 * l + 1) / 6;
    case FamilyLabel::D: {
      long long sum = 0;
      for (long long k = 1; k <= l; ++k) {
        const long long t = 2 * (l - k);
        sum += t * t;
      }
      return sum;
    }
    case FamilyLabel::E8:
      return 2480;
    case FamilyLabel::F4:
      return 156;
    case FamilyLabel::G2:
      return 14;
  }
  return 0;
}

RootSystem build_root_system(const GroupFamily& family) {
  RawData raw;
  switch (family.label()) {
    case FamilyLabel::A:
      raw = build_type_a(family.rank());
      break;
    case FamilyLabel::B:
      raw = build_type_b(family.rank());
      break;
    case FamilyLabel::C:
      raw = build_type_c(family.rank());
      break;
    case FamilyLabel::D:
      raw = build_type_d(family.rank());
      break;
    case FamilyLabel::E8:
      raw = build_type_e8();
      break;
    case FamilyLabel::F4:
      raw = build_type_f4();
      break;
    case FamilyLabel::G2:
      raw = build_type_g2();
      break;
  }

  RootSystem rs{family, raw.ambient_dim,
                std::move(raw.positive_roots), std::move(raw.simple_roots),
                std::move(raw.fundamental_weights), {}, std::move(raw.highest_long_root),
                0, 0, 0, 0, matrix_A(family), 0};

  // mpq_class(num, den) does not reduce fractions; exact comparison needs
  // canonical form.
  auto canonicalize = [](std::vector<RatVec>& vectors) {
    for (auto& v : vectors) {
      for (auto& x : v) {
        x.canonicalize();
      }
    }
  };
  canonicalize(rs.positive_roots);
  canonicalize(rs.simple_roots);
  canonicalize(rs.fundamental_weights);
  for (auto& x : rs.highest_long_root) {
    x.canonicalize();
  }

  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), lex_less);

  RatVec eta(rs.ambient_dim, Rat(0));
  for (const auto& root : rs.positive_roots) {
    eta = add(eta, root);
  }
  rs.weyl_vector = scale(Rat(1, 2), eta);

  const Rat b = inner(rs.highest_long_root, rs.highest_long_root) +
                2 * inner(rs.highest_long_root, rs.weyl_vector);
  rs.b_root = to_ll(b, "b");

  Int c = common_denominator(rs.fundamental_weights);
  if (!c.fits_slong_p()) {
    throw InternalInconsistency("weight denominator scale overflows");
  }
  rs.scale_c = c.get_si();
  rs.b_table = rs.scale_c * rs.scale_c * rs.b_root;
  rs.r0 = to_ll(Rat(static_cast<long>(rs.scale_c * rs.scale_c)) *
                  inner(rs.weyl_vector, rs.weyl_vector),
              "R0");

  rs.group_dim = 2 * static_cast<int>(rs.positive_roots.size()) + family.rank();
  return rs;
}

nlohmann::ordered_json to_json(const RootSystem& rs) {
  nlohmann::ordered_json j;
  j["family"] = rs.family.label_name();
  j["rank"] = rs.rank();
  j["ambient_dim"] = rs.ambient_dim;
  auto vec_json = [](const RatVec& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x : v) {
      arr.push_back({x.get_num().get_si(), x.get_den().get_si()});
    }
    return arr;
  };
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (const auto& r : rs.positive_roots) {
    roots.push_back(vec_json(r));
  }
  j["roots"] = std::move(roots);
  j["b_root"] = rs.b_root;
  j["c"] = rs.scale_c;
  j["b_table"] = rs.b_table;
  j["R0"] = rs.r0;
  j["matrix_A"] = rs.matrix_a;
  j["group_dim"] = rs.group_dim;
  return j;
}

}  // namespace liespec
