#include "liespec/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "liespec/errors.hpp"

namespace liespec {

namespace {

void check_weight(const RootSystem& rs, const HighestWeight& nu) {
  if (static_cast<int>(nu.nu.size()) != rs.rank()) {
    throw DimensionMismatch("weight has " + std::to_string(nu.nu.size()) +
                            " components, rank is " + std::to_string(rs.rank()));
  }
  for (int v : nu.nu) {
    if (v < 1) {
      throw InvalidArgument("weight components must be >= 1");
    }
  }
}

long long sq(long long x) { return x * x; }

long long closed_form_type_a(int l, const std::vector<int>& nu) {
  long long total = 0;
  long long first = 0, last = 0;
  for (int j = 1; j <= l; ++j) {
    first += static_cast<long long>(l + 1 - j) * nu[j - 1];
    last += static_cast<long long>(j) * nu[j - 1];
  }
  total += sq(first) + sq(last);
  for (int k = 2; k <= l; ++k) {
    long long t = 0;
    for (int j = 1; j <= k - 1; ++j) {
      t -= static_cast<long long>(j) * nu[j - 1];
    }
    for (int j = k; j <= l; ++j) {
      t += static_cast<long long>(l + 1 - j) * nu[j - 1];
    }
    total += sq(t);
  }
  return total;
}

long long closed_form_type_b(int l, const std::vector<int>& nu) {
  long long total = sq(nu[l - 1]);
  for (int k = 1; k <= l - 1; ++k) {
    long long t = nu[l - 1];
    for (int j = k; j <= l - 1; ++j) {
      t += 2LL * nu[j - 1];
    }
    total += sq(t);
  }
  return total;
}

long long closed_form_type_c(int l, const std::vector<int>& nu) {
  long long total = 0;
  long long t = 0;
  for (int k = l; k >= 1; --k) {
    t += nu[k - 1];
    total += sq(t);
  }
  return total;
}

long long closed_form_type_d(int l, const std::vector<int>& nu) {
  long long total = sq(nu[l - 1] + nu[l - 2]) + sq(nu[l - 1] - nu[l - 2]);
  for (int k = 1; k <= l - 2; ++k) {
    long long t = nu[l - 2] + nu[l - 1];
    for (int j = k; j <= l - 2; ++j) {
      t += 2LL * nu[j - 1];
    }
    total += sq(t);
  }
  return total;
}

long long closed_form_type_e8(const std::vector<int>& nu) {
  const long long n1 = nu[0], n2 = nu[1], n3 = nu[2], n4 = nu[3];
  const long long n5 = nu[4], n6 = nu[5], n7 = nu[6], n8 = nu[7];
  long long t = n2 + n3;
  long long total = sq(n2 - n3) + sq(t);
  t += 2 * n4;
  total += sq(t);
  t += 2 * n5;
  total += sq(t);
  t += 2 * n6;
  total += sq(t);
  t += 2 * n7;
  total += sq(t);
  t += 2 * n8;
  total += sq(t);
  total += sq(4 * n1 + 5 * n2 + 7 * n3 + 10 * n4 + 8 * n5 + 6 * n6 + 4 * n7 + 2 * n8);
  return total;
}

long long closed_form_type_f4(const std::vector<int>& nu) {
  const long long n1 = nu[0], n2 = nu[1], n3 = nu[2], n4 = nu[3];
  return sq(2 * n1 + 4 * n2 + 3 * n3 + 2 * n4) + sq(2 * n1 + 2 * n2 + n3) + sq(2 * n2 + n3) +
         sq(n3);
}

long long closed_form_type_g2(const std::vector<int>& nu) {
  const long long n1 = nu[0], n2 = nu[1];
  return sq(n1 + n2) + sq(n1 + 2 * n2) + sq(n2);
}

/// Integer-scaled pairing data for Weyl dimension products. With t = 2c,
/// the vectors t*omega_j, t*eta and 2*alpha are integral for every family,
/// and the scale factors cancel in the dimension ratio.
class DimensionEvaluator {
 public:
  explicit DimensionEvaluator(const RootSystem& rs) {
    const int m = rs.ambient_dim;
    const int l = rs.rank();
    const Rat t(static_cast<long>(2 * rs.scale_c));
    auto to_int_vec = [m](const RatVec& v, const Rat& factor) {
      std::vector<long long> out(m);
      for (int k = 0; k < m; ++k) {
        Rat x = factor * v[k];
        if (x.get_den() != 1) {
          throw InternalInconsistency("scaled root datum is not integral");
        }
        out[k] = x.get_num().get_si();
      }
      return out;
    };
    scaled_weights_.reserve(l);
    for (const auto& w : rs.fundamental_weights) {
      scaled_weights_.push_back(to_int_vec(w, t));
    }
    scaled_eta_ = to_int_vec(rs.weyl_vector, t);
    scaled_roots_.reserve(rs.positive_roots.size());
    for (const auto& a : rs.positive_roots) {
      scaled_roots_.push_back(to_int_vec(a, Rat(2)));
    }
    denominator_ = 1;
    for (const auto& a : scaled_roots_) {
      const long long p = dot(scaled_eta_, a);
      if (p <= 0) {
        throw InternalInconsistency("Weyl vector pairs non-positively with a positive root");
      }
      denominator_ *= static_cast<long>(p);
    }
  }

  Int dimension(const std::vector<int>& nu) const {
    const int m = static_cast<int>(scaled_eta_.size());
    std::vector<long long> w = scaled_eta_;
    for (std::size_t j = 0; j < scaled_weights_.size(); ++j) {
      const long long f = nu[j] - 1;
      if (f == 0) {
        continue;
      }
      for (int k = 0; k < m; ++k) {
        w[k] += f * scaled_weights_[j][k];
      }
    }
    Int num = 1;
    for (const auto& a : scaled_roots_) {
      const long long p = dot(w, a);
      if (p <= 0) {
        throw InternalInconsistency("weight pairs non-positively with a positive root");
      }
      num *= static_cast<long>(p);
    }
    if (!mpz_divisible_p(num.get_mpz_t(), denominator_.get_mpz_t())) {
      throw InternalInconsistency("Weyl dimension product is not an integer");
    }
    Int dim;
    mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), denominator_.get_mpz_t());
    return dim;
  }

 private:
  static long long dot(const std::vector<long long>& u, const std::vector<long long>& v) {
    long long acc = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      acc += u[k] * v[k];
    }
    return acc;
  }

  std::vector<std::vector<long long>> scaled_weights_;
  std::vector<long long> scaled_eta_;
  std::vector<std::vector<long long>> scaled_roots_;
  Int denominator_;
};

/// Per-component search cap: any weight with eigenvalue numerator <= R_max
/// satisfies |nu|_2 <= sqrt(R_max + R0) / sigma_min(A). The smallest singular
/// value is computed in floating point and shrunk 1% to absorb rounding.
long long derive_box(const RootSystem& rs, long long R_max) {
  const int m = rs.m_spec();
  const int l = rs.rank();
  Eigen::MatrixXd a(m, l);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < l; ++j) {
      a(i, j) = static_cast<double>(rs.matrix_a[i][j]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a);
  const double lambda_min = es.eigenvalues()(0);
  if (!(lambda_min > 0)) {
    throw InternalInconsistency("matrix A is rank deficient");
  }
  const double sigma = 0.99 * std::sqrt(lambda_min);
  const double bound = std::sqrt(static_cast<double>(R_max + rs.r0)) / sigma;
  return static_cast<long long>(std::floor(bound));
}

struct Hit {
  long long R;
  std::vector<int> nu;
};

void scan_range(const RootSystem& rs, long long R_max, long long box, long long v1_lo,
                long long v1_hi, std::vector<Hit>& out) {
  const int l = rs.rank();
  const int m = rs.m_spec();
  std::vector<std::vector<long long>> cols(l, std::vector<long long>(m));
  for (int j = 0; j < l; ++j) {
    for (int k = 0; k < m; ++k) {
      cols[j][k] = rs.matrix_a[k][j];
    }
  }
  // partial[j] holds A * (nu_1..nu_j, 0..0); columns are added incrementally.
  std::vector<std::vector<long long>> partial(l + 1, std::vector<long long>(m, 0));
  std::vector<int> nu(l, 1);

  auto recurse = [&](auto&& self, int depth) -> void {
    const long long lo = depth == 0 ? v1_lo : 1;
    const long long hi = depth == 0 ? v1_hi : box;
    auto& cur = partial[depth + 1];
    cur = partial[depth];
    const auto& col = cols[depth];
    for (long long v = lo; v <= hi; ++v) {
      if (v == lo) {
        for (int k = 0; k < m; ++k) {
          cur[k] += lo * col[k];
        }
      } else {
        for (int k = 0; k < m; ++k) {
          cur[k] += col[k];
        }
      }
      nu[depth] = static_cast<int>(v);
      if (depth == l - 1) {
        long long ss = 0;
        for (int k = 0; k < m; ++k) {
          ss += cur[k] * cur[k];
        }
        const long long r = ss - rs.r0;
        if (r < 0) {
          throw InternalInconsistency("negative eigenvalue numerator");
        }
        if (r <= R_max) {
          out.push_back({r, nu});
        }
      } else {
        self(self, depth + 1);
      }
    }
  };
  if (v1_lo <= v1_hi) {
    recurse(recurse, 0);
  }
}

}  // namespace

long long eigenvalue_closed_form(const RootSystem& rs, const HighestWeight& nu) {
  check_weight(rs, nu);
  const int l = rs.rank();
  long long squares = 0;
  switch (rs.family.label()) {
    case FamilyLabel::A:
      squares = closed_form_type_a(l, nu.nu);
      break;
    case FamilyLabel::B:
      squares = closed_form_type_b(l, nu.nu);
      break;
    case FamilyLabel::C:
      squares = closed_form_type_c(l, nu.nu);
      break;
    case FamilyLabel::D:
      squares = closed_form_type_d(l, nu.nu);
      break;
    case FamilyLabel::E8:
      squares = closed_form_type_e8(nu.nu);
      break;
    case FamilyLabel::F4:
      squares = closed_form_type_f4(nu.nu);
      break;
    case FamilyLabel::G2:
      squares = closed_form_type_g2(nu.nu);
      break;
  }
  return squares - closed_form_r0(rs.family);
}

long long eigenvalue_root_form(const RootSystem& rs, const HighestWeight& nu) {
  check_weight(rs, nu);
  RatVec w = rs.weyl_vector;
  for (int j = 0; j < rs.rank(); ++j) {
    if (nu.nu[j] != 1) {
      w = add(w, scale(Rat(nu.nu[j] - 1), rs.fundamental_weights[j]));
    }
  }
  const Rat value =
      Rat(static_cast<long>(rs.scale_c * rs.scale_c)) *
      (inner(w, w) - inner(rs.weyl_vector, rs.weyl_vector));
  if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
    throw InternalInconsistency("eigenvalue numerator is not a small integer");
  }
  return value.get_num().get_si();
}

std::vector<long long> integer_vector(const RootSystem& rs, const HighestWeight& nu) {
  check_weight(rs, nu);
  const int m = rs.m_spec();
  std::vector<long long> n(m, 0);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < rs.rank(); ++j) {
      n[k] += rs.matrix_a[k][j] * nu.nu[j];
    }
  }
  return n;
}

Int weyl_dimension(const RootSystem& rs, const HighestWeight& nu) {
  check_weight(rs, nu);
  return DimensionEvaluator(rs).dimension(nu.nu);
}

long long search_box_bound(const RootSystem& rs, long long R_max) {
  if (R_max < 0) {
    throw InvalidArgument("R_max must be >= 0");
  }
  return derive_box(rs, R_max);
}

SpectrumTable enumerate_spectrum(const RootSystem& rs, long long R_max,
                                 const EnumerationOptions& options) {
  if (R_max < 0) {
    throw InvalidArgument("R_max must be >= 0");
  }
  const int l = rs.rank();
  const long long box = options.box_override ? *options.box_override : derive_box(rs, R_max);
  if (box < 1) {
    throw InvalidArgument("search box must include 1");
  }

  long double cells = 1;
  for (int j = 0; j < l; ++j) {
    cells *= static_cast<long double>(box);
  }
  if (cells > static_cast<long double>(options.cell_budget)) {
    std::ostringstream msg;
    msg << "search box " << box << "^" << l << " exceeds the cell budget "
        << options.cell_budget << "; lower R_max or raise the budget";
    throw ResourceLimit(msg.str());
  }

  const int threads = std::max(1, options.threads);
  std::vector<std::vector<Hit>> hits(threads);
  if (threads == 1 || box < 2 * threads) {
    scan_range(rs, R_max, box, 1, box, hits[0]);
  } else {
    std::vector<std::thread> pool;
    const long long chunk = (box + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const long long lo = 1 + t * chunk;
      const long long hi = std::min(box, lo + chunk - 1);
      pool.emplace_back(
          [&, lo, hi, t] { scan_range(rs, R_max, box, lo, hi, hits[t]); });
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  std::vector<Hit> all;
  for (auto& h : hits) {
    all.insert(all.end(), std::make_move_iterator(h.begin()), std::make_move_iterator(h.end()));
  }
  std::sort(all.begin(), all.end(), [](const Hit& a, const Hit& b) {
    if (a.R != b.R) {
      return a.R < b.R;
    }
    return a.nu < b.nu;
  });

  SpectrumTable table{rs.family, R_max, {}};
  std::optional<DimensionEvaluator> dims;
  if (options.with_dimensions) {
    dims.emplace(rs);
  }
  for (auto& hit : all) {
    if (table.records.empty() || table.records.back().R != hit.R) {
      table.records.push_back({hit.R, {}, {}, 0});
    }
    auto& rec = table.records.back();
    if (dims) {
      const Int d = dims->dimension(hit.nu);
      rec.mult += d * d;
      rec.weyl_dims.push_back(d);
    }
    rec.weights.push_back({std::move(hit.nu)});
  }
  return table;
}

std::string to_csv(const SpectrumTable& table) {
  std::ostringstream out;
  out << "family,rank,R,N_R,mult,weights\n";
  for (const auto& rec : table.records) {
    out << table.family.label_name() << "," << table.family.rank() << "," << rec.R << ","
        << rec.count() << ",";
    if (!rec.weyl_dims.empty()) {
      out << rec.mult.get_str();
    }
    out << ",";
    for (std::size_t i = 0; i < rec.weights.size(); ++i) {
      if (i > 0) {
        out << ";";
      }
      const auto& nu = rec.weights[i].nu;
      for (std::size_t j = 0; j < nu.size(); ++j) {
        if (j > 0) {
          out << "-";
        }
        out << nu[j];
      }
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const SpectrumTable& table) {
  nlohmann::ordered_json j;
  j["family"] = table.family.label_name();
  j["rank"] = table.family.rank();
  j["R_max"] = table.R_max;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& rec : table.records) {
    nlohmann::ordered_json r;
    r["R"] = rec.R;
    r["N_R"] = rec.count();
    if (!rec.weyl_dims.empty()) {
      r["mult"] = rec.mult.get_str();
    }
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    for (const auto& w : rec.weights) {
      weights.push_back(w.nu);
    }
    r["weights"] = std::move(weights);
    if (!rec.weyl_dims.empty()) {
      nlohmann::ordered_json ds = nlohmann::ordered_json::array();
      for (const auto& d : rec.weyl_dims) {
        ds.push_back(d.get_str());
      }
      r["weyl_dims"] = std::move(ds);
    }
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j;
}

}  // namespace liespec
