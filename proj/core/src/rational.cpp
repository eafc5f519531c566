#include "liespec/rational.hpp"

#include <cstddef>

#include "liespec/errors.hpp"

namespace liespec {

Rat inner(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner: vectors of length " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
  Rat acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc += u[i] * v[i];
  }
  return acc;
}

RatVec add(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("add: vectors of unequal length");
  }
  RatVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[i] = u[i] + v[i];
  }
  return out;
}

RatVec scale(const Rat& s, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = s * v[i];
  }
  return out;
}

Int common_denominator(const std::vector<RatVec>& vectors) {
  Int c = 1;
  for (const auto& v : vectors) {
    for (const auto& x : v) {
      Int den = x.get_den();  // canonical, positive
      Int g;
      mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
      c = c / g * den;
    }
  }
  return c;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) {
    return r.get_num().get_str();
  }
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) {
    throw InvalidArgument("empty rational literal");
  }
  Rat r;
  if (r.set_str(text, 10) != 0) {
    throw InvalidArgument("malformed rational literal '" + text + "' (expected n or n/d)");
  }
  if (r.get_den() == 0) {
    throw InvalidArgument("zero denominator in rational literal '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::optional<RatVec> solve_in_basis(const std::vector<RatVec>& basis, const RatVec& target) {
  const std::size_t cols = basis.size();
  if (cols == 0) {
    return std::nullopt;
  }
  const std::size_t rows = basis[0].size();
  if (target.size() != rows) {
    throw DimensionMismatch("solve_in_basis: target length does not match basis vectors");
  }
  // Augmented matrix [basis columns | target], eliminated exactly.
  std::vector<RatVec> m(rows, RatVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m[i][j] = basis[j][i];
    }
    m[i][cols] = target[i];
  }

  std::vector<std::size_t> pivot_row_of_col(cols, rows);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) {
      ++sel;
    }
    if (sel == rows) {
      continue;
    }
    std::swap(m[sel], m[pivot_row]);
    const Rat inv = 1 / m[pivot_row][col];
    for (std::size_t j = col; j <= cols; ++j) {
      m[pivot_row][j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != pivot_row && m[i][col] != 0) {
        const Rat f = m[i][col];
        for (std::size_t j = col; j <= cols; ++j) {
          m[i][j] -= f * m[pivot_row][j];
        }
      }
    }
    pivot_row_of_col[col] = pivot_row;
    ++pivot_row;
  }

  RatVec x(cols, Rat(0));
  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_row_of_col[col] == rows) {
      return std::nullopt;  // basis not independent as promised
    }
    x[col] = m[pivot_row_of_col[col]][cols];
  }
  // Rows past the pivots must have vanished, otherwise target is off-span.
  for (std::size_t i = pivot_row; i < rows; ++i) {
    if (m[i][cols] != 0) {
      return std::nullopt;
    }
  }
  return x;
}

}  // namespace liespec
