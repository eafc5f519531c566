#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace liespec {

using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

/// num/den in canonical form. The raw mpq_class(num, den) constructor does
/// not reduce, which breaks exact comparison.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Exact dot product. Throws DimensionMismatch on unequal lengths.
Rat inner(const RatVec& u, const RatVec& v);

RatVec add(const RatVec& u, const RatVec& v);
RatVec scale(const Rat& s, const RatVec& v);

/// Least positive integer c with c*v integral for every listed vector.
Int common_denominator(const std::vector<RatVec>& vectors);

/// Canonical text form: "n" when the denominator is 1, else "n/d".
std::string rat_to_string(const Rat& r);

/// Parses "n" or "n/d" (denominator must be positive). Throws InvalidArgument.
Rat parse_rational(const std::string& text);

/// Solves sum_j x_j basis[j] = target exactly, or nullopt if target is
/// outside the span. The basis must be linearly independent.
std::optional<RatVec> solve_in_basis(const std::vector<RatVec>& basis, const RatVec& target);

}  // namespace liespec
