#pragma once

#include "paraf/matrix.hpp"

#include <vector>

namespace paraf {

// Row-style Hermite normal form: U·A = H with U unimodular, H upper echelon,
// positive pivots and entries above each pivot reduced into [0, pivot).
struct HermiteResult {
  ZMatrix h;               // same shape as A; the first `rank` rows are nonzero
  ZMatrix u;               // rows(A) x rows(A), unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
HermiteResult hermite(const ZMatrix& a);

// Basis (as rows) of the Z-span of the rows of A, in Hermite form.
ZMatrix row_basis(const ZMatrix& a);

// Basis of {x in Z^rows : x·A = 0}.
ZMatrix left_kernel(const ZMatrix& a);

// Smith normal form U·A·V = D with U, V unimodular.
struct SmithResult {
  ZMatrix d;
  ZMatrix u;
  ZMatrix v;
  std::vector<Integer> diagonal;  // d_1 | d_2 | ..., zeros last
};
SmithResult smith(const ZMatrix& a);

// Invariant factors of the Z-span of rows of A (only the nonzero ones).
std::vector<Integer> invariant_factors(const ZMatrix& a);

// Solve x·B = v over the integers, B of full row rank.
bool solve_integer(const ZMatrix& b, const ZVector& v, ZVector& x);

// True when every row of S lies in the Z-span of the rows of B.
bool span_contains(const ZMatrix& b, const ZMatrix& s);
bool same_span(const ZMatrix& a, const ZMatrix& b);

// Clear denominators: returns (D, Z) with rows(M) = Z/D.
Integer common_denominator(const QMatrix& m);

// Basis of the Z-span of rational row vectors.
QMatrix rational_row_basis(const QMatrix& m);
// Basis of the intersection of two rational row lattices of the same dimension.
QMatrix intersect_spans(const QMatrix& a, const QMatrix& b);
bool rational_span_contains(const QMatrix& b, const QMatrix& s);

// Kernel of x·A ≡ 0 (mod m) for integer x, as a full-rank basis of Z^rows.
ZMatrix kernel_mod(const ZMatrix& a, const Integer& m);

}  // namespace paraf
