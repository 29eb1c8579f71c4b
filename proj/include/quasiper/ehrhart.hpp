#pragma once

#include <cstdint>
#include <vector>

#include "quasiper/genfunc.hpp"
#include "quasiper/quasipoly.hpp"
#include "quasiper/rational.hpp"

namespace quasiper {

/// The simplex conv{e_0 / p_0, ..., e_d / p_d} in R^{d+1}, i.e. the slice
/// p_0 x_0 + ... + p_d x_d = 1 of the non-negative orthant.
class SimplexSpec {
 public:
  explicit SimplexSpec(std::vector<std::int64_t> p);

  const std::vector<std::int64_t>& p() const { return p_; }
  int dimension() const { return static_cast<int>(p_.size()) - 1; }
  /// p_d | p_{d-1} | ... | p_0, in the stored order.
  bool is_chain() const;
  /// is_chain() with pairwise distinct entries.
  bool is_distinct_chain() const;
  std::int64_t sum() const;
  std::int64_t lcm() const;

 private:
  std::vector<std::int64_t> p_;
};

/// #{y in Z_{>=0}^{d+1} : sum p_i y_i = k}, by dynamic programming.
Integer denumerant(const SimplexSpec& spec, std::int64_t k);

/// #{y in Z_{>=1}^{d+1} : sum p_i y_i = k}, the relative-interior count.
Integer interior_denumerant(const SimplexSpec& spec, std::int64_t k);

/// 1 / prod (1 - x^{p_i}) in factored cyclotomic form.
RationalGF ehrhart_series(const SimplexSpec& spec);

/// Expansion of ehrhart_series; every sample used is checked against the
/// denumerant and a disagreement throws CrossCheckFailure.
QuasiPolynomial ehrhart_qp(const SimplexSpec& spec);

/// lcm over (j+1)-subsets S of gcd{p_i : i in S}.
std::int64_t simplex_j_index(const SimplexSpec& spec, int j);

/// {x : A x <= b} with redundant vertex and bounding-box data, dimension <= 3.
///
/// No convex hull is computed: rows of A are trusted to be facet normals,
/// the vertex list to be complete and the box to contain the k = 1 polytope.
/// Construction only checks that every vertex satisfies A v <= b and lies in
/// the box.
class HPolytope {
 public:
  HPolytope(std::vector<std::vector<std::int64_t>> normals, std::vector<Rational> rhs,
            std::vector<std::vector<Rational>> vertices, std::vector<std::int64_t> box_lo,
            std::vector<std::int64_t> box_hi);

  int ambient_dimension() const { return static_cast<int>(box_lo_.size()); }
  const std::vector<std::vector<std::int64_t>>& normals() const { return normals_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const std::vector<std::vector<Rational>>& vertices() const { return vertices_; }
  const std::vector<std::int64_t>& box_lo() const { return box_lo_; }
  const std::vector<std::int64_t>& box_hi() const { return box_hi_; }

 private:
  std::vector<std::vector<std::int64_t>> normals_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<Rational>> vertices_;
  std::vector<std::int64_t> box_lo_;
  std::vector<std::int64_t> box_hi_;
};

constexpr std::int64_t kDefaultPointBudget = 10'000'000;

/// #(kP cap Z^n) by scanning k * box. Throws BudgetExceeded when the box
/// holds more than `budget` integer points.
Integer count_lattice_points(const HPolytope& poly, std::int64_t k, std::int64_t budget = kDefaultPointBudget);

/// Interpolates counts for k = 1 .. P (n + 2), P = vertex_denominator, n = ambient dimension.
QuasiPolynomial hpolytope_qp(const HPolytope& poly, std::int64_t budget = kDefaultPointBudget);

/// lcm of denominators of the right-hand sides; rows must be primitive.
std::int64_t facet_index(const HPolytope& poly);

/// lcm of denominators of all vertex coordinates.
std::int64_t vertex_denominator(const HPolytope& poly);

}  // namespace quasiper
