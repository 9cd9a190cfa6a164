#pragma once

#include "indzero/complexgeom.hpp"
#include "indzero/graphs.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace indzero {

using BigInt = boost::multiprecision::cpp_int;

/// Independence polynomial: coeffs[k] = number of independent sets of size k.
class IndPoly {
public:
  IndPoly() : coeffs_{1} {}
  explicit IndPoly(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficients rounded to double (exact while below 2^53).
  std::vector<double> coeffs_double() const;

  friend bool operator==(const IndPoly&, const IndPoly&) = default;

private:
  std::vector<BigInt> coeffs_;
};

inline constexpr int kDefaultIndPolyCap = 40;
inline constexpr int kDefaultSeriesCap = 512;
inline constexpr int kMaxPrefixOrder = 8;

/// Exact independence polynomial by the recursion Z_G = Z_{G-v} + x Z_{G-N[v]},
/// pivoting on a maximum-degree vertex and memoizing connected induced subgraphs.
IndPoly ind_poly(const Graph& g, int vertex_cap = kDefaultIndPolyCap);

/// Horner evaluation in double precision.
ComplexPoint eval(const IndPoly& p, ComplexPoint lambda);
ComplexPoint eval(std::span<const double> coeffs, ComplexPoint lambda);

/// e_0..e_m by direct enumeration of independent sets of size <= m.
std::vector<BigInt> coeffs_by_size_enumeration(const Graph& g, int m);

struct CatalogMinimum {
  double min_modulus = 0.0;
  Graph witness;
  std::size_t witness_index = 0;
  std::size_t catalog_size = 0;
};

/// Trees of the bounded-degree class with their polynomials, in catalog order.
class TreeCatalog {
public:
  /// All trees with <= n_max vertices and maximum degree <= d + 1.
  TreeCatalog(int d, int n_max);

  std::size_t size() const noexcept { return trees_.size(); }
  const Graph& tree(std::size_t i) const { return trees_[i]; }
  const IndPoly& poly(std::size_t i) const { return polys_[i]; }

  /// Minimum of |Z_T(lambda)| over the catalog; ties keep the earliest tree.
  /// Trees are evaluated on `threads` workers, reduced deterministically.
  CatalogMinimum min_abs(ComplexPoint lambda, unsigned threads = 1) const;

private:
  std::vector<Graph> trees_;
  std::vector<IndPoly> polys_;
  std::vector<std::vector<double>> coeffs_;
};

CatalogMinimum min_abs_over_catalog(int d, ComplexPoint lambda, int n_max, unsigned threads = 1);

struct LogZApprox {
  ComplexPoint value;
  int order = 0;
  /// Bound on |log Z - value|; absent when no root-modulus bound was supplied
  /// or the bound does not exceed |lambda|.
  std::optional<double> tail_bound;
};

/// Truncated Taylor series of log Z_G around 0:
/// -sum_{j<=m} p_j lambda^j / j, where p_j are the power sums of the inverse roots
/// obtained exactly from the coefficients by Newton's identities.
/// `root_modulus_lower_bound` is a lower bound on the modulus of every root of P.
LogZApprox taylor_log_z(const IndPoly& p, ComplexPoint lambda, int m,
                        std::optional<double> root_modulus_lower_bound = std::nullopt,
                        int series_cap = kDefaultSeriesCap);

/// Exact inverse-root power sums p_1..p_m (index 0 unused, set to deg P).
std::vector<BigInt> inverse_root_power_sums(const IndPoly& p, int m);

} // namespace indzero
