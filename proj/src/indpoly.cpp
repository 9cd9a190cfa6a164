#include "indzero/indpoly.hpp"

#include "indzero/errors.hpp"
#include "parallel.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

namespace indzero {

IndPoly::IndPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.front() != 1) {
    throw PreconditionError("independence polynomial needs e_0 = 1");
  }
  for (const auto& c : coeffs_) {
    if (c < 0) {
      throw PreconditionError("independence polynomial coefficients are nonnegative");
    }
  }
  while (coeffs_.size() > 1 && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

std::vector<double> IndPoly::coeffs_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    out.push_back(c.convert_to<double>());
  }
  return out;
}

namespace {

using Poly = std::vector<BigInt>;
using VertexSet = std::vector<std::uint64_t>;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : s) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

class IndPolySolver {
public:
  explicit IndPolySolver(const Graph& g) : g_(g), words_((static_cast<std::size_t>(g.vertex_count()) + 63) / 64) {}

  Poly solve() {
    VertexSet all(words_, 0);
    for (int v = 0; v < g_.vertex_count(); ++v) {
      set(all, v);
    }
    return of_set(all);
  }

private:
  static bool test(const VertexSet& s, int v) { return (s[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u; }
  static void set(VertexSet& s, int v) { s[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }
  static void clear(VertexSet& s, int v) { s[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  static bool empty(const VertexSet& s) {
    for (auto w : s) {
      if (w) {
        return false;
      }
    }
    return true;
  }

  static int first(const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i]) {
        return static_cast<int>(i * 64) + std::countr_zero(s[i]);
      }
    }
    return -1;
  }

  std::vector<VertexSet> components(const VertexSet& s) const {
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (!empty(left)) {
      VertexSet comp(words_, 0);
      std::vector<int> stack{first(left)};
      clear(left, stack.back());
      set(comp, stack.back());
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g_.neighbors(v)) {
          if (test(left, w)) {
            clear(left, w);
            set(comp, w);
            stack.push_back(w);
          }
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  Poly of_set(const VertexSet& s) {
    if (empty(s)) {
      return {1};
    }
    auto comps = components(s);
    if (comps.size() == 1) {
      return of_component(comps.front());
    }
    Poly acc{1};
    for (const auto& c : comps) {
      acc = multiply(acc, of_component(c));
    }
    return acc;
  }

  Poly of_component(const VertexSet& s) {
    if (auto it = memo_.find(s); it != memo_.end()) {
      return it->second;
    }
    int pivot = -1;
    int pivot_deg = -1;
    int count = 0;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (!test(s, v)) {
        continue;
      }
      ++count;
      int deg = 0;
      for (int w : g_.neighbors(v)) {
        deg += test(s, w) ? 1 : 0;
      }
      if (deg > pivot_deg) {
        pivot = v;
        pivot_deg = deg;
      }
    }
    Poly result;
    if (count == 1) {
      result = {1, 1};
    } else {
      VertexSet without = s;
      clear(without, pivot);
      VertexSet closed = without;
      for (int w : g_.neighbors(pivot)) {
        clear(closed, w);
      }
      Poly a = of_set(without);
      Poly b = of_set(closed);
      result.assign(std::max(a.size(), b.size() + 1), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        result[i] += a[i];
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        result[i + 1] += b[i];
      }
    }
    memo_.emplace(s, result);
    return result;
  }

  const Graph& g_;
  std::size_t words_;
  std::unordered_map<VertexSet, Poly, VertexSetHash> memo_;
};

} // namespace

IndPoly ind_poly(const Graph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw CapExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices; cap is " +
                      std::to_string(vertex_cap));
  }
  return IndPoly(IndPolySolver(g).solve());
}

ComplexPoint eval(std::span<const double> coeffs, ComplexPoint lambda) {
  ComplexPoint acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * lambda + *it;
  }
  return acc;
}

ComplexPoint eval(const IndPoly& p, ComplexPoint lambda) {
  const auto c = p.coeffs_double();
  return eval(std::span<const double>(c), lambda);
}

std::vector<BigInt> coeffs_by_size_enumeration(const Graph& g, int m) {
  if (m < 0) {
    throw PreconditionError("prefix order must be nonnegative");
  }
  if (m > kMaxPrefixOrder) {
    throw CapExceeded("prefix enumeration is limited to m <= " + std::to_string(kMaxPrefixOrder));
  }
  std::vector<BigInt> counts(static_cast<std::size_t>(m) + 1, 0);
  counts[0] = 1;
  const int n = g.vertex_count();
  std::vector<int> chosen;
  // blocked[v] counts chosen vertices adjacent to v.
  std::vector<int> blocked(static_cast<std::size_t>(n), 0);
  auto extend = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == m) {
      return;
    }
    for (int v = start; v < n; ++v) {
      if (blocked[static_cast<std::size_t>(v)]) {
        continue;
      }
      chosen.push_back(v);
      ++counts[chosen.size()];
      for (int w : g.neighbors(v)) {
        ++blocked[static_cast<std::size_t>(w)];
      }
      self(self, v + 1);
      for (int w : g.neighbors(v)) {
        --blocked[static_cast<std::size_t>(w)];
      }
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return counts;
}

TreeCatalog::TreeCatalog(int d, int n_max) {
  if (n_max > kMaxCatalogVertices) {
    throw CapExceeded("tree catalog is limited to n_max <= " + std::to_string(kMaxCatalogVertices));
  }
  trees_ = gen_all_trees(n_max, d + 1);
  polys_.reserve(trees_.size());
  coeffs_.reserve(trees_.size());
  for (const auto& t : trees_) {
    polys_.push_back(ind_poly(t));
    coeffs_.push_back(polys_.back().coeffs_double());
  }
}

CatalogMinimum TreeCatalog::min_abs(ComplexPoint lambda, unsigned threads) const {
  require_finite(lambda, "lambda");
  std::vector<double> moduli(trees_.size());
  detail::parallel_for(trees_.size(), threads, [&](std::size_t i) {
    moduli[i] = std::abs(eval(std::span<const double>(coeffs_[i]), lambda));
  });
  CatalogMinimum best;
  best.catalog_size = trees_.size();
  best.min_modulus = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < best.min_modulus) {
      best.min_modulus = moduli[i];
      best.witness_index = i;
    }
  }
  if (!trees_.empty()) {
    best.witness = trees_[best.witness_index];
  }
  return best;
}

CatalogMinimum min_abs_over_catalog(int d, ComplexPoint lambda, int n_max, unsigned threads) {
  return TreeCatalog(d, n_max).min_abs(lambda, threads);
}

std::vector<BigInt> inverse_root_power_sums(const IndPoly& p, int m) {
  const auto& e = p.coeffs();
  const int deg = p.degree();
  auto coeff = [&](int k) -> BigInt { return k <= deg ? e[static_cast<std::size_t>(k)] : BigInt(0); };
  std::vector<BigInt> ps(static_cast<std::size_t>(m) + 1, 0);
  ps[0] = deg;
  // Z'/Z = -sum_j p_j x^{j-1}  =>  j e_j = -sum_{i=0}^{j-1} e_i p_{j-i}, with e_0 = 1.
  for (int j = 1; j <= m; ++j) {
    BigInt acc = -BigInt(j) * coeff(j);
    for (int i = 1; i < j && i <= deg; ++i) {
      acc -= e[static_cast<std::size_t>(i)] * ps[static_cast<std::size_t>(j - i)];
    }
    ps[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return ps;
}

namespace {

/// Natural log of |x| for a nonzero big integer, without overflowing double.
double log_abs(const BigInt& x) {
  const BigInt mag = boost::multiprecision::abs(x);
  const auto bits = boost::multiprecision::msb(mag);
  if (bits < 1000) {
    return std::log(mag.convert_to<double>());
  }
  const unsigned shift = static_cast<unsigned>(bits) - 60;
  const BigInt top = mag >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

} // namespace

LogZApprox taylor_log_z(const IndPoly& p, ComplexPoint lambda, int m, std::optional<double> root_modulus_lower_bound,
                        int series_cap) {
  require_finite(lambda, "lambda");
  if (m < 1) {
    throw PreconditionError("series order must be at least 1");
  }
  if (m > series_cap) {
    throw CapExceeded("series order " + std::to_string(m) + " exceeds cap " + std::to_string(series_cap));
  }
  LogZApprox out;
  out.order = m;
  out.value = 0.0;

  const double lam_abs = std::abs(lambda);
  if (lam_abs > 0.0) {
    const auto ps = inverse_root_power_sums(p, m);
    const double log_lam = std::log(lam_abs);
    const double arg_lam = principal_arg(lambda);
    // Sum from high order to low order to limit rounding drift.
    for (int j = m; j >= 1; --j) {
      const BigInt& pj = ps[static_cast<std::size_t>(j)];
      if (pj == 0) {
        continue;
      }
      const double log_mag = log_abs(pj) + j * log_lam - std::log(static_cast<double>(j));
      const double phase = j * arg_lam + (pj < 0 ? 0.0 : kPi);
      out.value += std::polar(std::exp(log_mag), phase);
    }
  }

  if (root_modulus_lower_bound && *root_modulus_lower_bound > lam_abs) {
    const double q = lam_abs / *root_modulus_lower_bound;
    const double n = p.coeffs().size() > 1 ? p.coeffs()[1].convert_to<double>() : 0.0;
    double tail = 0.0;
    if (q > 0.0) {
      // Sum q^j / j for j = m+1 .. last, then bound the rest geometrically.
      double power = std::pow(q, m + 1);
      int last = m + 1;
      for (;; ++last) {
        const double term = power / last;
        tail += term;
        if (term < 1e-18 * tail || last >= m + 100000) {
          break;
        }
        power *= q;
      }
      tail += power * q / ((last + 1) * (1.0 - q));
    }
    out.tail_bound = n * tail;
  }
  return out;
}

} // namespace indzero
