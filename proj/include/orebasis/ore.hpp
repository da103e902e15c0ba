#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orebasis/finite_field.hpp"
#include "orebasis/int_poly.hpp"
#include "orebasis/newton.hpp"

namespace orebasis {

/// numerator(theta) / p^denom_exp
struct BasisElement {
  IntPoly numerator;
  unsigned long denom_exp = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

struct PIntegralBasis {
  unsigned long p = 0;
  /// Triangular: element k has a numerator of degree k.
  std::vector<BasisElement> elements;
  long index_valuation = 0;
  /// Generators as produced by the construction, before triangularization.
  std::vector<BasisElement> generators;
  /// Which construction produced the basis (for example "generic" or "quartic:E2/row10").
  std::string route;
  std::vector<std::string> notes;

  /// Module equality: same triangular form.
  bool same_module(const PIntegralBasis& other) const {
    return p == other.p && elements == other.elements;
  }
};

/// Rational coordinates of numerator/p^e in the power basis, length n.
std::vector<Rational> coordinates(const BasisElement& element, int n, const Prime& p);

/// Canonical upper-triangular form of the Z_(p)-module spanned by the elements.
PIntegralBasis triangularize(const std::vector<BasisElement>& elements, int n, const Prime& p);

/// Power basis 1, theta, ..., theta^(n-1).
PIntegralBasis power_basis(int n, const Prime& p);

/// Sum of ind_phi(f) over the lifts of the irreducible factors of f mod p.
long ind_p_lower_bound(const IntPoly& f, const Prime& p);

struct DecompositionEntry {
  IntPoly phi;
  Rational slope;
  std::string residual_factor;
  unsigned multiplicity = 1;
  std::optional<long> e;
  std::optional<long> f;
};

struct DecompositionType {
  std::vector<DecompositionEntry> primes;
  bool complete = true;
};

DecompositionType decomposition_type(const IntPoly& f, const Prime& p);

/// The basis q_{i,j}(theta) theta^k / p^floor(y_{i,j}) for p-regular f.
PIntegralBasis p_integral_basis_regular(const IntPoly& f, const Prime& p);

/// Same construction for caller-chosen lifts (with their multiplicities).
PIntegralBasis p_integral_basis_regular(const IntPoly& f, const Prime& p,
                                        const std::vector<std::pair<IntPoly, unsigned>>& lifts);

/// "(θ^3 + θ)/5" style rendering.
std::string element_to_string(const BasisElement& e, unsigned long p, const std::string& var = "θ");

nlohmann::json basis_to_json(const PIntegralBasis& basis, const DecompositionType* decomposition = nullptr);

}  // namespace orebasis
