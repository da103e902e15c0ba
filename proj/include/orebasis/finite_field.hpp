#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orebasis/int_poly.hpp"

namespace orebasis {

/// Element of F_p[x]/(phi). rep has exactly deg(phi) entries in [0, p).
struct FqElem {
  std::vector<std::uint64_t> rep;
  friend bool operator==(const FqElem&, const FqElem&) = default;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// Polynomial over a finite field, coefficient of y^i at index i, normalized.
using FqPoly = std::vector<FqElem>;

/// The field F_p[x]/(phi) for phi irreducible mod p. With deg phi = 1 this is F_p.
class FiniteField {
 public:
  FiniteField(const Prime& p, const IntPoly& phi);
  static FiniteField prime_field(const Prime& p);

  const Prime& prime() const { return p_; }
  std::uint64_t characteristic() const { return p_.value(); }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  /// p^degree
  Integer order() const;
  /// Monic modulus mod p, coefficients in [0, p).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_integer(const Integer& n) const;
  /// Reduces an integer polynomial mod (p, phi).
  FqElem from_poly(const IntPoly& P) const;
  /// Symmetric integer lift of the representative.
  IntPoly lift(const FqElem& a) const;

  bool is_zero(const FqElem& a) const;
  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;
  FqElem pow(const FqElem& a, const Integer& e) const;
  FqElem frobenius(const FqElem& a) const;
  /// The unique b with b^p = a.
  FqElem pth_root(const FqElem& a) const;

  FqElem random(std::mt19937_64& rng) const;

  std::string to_string(const FqElem& a) const;

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t invmod(std::uint64_t a) const;

  Prime p_;
  std::vector<std::uint64_t> modulus_;
};

struct FactorOptions {
  std::uint64_t seed = 0x5eed;
};

namespace fq {

void normalize(FqPoly& f);
FqPoly add(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b);
std::pair<FqPoly, FqPoly> divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly rem(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly monic(const FiniteField& F, const FqPoly& a);
FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b);
FqPoly derivative(const FiniteField& F, const FqPoly& a);
FqPoly powmod(const FiniteField& F, const FqPoly& base, const Integer& e, const FqPoly& m);
int degree(const FqPoly& a);

/// Squarefree decomposition of a monic polynomial: pairs (g, k) with f = prod g^k.
std::vector<std::pair<FqPoly, unsigned>> squarefree(const FiniteField& F, const FqPoly& f);
/// Complete factorization into monic irreducibles with multiplicity, sorted by
/// degree then representation.
std::vector<std::pair<FqPoly, unsigned>> factor(const FiniteField& F, const FqPoly& f,
                                                const FactorOptions& options = {});
bool is_separable(const FiniteField& F, const FqPoly& R);
bool is_irreducible(const FiniteField& F, const FqPoly& f);

std::string to_string(const FiniteField& F, const FqPoly& f, const std::string& var = "y");

}  // namespace fq

/// Factorization of f mod p with symmetric monic lifts, sorted by degree.
std::vector<std::pair<IntPoly, unsigned>> factor_mod_p(const IntPoly& f, const Prime& p,
                                                       const FactorOptions& options = {});

FqPoly reduce_mod_p(const FiniteField& Fp, const IntPoly& f);

}  // namespace orebasis
