#include "orebasis/ore.hpp"

#include <sstream>

#include "orebasis/irreducibility.hpp"

namespace orebasis {

namespace {

// Representative of x modulo p^v Z_(p): r p^(v-m) with 0 <= r < p^m.
Rational reduce_mod_pv(const Rational& x, long v, const Prime& p) {
  if (x == 0) return 0;
  Rational y = x;
  if (v >= 0)
    y /= Rational(p.power(v));
  else
    y *= Rational(p.power(-v));
  Integer den = y.get_den();
  Integer rest;
  Integer pz = p.as_integer();
  long m = static_cast<long>(mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
  if (m == 0) return 0;
  Integer pm = p.power(m);
  Integer r = mod(y.get_num() * inverse_mod(rest, pm), pm);
  Rational out(r, pm);
  out.canonicalize();
  if (v >= 0)
    out *= Rational(p.power(v));
  else
    out /= Rational(p.power(-v));
  return out;
}

}  // namespace

std::vector<Rational> coordinates(const BasisElement& element, int n, const Prime& p) {
  if (element.numerator.degree() >= n) throw PreconditionFailed("basis element numerator degree must be below n");
  std::vector<Rational> v(n);
  Integer den = p.power(element.denom_exp);
  for (int i = 0; i <= element.numerator.degree(); ++i) {
    v[i] = Rational(element.numerator.coeff(i), den);
    v[i].canonicalize();
  }
  return v;
}

PIntegralBasis triangularize(const std::vector<BasisElement>& elements, int n, const Prime& p) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : elements) rows.push_back(coordinates(e, n, p));

  std::vector<std::vector<Rational>> pivots(n);
  std::vector<long> pivot_val(n);
  for (int k = n - 1; k >= 0; --k) {
    int best = -1;
    long best_v = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][k] == 0) continue;
      long v = vp_rational(rows[r][k], p);
      if (best < 0 || v < best_v) {
        best = static_cast<int>(r);
        best_v = v;
      }
    }
    if (best < 0) throw RankDeficient("triangularize: elements do not span rank " + std::to_string(n));
    std::vector<Rational> piv = rows[best];
    rows.erase(rows.begin() + best);
    for (auto& row : rows) {
      if (row[k] == 0) continue;
      Rational factor = row[k] / piv[k];
      for (int i = 0; i <= k; ++i) row[i] -= factor * piv[i];
    }
    Rational target = best_v >= 0 ? Rational(p.power(best_v)) : Rational(1) / Rational(p.power(-best_v));
    Rational unit = target / piv[k];
    for (int i = 0; i <= k; ++i) piv[i] *= unit;
    pivots[k] = std::move(piv);
    pivot_val[k] = best_v;
  }

  for (int k = 0; k < n; ++k) {
    auto& row = pivots[k];
    for (int j = k - 1; j >= 0; --j) {
      if (row[j] == 0) continue;
      Rational reduced = reduce_mod_pv(row[j], pivot_val[j], p);
      Rational factor = (row[j] - reduced) / pivots[j][j];
      for (int i = 0; i <= j; ++i) row[i] -= factor * pivots[j][i];
    }
  }

  PIntegralBasis B;
  B.p = p.value();
  B.generators = elements;
  for (int k = 0; k < n; ++k) {
    long e = 0;
    for (const auto& x : pivots[k])
      if (x != 0) e = std::max(e, -vp_rational(x, p));
    Integer scale = p.power(e);
    std::vector<Integer> num;
    for (const auto& x : pivots[k]) {
      Rational y = x * Rational(scale);
      if (y.get_den() != 1) throw Inconsistent("triangularize: non p-power denominator survived");
      num.push_back(y.get_num());
    }
    B.elements.push_back({IntPoly(std::move(num)), static_cast<unsigned long>(e)});
    B.index_valuation -= pivot_val[k];
  }
  return B;
}

PIntegralBasis power_basis(int n, const Prime& p) {
  std::vector<BasisElement> e;
  for (int k = 0; k < n; ++k) e.push_back({IntPoly::monomial(1, k), 0});
  return triangularize(e, n, p);
}

long ind_p_lower_bound(const IntPoly& f, const Prime& p) {
  long total = 0;
  for (const auto& [phi, l] : factor_mod_p(f, p)) total += phi_index(f, phi, p);
  return total;
}

DecompositionType decomposition_type(const IntPoly& f, const Prime& p) {
  if (!integer_roots(f).empty()) throw NotIrreducible("decomposition_type: " + f.to_string() + " has a rational root");
  DecompositionType D;
  for (const auto& [phi, l] : factor_mod_p(f, p)) {
    PhiAnalysis A = analyze_phi(f, phi, p);
    for (const auto& s : A.sides) {
      for (const auto& [psi, mult] : s.factors) {
        DecompositionEntry entry;
        entry.phi = phi;
        entry.slope = s.side.slope;
        entry.residual_factor = fq::to_string(A.field, psi);
        entry.multiplicity = mult;
        if (mult == 1) {
          entry.e = s.side.ramification;
          entry.f = phi.degree() * fq::degree(psi);
        } else {
          D.complete = false;
        }
        D.primes.push_back(std::move(entry));
      }
    }
  }
  return D;
}

PIntegralBasis p_integral_basis_regular(const IntPoly& f, const Prime& p,
                                        const std::vector<std::pair<IntPoly, unsigned>>& lifts) {
  const int n = f.degree();
  std::vector<BasisElement> gens;
  long expected_index = 0;
  for (const auto& [phi, l] : lifts) {
    PhiAnalysis A = analyze_phi(f, phi, p);
    if (const SideResidual* bad = A.irregular_side()) {
      std::ostringstream os;
      os << "f is not regular for phi = " << phi << ": side of slope " << slope_string(bad->side.slope)
         << " has residual polynomial " << fq::to_string(A.field, bad->residual);
      throw NotRegular(os.str());
    }
    if (A.principal.end() != static_cast<long>(l))
      throw Inconsistent("principal polygon length differs from the multiplicity of phi mod p");
    auto y = ordinates(A.principal);
    for (unsigned j = 1; j <= l; ++j) {
      unsigned long d = floor(y[j]).get_ui();
      for (int k = 0; k < phi.degree(); ++k) gens.push_back({A.expansion.quotients[j] * IntPoly::monomial(1, k), d});
    }
    expected_index += A.index();
  }
  PIntegralBasis B = triangularize(gens, n, p);
  if (B.index_valuation != expected_index)
    throw Inconsistent("index of the regular basis differs from the sum of phi-indices");
  B.route = "generic";
  return B;
}

PIntegralBasis p_integral_basis_regular(const IntPoly& f, const Prime& p) {
  if (!f.is_monic()) throw PreconditionFailed("f must be monic");
  return p_integral_basis_regular(f, p, factor_mod_p(f, p));
}

std::string element_to_string(const BasisElement& e, unsigned long p, const std::string& var) {
  std::string num = e.numerator.to_string(var);
  std::string compact;
  for (char ch : num)
    if (ch != '*') compact += ch;
  if (e.denom_exp == 0) return compact;
  bool single = compact.find(" + ") == std::string::npos && compact.find(" - ") == std::string::npos;
  std::string den = std::to_string(p);
  if (e.denom_exp > 1) den += "^" + std::to_string(e.denom_exp);
  return (single ? compact : "(" + compact + ")") + "/" + den;
}

nlohmann::json basis_to_json(const PIntegralBasis& basis, const DecompositionType* decomposition) {
  nlohmann::json j;
  j["p"] = basis.p;
  j["index_valuation"] = basis.index_valuation;
  j["elements"] = nlohmann::json::array();
  for (const auto& e : basis.elements)
    j["elements"].push_back({{"numerator", e.numerator.to_string()}, {"denom_exp", e.denom_exp}});
  if (!basis.route.empty()) j["route"] = basis.route;
  if (decomposition) {
    j["decomposition"] = nlohmann::json::array();
    for (const auto& d : decomposition->primes) {
      nlohmann::json entry;
      entry["e"] = d.e ? nlohmann::json(*d.e) : nlohmann::json(nullptr);
      entry["f"] = d.f ? nlohmann::json(*d.f) : nlohmann::json(nullptr);
      j["decomposition"].push_back(entry);
    }
  }
  return j;
}

}  // namespace orebasis
