#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orebasis/finite_field.hpp"
#include "orebasis/int_poly.hpp"

namespace orebasis {

/// f = sum a_i phi^i with deg a_i < deg phi. quotients[j] = q_j and
/// residues[j] = r_j satisfy f = r_j + q_j phi^j; quotients[0] = f.
struct PhiExpansion {
  IntPoly phi;
  std::vector<IntPoly> coefficients;
  std::vector<IntPoly> quotients;
  std::vector<IntPoly> residues;
};

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi);

struct LatticePoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct Side {
  LatticePoint start;
  LatticePoint end;
  Rational slope;  // -h/e in lowest terms
  long length = 0;
  long degree = 0;
  long ramification = 0;
  /// h for slope -h/e.
  long height() const { return start.y - end.y; }
};

struct NewtonPolygon {
  /// (i, u_i) for every coefficient, infinite ones included.
  std::vector<std::pair<long, ExtendedNat>> points;
  std::vector<LatticePoint> vertices;
  std::vector<Side> sides;
  /// Projection of the hull on the horizontal axis.
  long length = 0;
  long start() const { return vertices.empty() ? 0 : vertices.front().x; }
  long end() const { return vertices.empty() ? 0 : vertices.back().x; }
};

/// Lower convex hull of the finite points (i, v_p(a_i)).
NewtonPolygon newton_polygon(const PhiExpansion& expansion, const Prime& p);
NewtonPolygon newton_polygon(const std::vector<std::pair<long, ExtendedNat>>& points);

/// Sides of negative slope.
NewtonPolygon principal_part(const NewtonPolygon& N);

/// Ordinates y_0, ..., y_l of a principal polygon starting at abscissa 0.
std::vector<Rational> ordinates(const NewtonPolygon& principal);

/// True when (x, y) lies on or below the polygon (and within its abscissa range).
bool on_or_below(const NewtonPolygon& N, long x, const Rational& y);

/// Number of lattice points (x, y), 0 < x, 0 < y, on or below the principal polygon.
long lattice_points_under(const NewtonPolygon& principal);

/// deg(phi) * sum_{j=1}^{l-1} floor(y_j).
long phi_index(const IntPoly& f, const IntPoly& phi, const Prime& p);

/// c_i = reduction of a_i / p^{u_i} in F_phi when (i, u_i) lies on the polygon, else 0.
std::vector<FqElem> residual_coefficients(const NewtonPolygon& principal, const PhiExpansion& expansion,
                                          const FiniteField& F);

/// c_s + c_{s+e} y + ... + c_{s+de} y^d.
FqPoly residual_polynomial(const Side& side, const std::vector<FqElem>& coefficients);

struct SideResidual {
  Side side;
  FqPoly residual;
  std::vector<std::pair<FqPoly, unsigned>> factors;
  bool separable() const;
};

/// Everything attached to f and one lift phi.
struct PhiAnalysis {
  PhiExpansion expansion;
  NewtonPolygon polygon;
  NewtonPolygon principal;
  FiniteField field;
  std::vector<FqElem> coefficients;
  std::vector<SideResidual> sides;

  bool regular() const;
  /// First side with an inseparable residual polynomial, if any.
  const SideResidual* irregular_side() const;
  long index() const;
};

PhiAnalysis analyze_phi(const IntPoly& f, const IntPoly& phi, const Prime& p, const FactorOptions& options = {});

struct RegularityWitness {
  Side side;
  FqPoly residual;
  FqPoly factor;
  unsigned multiplicity = 0;
};

struct RegularityResult {
  bool regular = true;
  std::optional<RegularityWitness> witness;
};

RegularityResult is_phi_regular(const IntPoly& f, const IntPoly& phi, const Prime& p);

struct PRegularityResult {
  bool regular = true;
  std::vector<std::pair<IntPoly, RegularityResult>> per_phi;
};

/// Checks phi-regularity for every lift of multiplicity > 1.
PRegularityResult is_p_regular(const IntPoly& f, const Prime& p,
                               const std::vector<std::pair<IntPoly, unsigned>>& lifts);
PRegularityResult is_p_regular(const IntPoly& f, const Prime& p);

std::string slope_string(const Rational& slope);
nlohmann::json polygon_to_json(const NewtonPolygon& N);
std::string polygon_to_svg(const NewtonPolygon& N);

}  // namespace orebasis
