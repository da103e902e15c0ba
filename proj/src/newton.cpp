#include "orebasis/newton.hpp"

#include <algorithm>
#include <sstream>

namespace orebasis {

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi) {
  if (phi.degree() < 1 || !phi.is_monic()) throw PreconditionFailed("phi_expand: phi must be monic of positive degree");
  PhiExpansion e;
  e.phi = phi;
  e.quotients.push_back(f);
  e.residues.emplace_back();
  IntPoly q = f;
  IntPoly phi_power = IntPoly::constant(1);
  IntPoly residue;
  while (!q.is_zero()) {
    auto [next, a] = divmod_monic(q, phi);
    e.coefficients.push_back(a);
    residue += a * phi_power;
    phi_power *= phi;
    q = std::move(next);
    if (q.is_zero()) break;
    e.quotients.push_back(q);
    e.residues.push_back(residue);
  }
  return e;
}

namespace {

// (b - a) x (c - a); nonpositive when a, b, c do not turn counterclockwise.
long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Side make_side(const LatticePoint& a, const LatticePoint& b) {
  Side s;
  s.start = a;
  s.end = b;
  s.slope = Rational(b.y - a.y, b.x - a.x);
  s.slope.canonicalize();
  s.length = b.x - a.x;
  s.ramification = s.slope.get_den().get_si();
  s.degree = s.length / s.ramification;
  return s;
}

std::optional<Rational> ordinate_at(const NewtonPolygon& N, long x) {
  for (const auto& s : N.sides) {
    if (x >= s.start.x && x <= s.end.x) return Rational(s.start.y) + s.slope * (x - s.start.x);
  }
  if (N.sides.empty() && !N.vertices.empty() && N.vertices.front().x == x) return Rational(N.vertices.front().y);
  return std::nullopt;
}

}  // namespace

NewtonPolygon newton_polygon(const std::vector<std::pair<long, ExtendedNat>>& points) {
  NewtonPolygon N;
  N.points = points;
  std::vector<LatticePoint> finite;
  for (const auto& [i, u] : points)
    if (u.is_finite()) finite.push_back({i, u.value()});
  std::sort(finite.begin(), finite.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  std::vector<LatticePoint> hull;
  for (const auto& pt : finite) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  N.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) N.sides.push_back(make_side(hull[i], hull[i + 1]));
  N.length = hull.empty() ? 0 : hull.back().x - hull.front().x;
  return N;
}

NewtonPolygon newton_polygon(const PhiExpansion& expansion, const Prime& p) {
  std::vector<std::pair<long, ExtendedNat>> points;
  for (std::size_t i = 0; i < expansion.coefficients.size(); ++i)
    points.emplace_back(static_cast<long>(i), poly_vp(expansion.coefficients[i], p));
  return newton_polygon(points);
}

NewtonPolygon principal_part(const NewtonPolygon& N) {
  NewtonPolygon P;
  P.points = N.points;
  for (const auto& s : N.sides) {
    if (s.slope >= 0) break;
    if (P.vertices.empty()) P.vertices.push_back(s.start);
    P.vertices.push_back(s.end);
    P.sides.push_back(s);
  }
  P.length = P.vertices.empty() ? 0 : P.vertices.back().x - P.vertices.front().x;
  return P;
}

std::vector<Rational> ordinates(const NewtonPolygon& principal) {
  if (principal.sides.empty()) return {};
  if (principal.start() != 0) throw PreconditionFailed("ordinates: polygon does not start at abscissa 0");
  std::vector<Rational> y;
  for (long j = 0; j <= principal.end(); ++j) y.push_back(*ordinate_at(principal, j));
  return y;
}

bool on_or_below(const NewtonPolygon& N, long x, const Rational& y) {
  auto o = ordinate_at(N, x);
  return o && y <= *o;
}

long lattice_points_under(const NewtonPolygon& principal) {
  long count = 0;
  for (const auto& s : principal.sides) {
    long first = std::max(s.start.x, 1L);
    for (long x = first; x <= s.end.x; ++x) {
      if (x == s.start.x && &s != &principal.sides.front()) continue;  // shared vertex counted once
      for (long y = 1;; ++y) {
        LatticePoint pt{x, y};
        if (cross(s.start, s.end, pt) > 0) break;
        ++count;
      }
    }
  }
  return count;
}

long phi_index(const IntPoly& f, const IntPoly& phi, const Prime& p) {
  NewtonPolygon N = principal_part(newton_polygon(phi_expand(f, phi), p));
  if (N.sides.empty()) return 0;
  auto y = ordinates(N);
  Integer total = 0;
  for (std::size_t j = 1; j + 1 < y.size(); ++j) total += floor(y[j]);
  return phi.degree() * total.get_si();
}

std::vector<FqElem> residual_coefficients(const NewtonPolygon& principal, const PhiExpansion& expansion,
                                          const FiniteField& F) {
  std::vector<FqElem> c;
  const Prime& p = F.prime();
  for (long i = 0; i <= principal.end(); ++i) {
    const IntPoly a = i < static_cast<long>(expansion.coefficients.size()) ? expansion.coefficients[i] : IntPoly();
    ExtendedNat u = poly_vp(a, p);
    auto o = ordinate_at(principal, i);
    if (u.is_finite() && o && *o == u.value())
      c.push_back(F.from_poly(a.divide_exact(p.power(u.value()))));
    else
      c.push_back(F.zero());
  }
  return c;
}

FqPoly residual_polynomial(const Side& side, const std::vector<FqElem>& coefficients) {
  FqPoly R;
  for (long k = 0; k <= side.degree; ++k) R.push_back(coefficients.at(side.start.x + k * side.ramification));
  return R;
}

bool SideResidual::separable() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.second == 1; });
}

bool PhiAnalysis::regular() const { return irregular_side() == nullptr; }

const SideResidual* PhiAnalysis::irregular_side() const {
  for (const auto& s : sides)
    if (!s.separable()) return &s;
  return nullptr;
}

long PhiAnalysis::index() const {
  if (principal.sides.empty()) return 0;
  auto y = ordinates(principal);
  Integer total = 0;
  for (std::size_t j = 1; j + 1 < y.size(); ++j) total += floor(y[j]);
  return expansion.phi.degree() * total.get_si();
}

PhiAnalysis analyze_phi(const IntPoly& f, const IntPoly& phi, const Prime& p, const FactorOptions& options) {
  PhiExpansion e = phi_expand(f, phi);
  NewtonPolygon N = newton_polygon(e, p);
  NewtonPolygon P = principal_part(N);
  FiniteField F(p, phi);
  auto c = residual_coefficients(P, e, F);
  std::vector<SideResidual> sides;
  for (const auto& s : P.sides) {
    FqPoly R = residual_polynomial(s, c);
    auto factors = fq::factor(F, R, options);
    sides.push_back({s, std::move(R), std::move(factors)});
  }
  return PhiAnalysis{std::move(e), std::move(N), std::move(P), std::move(F), std::move(c), std::move(sides)};
}

RegularityResult is_phi_regular(const IntPoly& f, const IntPoly& phi, const Prime& p) {
  PhiAnalysis A = analyze_phi(f, phi, p);
  const SideResidual* bad = A.irregular_side();
  if (!bad) return {};
  for (const auto& [g, k] : bad->factors)
    if (k > 1) return {false, RegularityWitness{bad->side, bad->residual, g, k}};
  return {false, RegularityWitness{bad->side, bad->residual, {}, 0}};
}

PRegularityResult is_p_regular(const IntPoly& f, const Prime& p,
                               const std::vector<std::pair<IntPoly, unsigned>>& lifts) {
  PRegularityResult r;
  for (const auto& [phi, l] : lifts) {
    if (l < 2) continue;
    RegularityResult one = is_phi_regular(f, phi, p);
    r.regular = r.regular && one.regular;
    r.per_phi.emplace_back(phi, std::move(one));
  }
  return r;
}

PRegularityResult is_p_regular(const IntPoly& f, const Prime& p) { return is_p_regular(f, p, factor_mod_p(f, p)); }

std::string slope_string(const Rational& slope) {
  return slope.get_num().get_str() + "/" + slope.get_den().get_str();
}

nlohmann::json polygon_to_json(const NewtonPolygon& N) {
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (const auto& [i, u] : N.points) {
    if (u.is_finite())
      j["points"].push_back({i, u.value()});
    else
      j["points"].push_back({i, nullptr});
  }
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : N.vertices) j["vertices"].push_back({v.x, v.y});
  j["sides"] = nlohmann::json::array();
  for (const auto& s : N.sides)
    j["sides"].push_back({{"slope", slope_string(s.slope)},
                          {"length", s.length},
                          {"degree", s.degree},
                          {"ramification", s.ramification}});
  j["length"] = N.length;
  return j;
}

std::string polygon_to_svg(const NewtonPolygon& N) {
  constexpr long pitch = 10;
  long max_x = 1, max_y = 1;
  for (const auto& [i, u] : N.points) {
    max_x = std::max(max_x, i);
    if (u.is_finite()) max_y = std::max(max_y, u.value());
  }
  const long width = (max_x + 2) * pitch;
  const long height = (max_y + 2) * pitch;
  auto sx = [&](long x) { return (x + 1) * pitch; };
  auto sy = [&](long y) { return height - (y + 1) * pitch; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(max_x) << "\" y2=\"" << sy(0)
     << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(max_y)
     << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  if (N.vertices.size() >= 2) {
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < N.vertices.size(); ++k)
      os << (k ? " " : "") << sx(N.vertices[k].x) << "," << sy(N.vertices[k].y);
    os << "\"/>\n";
  }
  for (const auto& [i, u] : N.points)
    if (u.is_finite())
      os << "  <circle cx=\"" << sx(i) << "\" cy=\"" << sy(u.value()) << "\" r=\"1.5\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace orebasis
