#include "orebasis/quartic.hpp"

#include <functional>
#include <sstream>

#include "orebasis/irreducibility.hpp"
#include "orebasis/newton.hpp"
#include "orebasis/resultant.hpp"
#include "quartic_internal.hpp"

namespace orebasis {

namespace detail {

BasisElement to_theta(const BasisElement& element, const Integer& m, unsigned long k, const Prime& p) {
  const IntPoly& P = element.numerator;
  int d = P.degree();
  if (d < 0) return element;
  IntPoly shift = IntPoly::linear(m);
  IntPoly N;
  IntPoly power{1};
  for (int i = 0; i <= d; ++i) {
    N += power * (P.coeff(i) * p.power(k * static_cast<unsigned long>(d - i)));
    power *= shift;
  }
  return {N, element.denom_exp + k * static_cast<unsigned long>(d)};
}

std::vector<BasisElement> to_theta(const std::vector<BasisElement>& elements, const Integer& m, unsigned long k,
                                   const Prime& p) {
  std::vector<BasisElement> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(to_theta(e, m, k, p));
  return out;
}

std::vector<BasisElement> scaled_powers(const std::array<unsigned long, 4>& exps) {
  std::vector<BasisElement> out;
  for (std::size_t i = 0; i < 4; ++i) out.push_back({IntPoly::monomial(1, i), exps[i]});
  return out;
}

PIntegralBasis finish(const std::vector<BasisElement>& generators, const Prime& p, std::string route,
                      std::vector<std::string> notes) {
  PIntegralBasis B = triangularize(generators, 4, p);
  B.generators = generators;
  B.route = std::move(route);
  B.notes = std::move(notes);
  return B;
}

IntPoly first_quotient(const IntPoly& F, const Integer& s) { return divmod_monic(F, IntPoly::linear(s)).first; }

IntPoly second_quotient(const IntPoly& F, const Integer& s) {
  return divmod_monic(first_quotient(F, s), IntPoly::linear(s)).first;
}

bool is_regular_at(const IntPoly& F, const Integer& s, const Prime& p) {
  return analyze_phi(F, IntPoly::linear(s), p).regular();
}

long nu_length_two(const IntPoly& F, const Integer& s, const Prime& p) {
  ExtendedNat u0 = vp(F.evaluate(s), p);
  ExtendedNat u1 = vp(F.derivative().evaluate(s), p);
  if (u0.is_infinite()) throw NotIrreducible("F has the integer root " + s.get_str());
  long half = u0.value() / 2;
  return u1.is_infinite() ? half : std::min(half, u1.value());
}

std::string iteration_note(const IterationResult& r) {
  std::ostringstream os;
  os << "regular lift s = " << r.s << " after " << r.steps.size() << " step(s)";
  for (const auto& st : r.steps) os << "; s = " << st.s << " irregular (row " << st.row << ", delta " << st.delta << ")";
  return os.str();
}

}  // namespace detail

using namespace detail;

namespace {

bool divides(const Prime& p, const Integer& n) { return mod(n, p.as_integer()) == 0; }

ExtendedNat twice(ExtendedNat v) { return v + v; }
ExtendedNat thrice(ExtendedNat v) { return v + v + v; }

bool congruent(const Integer& x, const Integer& y, const Prime& p) { return divides(p, x - y); }

}  // namespace

std::string to_string(QuarticCase c) {
  switch (c) {
    case QuarticCase::Separable: return "SEPARABLE";
    case QuarticCase::A1: return "A1";
    case QuarticCase::A2: return "A2";
    case QuarticCase::B1: return "B1";
    case QuarticCase::B2: return "B2";
    case QuarticCase::B3: return "B3";
    case QuarticCase::B4: return "B4";
    case QuarticCase::C1: return "C1";
    case QuarticCase::C2: return "C2";
    case QuarticCase::D1: return "D1";
    case QuarticCase::D2: return "D2";
    case QuarticCase::E1: return "E1";
    case QuarticCase::E2: return "E2";
  }
  return "?";
}

std::string to_string(InitialCondition c) {
  switch (c) {
    case InitialCondition::I: return "I";
    case InitialCondition::II: return "II";
    case InitialCondition::III: return "III";
    case InitialCondition::None: return "NONE";
  }
  return "?";
}

IntPoly QuarticContext::f() const { return IntPoly(std::vector<Integer>{c, b, a, 0, 1}); }

Integer quartic_discriminant(const Integer& a, const Integer& b, const Integer& c) {
  Integer a2 = a * a;
  Integer b2 = b * b;
  return 16 * a2 * a2 * c - 128 * a2 * c * c + 144 * a * b2 * c - 4 * a2 * a * b2 + 256 * c * c * c - 27 * b2 * b2;
}

QuarticContext make_quartic_context(const Integer& a, const Integer& b, const Integer& c, const Prime& p) {
  QuarticContext ctx{a, b, c, p, quartic_discriminant(a, b, c), 0};
  if (ctx.disc == 0) throw NotIrreducible("x^4 + a x^2 + b x + c has a repeated factor");
  ctx.Delta = vp(ctx.disc, p).value();
  return ctx;
}

QuarticCase classify(const Integer& a, const Integer& b, const Integer& c, const Prime& p) {
  Integer disc = quartic_discriminant(a, b, c);
  if (disc == 0) throw NotIrreducible("x^4 + a x^2 + b x + c has a repeated factor");
  if (!divides(p, disc)) return QuarticCase::Separable;
  unsigned long P = p.value();
  bool pa = divides(p, a), pb = divides(p, b), pc = divides(p, c);
  Integer e = 2 * a * (a * a - 4 * c) + 9 * b * b;
  auto minus_half_a = [&]() -> Integer { return -a * inverse_mod(Integer(2), p.as_integer()); };
  std::vector<QuarticCase> hits;
  auto test = [&](QuarticCase k, bool cond) {
    if (cond) hits.push_back(k);
  };
  test(QuarticCase::A1, P > 2 && pb && !pa && !pc && divides(p, a * a - 4 * c) && legendre(minus_half_a(), p) == -1);
  test(QuarticCase::A2, P == 2 && pb && !pa && !pc);
  test(QuarticCase::B1, P > 2 && !pa && pb && pc);
  test(QuarticCase::B2, P > 2 && !pa && !pb && pc && divides(p, 4 * a * a * a + 27 * b * b));
  test(QuarticCase::B3, P > 2 && pa && !pb && !pc && divides(p, 256 * c * c * c - 27 * b * b * b * b));
  test(QuarticCase::B4, P > 2 && !pa && !pb && !pc && !divides(p, e));
  test(QuarticCase::C1, P > 2 && !pa && pb && !pc && divides(p, a * a - 4 * c) && legendre(minus_half_a(), p) == 1);
  test(QuarticCase::C2, P == 2 && !pa && pb && pc);
  test(QuarticCase::D1, P > 3 && !pa && !pb && !pc && divides(p, e));
  test(QuarticCase::D2, P == 3 && pa && !pb && pc);
  test(QuarticCase::E1, pa && pb && pc);
  test(QuarticCase::E2, P == 2 && pa && pb && !pc);
  if (hits.size() != 1) {
    std::ostringstream os;
    os << "classify(" << a << ", " << b << ", " << c << ", " << P << "): " << hits.size() << " matching cases";
    throw Inconsistent(os.str());
  }
  return hits.front();
}

ValuationProfile valuation_profile(const IntPoly& F, const Integer& s, const Prime& p) {
  IntPoly G = F.taylor_shift(s);
  ValuationProfile prof;
  for (std::size_t i = 0; i < 4; ++i) {
    Integer g = G.coeff(i);
    prof.u[i] = vp(g, p);
    prof.sigma[i] = prof.u[i].is_infinite() ? Integer(0) : Integer(g / p.power(prof.u[i].value()));
  }
  return prof;
}

InitialCondition check_initial_conditions(const ValuationProfile& profile, const Prime& p) {
  const auto& u = profile.u;
  if (u[2] == 0 && u[1] > 0 && u[0] > 0) return InitialCondition::I;
  if (u[3] == 0 && u[2] > 0 && u[1] > 0 && u[0] > 0) return InitialCondition::II;
  if (u[2].is_finite() && u[2] > 0 && u[0] > twice(u[2]) && twice(u[1]) > thrice(u[2]) && twice(u[3]) >= u[2]) {
    long u2 = u[2].value();
    if (u2 % 2 == 1) return InitialCondition::III;
    // Residual polynomial of the side (2, u2)-(4, 0): sigma2 + c y + y^2.
    Integer pz = p.as_integer();
    Integer c0 = mod(profile.sigma[2], pz);
    Integer c1 = u[3] == ExtendedNat(u2 / 2) ? mod(profile.sigma[3], pz) : Integer(0);
    bool separable = p.value() == 2 ? c1 != 0 : mod(c1 * c1 - 4 * c0, pz) != 0;
    if (separable) return InitialCondition::III;
  }
  return InitialCondition::None;
}

namespace {

struct IrregularRow {
  int number;
  InitialCondition condition;
  std::function<bool(unsigned long)> prime;
  std::function<bool(const std::array<long, 4>&, const std::array<Integer, 4>&, const Prime&)> guard;
  std::function<long(const std::array<long, 4>&)> delta;
};

const std::vector<IrregularRow>& irregular_rows() {
  using U = std::array<long, 4>;
  using S = std::array<Integer, 4>;
  auto two = [](unsigned long q) { return q == 2; };
  auto odd = [](unsigned long q) { return q > 2; };
  auto three = [](unsigned long q) { return q == 3; };
  auto big = [](unsigned long q) { return q > 3; };
  auto cong = [](const Integer& x, const Integer& y, const Prime& p) { return congruent(x, y, p); };
  static const std::vector<IrregularRow> rows{
      {1, InitialCondition::I, two, [](const U& u, const S&, const Prime&) { return u[0] % 2 == 0 && u[0] < 2 * u[1]; },
       [](const U& u) { return u[0] / 2; }},
      {2, InitialCondition::I, odd,
       [cong](const U& u, const S& s, const Prime& p) {
         return u[0] == 2 * u[1] && cong(s[1] * s[1], 4 * s[0] * s[2], p);
       },
       [](const U& u) { return u[1]; }},
      {3, InitialCondition::II, two,
       [](const U& u, const S&, const Prime&) {
         return u[0] > 3 * u[2] && (u[0] + u[2]) % 2 == 0 && u[0] + u[2] < 2 * u[1];
       },
       [](const U& u) { return (u[0] - u[2]) / 2; }},
      {4, InitialCondition::II, odd,
       [cong](const U& u, const S& s, const Prime& p) {
         return u[0] > 3 * u[2] && u[0] + u[2] == 2 * u[1] && cong(s[1] * s[1], 4 * s[0] * s[2], p);
       },
       [](const U& u) { return (u[0] - u[2]) / 2; }},
      {5, InitialCondition::II, two,
       [](const U& u, const S&, const Prime&) { return 2 * u[0] > 3 * u[1] && u[1] % 2 == 0 && u[1] < 2 * u[2]; },
       [](const U& u) { return u[1] / 2; }},
      {6, InitialCondition::II, odd,
       [cong](const U& u, const S& s, const Prime& p) {
         return u[0] > 3 * u[2] && u[1] == 2 * u[2] && cong(s[2] * s[2], 4 * s[1] * s[3], p);
       },
       [](const U& u) { return u[1] / 2; }},
      {7, InitialCondition::II, two,
       [](const U& u, const S&, const Prime&) { return u[0] == 3 * u[2] && u[1] == 2 * u[2]; },
       [](const U& u) { return u[0] / 3; }},
      {8, InitialCondition::II, three,
       [](const U& u, const S&, const Prime&) {
         return u[0] % 3 == 0 && u[0] < 3 * u[2] && 2 * u[0] < 3 * u[1];
       },
       [](const U& u) { return u[0] / 3; }},
      {9, InitialCondition::II, big,
       [cong](const U& u, const S& s, const Prime& p) {
         return u[0] == 3 * u[2] && u[1] == 2 * u[2] && cong(3 * s[3] * s[1], s[2] * s[2], p) &&
                cong(27 * s[3] * s[3] * s[0], s[2] * s[2] * s[2], p);
       },
       [](const U& u) { return u[2]; }},
      {10, InitialCondition::II, big,
       [cong](const U& u, const S& s, const Prime& p) {
         return 2 * u[0] == 3 * u[1] && u[0] < 3 * u[2] &&
                cong(4 * s[1] * s[1] * s[1] + 27 * s[0] * s[0] * s[3], Integer(0), p);
       },
       [](const U& u) { return u[0] / 3; }},
      {11, InitialCondition::II, big,
       [cong](const U& u, const S& s, const Prime& p) {
         return u[0] == 3 * u[2] && 2 * u[0] < 3 * u[1] &&
                cong(4 * s[2] * s[2] * s[2] + 27 * s[0] * s[3] * s[3], Integer(0), p);
       },
       [](const U& u) { return u[2]; }},
      {12, InitialCondition::III, two,
       [](const U& u, const S&, const Prime&) { return (u[0] + u[2]) % 2 == 0 && u[0] + u[2] < 2 * u[1]; },
       [](const U& u) { return (u[0] - u[2]) / 2; }},
      {13, InitialCondition::III, odd,
       [cong](const U& u, const S& s, const Prime& p) {
         return u[0] + u[2] == 2 * u[1] && cong(s[1] * s[1], 4 * s[0] * s[2], p);
       },
       [](const U& u) { return (u[0] - u[2]) / 2; }},
  };
  return rows;
}

// Infinite valuations are capped far above every finite one so that the
// integer row guards keep their meaning.
std::array<long, 4> capped(const ValuationProfile& profile) {
  long top = 0;
  for (const auto& u : profile.u)
    if (u.is_finite()) top = std::max(top, u.value());
  std::array<long, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = profile.u[i].is_finite() ? profile.u[i].value() : 8 * top + 64;
  return out;
}

const IrregularRow* find_irregular_row(const ValuationProfile& profile, const Prime& p) {
  InitialCondition cond = check_initial_conditions(profile, p);
  if (cond == InitialCondition::None) return nullptr;
  auto u = capped(profile);
  for (const auto& row : irregular_rows())
    if (row.condition == cond && row.prime(p.value()) && row.guard(u, profile.sigma, p)) return &row;
  return nullptr;
}

}  // namespace

int irregular_row(const ValuationProfile& profile, const Prime& p) {
  const IrregularRow* row = find_irregular_row(profile, p);
  return row ? row->number : 0;
}

IterationResult iterate_to_regular(const IntPoly& F, const Integer& s0, const Prime& p) {
  IterationResult result;
  ValuationProfile prof0 = valuation_profile(F, s0, p);
  result.condition = check_initial_conditions(prof0, p);
  if (result.condition == InitialCondition::None)
    throw PreconditionFailed("iterate_to_regular: s0 = " + s0.get_str() + " meets no initial condition");
  ExtendedNat Delta = vp(discriminant(F), p);
  if (Delta.is_infinite()) throw NotIrreducible("iterate_to_regular: F has a repeated factor");
  std::size_t max_steps = static_cast<std::size_t>(Delta.value() / 2 + 1);
  Integer pz = p.as_integer();

  Integer s = s0;
  long previous_index = -1;
  while (true) {
    PhiAnalysis A = analyze_phi(F, IntPoly::linear(s), p);
    long index = A.index();
    ValuationProfile prof = valuation_profile(F, s, p);
    const IrregularRow* row = find_irregular_row(prof, p);
    if (A.regular()) {
      if (row) throw Inconsistent("iterate_to_regular: s = " + s.get_str() + " is regular but matches row " +
                                  std::to_string(row->number));
      result.s = s;
      result.index = index;
      return result;
    }
    if (!result.steps.empty() && index <= previous_index)
      throw Inconsistent("iterate_to_regular: index did not grow at irregular s = " + s.get_str());
    const SideResidual* side = A.irregular_side();
    if (side->side.ramification != 1)
      throw NonIntegerSlope("iterate_to_regular: irregular side of slope " + slope_string(side->side.slope));
    long delta = -side->side.slope.get_num().get_si();
    if (row && row->delta(capped(prof)) != delta)
      throw Inconsistent("iterate_to_regular: slope disagrees with row " + std::to_string(row->number));

    const FqPoly* multiple = nullptr;
    for (const auto& [factor, mult] : side->factors)
      if (mult > 1) multiple = &factor;
    if (!multiple || multiple->size() != 2)
      throw PreconditionFailed("iterate_to_regular: the multiple residual factor is not linear");
    Integer ybar = mod(A.field.lift(A.field.neg((*multiple)[0])).coeff(0), pz);

    Integer y = ybar;
    int number = row ? row->number : 0;
    if (p.value() > 2 && (number == 2 || number == 4 || number == 13)) {
      Integer modulus = p.power(static_cast<unsigned long>(delta));
      y = mod(-prof.sigma[1] * inverse_mod(2 * prof.sigma[2], modulus), modulus);
      if (mod(y - ybar, pz) != 0) throw Inconsistent("iterate_to_regular: accelerated step misses the double root");
    }
    result.steps.push_back({s, number, delta, y, index});
    if (result.steps.size() > max_steps) throw Inconsistent("iterate_to_regular: too many steps");
    s += y * p.power(static_cast<unsigned long>(delta));
    previous_index = index;
  }
}

E1Reduction reduce_E1(const Integer& a, const Integer& b, const Integer& c, const Prime& p) {
  E1Reduction r{a, b, c, 0};
  while (vp(r.a, p) >= 2 && vp(r.b, p) >= 3 && vp(r.c, p) >= 4) {
    r.a /= p.power(2);
    r.b /= p.power(3);
    r.c /= p.power(4);
    ++r.steps;
  }
  return r;
}

PIntegralBasis basis_case_A(const QuarticContext& ctx) {
  const Prime& p = ctx.p;
  IntPoly x{0, 1};
  if (p.value() == 2) {
    ExtendedNat m = min(vp(ctx.b + 1 - ctx.a, p), vp(ctx.c - ctx.a, p));
    if (m == 1) return finish(scaled_powers({0, 0, 0, 0}), p, "quartic:A2/power", {});
    return finish({{IntPoly{1}, 0}, {x, 0}, {IntPoly{1, 1, 1}, 1}, {IntPoly{0, 1, 1, 1}, 1}}, p, "quartic:A2/phi", {});
  }
  Integer t = 4 * ctx.c - ctx.a * ctx.a;
  long vt = vp(t, p).value();
  Integer s;
  if (mod(ctx.a, Integer(2)) == 0) {
    s = ctx.a / 2;
  } else {
    Integer modulus = p.power(static_cast<unsigned long>(vt / 2 + 1));
    s = mod(ctx.a * inverse_mod(Integer(2), modulus), modulus);
  }
  ExtendedNat twice_nu = min(vp(ctx.b, p), ExtendedNat(vt));
  unsigned long e = static_cast<unsigned long>(twice_nu.value() / 2);
  IntPoly q1 = IntPoly(std::vector<Integer>{s, 0, 1});
  return finish({{IntPoly{1}, 0}, {x, 0}, {q1, e}, {x * q1, e}}, p, "quartic:A1",
                {"s = " + s.get_str(), "2nu = " + twice_nu.to_string()});
}

namespace {

// The root of multiplicity mult of f modulo p, as an integer in the symmetric range.
Integer multiple_root_mod_p(const IntPoly& f, const Prime& p, unsigned mult) {
  for (const auto& [phi, m] : factor_mod_p(f, p))
    if (phi.degree() == 1 && m == mult) return -phi.coeff(0);
  throw Inconsistent("no root of multiplicity " + std::to_string(mult) + " modulo p");
}

// Newton iteration on F' from s until v(F'(s)) > bound; F''(s) = p^w * unit throughout.
Integer lift_root_of_derivative(const IntPoly& f, Integer s, const Prime& p, long bound, unsigned long w) {
  IntPoly d1 = f.derivative();
  IntPoly d2 = d1.derivative();
  Integer modulus = p.power(static_cast<unsigned long>(bound + 2 + 2 * w));
  Integer pw = p.power(w);
  for (int guard = 0; guard < 200; ++guard) {
    Integer v1 = d1.evaluate(s);
    if (vp(v1, p) > ExtendedNat(bound)) return s;
    Integer v2 = d2.evaluate(s);
    if (vp(v2, p) != ExtendedNat(static_cast<long>(w)) || vp(v1, p) < ExtendedNat(static_cast<long>(w)))
      throw Inconsistent("Hensel lifting of a root of f' left its domain");
    s = mod(s - (v1 / pw) * inverse_mod(v2 / pw, modulus), modulus);
  }
  throw Inconsistent("Hensel lifting of a root of f' did not converge");
}

}  // namespace

PIntegralBasis basis_case_B(const QuarticContext& ctx) {
  const Prime& p = ctx.p;
  IntPoly f = ctx.f();
  Integer s0 = multiple_root_mod_p(f, p, 2);
  Integer s = lift_root_of_derivative(f, s0, p, ctx.Delta / 2, 0);
  auto nu = static_cast<unsigned long>(ctx.Delta / 2);
  IntPoly x{0, 1};
  return finish({{IntPoly{1}, 0}, {x, 0}, {x * x, 0}, {first_quotient(f, s), nu}}, p, "quartic:B",
                {"s = " + s.get_str(), "nu = " + std::to_string(nu)});
}

PIntegralBasis basis_case_C(const QuarticContext& ctx) {
  const Prime& p = ctx.p;
  IntPoly f = ctx.f();
  IntPoly x{0, 1};
  std::vector<std::string> notes;
  auto alpha_basis = [&](const Integer& s, const BasisElement& third, const std::string& route) {
    auto nu = static_cast<unsigned long>(nu_length_two(f, s, p));
    notes.push_back("s = " + s.get_str() + ", nu = " + std::to_string(nu));
    return finish({{IntPoly{1}, 0}, {x, 0}, third, {first_quotient(f, s), nu}}, p, route, notes);
  };

  if (p.value() == 2) {
    ExtendedNat vc = vp(ctx.c, p);
    ExtendedNat vd = vp(ctx.a + ctx.b + ctx.c + 1, p);
    auto lift_from = [&](long s0) {
      IterationResult r = iterate_to_regular(f, Integer(s0), p);
      notes.push_back(iteration_note(r));
      return r.s;
    };
    if (vc == 1 && vd == 1) return finish(scaled_powers({0, 0, 0, 0}), p, "quartic:C2/row1", notes);
    if (vc == 1) return alpha_basis(lift_from(1), {x * x, 0}, "quartic:C2/row2");
    if (vd == 1) return alpha_basis(lift_from(0), {x * x, 0}, "quartic:C2/row3");
    bool a1 = mod(ctx.a, Integer(4)) == 1;
    Integer s = lift_from(a1 ? 1 : 0);
    return alpha_basis(s, {IntPoly{0, 1, 1}, 1}, a1 ? "quartic:C2/row4-odd" : "quartic:C2/row4-even");
  }

  ExtendedNat m = vp(ctx.b, p);
  long m2 = vp(ctx.a * ctx.a - 4 * ctx.c, p).value();
  long r = m.is_infinite() ? m2 : std::min(m.value(), m2);
  ExtendedNat delta = ExtendedNat::infinity();
  if (m.is_finite()) {
    Integer A = (ctx.a * ctx.a - 4 * ctx.c) / p.power(static_cast<unsigned long>(m2));
    Integer B = ctx.b / p.power(static_cast<unsigned long>(m.value()));
    delta = vp(A * A + 8 * ctx.a * B * B, p);
  }
  Integer modulus = p.power(static_cast<unsigned long>(r + 1));
  Integer target = mod(-ctx.a * inverse_mod(Integer(2), modulus), modulus);
  auto root = sqrt_mod_pk(target, p, static_cast<unsigned long>(r + 1));
  if (!root) throw Inconsistent("C1: -a/2 is not a square modulo p");
  Integer s = *root;
  std::string route = "quartic:C1/both-regular";
  if (m == ExtendedNat(m2) && delta == ExtendedNat(r)) {
    if (!is_regular_at(f, s, p)) {
      IterationResult it = iterate_to_regular(f, s, p);
      notes.push_back(iteration_note(it));
      s = it.s;
      route = "quartic:C1/iterated";
    } else if (!is_regular_at(f, -s, p)) {
      IterationResult it = iterate_to_regular(f, -s, p);
      notes.push_back(iteration_note(it));
      s = it.s;
      route = "quartic:C1/iterated";
    }
  }
  if (!is_regular_at(f, s, p) || !is_regular_at(f, -s, p))
    throw Inconsistent("C1: the lifts s and -s are not both regular");
  if (nu_length_two(f, s, p) < nu_length_two(f, -s, p)) s = -s;
  long nu_plus = nu_length_two(f, s, p);
  long nu_minus = nu_length_two(f, -s, p);
  if (nu_minus != r / 2 || nu_plus != (ctx.Delta - r) / 2)
    throw Inconsistent("C1: nu values disagree with floor(r/2), floor((Delta - r)/2)");
  notes.push_back("s = " + s.get_str() + ", r = " + std::to_string(r));
  IntPoly third(std::vector<Integer>{s * s + ctx.a, 0, 1});
  return finish({{IntPoly{1}, 0},
                 {x, 0},
                 {third, static_cast<unsigned long>(nu_minus)},
                 {first_quotient(f, s), static_cast<unsigned long>(nu_plus)}},
                p, route, notes);
}

namespace {

PIntegralBasis triple_basis(const IntPoly& f, const Integer& s, long nu1, long nu2, const Prime& p,
                            std::string route, std::vector<std::string> notes) {
  IntPoly x{0, 1};
  notes.push_back("s = " + s.get_str() + ", nu1 = " + std::to_string(nu1) + ", nu2 = " + std::to_string(nu2));
  return finish({{IntPoly{1}, 0},
                 {x, 0},
                 {second_quotient(f, s), static_cast<unsigned long>(nu2)},
                 {first_quotient(f, s), static_cast<unsigned long>(nu1)}},
                p, std::move(route), std::move(notes));
}

// Square root of -a/6 modulo p^k congruent to the triple root modulo p.
Integer triple_root_lift(const QuarticContext& ctx, const Integer& triple, unsigned long k) {
  const Prime& p = ctx.p;
  Integer modulus = p.power(k);
  Integer target;
  if (p.value() == 3) {
    target = mod(-(ctx.a / 3) * inverse_mod(Integer(2), modulus), modulus);
  } else {
    target = mod(-ctx.a * inverse_mod(Integer(6), modulus), modulus);
  }
  auto root = sqrt_mod_pk(target, p, k);
  if (!root) throw Inconsistent("triple root: -a/6 is not a square");
  Integer s = *root;
  if (!congruent(s, triple, p)) s = mod(-s, modulus);
  if (!congruent(s, triple, p)) throw Inconsistent("triple root: no square root of -a/6 lifts the triple root");
  return s;
}

}  // namespace

PIntegralBasis basis_case_D(const QuarticContext& ctx) {
  const Prime& p = ctx.p;
  IntPoly f = ctx.f();
  IntPoly fp = f.derivative();
  long D = ctx.Delta;
  std::vector<std::string> notes;

  if (p.value() > 3) {
    Integer triple = multiple_root_mod_p(f, p, 3);
    Integer s0 = triple_root_lift(ctx, triple, static_cast<unsigned long>(D / 6 + 1));
    ValuationProfile prof = valuation_profile(f, s0, p);
    if (prof.u[2] < ExtendedNat(D / 6 + 1)) throw Inconsistent("D1: v(a + 6 s0^2) <= Delta/6");
    ExtendedNat u0 = prof.u[0], u1 = prof.u[1];
    bool irregular = twice(u0) == thrice(u1) &&
                     divides(p, prof.sigma[1] * prof.sigma[1] * prof.sigma[1] + 27 * s0 * prof.sigma[0] * prof.sigma[0]);
    if (irregular == is_regular_at(f, s0, p)) throw Inconsistent("D1: regularity test disagrees with the polygon");
    Integer s = s0;
    if (irregular) {
      IterationResult it = iterate_to_regular(f, s0, p);
      notes.push_back(iteration_note(it));
      s = it.s;
    }
    if (twice(u0) < thrice(u1)) {
      long v0 = u0.value();
      return triple_basis(f, s, 2 * v0 / 3, v0 / 3, p, "quartic:D1/row1", notes);
    }
    long v1 = u1.value();
    return triple_basis(f, s, (D - v1) / 2, v1 / 2, p, "quartic:D1/row2", notes);
  }

  // p = 3
  if (mod(ctx.a, Integer(9)) == 3) {
    Integer s0 = triple_root_lift(ctx, mod(-ctx.b, Integer(3)), static_cast<unsigned long>(D / 6 + 1));
    ValuationProfile prof = valuation_profile(f, s0, p);
    if (prof.u[2] < ExtendedNat(D / 6 + 1)) throw Inconsistent("D2: v(a + 6 s0^2) <= Delta/6");
    ExtendedNat u0 = prof.u[0], u1 = prof.u[1];
    if (twice(u0) >= thrice(u1)) {
      long v1 = u1.value();
      if (!is_regular_at(f, s0, p)) throw Inconsistent("D2: s0 expected regular");
      return triple_basis(f, s0, v1, v1 / 2, p, "quartic:D2/a3-row1", notes);
    }
    long v0 = u0.value();
    if (v0 % 3 != 0) {
      if (!is_regular_at(f, s0, p)) throw Inconsistent("D2: s0 expected regular");
      return triple_basis(f, s0, 2 * v0 / 3, v0 / 3, p, "quartic:D2/a3-row2", notes);
    }
    if (is_regular_at(f, s0, p)) throw Inconsistent("D2: s0 expected irregular");
    Integer y = congruent(prof.sigma[0], ctx.b, p) ? Integer(1) : Integer(-1);
    Integer s1 = s0 + y * p.power(static_cast<unsigned long>(v0 / 3));
    ExtendedNat f1 = vp(f.evaluate(s1), p);
    ExtendedNat g1 = vp(fp.evaluate(s1), p);
    notes.push_back("s1 = " + s1.get_str());
    long k = 2 * v0 / 3 + 1;
    if (f1 == v0 + 1) {
      if (!is_regular_at(f, s1, p)) throw Inconsistent("D2: s1 expected regular");
      return triple_basis(f, s1, 2 * v0 / 3, v0 / 3, p, "quartic:D2/a3-row3", notes);
    }
    if (f1 > v0 + 1 && g1 == k) {
      if (!is_regular_at(f, s1, p)) throw Inconsistent("D2: s1 expected regular");
      return triple_basis(f, s1, k, v0 / 3, p, "quartic:D2/a3-row4", notes);
    }
    if (f1 == v0 + 2 && g1 > k) {
      if (!is_regular_at(f, s1, p)) throw Inconsistent("D2: s1 expected regular");
      return triple_basis(f, s1, k, v0 / 3, p, "quartic:D2/a3-row5", notes);
    }
    Integer s = s1;
    if (!is_regular_at(f, s1, p)) {
      IterationResult it = iterate_to_regular(f, s1, p);
      notes.push_back(iteration_note(it));
      s = it.s;
    }
    return triple_basis(f, s, D / 2 - v0 / 3 - 1, v0 / 3 + 1, p, "quartic:D2/a3-row6", notes);
  }

  Integer s = -ctx.b;
  ExtendedNat f0 = vp(f.evaluate(s), p);
  ExtendedNat g0 = vp(fp.evaluate(s), p);
  if (!(f0 <= 2 || g0 == 1)) {
    s = lift_root_of_derivative(f, s, p, D / 2, 1);
    notes.push_back("lifted root of f': s = " + s.get_str());
  }
  if (!is_regular_at(f, s, p)) throw Inconsistent("D2: lift expected regular");
  ExtendedNat fs = vp(f.evaluate(s), p);
  ExtendedNat gs = vp(fp.evaluate(s), p);
  if (fs == 1) return triple_basis(f, s, 0, 0, p, "quartic:D2/a06-row1", notes);
  if (fs == 2) return triple_basis(f, s, 1, 0, p, "quartic:D2/a06-row2", notes);
  if (fs > 1 && gs == 1) return triple_basis(f, s, 1, 0, p, "quartic:D2/a06-row3", notes);
  if (fs > 2 && gs > 1) return triple_basis(f, s, D / 2 - 1, 1, p, "quartic:D2/a06-row4", notes);
  throw NoRow("D2: no row matches");
}

namespace {

PIntegralBasis dispatch(const QuarticContext& ctx) {
  const Prime& p = ctx.p;
  switch (classify(ctx.a, ctx.b, ctx.c, p)) {
    case QuarticCase::Separable: return finish(scaled_powers({0, 0, 0, 0}), p, "quartic:separable");
    case QuarticCase::A1:
    case QuarticCase::A2: return basis_case_A(ctx);
    case QuarticCase::B1:
    case QuarticCase::B2:
    case QuarticCase::B3:
    case QuarticCase::B4: return basis_case_B(ctx);
    case QuarticCase::C1:
    case QuarticCase::C2: return basis_case_C(ctx);
    case QuarticCase::D1:
    case QuarticCase::D2: return basis_case_D(ctx);
    case QuarticCase::E1: return basis_case_E1(ctx);
    case QuarticCase::E2: return basis_case_E2(ctx);
  }
  throw Inconsistent("unhandled case");
}

}  // namespace

PIntegralBasis quartic_p_integral_basis(const Integer& a, const Integer& b, const Integer& c, const Prime& p) {
  if (!quartic_is_irreducible(a, b, c)) throw NotIrreducible("x^4 + a x^2 + b x + c is reducible over Q");
  E1Reduction red = reduce_E1(a, b, c, p);
  PIntegralBasis reduced = dispatch(make_quartic_context(red.a, red.b, red.c, p));
  if (red.steps == 0) return reduced;
  auto notes = reduced.notes;
  notes.push_back("reduced by x -> x/p^" + std::to_string(red.steps));
  return finish(to_theta(reduced.generators, Integer(0), red.steps, p), p, reduced.route, notes);
}

}  // namespace orebasis
