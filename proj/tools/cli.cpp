#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orebasis/errors.hpp"
#include "orebasis/irreducibility.hpp"
#include "orebasis/newton.hpp"
#include "orebasis/oracle.hpp"
#include "orebasis/order2.hpp"
#include "orebasis/ore.hpp"
#include "orebasis/parse.hpp"
#include "orebasis/quartic.hpp"

namespace orebasis::cli {

namespace {

struct Trinomial {
  Integer a, b, c;
};

std::optional<Trinomial> as_trinomial(const IntPoly& f) {
  if (f.degree() != 4 || !f.is_monic() || f.coeff(3) != 0) return std::nullopt;
  return Trinomial{f.coeff(2), f.coeff(1), f.coeff(0)};
}

void require_irreducible(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw PreconditionFailed("polynomial must be monic of positive degree");
  if (auto t = as_trinomial(f)) {
    if (!quartic_is_irreducible(t->a, t->b, t->c)) throw NotIrreducible(f.to_string() + " is reducible over Q");
    return;
  }
  if (!irreducible_mod_some_prime(f)) throw PreconditionFailed("could not certify that " + f.to_string() + " is irreducible");
}

PIntegralBasis order2_direct(const IntPoly& f, const Prime& p) {
  auto t = as_trinomial(f);
  if (!t) throw PreconditionFailed("order2 expects x^4 + a x^2 + b x + c");
  auto which = p.value() == 2 ? Order2Case::E1Row6 : Order2Case::E1Row3;
  auto choice = choose_phi(which, t->a, t->b, t->c, p);
  return basis_order2(make_second_order_context(f, p, choice.phi, choice.row));
}

PIntegralBasis construct(const IntPoly& f, const Prime& p, const std::string& method) {
  require_irreducible(f);
  if (method == "generic") return p_integral_basis_regular(f, p);
  if (method == "order2") return order2_direct(f, p);
  auto t = as_trinomial(f);
  if (method == "quartic") {
    if (!t) throw PreconditionFailed("quartic method expects x^4 + a x^2 + b x + c");
    return quartic_p_integral_basis(t->a, t->b, t->c, p);
  }
  if (is_p_regular(f, p).regular) return p_integral_basis_regular(f, p);
  if (t) return quartic_p_integral_basis(t->a, t->b, t->c, p);
  throw NotRegular(f.to_string() + " is not " + std::to_string(p.value()) +
                   "-regular and is not of the form x^4 + a x^2 + b x + c");
}

void print_basis(std::ostream& out, const PIntegralBasis& B) {
  out << "route: " << B.route << "\n";
  out << "index_valuation: " << B.index_valuation << "\n";
  out << "basis:\n";
  for (const auto& e : B.elements) out << "  " << element_to_string(e, B.p) << "\n";
  for (const auto& n : B.notes) out << "note: " << n << "\n";
}

nlohmann::json basis_json(const IntPoly& f, const Prime& p, const PIntegralBasis& B) {
  std::optional<DecompositionType> D;
  try {
    D = decomposition_type(f, p);
  } catch (const Error&) {
  }
  auto j = basis_to_json(B, D && D->complete ? &*D : nullptr);
  j["polynomial"] = f.to_string();
  j["notes"] = B.notes;
  return j;
}

std::string optional_string(const std::optional<long>& v) { return v ? std::to_string(*v) : "?"; }

int cmd_classify(const IntPoly& f, const Prime& p, std::ostream& out) {
  auto t = as_trinomial(f);
  if (!t) throw PreconditionFailed("classify expects x^4 + a x^2 + b x + c");
  require_irreducible(f);
  out << to_string(classify(t->a, t->b, t->c, p)) << "\n";
  return 0;
}

nlohmann::json analysis_json(const PhiAnalysis& A) {
  nlohmann::json j;
  j["phi"] = A.expansion.phi.to_string();
  j["polygon"] = polygon_to_json(A.polygon);
  j["principal"] = polygon_to_json(A.principal);
  j["residuals"] = nlohmann::json::array();
  for (const auto& s : A.sides)
    j["residuals"].push_back({{"slope", slope_string(s.side.slope)},
                              {"residual", fq::to_string(A.field, s.residual)},
                              {"separable", s.separable()}});
  j["index"] = A.index();
  j["regular"] = A.regular();
  return j;
}

void print_analysis(std::ostream& out, const PhiAnalysis& A) {
  out << "phi = " << A.expansion.phi << "\n";
  out << "points:";
  for (const auto& [i, u] : A.polygon.points) out << " (" << i << "," << u << ")";
  out << "\n";
  for (const auto& s : A.sides) {
    out << "side: slope " << slope_string(s.side.slope) << ", length " << s.side.length << ", degree " << s.side.degree
        << ", e " << s.side.ramification << ", residual " << fq::to_string(A.field, s.residual)
        << (s.separable() ? " (separable)" : " (inseparable)") << "\n";
  }
  out << "ind_phi = " << A.index() << "\n";
  out << "regular: " << (A.regular() ? "yes" : "no") << "\n";
}

int cmd_polygon(const IntPoly& f, const Prime& p, const std::string& phi_text, const std::string& svg_path, bool json,
                std::ostream& out) {
  std::vector<IntPoly> phis;
  if (!phi_text.empty()) {
    phis.push_back(parse_poly(phi_text));
  } else {
    for (const auto& [phi, mult] : factor_mod_p(f, p)) phis.push_back(phi);
  }
  std::vector<PhiAnalysis> analyses;
  for (const auto& phi : phis) analyses.push_back(analyze_phi(f, phi, p));
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& A : analyses) j.push_back(analysis_json(A));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& A : analyses) print_analysis(out, A);
  }
  if (!svg_path.empty() && !analyses.empty()) {
    std::ofstream svg(svg_path);
    if (!svg) throw PreconditionFailed("cannot write " + svg_path);
    svg << polygon_to_svg(analyses.front().polygon);
  }
  return 0;
}

int cmd_basis(const IntPoly& f, const Prime& p, const std::string& method, bool json, std::ostream& out) {
  auto B = construct(f, p, method);
  if (json)
    out << basis_json(f, p, B).dump(2) << "\n";
  else
    print_basis(out, B);
  return 0;
}

int cmd_factor(const IntPoly& f, const Prime& p, bool json, std::ostream& out) {
  auto D = decomposition_type(f, p);
  long sum = 0;
  for (const auto& d : D.primes)
    if (d.e && d.f) sum += *d.e * *d.f;
  if (json) {
    nlohmann::json j;
    j["complete"] = D.complete;
    j["decomposition"] = nlohmann::json::array();
    for (const auto& d : D.primes)
      j["decomposition"].push_back({{"phi", d.phi.to_string()},
                                    {"slope", slope_string(d.slope)},
                                    {"residual_factor", d.residual_factor},
                                    {"e", d.e ? nlohmann::json(*d.e) : nlohmann::json(nullptr)},
                                    {"f", d.f ? nlohmann::json(*d.f) : nlohmann::json(nullptr)}});
    out << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& d : D.primes)
    out << "phi = " << d.phi << ", slope " << slope_string(d.slope) << ", residual factor " << d.residual_factor
        << ", e = " << optional_string(d.e) << ", f = " << optional_string(d.f) << "\n";
  out << "complete: " << (D.complete ? "yes" : "no") << "\n";
  if (D.complete) out << "sum e*f = " << sum << "\n";
  return 0;
}

int cmd_oracle(const IntPoly& f, const Prime& p, bool json, std::ostream& out) {
  require_irreducible(f);
  oracle::SaturationStats stats;
  auto O = oracle::saturate(f, p, &stats);
  if (json) {
    auto j = basis_json(f, p, O);
    j["rounds"] = stats.rounds;
    j["integrality_tests"] = stats.integrality_tests;
    out << j.dump(2) << "\n";
    return 0;
  }
  print_basis(out, O);
  out << "rounds: " << stats.rounds << ", integrality tests: " << stats.integrality_tests << "\n";
  return 0;
}

struct Verdict {
  bool same = false;
  bool disc = false;
  bool closed = false;
  bool integral = false;
  bool ok() const { return same && disc && closed && integral; }
};

Verdict check(const IntPoly& f, const Prime& p, const PIntegralBasis& B, const PIntegralBasis& O,
              oracle::DiscCheck* disc = nullptr) {
  Verdict v;
  v.same = B.same_module(O);
  auto d = oracle::disc_identity_check(f, p, B);
  v.disc = d.holds;
  v.closed = oracle::is_ring_closed(f, B, p);
  v.integral = std::all_of(B.elements.begin(), B.elements.end(),
                           [&](const BasisElement& e) { return oracle::is_integral(f, e, p); });
  if (disc) *disc = d;
  return v;
}

int cmd_verify(const IntPoly& f, const Prime& p, const std::string& method, std::ostream& out) {
  auto B = construct(f, p, method);
  auto O = oracle::saturate(f, p);
  oracle::DiscCheck d;
  auto v = check(f, p, B, O, &d);
  out << "route: " << B.route << "\n";
  if (v.same)
    out << "construction == oracle, ind=" << B.index_valuation << "\n";
  else
    out << "construction != oracle, ind=" << B.index_valuation << ", oracle ind=" << O.index_valuation << "\n";
  out << "disc identity: " << d.vp_disc_f << " = 2*" << d.index_valuation << " + " << d.vp_disc_basis
      << (v.disc ? " ok" : " FAILED") << "\n";
  out << "ring closed: " << (v.closed ? "ok" : "FAILED") << "\n";
  out << "elements integral: " << (v.integral ? "ok" : "FAILED") << "\n";
  return v.ok() ? 0 : 1;
}

int cmd_corpus(long count, unsigned long seed, const std::string& method, std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  const unsigned long primes[] = {2, 3, 5, 7, 13};
  long failures = 0;
  for (long done = 0; done < count;) {
    Integer a = coeff(rng), b = coeff(rng), c = coeff(rng);
    Prime p(primes[rng() % 5]);
    if (c == 0 || !quartic_is_irreducible(a, b, c)) continue;
    if (mod(quartic_discriminant(a, b, c), p.as_integer()) != 0) continue;
    IntPoly f(std::vector<Integer>{c, b, a, 0, 1});
    ++done;
    std::string status;
    std::string route = "-";
    try {
      auto B = construct(f, p, method);
      route = B.route;
      status = check(f, p, B, oracle::saturate(f, p)).ok() ? "ok" : "MISMATCH";
    } catch (const Error& e) {
      status = std::string("ERROR ") + e.what();
    }
    if (status != "ok") ++failures;
    out << a << " " << b << " " << c << " p=" << p.value() << " " << route << " " << status << "\n";
  }
  out << "corpus: " << count << " cases, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-integral bases of number fields by Newton polygons", "orebasis-cli"};
  app.require_subcommand(1);

  std::string poly_text, phi_text, svg_path, method = "auto";
  unsigned long prime = 0;
  bool json = false;
  long corpus = 0;
  unsigned long seed = 1;

  auto add_common = [&](CLI::App* sub, bool poly_required) {
    auto* f = sub->add_option("-f,--poly", poly_text, "polynomial in x, e.g. \"x^4+2x^2-4x+2\"");
    auto* p = sub->add_option("-p,--prime", prime, "prime p");
    if (poly_required) {
      f->required();
      p->required();
    }
  };
  auto* classify_cmd = app.add_subcommand("classify", "factorization type of x^4 + a x^2 + b x + c modulo p");
  add_common(classify_cmd, true);
  auto* polygon_cmd = app.add_subcommand("polygon", "phi-Newton polygons and residual polynomials");
  add_common(polygon_cmd, true);
  polygon_cmd->add_option("--phi", phi_text, "lift phi (default: every irreducible factor of f mod p)");
  polygon_cmd->add_option("--svg", svg_path, "write the first polygon as SVG");
  polygon_cmd->add_flag("--json", json, "JSON output");
  auto* basis_cmd = app.add_subcommand("basis", "p-integral basis");
  add_common(basis_cmd, true);
  basis_cmd->add_option("--method", method, "construction")->check(CLI::IsMember({"auto", "generic", "quartic", "order2"}));
  basis_cmd->add_flag("--json", json, "JSON output");
  auto* factor_cmd = app.add_subcommand("factor", "decomposition type of p");
  add_common(factor_cmd, true);
  factor_cmd->add_flag("--json", json, "JSON output");
  auto* verify_cmd = app.add_subcommand("verify", "construction against the saturation oracle");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--method", method, "construction")->check(CLI::IsMember({"auto", "generic", "quartic", "order2"}));
  verify_cmd->add_option("--corpus", corpus, "verify N pseudorandom quartics instead of -f/-p");
  verify_cmd->add_option("--seed", seed, "corpus seed");
  auto* oracle_cmd = app.add_subcommand("oracle", "p-maximal order by saturation");
  add_common(oracle_cmd, true);
  oracle_cmd->add_flag("--json", json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd && corpus > 0) return cmd_corpus(corpus, seed, method, out);
    if (*verify_cmd && (poly_text.empty() || prime == 0)) {
      err << "verify: give -f and -p, or --corpus N\n";
      return 2;
    }
    IntPoly f = parse_poly(poly_text);
    Prime p(prime);
    if (*classify_cmd) return cmd_classify(f, p, out);
    if (*polygon_cmd) return cmd_polygon(f, p, phi_text, svg_path, json, out);
    if (*basis_cmd) return cmd_basis(f, p, method, json, out);
    if (*factor_cmd) return cmd_factor(f, p, json, out);
    if (*verify_cmd) return cmd_verify(f, p, method, out);
    if (*oracle_cmd) return cmd_oracle(f, p, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace orebasis::cli
