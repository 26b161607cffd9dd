#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "valzeta/certify.hpp"
#include "valzeta/dedekind.hpp"
#include "valzeta/dirichlet_l.hpp"
#include "valzeta/elementary.hpp"
#include "valzeta/elliptic.hpp"
#include "valzeta/riemann_zeta.hpp"

namespace valzeta::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One output record. Either `box` or `rational` is set.
struct Record {
  std::string cmd;
  Json params = Json::object();
  std::optional<ComplexBox> box;
  std::optional<std::string> rational;
  Json detail;
  std::string remainder = "0";
  bool certified = true;
  std::vector<std::string> text;
};

std::string lower(const Real& x) { return to_decimal(x, decimal_digits_for(x.precision()), MPFR_RNDD); }
std::string upper(const Real& x) { return to_decimal(x, decimal_digits_for(x.precision()), MPFR_RNDU); }

std::string render(const RealInterval& x) { return "[" + lower(x.lo()) + ", " + upper(x.hi()) + "]"; }

Json interval_json(const RealInterval& x) { return Json{{"lo", lower(x.lo())}, {"hi", upper(x.hi())}}; }

std::string render(const ComplexBox& z) {
  if (z.is_real()) return render(z.re());
  return render(z.re()) + " + " + render(z.im()) + "i";
}

std::string remainder_text(const Real& r) { return to_decimal(r, 6, MPFR_RNDU); }

void set_box(Record& rec, const Enclosure& e) {
  rec.box = e.value;
  rec.remainder = remainder_text(e.remainder_radius);
  rec.certified = e.certified;
  rec.text.push_back(render(e.value));
  rec.text.push_back("remainder <= " + rec.remainder);
  if (!e.certified) rec.text.push_back("uncertified");
}

void set_rational(Record& rec, const Rational& q) {
  rec.rational = to_string(q);
  rec.text.push_back(*rec.rational);
}

Json to_json(const Record& rec, double ms) {
  Json j;
  j["cmd"] = rec.cmd;
  j["params"] = rec.params;
  if (rec.box) {
    j["value"] = Json{{"re", interval_json(rec.box->re())}, {"im", interval_json(rec.box->im())}};
  } else {
    j["value"] = Json{{"rational", rec.rational.value_or("")}};
  }
  if (!rec.detail.is_null()) j["detail"] = rec.detail;
  j["remainder"] = rec.remainder;
  j["certified"] = rec.certified;
  j["ms"] = ms;
  return j;
}

RealInterval parse_real(const std::string& text, PrecisionContext ctx, const char* what) {
  try {
    return RealInterval::from_decimal(text, ctx);
  } catch (const DomainError&) {
    throw UsageError(std::string("invalid number for ") + what + ": '" + text + "'");
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0, used_b = 0;
    const auto a = std::stoull(text.substr(0, comma), &used_a);
    const auto b = std::stoull(text.substr(comma + 1), &used_b);
    if (used_a != comma || used_b != text.size() - comma - 1) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError(std::string("expected q,m for ") + what + ": '" + text + "'");
  }
}

struct Options {
  bool json = false;
  mpfr_prec_t precision = PrecisionContext::kDefault;

  std::string re = "0", im = "0", width, s;
  unsigned N = 32, k = 6;
  std::optional<unsigned> even;
  std::optional<long> neg;
  std::int64_t delta = 0;
  unsigned terms = 20;
  std::string character;
  std::uint64_t ldir_terms = 1000;
  std::uint64_t d = 0;
  std::string mode = "product";
  std::uint64_t dedekind_terms = 10000;
  std::uint64_t p = 0;
  unsigned g = 0;
  std::string coeffs;
  bool invariants = false, lseries = false;
  std::optional<std::uint64_t> trace_p, local_p;
  std::uint64_t primes_up_to = 100;
};

Record cmd_zeta(const Options& o, CLI::App& sub, PrecisionContext ctx) {
  Record rec{"zeta"};
  const ComplexBox s(parse_real(o.re, ctx, "--re"), parse_real(o.im, ctx, "--im"));
  rec.params = Json{{"re", o.re}, {"im", o.im}};
  ZetaEnclosure z = [&] {
    if (!o.width.empty()) {
      if (sub.count("--N") || sub.count("--k")) throw UsageError("--width excludes --N/--k");
      const RealInterval w = parse_real(o.width, ctx, "--width");
      if (!w.is_positive()) throw UsageError("--width must be positive");
      return zeta_auto(s, w.lo(), ctx);
    }
    return zeta_em(s, {o.N, o.k}, ctx);
  }();
  if (!o.width.empty()) rec.params["width"] = o.width;
  rec.params["N"] = z.params.N;
  rec.params["k"] = z.params.k;
  rec.params["precision"] = z.precision;
  if (!o.width.empty()) rec.params["target_met"] = z.target_met;
  set_box(rec, z);
  if (!z.target_met) rec.text.push_back("requested width not reached");
  return rec;
}

Record cmd_zeta_special(const Options& o, PrecisionContext ctx) {
  Record rec{"zeta-special"};
  if (o.even.has_value() == o.neg.has_value()) throw UsageError("zeta-special takes exactly one of --even, --neg");
  if (o.even) {
    if (*o.even == 0) throw UsageError("--even takes n >= 1");
    const unsigned n = *o.even;
    const Rational r = zeta_even(n);
    rec.params = Json{{"even", n}};
    const RealInterval v = zeta_even_enclosure(n, ctx);
    rec.box = ComplexBox(v);
    rec.detail = Json{{"coefficient", to_string(r)}, {"pi_power", 2 * n}};
    rec.text.push_back("zeta(" + std::to_string(2 * n) + ") = " + to_string(r) + " * pi^" + std::to_string(2 * n));
    rec.text.push_back(render(v));
  } else {
    rec.params = Json{{"neg", *o.neg}};
    set_rational(rec, zeta_neg(*o.neg));
  }
  return rec;
}

Record cmd_lfun(const Options& o, PrecisionContext ctx) {
  Record rec{"lfun"};
  const auto disc = QuadraticDiscriminant::from_discriminant(o.delta);
  rec.params = Json{{"delta", o.delta}, {"terms", o.terms}};
  set_box(rec, l_one_quadratic(disc.d(), o.terms, ctx));
  return rec;
}

Record cmd_ldir(const Options& o, PrecisionContext ctx) {
  Record rec{"ldir"};
  const auto [q, m] = parse_pair(o.character, "--char");
  const auto chi = DirichletCharacter::elementary(q, m);
  rec.params = Json{{"q", q}, {"m", m}, {"s", o.s}, {"N", o.ldir_terms}};
  set_box(rec, l_truncated(chi, ComplexBox(parse_real(o.s, ctx, "--s")), o.ldir_terms, ctx));
  return rec;
}

Record cmd_dedekind(const Options& o, PrecisionContext ctx) {
  Record rec{"dedekind"};
  DedekindMode mode;
  if (o.mode == "product") {
    mode = DedekindMode::Product;
  } else if (o.mode == "direct") {
    mode = DedekindMode::Direct;
  } else {
    throw UsageError("--mode must be product or direct");
  }
  const RealQuadraticField K(o.d);
  DedekindParams params;
  params.l_terms = params.direct_terms = o.dedekind_terms;
  rec.params = Json{{"d", o.d}, {"delta", K.delta()}, {"s", o.s}, {"mode", o.mode}, {"terms", o.dedekind_terms}};
  set_box(rec, dedekind_enclosure(K, parse_real(o.s, ctx, "--s"), mode, params, ctx));
  return rec;
}

Record cmd_siegel(const Options& o) {
  Record rec{"siegel"};
  rec.params = Json{{"p", o.p}};
  set_rational(rec, siegel_zeta_minus1(o.p));
  return rec;
}

Record cmd_hilbert(const Options& o) {
  Record rec{"hilbert-volume"};
  rec.params = Json{{"p", o.p}};
  set_rational(rec, hilbert_volume(o.p));
  return rec;
}

Record cmd_moduli(const Options& o) {
  Record rec{"moduli-volume"};
  rec.params = Json{{"g", o.g}};
  set_rational(rec, moduli_volume(o.g));
  return rec;
}

Record cmd_elliptic(const Options& o, PrecisionContext ctx) {
  Record rec{"elliptic"};
  const int modes = o.invariants + o.trace_p.has_value() + o.local_p.has_value() + o.lseries;
  if (modes != 1) throw UsageError("elliptic takes exactly one of --invariants, --trace, --local, --lseries");
  const WeierstrassCurve E = parse_curve(o.coeffs);
  rec.params = Json{{"coeffs", o.coeffs}};

  if (o.invariants) {
    rec.params["mode"] = "invariants";
    const std::pair<const char*, const BigInt*> fields[] = {
        {"b2", &E.b2}, {"b4", &E.b4}, {"b6", &E.b6}, {"b8", &E.b8},
        {"c4", &E.c4}, {"c6", &E.c6}, {"discriminant", &E.discriminant}};
    rec.detail = Json::object();
    for (const auto& [name, v] : fields) {
      rec.detail[name] = v->get_str();
      rec.text.push_back(std::string(name) + " = " + v->get_str());
    }
    rec.rational = E.j ? to_string(*E.j) : "undefined";
    rec.detail["elliptic"] = E.is_elliptic();
    rec.text.push_back("j = " + *rec.rational);
    if (!E.is_elliptic()) rec.text.push_back("singular model (Delta = 0)");
    return rec;
  }
  if (o.trace_p) {
    rec.params["mode"] = "trace";
    rec.params["p"] = *o.trace_p;
    const ReductionInfo info = trace(E, *o.trace_p);
    rec.rational = std::to_string(info.trace);
    rec.detail = Json{{"kind", std::string(to_string(info.kind))}, {"points", info.points}};
    if (info.kind == ReductionKind::Good) {
      rec.text.push_back("good: A_p = " + std::to_string(info.points) + ", t_p = " + *rec.rational);
    } else {
      rec.text.push_back("bad: " + std::string(to_string(info.kind)) + ", t_p = " + *rec.rational);
    }
    return rec;
  }
  if (o.local_p) {
    rec.params["mode"] = "local";
    rec.params["p"] = *o.local_p;
    rec.params["s"] = o.s;
    set_box(rec, local_zeta(E, *o.local_p, ComplexBox(parse_real(o.s, ctx, "--s")), ctx));
    return rec;
  }
  rec.params["mode"] = "lseries";
  rec.params["s"] = o.s;
  rec.params["primes_up_to"] = o.primes_up_to;
  set_box(rec, hasse_weil_partial(E, parse_real(o.s, ctx, "--s"), o.primes_up_to, ctx));
  return rec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validated evaluation of zeta and L-functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "One JSON object per line");
  app.add_option("--precision", o.precision, "Working precision in bits")->capture_default_str();

  auto* zeta = app.add_subcommand("zeta", "Riemann zeta by Euler-Maclaurin summation");
  zeta->add_option("--re", o.re, "Real part of s")->capture_default_str();
  zeta->add_option("--im", o.im, "Imaginary part of s")->capture_default_str();
  zeta->add_option("--N", o.N, "Euler-Maclaurin cut point")->capture_default_str();
  zeta->add_option("--k", o.k, "Bernoulli correction terms")->capture_default_str();
  zeta->add_option("--width", o.width, "Target width; chooses N, k and precision");

  auto* special = app.add_subcommand("zeta-special", "Exact zeta(2n) coefficient or zeta(-a)");
  special->add_option("--even", o.even, "n for zeta(2n) = r pi^(2n)");
  special->add_option("--neg", o.neg, "a <= 0 for zeta(a)");

  auto* lfun = app.add_subcommand("lfun", "L(1, chi_Delta) for a real quadratic field");
  lfun->add_option("--delta", o.delta, "Positive fundamental discriminant")->required();
  lfun->add_option("--terms", o.terms, "Series length m")->capture_default_str();

  auto* ldir = app.add_subcommand("ldir", "Truncated L(s, chi) for a character mod a prime");
  ldir->add_option("--char", o.character, "q,m: the character n -> e(m ind(n)/(q-1))")->required();
  ldir->add_option("--s", o.s, "Real s > 1")->required();
  ldir->add_option("--N", o.ldir_terms, "Terms")->capture_default_str();

  auto* dedekind = app.add_subcommand("dedekind", "Dedekind zeta of Q(sqrt(D))");
  dedekind->add_option("--d", o.d, "Squarefree D >= 2")->required();
  dedekind->add_option("--s", o.s, "Real s > 1")->required();
  dedekind->add_option("--mode", o.mode, "product or direct")->capture_default_str();
  dedekind->add_option("--N", o.dedekind_terms, "Dirichlet series terms")->capture_default_str();

  auto* siegel = app.add_subcommand("siegel", "zeta_K(-1) for Q(sqrt(p)), p = 1 mod 4");
  siegel->add_option("--p", o.p, "Prime p")->required();
  auto* hilbert = app.add_subcommand("hilbert-volume", "Hilbert modular orbifold volume 2 zeta_K(-1)");
  hilbert->add_option("--p", o.p, "Prime p")->required();
  auto* moduli = app.add_subcommand("moduli-volume", "Volume of M(2,1) in genus g");
  moduli->add_option("--g", o.g, "Genus g >= 2")->required();

  auto* elliptic = app.add_subcommand("elliptic", "Weierstrass curve invariants and L-data");
  elliptic->add_option("--coeffs", o.coeffs, "a1,a2,a3,a4,a6")->required();
  elliptic->add_flag("--invariants", o.invariants, "Derived quantities and j");
  elliptic->add_option("--trace", o.trace_p, "Trace of Frobenius at p");
  elliptic->add_option("--local", o.local_p, "Local zeta at p (needs --s)");
  elliptic->add_flag("--lseries", o.lseries, "Partial Hasse-Weil product (needs --s)");
  elliptic->add_option("--s", o.s, "Real s");
  elliptic->add_option("--primes-up-to", o.primes_up_to, "Prime cutoff N")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const PrecisionContext ctx(o.precision);
    if ((o.local_p || o.lseries) && o.s.empty()) throw UsageError("--local and --lseries need --s");
    const auto start = std::chrono::steady_clock::now();
    Record rec;
    if (*zeta) rec = cmd_zeta(o, *zeta, ctx);
    else if (*special) rec = cmd_zeta_special(o, ctx);
    else if (*lfun) rec = cmd_lfun(o, ctx);
    else if (*ldir) rec = cmd_ldir(o, ctx);
    else if (*dedekind) rec = cmd_dedekind(o, ctx);
    else if (*siegel) rec = cmd_siegel(o);
    else if (*hilbert) rec = cmd_hilbert(o);
    else if (*moduli) rec = cmd_moduli(o);
    else rec = cmd_elliptic(o, ctx);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.json) {
      out << to_json(rec, ms).dump() << "\n";
    } else {
      for (const auto& line : rec.text) out << line << "\n";
    }
    return rec.certified ? kExitOk : kExitUncertified;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UncertifiedError& e) {
    err << "uncertified: " << e.what() << "\n";
    return kExitUncertified;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace valzeta::cli
