#include <algorithm>
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "json_out.hpp"
#include "ratknot/census.hpp"
#include "ratknot/gf_catalog.hpp"
#include "ratknot/invariants.hpp"
#include "ratknot/factor.hpp"
#include "ratknot/lens.hpp"
#include "ratknot/monoid.hpp"
#include "ratknot/pipeline.hpp"
#include "verify.hpp"

using namespace ratknot;
using cli::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  if (const char* env = std::getenv("RATKNOT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void print(const ordered_json& j) { std::cout << j.dump() << "\n"; }

FlagSet parse_flags(const std::string& list) {
  FlagSet set = 0;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto f = parse_flag(item);
    if (!f) throw UsageError("unknown flag: " + item);
    set |= *f;
  }
  return set;
}

struct KnotInfoArgs {
  std::string fraction;
  std::string word;
  std::string form = "even";
};

int knot_info(const KnotInfoArgs& a) {
  if (a.fraction.empty() == a.word.empty()) throw UsageError("give either a fraction p/q or --word");
  KnotClass k;
  ConwayWord positive_word;
  if (!a.fraction.empty()) {
    auto [p, q] = parse_fraction(a.fraction);
    k = classify(p, q);
    positive_word = k.positive_word;
  } else {
    WordForm form;
    if (a.form == "even") form = WordForm::Even;
    else if (a.form == "positive") form = WordForm::Positive;
    else throw UsageError("--form must be even or positive");
    ConwayWord w(parse_entries(a.word), form);
    k = classify(w);
    positive_word = form == WordForm::Positive ? w : k.positive_word;
  }
  ordered_json j = cli::to_json(k, compute_invariants(k));
  ordered_json switches = ordered_json::array();
  for (auto i : unknotting_switches(positive_word)) switches.push_back(i);
  j["unknotting_switches"] = switches;
  print(j);
  return kExitOk;
}

ordered_json entries_json(const ConwayWord& w) {
  ordered_json a = ordered_json::array();
  for (auto& e : w.entries()) a.push_back(cli::number(e));
  return a;
}

ordered_json value_json(const ExtendedRational& x) {
  if (x.is_infinite()) return "inf";
  if (x.denominator() == 1) return cli::number(x.numerator());
  return x.to_string();
}

struct FractionArgs {
  std::string eval, collapse, to_positive, to_even, equivalents, canonical;
  bool mirror = false;
};

int fraction_cmd(const FractionArgs& a) {
  const int given = int(!a.eval.empty()) + int(!a.collapse.empty()) + int(!a.to_positive.empty()) +
                    int(!a.to_even.empty()) + int(!a.equivalents.empty()) + int(!a.canonical.empty());
  if (given != 1) throw UsageError("give exactly one fraction operation");
  ordered_json j;
  if (!a.eval.empty()) {
    auto e = parse_entries(a.eval);
    j["value"] = value_json(eval_cf(e));
  } else if (!a.collapse.empty()) {
    j["word"] = entries_json(collapse_zeros(parse_entries(a.collapse)));
  } else if (!a.to_positive.empty()) {
    j["word"] = entries_json(even_to_positive(ConwayWord::even(parse_entries(a.to_positive))));
  } else if (!a.to_even.empty()) {
    auto [p, q] = parse_fraction(a.to_even);
    j["word"] = entries_json(positive_to_even(SchubertPair::make(p, q)));
  } else if (!a.equivalents.empty()) {
    auto [p, q] = parse_fraction(a.equivalents);
    ordered_json list = ordered_json::array();
    for (auto& e : equivalents(SchubertPair::make(p, q), a.mirror))
      list.push_back({cli::number(e.p), cli::number(e.q)});
    j["equivalents"] = list;
  } else {
    j["word"] = entries_json(canonical_word(ConwayWord::even(parse_entries(a.canonical))));
  }
  print(j);
  return kExitOk;
}

struct CensusArgs {
  int n = 0;
  std::string require, forbid, format = "json";
  bool pairs_twice = false;
  bool words = false;
  bool oriented = false;
  long u1_determinant = 0;
  int sum_abs_signature = 0;
};

int census_cmd(const CensusArgs& a, unsigned threads) {
  const int given = int(a.n > 0) + int(a.u1_determinant > 0) + int(a.sum_abs_signature > 0);
  if (given != 1) throw UsageError("give exactly one of --n, --u1-determinant, --sum-abs-signature");
  if (a.u1_determinant > 0) {
    print({{"p", a.u1_determinant},
           {"oriented", a.oriented},
           {"u1_classes", cli::number(census_u1_by_determinant(a.u1_determinant, a.oriented))}});
    return kExitOk;
  }
  if (a.sum_abs_signature > 0) {
    const Integer total = sum_abs_signature(a.sum_abs_signature);
    char buf[64];
    gmp_snprintf(buf, sizeof buf, "%.3Fe", mpf_class(total, 64).get_mpf_t());
    print({{"n", a.sum_abs_signature}, {"sum_abs_signature", total.get_str()}, {"approx", buf}});
    return kExitOk;
  }
  if (a.words) {
    ordered_json list = ordered_json::array();
    for (auto& w : enumerate_even_words(a.n, a.oriented ? EnumerationMode::Oriented : EnumerationMode::UpToMirror))
      list.push_back(entries_json(w));
    print({{"n", a.n}, {"oriented", a.oriented}, {"words", list}});
    return kExitOk;
  }
  CensusFilter f;
  f.require = parse_flags(a.require);
  f.forbid = parse_flags(a.forbid);
  f.count_chiral_pairs_twice = a.pairs_twice;
  CensusReport r = census(a.n, f, threads);
  if (a.format == "csv") std::cout << cli::census_csv(r);
  else print(cli::to_json(r));
  return kExitOk;
}

struct SeriesArgs {
  std::string gf, pipeline, expr, hadamard;
  int order = 0;
  int stats = 0;
  bool list = false;
};

ordered_json stats_json(const CrossingStatistics& st) {
  return {{"n", st.n},
          {"knots", cli::number(st.knots)},
          {"knots_pairs_twice", cli::number(st.knots_pairs_twice)},
          {"sigma0_pairs_twice", cli::number(st.sigma0_pairs_twice)},
          {"sum_genus", cli::number(st.sum_genus)},
          {"sum_abs_signature", cli::number(st.sum_abs_signature)},
          {"mean_genus", cli::number(st.mean_genus)},
          {"mean_abs_signature", cli::number(st.mean_abs_signature)},
          {"mean_genus_approx", st.mean_genus.get_d()},
          {"mean_abs_signature_approx", st.mean_abs_signature.get_d()}};
}

int series_cmd(const SeriesArgs& a) {
  if (a.list) {
    ordered_json j = ordered_json::array();
    for (auto& e : gf_catalog_entries())
      j.push_back({{"name", e.name}, {"description", e.description}, {"formula", e.formula}});
    print(j);
    return kExitOk;
  }
  if (a.stats > 0) {
    const auto rows = mean_statistics(std::max(a.stats, 10));
    print(stats_json(rows.at(static_cast<std::size_t>(a.stats - 3))));
    return kExitOk;
  }
  if (int(!a.gf.empty()) + int(!a.pipeline.empty()) + int(!a.expr.empty()) != 1)
    throw UsageError("give exactly one of --gf, --expr and --pipeline");
  if (a.order < 1) throw UsageError("--order must be >= 1");
  if (!a.gf.empty()) {
    const auto entries = gf_catalog_entries();
    if (std::none_of(entries.begin(), entries.end(), [&](const auto& e) { return e.name == a.gf; }))
      throw UsageError("unknown generating function '" + a.gf + "' (see --list)");
  }
  ordered_json j;
  if (!a.gf.empty() || !a.expr.empty()) {
    const RationalGF gf = a.gf.empty() ? parse_gf(a.expr) : gf_catalog(a.gf);
    TruncatedSeries s = expand(gf, a.order);
    if (!a.hadamard.empty()) s = hadamard(s, expand(parse_gf(a.hadamard), a.order));
    if (a.gf.empty()) j["expr"] = a.expr;
    else j["gf"] = a.gf;
    j.update(cli::series_json(s));
  } else {
    j["pipeline"] = a.pipeline;
    if (a.pipeline == "g1") {
      j.update(cli::series_json(build_G1(a.order)));
    } else if (a.pipeline == "j") {
      j.update(cli::series_json(select_J(build_G1(a.order), a.order)));
    } else if (a.pipeline == "f0") {
      j.update(cli::series_json(diagonal_sigma0_signature(build_G1_signature(std::max(a.order, 3)))));
    } else {
      throw UsageError("--pipeline must be g1, j or f0");
    }
  }
  print(j);
  return kExitOk;
}

struct LensArgs {
  std::optional<long> p;
  std::optional<unsigned long> sweep;
  std::optional<unsigned> sn_search;
  std::optional<long> arith;
  std::optional<long> curve_point;
  std::optional<unsigned> duplication;
  std::string format;
};

int lens_cmd(const LensArgs& a, unsigned threads) {
  if (int(a.p.has_value()) + int(a.sweep.has_value()) + int(a.sn_search.has_value()) + int(a.arith.has_value()) +
          int(a.curve_point.has_value()) + int(a.duplication.has_value()) != 1)
    throw UsageError("give exactly one of --p, --sweep, --sn-search, --arith, --curve-point, --duplication");
  if (a.arith) {
    if (*a.arith < 1) throw UsageError("--arith needs N >= 1");
    print({{"n", *a.arith},
           {"phi", cli::number(euler_phi(*a.arith))},
           {"omega", omega(*a.arith)},
           {"r2_0", cli::number(r2_0(*a.arith))}});
  } else if (a.curve_point) {
    print({{"x", *a.curve_point}, {"point", is_curve_point(*a.curve_point)}});
  } else if (a.duplication) {
    auto list = [](const std::vector<Integer>& v) {
      ordered_json j = ordered_json::array();
      for (auto& x : v) j.push_back(cli::number(x));
      return j;
    };
    const auto d = duplication_determinants(*a.duplication);
    print({{"k_max", *a.duplication},
           {"first", list(d.first)},
           {"second", list(d.second)},
           {"merged", list(d.merged())},
           {"achiral", list(achiral_series_determinants(*a.duplication))}});
  } else if (a.p) {
    print(cli::to_json(lens_row(*a.p)));
  } else if (a.sweep) {
    std::cerr << "[lens] sweep to " << *a.sweep << "\n";
    auto rows = lens_sweep(3, *a.sweep, threads);
    if (a.format == "json") {
      ordered_json j = ordered_json::array();
      for (auto& r : rows) j.push_back(cli::to_json(r));
      print(j);
    } else {
      std::cout << cli::lens_csv(rows);
    }
  } else {
    ordered_json sols = ordered_json::array();
    for (auto& s : sn_search(*a.sn_search)) sols.push_back({{"s", s.s}, {"n", cli::number(s.n)}});
    print({{"max_s", *a.sn_search}, {"solutions", sols}});
  }
  return kExitOk;
}

struct MonoidArgs {
  std::string prop;
  int depth = 0;
  std::int64_t max_p = 0;
  bool orbit = false;
};

int monoid_cmd(const MonoidArgs& a, unsigned threads) {
  if (a.orbit) {
    Orbit orbit({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}, a.depth, a.max_p, threads);
    ordered_json levels = ordered_json::array();
    for (int d = 0; d <= orbit.depth(); ++d) {
      ordered_json level = ordered_json::array();
      for (auto& [p, q] : orbit.level(d)) level.push_back({p, q});
      levels.push_back(level);
    }
    print({{"depth", a.depth}, {"levels", levels}});
    return kExitOk;
  }
  if (a.prop.empty()) throw UsageError("give --prop or --orbit");
  PropositionReport r;
  if (a.prop == "pppp") r = verify_pppp(a.depth, a.max_p > 0 ? a.max_p : 10000);
  else if (a.prop == "cnj1") r = verify_cnj1(a.depth, threads);
  else if (a.prop == "m1_1") r = verify_M1_1(a.depth, threads);
  else if (a.prop == "k_pos") r = verify_k_pos(a.depth, a.max_p > 0 ? a.max_p : 3000);
  else throw UsageError("--prop must be pppp, cnj1, m1_1 or k_pos");
  print(cli::to_json(r));
  return r.ok() ? kExitOk : kExitFail;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 18;
};

int verify_cmd(const VerifyArgs& a, unsigned threads) {
  std::vector<cli::CheckResult> checks;
  try {
    checks = cli::run_suite(a.suite, a.max_n, threads);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  " << c.detail << "\n";
    ok = ok && c.pass;
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << a.suite << "  " << checks.size() << " checks\n";
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational knot counting toolkit"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "Worker cap for census and sweeps (default: RATKNOT_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  KnotInfoArgs ki;
  auto* knot = app.add_subcommand("knot-info", "Invariants of one rational knot");
  knot->add_option("fraction", ki.fraction, "p/q");
  knot->add_option("--word", ki.word, "Comma-separated Conway word");
  knot->add_option("--form", ki.form, "even or positive");

  FractionArgs fa;
  auto* frac = app.add_subcommand("fraction", "Iterated fractions and Conway word conversions");
  frac->add_option("--eval", fa.eval, "Evaluate [[s1,...,sm]]");
  frac->add_option("--collapse", fa.collapse, "Remove zero entries");
  frac->add_option("--to-positive", fa.to_positive, "Even word to positive word");
  frac->add_option("--to-even", fa.to_even, "p/q to canonical even word");
  frac->add_option("--equivalents", fa.equivalents, "Even representatives of p/q");
  frac->add_flag("--mirror", fa.mirror, "Include the mirror in --equivalents");
  frac->add_option("--canonical", fa.canonical, "Canonical form of an even word");

  CensusArgs ca;
  auto* cen = app.add_subcommand("census", "Counts of rational knots with n crossings");
  cen->add_option("--n", ca.n, "Crossing number")->check(CLI::Range(1, 40));
  cen->add_flag("--words", ca.words, "List the even words instead of counting");
  cen->add_flag("--oriented", ca.oriented, "Mirror-sensitive --words and --u1-determinant");
  cen->add_option("--u1-determinant", ca.u1_determinant, "Unknotting number one classes of determinant P");
  cen->add_option("--sum-abs-signature", ca.sum_abs_signature, "Sum of |signature| over n-crossing knots")
      ->check(CLI::Range(1, 5000));
  cen->add_option("--require", ca.require, "Comma-separated flags");
  cen->add_option("--forbid", ca.forbid, "Comma-separated flags");
  cen->add_flag("--pairs-twice", ca.pairs_twice, "Count a chiral knot and its mirror separately");
  cen->add_option("--format", ca.format)->check(CLI::IsMember({"json", "csv"}));

  SeriesArgs sa;
  auto* ser = app.add_subcommand("series", "Generating function expansions");
  ser->add_option("--gf", sa.gf, "Catalog name");
  ser->add_option("--pipeline", sa.pipeline, "g1, j or f0");
  ser->add_option("--expr", sa.expr, "Rational function in x, y, z");
  ser->add_option("--hadamard", sa.hadamard, "Coefficientwise product with this expression");
  ser->add_option("--stats", sa.stats, "Exact crossing-number statistics at n")->check(CLI::Range(3, 1000));
  ser->add_option("--order", sa.order, "Highest power of x");
  ser->add_flag("--list", sa.list, "List catalog entries");

  LensArgs la;
  auto* lens = app.add_subcommand("lens", "Lens space counts");
  lens->add_option("--p", la.p, "Odd p >= 3");
  lens->add_option("--sweep", la.sweep, "All odd p up to MAX, CSV");
  lens->add_option("--sn-search", la.sn_search, "Search q_s = 2n^2+2n+1 for s <= MAX_S");
  lens->add_option("--arith", la.arith, "Totient, distinct prime count and coprime two-square count of N");
  lens->add_option("--curve-point", la.curve_point, "Whether 3x^4 + 2x^2 - 5 is a square");
  lens->add_option("--duplication", la.duplication, "Determinants of the duplication and achiral word series up to K")
      ->check(CLI::Range(1u, 200u));
  lens->add_option("--format", la.format)->check(CLI::IsMember({"json", "csv"}));

  MonoidArgs ma;
  auto* mon = app.add_subcommand("monoid", "Matrix monoid proposition checks");
  mon->add_option("--prop", ma.prop, "pppp, cnj1, m1_1 or k_pos");
  mon->add_flag("--orbit", ma.orbit, "List the orbit of (1, 0) under (+-1, +-1) by depth");
  mon->add_option("--depth", ma.depth, "Word length bound")->required()->check(CLI::Range(0, 24));
  mon->add_option("--max-p", ma.max_p, "Bound on p for pppp and k_pos");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Reproduction checks with a PASS/FAIL table");
  ver->add_option("--suite", va.suite)->check(CLI::IsMember({"table1", "fibonacci", "lens", "all"}));
  ver->add_option("--max-n", va.max_n)->check(CLI::Range(3, 26));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*knot) return knot_info(ki);
    if (*frac) return fraction_cmd(fa);
    if (*cen) return census_cmd(ca, threads);
    if (*ser) return series_cmd(sa);
    if (*lens) return lens_cmd(la, threads);
    if (*mon) return monoid_cmd(ma, threads);
    if (*ver) return verify_cmd(va, threads);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
