#include "cyclekit/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclekit/aset.hpp"
#include "cyclekit/btd.hpp"
#include "cyclekit/characters.hpp"
#include "cyclekit/oracle.hpp"
#include "cyclekit/parallel.hpp"
#include "cyclekit/probs.hpp"
#include "cyclekit/qformulas.hpp"
#include "cyclekit/rng.hpp"

namespace cyclekit {

namespace {

using json = nlohmann::ordered_json;

enum class Format { json, csv, plain };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "plain") return Format::plain;
  throw CLI::ValidationError("--format", "expected json|csv|plain");
}

json rational_json(const BigRational& q) {
  return json{{"num", num_string(q)}, {"den", den_string(q)}};
}

std::string rational_text(const BigRational& q) {
  std::string s = num_string(q);
  if (denominator(q) != 1) s += "/" + den_string(q);
  return s;
}

std::string parts_text(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

CycleLengthSet aset_for(const std::string& spec_text, int n) {
  const AsetSpec spec = parse_aset_spec(spec_text);
  int n_max = std::max(n, 1);
  for (int v : spec.values) n_max = std::max(n_max, v);
  return make_aset(spec, n_max);
}

void emit_q(const QResult& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::json: {
      json doc{{"n", r.n},
               {"aset", r.aset},
               {"q", rational_json(r.value)},
               {"count", to_string(r.numerator_count)},
               {"float", to_double(r.value)}};
      out << doc.dump() << '\n';
      return;
    }
    case Format::csv:
      out << "n,aset,num,den,count,float\n"
          << r.n << ',' << r.aset << ',' << num_string(r.value) << ','
          << den_string(r.value) << ',' << to_string(r.numerator_count) << ','
          << to_double(r.value) << '\n';
      return;
    case Format::plain:
      out << "q_" << r.n << "(" << r.aset << ") = " << rational_text(r.value)
          << "  (count " << to_string(r.numerator_count) << ", ~"
          << to_double(r.value) << ")\n";
      return;
  }
}

// ---- verify suite ----------------------------------------------------

struct VerifyContext {
  std::ostream& out;
  int max_n;
  int threads;
  std::uint64_t seed;
  int random_sets;
  bool failed = false;

  void pass(const std::string& name) { out << "ok " << name << '\n'; }
  void fail(const std::string& name, const std::string& details) {
    out << "MISMATCH " << name << ": " << details << '\n';
    failed = true;
  }
};

std::vector<AsetSpec> named_specs() {
  return {
      AsetSpec{AsetKind::even, 0, {}, false},
      AsetSpec{AsetKind::odd, 0, {}, false},
      AsetSpec{AsetKind::divisible, 3, {}, false},
      AsetSpec{AsetKind::divisible, 4, {}, false},
      AsetSpec{AsetKind::min_length, 2, {}, false},
  };
}

AsetSpec random_subset_spec(int n, std::uint64_t seed, int index) {
  SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(n) * 100000 +
                                       static_cast<std::uint64_t>(index));
  const std::uint64_t mask = rng.next();
  AsetSpec spec;
  spec.kind = AsetKind::explicit_list;
  for (int r = 1; r <= n; ++r)
    if ((mask >> (r - 1)) & 1) spec.values.push_back(r);
  return spec;
}

void verify_formula_vs_oracle(VerifyContext& ctx) {
  const std::string name = "formula-vs-oracle (named + " +
                           std::to_string(ctx.random_sets) +
                           " random sets, N=2.." + std::to_string(ctx.max_n) +
                           ")";
  for (int n = 2; n <= ctx.max_n; ++n) {
    std::vector<AsetSpec> specs = named_specs();
    for (int i = 0; i < ctx.random_sets; ++i)
      specs.push_back(random_subset_spec(n, ctx.seed, i));
    for (const AsetSpec& spec : specs) {
      const CycleLengthSet a = make_aset(spec, n);
      const QResult lhs = q_general(a, n);
      const QResult rhs = q_bruteforce(a, n, ctx.threads);
      if (lhs.value != rhs.value) {
        ctx.fail(name, "N=" + std::to_string(n) + " aset=" + a.describe() +
                           " formula=" + rational_text(lhs.value) +
                           " oracle=" + rational_text(rhs.value));
        return;
      }
    }
  }
  ctx.pass(name);
}

void verify_specializations(VerifyContext& ctx) {
  const std::string name = "specializations even/odd/divisible (N<=30, d<=5)";
  for (int n = 1; n <= 30; ++n) {
    const CycleLengthSet even_set = make_aset(AsetSpec{AsetKind::even, 0, {}, false}, n);
    const CycleLengthSet odd_set = make_aset(AsetSpec{AsetKind::odd, 0, {}, false}, n);
    if (q_general(even_set, n).value != q_even(n).value) {
      ctx.fail(name, "even N=" + std::to_string(n));
      return;
    }
    if (q_general(odd_set, n).value != q_odd(n).value) {
      ctx.fail(name, "odd N=" + std::to_string(n));
      return;
    }
    for (int d = 1; d <= 5; ++d) {
      const CycleLengthSet div_set =
          make_aset(AsetSpec{AsetKind::divisible, d, {}, false}, n);
      if (q_general(div_set, n).value != q_divisible(n, d).value) {
        ctx.fail(name, "div d=" + std::to_string(d) + " N=" + std::to_string(n));
        return;
      }
    }
  }
  ctx.pass(name);
}

void verify_derangement_identity(VerifyContext& ctx) {
  const std::string name = "derangement-count identity (N<=100)";
  for (int n = 2; n <= 100; ++n) {
    if (derangement_q_sum(n) != c_n_formula(n)) {
      ctx.fail(name, "N=" + std::to_string(n));
      return;
    }
  }
  ctx.pass(name);
}

void verify_no_backstep(VerifyContext& ctx) {
  const int limit = std::min(ctx.max_n, 10);
  const std::string name =
      "no-backstep enumeration (N<=" + std::to_string(limit) + ")";
  for (int n = 2; n <= limit; ++n) {
    const BigInt enumerated = count_no_backstep_cycles(n, ctx.threads);
    if (enumerated != c_n_formula(n) || enumerated != derangement_q_sum(n)) {
      ctx.fail(name, "N=" + std::to_string(n));
      return;
    }
  }
  ctx.pass(name);
}

void verify_hook_lemma(VerifyContext& ctx) {
  const std::string name = "hook coefficient formula vs border-strip rule (N<=12)";
  for (int n = 1; n <= 12; ++n) {
    const auto classes = partitions_of(n);
    for (const Hook& h : hooks_of(n)) {
      const Partition shape = hook_shape(h);
      if (dimension(shape) != binomial(n - 1, h.arm - 1)) {
        ctx.fail(name, "dimension n=" + std::to_string(n) +
                           " arm=" + std::to_string(h.arm));
        return;
      }
      for (const Partition& cls : classes) {
        const CycleType t = cycle_type_from_parts(cls.parts);
        if (hook_character_lemma(h, t) != mn_character(shape, t)) {
          ctx.fail(name, "n=" + std::to_string(n) + " arm=" +
                             std::to_string(h.arm) + " class=" +
                             parts_text(cls.parts));
          return;
        }
      }
    }
  }
  ctx.pass(name);
}

void verify_class_products(VerifyContext& ctx) {
  const int dist_limit = std::min(ctx.max_n, 7);
  const std::string name = "two-cycle class products (total prob N<=" +
                           std::to_string(std::min(ctx.max_n + 2, 10)) +
                           ", vs enumeration N<=" + std::to_string(dist_limit) +
                           ")";
  for (int n = 2; n <= std::min(ctx.max_n + 2, 10); ++n) {
    BigRational total = 0;
    for (const Partition& cls : partitions_of(n)) {
      const CycleType t = cycle_type_from_parts(cls.parts);
      total += product_class_prob(t) * BigRational(class_size(t));
    }
    if (total != 1) {
      ctx.fail(name, "total probability N=" + std::to_string(n));
      return;
    }
  }
  for (int n = 2; n <= dist_limit; ++n) {
    const ClassDistribution dist = product_class_distribution(n, ctx.threads);
    for (const Partition& cls : partitions_of(n)) {
      const CycleType t = cycle_type_from_parts(cls.parts);
      const BigRational expected =
          product_class_prob(t) * BigRational(class_size(t));
      const auto it = dist.entries.find(t);
      const BigRational got = it == dist.entries.end() ? BigRational(0) : it->second;
      if (expected != got) {
        ctx.fail(name, "N=" + std::to_string(n) + " class=" +
                           parts_text(cls.parts));
        return;
      }
    }
  }
  ctx.pass(name);
}

void verify_one_odd_cycle(VerifyContext& ctx) {
  const int limit = std::min(ctx.max_n, 7);
  const std::string name =
      "single-odd-cycle count vs closed form (N<=" + std::to_string(limit) + ")";
  for (int n = 2; n <= limit; ++n) {
    const BigInt got = count_one_odd_cycle(n, ctx.threads);
    const BigInt expected =
        n % 2 == 0 ? BigInt(2 * factorial(n) / (n + 2)) : BigInt(0);
    if (got != expected) {
      ctx.fail(name, "N=" + std::to_string(n) + " got=" + to_string(got) +
                         " expected=" + to_string(expected));
      return;
    }
  }
  ctx.pass(name);
}

void verify_sorting_bound(VerifyContext& ctx) {
  const int limit = std::min(ctx.max_n, 8);
  const std::string name =
      "block-transposition lower bound (n=2.." + std::to_string(limit) + ")";
  for (int n = 2; n <= limit; ++n) {
    const LowerBoundReport report = verify_lower_bound(n, ctx.threads);
    if (!report.holds) {
      ctx.fail(name, "n=" + std::to_string(n) + " count=" +
                         std::to_string(report.count_hard) + " bound=" +
                         to_string(report.bound));
      return;
    }
  }
  ctx.pass(name);
}

int run_verify(std::ostream& out, int max_n, int threads, std::uint64_t seed,
               int random_sets) {
  VerifyContext ctx{out, max_n, threads, seed, random_sets};
  verify_formula_vs_oracle(ctx);
  verify_specializations(ctx);
  verify_derangement_identity(ctx);
  verify_no_backstep(ctx);
  verify_hook_lemma(ctx);
  verify_class_products(ctx);
  verify_one_odd_cycle(ctx);
  verify_sorting_bound(ctx);
  out << (ctx.failed ? "verify: FAILED\n" : "verify: all checks passed\n");
  return ctx.failed ? 1 : 0;
}

// ---- subcommand payloads ----------------------------------------------

struct Options {
  std::string aset = "even";
  int n = 0;
  std::string route = "series";
  std::string formula = "general";
  std::string format = "plain";
  std::string lambda;
  std::string cls;
  std::string perm;
  bool mc = false;
  bool dist = false;
  bool product_dist = false;
  bool verify_bound = false;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int threads = 0;
  int guard = kDefaultEnumerationGuard;
  int max_n = 8;
  int random_sets = 25;
  int n_min = 2;
  int n_max_sweep = 30;
};

int cmd_prob(const Options& opt, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  const CycleLengthSet a = aset_for(opt.aset, opt.n);
  BigRational value;
  if (opt.route == "series") {
    value = p_series(a, opt.n).at(opt.n);
  } else if (opt.route == "partition") {
    value = p_partition_sum(a, opt.n);
  } else if (opt.route == "closed") {
    const AsetSpec& spec = a.spec();
    if (spec.complemented)
      throw std::invalid_argument("prob: no closed form for complemented sets");
    switch (spec.kind) {
      case AsetKind::even:
        value = p_closed(ParityKind::even, opt.n);
        break;
      case AsetKind::odd:
        value = p_closed(ParityKind::odd, opt.n);
        break;
      case AsetKind::divisible:
        value = p_closed_divisible(opt.n, spec.param);
        break;
      default:
        throw std::invalid_argument(
            "prob: closed route needs even, odd, or div:<d>");
    }
  } else {
    throw std::invalid_argument("prob: route must be series|partition|closed");
  }
  switch (fmt) {
    case Format::json: {
      json doc{{"n", opt.n},
               {"aset", a.describe()},
               {"route", opt.route},
               {"p", rational_json(value)},
               {"float", to_double(value)}};
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "n,aset,route,num,den,float\n"
          << opt.n << ',' << a.describe() << ',' << opt.route << ','
          << num_string(value) << ',' << den_string(value) << ','
          << to_double(value) << '\n';
      break;
    case Format::plain:
      out << "p_" << opt.n << "(" << a.describe()
          << ") = " << rational_text(value) << "  (~" << to_double(value)
          << ", route " << opt.route << ")\n";
      break;
  }
  return 0;
}

int cmd_q(const Options& opt, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  QResult result;
  if (opt.formula == "general") {
    result = q_general(aset_for(opt.aset, opt.n), opt.n);
  } else if (opt.formula == "even") {
    result = q_even(opt.n);
  } else if (opt.formula == "odd") {
    result = q_odd(opt.n);
  } else if (opt.formula.rfind("div:", 0) == 0) {
    result = q_divisible(opt.n, std::stoi(opt.formula.substr(4)));
  } else {
    throw std::invalid_argument("q: formula must be general|even|odd|div:<d>");
  }
  emit_q(result, fmt, out);
  return 0;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  if (opt.dist) {
    const ClassDistribution dist =
        product_class_distribution(opt.n, opt.threads, opt.guard);
    if (fmt == Format::json) {
      json classes = json::array();
      for (const auto& [type, prob] : dist.entries)
        classes.push_back(json{{"type", type.parts()},
                               {"count", to_string(dist.counts.at(type))},
                               {"prob", rational_json(prob)}});
      out << json{{"n", opt.n}, {"classes", classes}}.dump() << '\n';
    } else {
      out << "type,count,probability\n";
      for (const auto& [type, prob] : dist.entries)
        out << parts_text(type.parts()) << ','
            << to_string(dist.counts.at(type)) << ',' << rational_text(prob)
            << '\n';
    }
    return 0;
  }
  if (opt.mc) {
    const CycleLengthSet a = aset_for(opt.aset, opt.n);
    const McEstimate est =
        q_montecarlo(a, opt.n, opt.trials, opt.seed, opt.threads);
    if (fmt == Format::json) {
      json doc{{"n", opt.n},        {"aset", a.describe()},
               {"trials", est.trials}, {"hits", est.hits},
               {"estimate", est.estimate}, {"stderr", est.std_error},
               {"seed", opt.seed}};
      out << doc.dump() << '\n';
    } else {
      out << "mc q_" << opt.n << "(" << a.describe() << ") ~ " << est.estimate
          << " +/- " << est.std_error << "  (" << est.hits << "/" << est.trials
          << ", seed " << opt.seed << ")\n";
    }
    return 0;
  }
  const CycleLengthSet a = aset_for(opt.aset, opt.n);
  emit_q(q_bruteforce(a, opt.n, opt.threads, opt.guard), fmt, out);
  return 0;
}

int cmd_char(const Options& opt, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  if (opt.product_dist) {
    if (opt.n < 2) throw std::invalid_argument("char: --product-dist needs --n >= 2");
    json classes = json::array();
    if (fmt != Format::json) out << "type,class_size,point_prob,class_prob\n";
    for (const Partition& cls : partitions_of(opt.n)) {
      const CycleType t = cycle_type_from_parts(cls.parts);
      const BigRational point = product_class_prob(t);
      const BigInt size = class_size(t);
      const BigRational total = point * BigRational(size);
      if (fmt == Format::json)
        classes.push_back(json{{"type", cls.parts},
                               {"class_size", to_string(size)},
                               {"point_prob", rational_json(point)},
                               {"class_prob", rational_json(total)}});
      else
        out << parts_text(cls.parts) << ',' << to_string(size) << ','
            << rational_text(point) << ',' << rational_text(total) << '\n';
    }
    if (fmt == Format::json)
      out << json{{"n", opt.n}, {"classes", classes}}.dump() << '\n';
    return 0;
  }
  if (opt.lambda.empty() || opt.cls.empty())
    throw std::invalid_argument("char: need --lambda and --class (or --product-dist)");
  Partition lambda{parse_int_list(opt.lambda, "--lambda")};
  const CycleType t =
      cycle_type_from_parts(parse_int_list(opt.cls, "--class"));
  const BigInt chi = mn_character(lambda, t);
  const BigInt dim = dimension(lambda);
  if (fmt == Format::json) {
    json doc{{"lambda", lambda.parts},
             {"class", t.parts()},
             {"chi", to_string(chi)},
             {"dimension", to_string(dim)}};
    out << doc.dump() << '\n';
  } else {
    out << "chi[" << parts_text(lambda.parts) << "](" << parts_text(t.parts())
        << ") = " << to_string(chi) << "  (dimension " << to_string(dim)
        << ")\n";
  }
  return 0;
}

// --perm accepts one-line ("3,2,1") or cycle notation ("(1 3)(2)").
Permutation parse_perm_argument(const std::string& text) {
  if (text.find('(') == std::string::npos) return parse_one_line(text);
  int n = 0;
  int v = 0;
  for (const char c : text) {
    if (c >= '0' && c <= '9') {
      v = v * 10 + (c - '0');
    } else {
      n = std::max(n, v);
      v = 0;
    }
  }
  n = std::max(n, v);
  return parse_cycles(text, n);
}

int cmd_btd(const Options& opt, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  if (!opt.perm.empty()) {
    const Permutation u = parse_perm_argument(opt.perm);
    if (opt.n != 0 && opt.n != u.size())
      throw std::invalid_argument("btd: --n disagrees with --perm length");
    const DistanceTable table = btd_bfs(u.size(), opt.threads, opt.guard);
    const int d = table.at(u);
    if (fmt == Format::json)
      out << json{{"perm", u.one_line()}, {"btd", d}}.dump() << '\n';
    else
      out << "btd(" << format_one_line(u) << ") = " << d << '\n';
    return 0;
  }
  if (opt.n < 1) throw std::invalid_argument("btd: need --n or --perm");
  if (opt.verify_bound) {
    const LowerBoundReport report =
        verify_lower_bound(opt.n, opt.threads, opt.guard);
    if (fmt == Format::json) {
      json doc{{"n", report.n},
               {"threshold", report.threshold},
               {"count_hard", report.count_hard},
               {"bound", to_string(report.bound)},
               {"vacuous", report.vacuous},
               {"holds", report.holds}};
      out << doc.dump() << '\n';
    } else {
      out << "n=" << report.n << " threshold=" << report.threshold
          << " count_hard=" << report.count_hard
          << " bound=" << to_string(report.bound)
          << (report.vacuous ? " (vacuous)" : "")
          << (report.holds ? " holds" : " VIOLATED") << '\n';
    }
    return report.holds ? 0 : 1;
  }
  // histogram is the default btd report; --dist names it explicitly
  const DistanceTable table = btd_bfs(opt.n, opt.threads, opt.guard);
  const auto hist = btd_distribution(table);
  if (fmt == Format::json) {
    json rows = json::array();
    for (const auto& [d, c] : hist)
      rows.push_back(json{{"distance", d}, {"count", c}});
    out << json{{"n", opt.n},
                {"max", table.max_distance()},
                {"distribution", rows}}.dump()
        << '\n';
  } else {
    out << "distance,count\n";
    for (const auto& [d, c] : hist) out << d << ',' << c << '\n';
  }
  return 0;
}

int cmd_table(const Options& opt, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  if (opt.n_min < 1 || opt.n_max_sweep < opt.n_min)
    throw std::invalid_argument("table: need 1 <= --n-min <= --n-max");
  json rows = json::array();
  if (fmt != Format::json)
    out << "n,q_even,q_odd,q_even_float,q_odd_float,ratio_even,ratio_odd\n";
  for (int n = opt.n_min; n <= opt.n_max_sweep; ++n) {
    const QResult e = q_even(n);
    const QResult o = q_odd(n);
    const double scale = 1.0 / asymptotic_estimate(n);
    const double re = to_double(e.value) * scale;
    const double ro = to_double(o.value) * scale;
    if (fmt == Format::json) {
      rows.push_back(json{{"n", n},
                          {"q_even", rational_json(e.value)},
                          {"q_odd", rational_json(o.value)},
                          {"q_even_float", to_double(e.value)},
                          {"q_odd_float", to_double(o.value)},
                          {"ratio_even", re},
                          {"ratio_odd", ro}});
    } else {
      out << n << ',' << rational_text(e.value) << ',' << rational_text(o.value)
          << ',' << to_double(e.value) << ',' << to_double(o.value) << ',' << re
          << ',' << ro << '\n';
    }
  }
  if (fmt == Format::json) out << rows.dump() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact statistics for products of two maximal cycles"};
  app.name("cyclekit");
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_format = true) {
    sub->add_option("--threads", opt.threads,
                    "worker count (0 = CYCLEKIT_THREADS or hardware)");
    if (with_format)
      sub->add_option("--format", opt.format, "json|csv|plain");
  };

  CLI::App* prob = app.add_subcommand("prob", "A-permutation probability p_N(A)");
  prob->add_option("--aset", opt.aset, "cycle-length set")->required();
  prob->add_option("--n", opt.n, "permutation size")->required()
      ->check(CLI::PositiveNumber);
  prob->add_option("--route", opt.route, "series|partition|closed");
  add_common(prob);

  CLI::App* q = app.add_subcommand(
      "q", "probability q_N(A) for the product of two N-cycles");
  q->add_option("--aset", opt.aset, "cycle-length set");
  q->add_option("--n", opt.n, "cycle size")->required()
      ->check(CLI::PositiveNumber);
  q->add_option("--formula", opt.formula, "general|even|odd|div:<d>");
  add_common(q);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive or Monte-Carlo ground truth");
  oracle->add_option("--aset", opt.aset, "cycle-length set");
  oracle->add_option("--n", opt.n, "cycle size")->required()
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--mc", opt.mc, "Monte-Carlo instead of enumeration");
  oracle->add_option("--trials", opt.trials, "Monte-Carlo trial count");
  oracle->add_option("--seed", opt.seed, "Monte-Carlo seed");
  oracle->add_flag("--dist", opt.dist, "emit the full product type distribution");
  oracle->add_option("--guard", opt.guard, "enumeration size guard");
  add_common(oracle);

  CLI::App* chars = app.add_subcommand("char", "symmetric-group characters");
  chars->add_option("--lambda", opt.lambda, "partition, e.g. 3,1");
  chars->add_option("--class", opt.cls, "class type, e.g. 4 or 2,2");
  chars->add_flag("--product-dist", opt.product_dist,
                  "two-cycle product distribution by class");
  chars->add_option("--n", opt.n, "size for --product-dist");
  add_common(chars);

  CLI::App* btd = app.add_subcommand(
      "btd", "block-transposition distances from the identity");
  btd->add_option("--n", opt.n, "permutation size");
  btd->add_flag("--dist", opt.dist, "distance histogram (default report)");
  btd->add_flag("--verify-bound", opt.verify_bound,
                "check the hard-permutation lower bound");
  btd->add_option("--perm", opt.perm, "one-line permutation, e.g. 3,2,1");
  btd->add_option("--guard", opt.guard, "BFS size guard");
  add_common(btd);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full cross-validation suite");
  verify->add_option("--max-n", opt.max_n, "largest enumerated size");
  verify->add_option("--seed", opt.seed, "seed for random A-sets");
  verify->add_option("--random-sets", opt.random_sets,
                     "random A-sets per size");
  add_common(verify, /*with_format=*/false);

  CLI::App* table = app.add_subcommand(
      "table", "sweep q_even/q_odd with asymptotic ratios");
  table->add_option("--n-min", opt.n_min, "first size");
  table->add_option("--n-max", opt.n_max_sweep, "last size");
  add_common(table);

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("cyclekit");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (prob->parsed()) return cmd_prob(opt, out);
    if (q->parsed()) return cmd_q(opt, out);
    if (oracle->parsed()) return cmd_oracle(opt, out);
    if (chars->parsed()) return cmd_char(opt, out);
    if (btd->parsed()) return cmd_btd(opt, out);
    if (verify->parsed())
      return run_verify(out, opt.max_n, opt.threads, opt.seed,
                        opt.random_sets);
    if (table->parsed()) return cmd_table(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace cyclekit
