#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qzeta/andrews.hpp"
#include "qzeta/criterion.hpp"
#include "qzeta/denominator.hpp"
#include "qzeta/interval.hpp"
#include "qzeta/json_io.hpp"
#include "qzeta/linear_form.hpp"
#include "qzeta/number.hpp"
#include "qzeta/numerics.hpp"

namespace {

using nlohmann::json;
using namespace qzeta;

struct GlobalOpts {
  long precision = 256;
  std::string output;
  int jobs = 1;
  std::uint64_t seed = 20260823;
};

long env_default_precision() {
  const char* env = std::getenv("QZETA_PRECISION");
  if (env == nullptr || *env == '\0') return 256;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 16 || v > 1048576) {
    throw std::invalid_argument(
        "QZETA_PRECISION must be an integer in [16, 1048576]");
  }
  return v;
}

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

void write_text(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + g.output);
  f << text;
}

// Report envelope shared by every subcommand that emits JSON.  All numeric
// leaves are integers or decimal strings, so a rerun with the same arguments
// produces the same bytes.
int emit_report(const GlobalOpts& g, const std::string& command, json config,
                json results, bool pass) {
  json out = json::object();
  out["schema"] = "qzeta-report/1";
  out["command"] = command;
  config["precision"] = static_cast<std::int64_t>(g.precision);
  config["jobs"] = g.jobs;
  out["config"] = std::move(config);
  out["seed"] = g.seed;
  out["results"] = std::move(results);
  out["pass"] = pass;
  write_text(g, out.dump(2) + "\n");
  return pass ? 0 : 1;
}

bool intervals_intersect(const Interval& a, const Interval& b) {
  return !(a.sup_rat() < b.inf_rat() || b.sup_rat() < a.inf_rat());
}

int run_zeta_eval(const GlobalOpts& g, int s, const std::string& q_text) {
  const BigRat q = parse_rational(q_text);
  const Interval v = zeta_q(s, QPoint{q}, g.precision);
  json config{{"s", s}, {"q", q.get_str()}};
  json results{{"value", v.to_string(40)}, {"approx", fmt_double(v.approx())}};
  return emit_report(g, "zeta eval", config, results, true);
}

int run_form_build(const GlobalOpts& g, int A, int r, int n) {
  const LinearForm form = build_linear_form(FormParams{A, r, n});
  json config{{"A", A}, {"r", r}, {"n", n}};
  json results = json::parse(to_json_string(form));
  return emit_report(g, "form build", config, results, true);
}

int run_form_verify(const GlobalOpts& g, int A, int r,
                    const std::vector<int>& n_values,
                    const std::vector<std::string>& q_texts,
                    std::optional<int> max_radius_log2) {
  std::optional<BigRat> radius_cap;
  if (max_radius_log2) {
    radius_cap = qzeta::pow(BigRat(2), static_cast<long>(*max_radius_log2));
  }
  json rows = json::array();
  bool all = true;
  for (int n : n_values) {
    const LinearForm form = build_linear_form(FormParams{A, r, n});
    for (const std::string& q_text : q_texts) {
      const BigRat q = parse_rational(q_text);
      const Interval res = linear_form_residual(form, QPoint{q}, g.precision);
      const bool zero_in = res.contains_zero();
      const bool radius_ok = !radius_cap || res.rad_rat() < *radius_cap;
      const bool ok = zero_in && radius_ok;
      all = all && ok;
      rows.push_back(json{{"n", n},
                          {"q", q.get_str()},
                          {"residual", res.to_string(40)},
                          {"contains_zero", zero_in},
                          {"radius_ok", radius_ok},
                          {"pass", ok}});
    }
  }
  json config{{"A", A}, {"r", r}};
  if (max_radius_log2) config["max_radius_log2"] = *max_radius_log2;
  return emit_report(g, "form verify", config, json{{"cases", rows}}, all);
}

int run_denom_verify(const GlobalOpts& g, int A, int r, int n_min, int n_max,
                     std::optional<int> d_power) {
  if (n_min < 1 || n_min > n_max) {
    throw std::invalid_argument("need 1 <= --n-min <= --n-max");
  }
  json reports = json::array();
  bool all = true;
  for (int n = n_min; n <= n_max; ++n) {
    const FormParams p{A, r, n};
    const LinearFormParts parts = build_linear_form_parts(p);
    DenominatorSpec spec = DenominatorSpec::reduced(p);
    if (d_power) spec.d_power = *d_power;
    const DenominatorReport rep = verify_denominator(parts, spec);
    all = all && rep.pass;
    reports.push_back(json::parse(to_json_string(rep)));
  }
  json config{{"A", A}, {"r", r}, {"n_min", n_min}, {"n_max", n_max}};
  if (d_power) config["d_power"] = *d_power;
  return emit_report(g, "denom verify", config, json{{"reports", reports}},
                     all);
}

const char* window_case_name(WindowCase c) {
  switch (c) {
    case WindowCase::kA0R0:
      return "A0R0";
    case WindowCase::kA2R0:
      return "A2R0";
    case WindowCase::kA0R1:
      return "A0R1";
    case WindowCase::kA2R1:
      return "A2R1";
  }
  return "?";
}

// Exact pre-check of every divisor both sides of the transformation build:
// x q^t = 1 for a listed parameter combination x and small t would make a
// Pochhammer factor in a denominator vanish.
bool andrews_degenerate(const AndrewsInstance& inst) {
  const auto at = [](const std::vector<BigRat>& v, int i) -> const BigRat& {
    return v[static_cast<std::size_t>(i)];
  };
  std::vector<BigRat> xs;
  xs.push_back(inst.base);
  xs.push_back(inst.a);
  xs.push_back(inst.a * qzeta::pow(inst.base, static_cast<long>(inst.N) + 1));
  const BigRat aq = inst.a * inst.base;
  for (int i = 1; i <= inst.m + 1; ++i) {
    if (at(inst.b, i) == 0 || at(inst.c, i) == 0) return true;
    xs.push_back(aq / at(inst.b, i));
    xs.push_back(aq / at(inst.c, i));
  }
  xs.push_back(at(inst.b, inst.m + 1) * at(inst.c, inst.m + 1) /
               (inst.a * qzeta::pow(inst.base, static_cast<long>(inst.N))));
  for (const BigRat& x : xs) {
    BigRat v = x;
    for (int t = 0; t <= inst.N + inst.m + 4; ++t) {
      if (v == 1) return true;
      v *= inst.base;
    }
  }
  return false;
}

std::vector<AndrewsInstance> fixed_andrews_instances() {
  const auto rat = [](long n, long d) {
    BigRat v(n, d);
    v.canonicalize();
    return v;
  };
  std::vector<AndrewsInstance> out;
  {
    AndrewsInstance inst;  // N = 0: both sides collapse to the k = 0 term
    inst.m = 1;
    inst.N = 0;
    inst.base = rat(1, 2);
    inst.a = rat(1, 3);
    inst.b = {BigRat(0), rat(2, 5), rat(3, 1)};
    inst.c = {BigRat(0), rat(5, 1), rat(-1, 2)};
    out.push_back(inst);
  }
  {
    AndrewsInstance inst;  // m = 1 with a genuine sum range
    inst.m = 1;
    inst.N = 3;
    inst.base = rat(1, 2);
    inst.a = rat(1, 5);
    inst.b = {BigRat(0), rat(2, 3), rat(7, 2)};
    inst.c = {BigRat(0), rat(-3, 1), rat(1, 7)};
    out.push_back(inst);
  }
  {
    AndrewsInstance inst;  // m = 0 edge: the multiple sum degenerates to 1
    inst.m = 0;
    inst.N = 4;
    inst.base = rat(2, 3);
    inst.a = rat(1, 7);
    inst.b = {BigRat(0), rat(3, 4)};
    inst.c = {BigRat(0), rat(-5, 3)};
    out.push_back(inst);
  }
  {
    AndrewsInstance inst;  // m = 2 with N = 0
    inst.m = 2;
    inst.N = 0;
    inst.base = rat(1, 3);
    inst.a = rat(2, 7);
    inst.b = {BigRat(0), rat(5, 2), rat(-2, 1), rat(3, 5)};
    inst.c = {BigRat(0), rat(7, 3), rat(4, 1), rat(-1, 3)};
    out.push_back(inst);
  }
  return out;
}

AndrewsInstance random_andrews_instance(std::mt19937_64& rng) {
  const auto small_rat = [&rng](bool exclude_unit) {
    for (;;) {
      const long num = static_cast<long>(rng() % 15) - 7;  // -7..7
      const long den = 1 + static_cast<long>(rng() % 5);   // 1..5
      if (num == 0) continue;
      BigRat v(num, den);
      v.canonicalize();
      if (exclude_unit && (v == 1 || v == -1)) continue;
      return v;
    }
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    AndrewsInstance inst;
    inst.m = 1 + static_cast<int>(rng() % 3);  // 1..3
    inst.N = static_cast<int>(rng() % 5);      // 0..4
    for (;;) {
      // |base| != 1 keeps every q-factorial denominator nonzero
      const long num = static_cast<long>(rng() % 7) - 3;  // -3..3
      const long den = 2 + static_cast<long>(rng() % 4);  // 2..5
      if (num == 0) continue;
      BigRat v(num, den);
      v.canonicalize();
      if (v == 1 || v == -1) continue;
      inst.base = v;
      break;
    }
    inst.a = small_rat(true);
    inst.b.assign(static_cast<std::size_t>(inst.m) + 2, BigRat(0));
    inst.c.assign(static_cast<std::size_t>(inst.m) + 2, BigRat(0));
    for (int i = 1; i <= inst.m + 1; ++i) {
      inst.b[static_cast<std::size_t>(i)] = small_rat(false);
      inst.c[static_cast<std::size_t>(i)] = small_rat(false);
    }
    if (!andrews_degenerate(inst)) return inst;
  }
  throw std::runtime_error(
      "could not draw a nondegenerate hypergeometric instance");
}

int run_identity_verify(const GlobalOpts& g, int n_max, int andrews_count) {
  if (n_max < 1) throw std::invalid_argument("need --n-max >= 1");
  if (andrews_count < 0) throw std::invalid_argument("need --andrews-count >= 0");
  bool all = true;

  json closed = json::array();
  for (WindowCase c : {WindowCase::kA0R0, WindowCase::kA2R0, WindowCase::kA0R1,
                       WindowCase::kA2R1}) {
    int checked = 0;
    json failures = json::array();
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 1; k <= n; ++k) {
        const WindowIdentityResult res = closed_form_identity(c, n, k);
        ++checked;
        if (!(res.q_identity && res.limit_identity)) {
          all = false;
          failures.push_back(json{{"n", n},
                                  {"k", k},
                                  {"q_identity", res.q_identity},
                                  {"limit_identity", res.limit_identity}});
        }
      }
    }
    closed.push_back(json{{"case", window_case_name(c)},
                          {"instances", checked},
                          {"failures", failures}});
  }

  std::vector<AndrewsInstance> insts = fixed_andrews_instances();
  const std::size_t fixed_count = insts.size();
  std::mt19937_64 rng(g.seed);
  for (int i = 0; i < andrews_count; ++i) {
    insts.push_back(random_andrews_instance(rng));
  }
  std::vector<char> ok(insts.size(), 0);
  const auto work = [&insts, &ok](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        ok[i] = andrews_transform(insts[i]).equal ? 1 : 0;
      } catch (const std::exception&) {
        ok[i] = 0;
      }
    }
  };
  const std::size_t total = insts.size();
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(g.jobs, 1)),
                            std::max<std::size_t>(total, 1));
  if (workers <= 1) {
    work(0, total);
  } else {
    // Instance checks share no mutable state, so a flat split is safe.
    std::vector<std::future<void>> futs;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk;
      const std::size_t e = std::min(total, b + chunk);
      if (b >= e) break;
      futs.push_back(std::async(std::launch::async, work, b, e));
    }
    for (auto& f : futs) f.get();
  }
  json andrews_rows = json::array();
  for (std::size_t i = 0; i < insts.size(); ++i) {
    if (!ok[i]) all = false;
    andrews_rows.push_back(json{{"kind", i < fixed_count ? "fixed" : "seeded"},
                                {"m", insts[i].m},
                                {"N", insts[i].N},
                                {"base", insts[i].base.get_str()},
                                {"a", insts[i].a.get_str()},
                                {"pass", ok[i] != 0}});
  }

  json config{{"n_max", n_max}, {"andrews_count", andrews_count}};
  json results{{"closed_forms", closed}, {"andrews", andrews_rows}};
  return emit_report(g, "identity verify", config, results, all);
}

int run_blocks_verify(const GlobalOpts& g, int n_max, int l_max) {
  if (n_max < 0 || l_max < 0) {
    throw std::invalid_argument("need --n-max >= 0 and --l-max >= 0");
  }
  bool all = true;
  const std::vector<int> exponents{-2, -1, 1, 2};
  json families = json::array();
  const auto run_family = [&](const char* name,
                              const std::vector<BlockSpec>& specs) {
    int checked = 0;
    json failures = json::array();
    for (std::size_t idx = 0; idx < specs.size(); ++idx) {
      for (int l = 0; l <= l_max; ++l) {
        for (int e : exponents) {
          ++checked;
          if (!block_membership(specs[idx], l, e).member) {
            all = false;
            failures.push_back(json{{"spec_index", idx},
                                    {"l", l},
                                    {"u_exponent", e}});
          }
        }
      }
    }
    families.push_back(json{
        {"family", name}, {"instances", checked}, {"failures", failures}});
  };

  std::vector<BlockSpec> r0;
  for (int alpha = -2; alpha <= 2; ++alpha) {
    for (int gamma = alpha; gamma <= alpha + 2; ++gamma) {
      for (int beta = gamma + 1; beta <= alpha + 4; ++beta) {
        r0.push_back(BlockR0{alpha, beta, gamma});
      }
    }
  }
  std::vector<BlockSpec> r1;
  std::vector<BlockR1> r1_raw;
  for (int r = 1; r <= 2; ++r) {
    for (int n = 0; n <= n_max; ++n) {
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= j; ++i) {
          r1.push_back(BlockR1{r, n, i, j});
          r1_raw.push_back(BlockR1{r, n, i, j});
        }
      }
    }
  }
  std::vector<BlockSpec> r2;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int m1 = 0; m1 <= n - k; ++m1) {
        for (int m2 = 0; m2 <= m1; ++m2) {
          r2.push_back(BlockR2{n, k, m1, m2});
        }
      }
    }
  }
  run_family("R0", r0);
  run_family("R1", r1);
  run_family("R2", r2);

  int cert_checked = 0;
  json cert_failures = json::array();
  for (const BlockR1& spec : r1_raw) {
    for (int l = 0; l <= l_max; ++l) {
      ++cert_checked;
      const ValuationCertificate cert = r1_valuation_certificate(spec, l);
      if (!(cert.per_term_nonnegative && cert.sum_matches_jet)) {
        all = false;
        cert_failures.push_back(json{{"r", spec.r},
                                     {"n", spec.n},
                                     {"i", spec.i},
                                     {"j", spec.j},
                                     {"l", l}});
      }
    }
  }

  json config{{"n_max", n_max}, {"l_max", l_max}};
  json results{{"families", families},
               {"valuation_certificates",
                json{{"instances", cert_checked}, {"failures", cert_failures}}}};
  return emit_report(g, "blocks verify", config, results, all);
}

int run_criterion_table(const GlobalOpts& g, int A_min, int A_max,
                        const std::string& format) {
  if (A_min < 4 || A_min % 2 != 0 || A_max % 2 != 0 || A_min > A_max) {
    throw std::invalid_argument("need even 4 <= --A-min <= --A-max");
  }
  struct Row {
    int A;
    MaxBound f;
    MaxBound gm;
  };
  std::vector<Row> rows;
  for (int A = A_min; A <= A_max; A += 2) {
    rows.push_back(Row{A, bound_max(BoundKind::kPlain, A, g.precision),
                       bound_max(BoundKind::kRefined, A, g.precision)});
  }
  if (format == "csv") {
    std::string text = "A,f_arg_r,f_max,g_arg_r,g_max\n";
    for (const Row& row : rows) {
      text += std::to_string(row.A) + "," + std::to_string(row.f.arg_r) + "," +
              fmt_double(row.f.value.approx()) + "," +
              std::to_string(row.gm.arg_r) + "," +
              fmt_double(row.gm.value.approx()) + "\n";
    }
    write_text(g, text);
    return 0;
  }
  json jrows = json::array();
  for (const Row& row : rows) {
    jrows.push_back(json{{"A", row.A},
                         {"f_arg_r", row.f.arg_r},
                         {"f_max", fmt_double(row.f.value.approx())},
                         {"g_arg_r", row.gm.arg_r},
                         {"g_max", fmt_double(row.gm.value.approx())}});
  }
  json config{{"A_min", A_min}, {"A_max", A_max}, {"format", format}};
  return emit_report(g, "criterion table", config, json{{"rows", jrows}},
                     true);
}

int run_criterion_check(const GlobalOpts& g) {
  const long prec = g.precision;
  bool all = true;
  json results = json::object();
  {
    const InequalityReport rep = inequality_suite(prec);
    json rows = json::array();
    for (const InequalityEntry& e : rep.entries) {
      rows.push_back(json{{"name", e.name}, {"pass", e.pass}});
    }
    results["inequalities"] = rows;
    all = all && rep.pass;
  }
  {
    const int a_refined = threshold_A(BoundKind::kRefined, prec);
    const int a_plain = threshold_A(BoundKind::kPlain, prec);
    const bool ok = a_refined == 10 && a_plain == 12;
    results["thresholds"] =
        json{{"refined", a_refined}, {"plain", a_plain}, {"pass", ok}};
    all = all && ok;
  }
  {
    // dropping the correction term reduces the refined rate formula to the
    // plain bound
    json rows = json::array();
    bool ok = true;
    const std::vector<std::pair<int, int>> pairs{{1, 4}, {2, 10}, {5, 38},
                                                 {7, 86}};
    for (const auto& [r, A] : pairs) {
      const Interval via_rates = dimension_bound(growth_rates(r, A, prec), false);
      const Interval direct = f_bound(r, A, prec);
      const bool agrees = intervals_intersect(via_rates, direct);
      ok = ok && agrees;
      rows.push_back(json{{"r", r}, {"A", A}, {"pass", agrees}});
    }
    results["delta_zero_reduction"] = rows;
    all = all && ok;
  }
  {
    std::mt19937_64 rng(g.seed);
    const BigRat tol = BigRat(1) / BigRat(qzeta::pow(BigInt(10), 20));
    json rows = json::array();
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
      const int A = 2 * (2 + static_cast<int>(rng() % 29));  // even, 4..60
      const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(A / 2));
      const Interval via_rates = dimension_bound(growth_rates(r, A, prec), true);
      const Interval direct = g_bound(r, A, prec);
      const BigRat m1 = (via_rates.inf_rat() + via_rates.sup_rat()) / 2;
      const BigRat m2 = (direct.inf_rat() + direct.sup_rat()) / 2;
      const bool agrees = intervals_intersect(via_rates, direct) &&
                          abs(m1 - m2) < tol * abs(m2);
      ok = ok && agrees;
      rows.push_back(json{{"r", r}, {"A", A}, {"pass", agrees}});
    }
    results["refined_matches_g"] = rows;
    all = all && ok;
  }
  {
    bool ok = true;
    Interval prev = bound_max(BoundKind::kRefined, 4, prec).value;
    for (int A = 6; A <= 200; A += 2) {
      Interval cur = bound_max(BoundKind::kRefined, A, prec).value;
      if (!strictly_less(prev, cur)) ok = false;
      prev = cur;
    }
    results["monotonic"] = json{{"A_min", 4}, {"A_max", 200}, {"pass", ok}};
    all = all && ok;
  }
  {
    const MaxBound mb = bound_max(BoundKind::kRefined, 1000000, prec);
    const Interval ratio =
        mb.value * Interval::from_rat(BigRat(1, 1000), prec);  // / sqrt(A)
    const Interval c = asymptotic_constant(prec);
    const double rel = std::abs(ratio.approx() - c.approx()) / c.approx();
    const bool ok = rel < 0.01;
    results["asymptotic"] = json{{"A", 1000000},
                                 {"scaled_max", fmt_double(ratio.approx())},
                                 {"limit_constant", fmt_double(c.approx())},
                                 {"relative_gap", fmt_double(rel)},
                                 {"pass", ok}};
    all = all && ok;
  }
  return emit_report(g, "criterion check", json::object(), results, all);
}

int run_asymptotics_sweep(const GlobalOpts& g, const std::string& quantity_name,
                          int A, int r, const std::string& q_text, int n_min,
                          int n_max, const std::string& format) {
  SlopeQuantity quantity;
  if (quantity_name == "series") {
    quantity = SlopeQuantity::kSeries;
  } else if (quantity_name == "lcm") {
    quantity = SlopeQuantity::kLcmGrowth;
  } else if (quantity_name == "coeff-max") {
    quantity = SlopeQuantity::kCoeffMax;
  } else {
    throw std::invalid_argument("unknown quantity: " + quantity_name);
  }
  if (n_min < 1 || n_min > n_max) {
    throw std::invalid_argument("need 1 <= --n-min <= --n-max");
  }
  const BigRat q = parse_rational(q_text);
  const FormParams p{A, r, 0};
  std::vector<int> n_values;
  for (int n = n_min; n <= n_max; ++n) n_values.push_back(n);
  const std::vector<SlopeRow> rows =
      slope_estimate(quantity, p, QPoint{q}, n_values, g.precision);
  const double target = slope_target(quantity, p, QPoint{q});

  if (format == "csv") {
    std::string text = "n,slope,target,relative_gap\n";
    for (const SlopeRow& row : rows) {
      text += std::to_string(row.n) + ",";
      if (row.defined) {
        const double gap =
            target == 0 ? 0 : (row.slope - target) / std::abs(target);
        text += fmt_double(row.slope) + "," + fmt_double(target) + "," +
                fmt_double(gap);
      } else {
        text += "," + fmt_double(target) + ",";
      }
      text += "\n";
    }
    write_text(g, text);
    return 0;
  }
  json jrows = json::array();
  for (const SlopeRow& row : rows) {
    json jrow{{"n", row.n}, {"defined", row.defined},
              {"target", fmt_double(target)}};
    if (row.defined) {
      jrow["slope"] = fmt_double(row.slope);
      jrow["relative_gap"] = fmt_double(
          target == 0 ? 0 : (row.slope - target) / std::abs(target));
    }
    jrows.push_back(jrow);
  }
  json config{{"quantity", quantity_name}, {"A", A},        {"r", r},
              {"q", q.get_str()},          {"n_min", n_min}, {"n_max", n_max},
              {"format", format}};
  return emit_report(g, "asymptotics sweep", config, json{{"rows", jrows}},
                     true);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    GlobalOpts g;
    g.precision = env_default_precision();
    int rc = 0;

    CLI::App app{"exact linear forms in q-zeta values: build, verify, bound"};
    app.require_subcommand(1);
    app.add_option("--precision", g.precision,
                   "working precision in bits (default: QZETA_PRECISION or 256)")
        ->check(CLI::Range(16L, 1048576L));
    app.add_option("--output", g.output,
                   "write the report to this file instead of stdout");
    app.add_option("--jobs", g.jobs, "max worker threads for parallel batches")
        ->check(CLI::Range(1, 256));
    app.add_option("--seed", g.seed, "seed for randomized instance generation");

    auto* zeta_cmd = app.add_subcommand("zeta", "q-zeta series evaluation");
    zeta_cmd->require_subcommand(1);
    auto* zeta_eval =
        zeta_cmd->add_subcommand("eval", "evaluate zeta_q(s) at rational q");
    zeta_eval->fallthrough();
    int ze_s = 1;
    std::string ze_q;
    zeta_eval->add_option("--s", ze_s, "series index, s >= 1")->required();
    zeta_eval->add_option("--q", ze_q, "rational point, |q| < 1, e.g. 1/2")
        ->required();
    zeta_eval->callback([&] { rc = run_zeta_eval(g, ze_s, ze_q); });

    auto* form_cmd =
        app.add_subcommand("form", "linear forms in q-zeta values");
    form_cmd->require_subcommand(1);
    auto* form_build = form_cmd->add_subcommand(
        "build", "exact coefficients of one linear form instance");
    form_build->fallthrough();
    int fb_A = 4, fb_r = 1, fb_n = 0;
    form_build->add_option("--A", fb_A, "pole order, even, >= 4")->required();
    form_build->add_option("--r", fb_r, "Pochhammer run parameter, >= 1")
        ->required();
    form_build->add_option("--n", fb_n, "instance index, >= 0")->required();
    form_build->callback([&] { rc = run_form_build(g, fb_A, fb_r, fb_n); });

    auto* form_verify = form_cmd->add_subcommand(
        "verify", "check the series value against the built form");
    form_verify->fallthrough();
    int fv_A = 4, fv_r = 1, fv_n = 0, fv_n_max = 0, fv_maxrad = 0;
    std::vector<std::string> fv_q;
    form_verify->add_option("--A", fv_A, "pole order, even, >= 4")->required();
    form_verify->add_option("--r", fv_r, "Pochhammer run parameter, >= 1")
        ->required();
    auto* fv_n_opt = form_verify->add_option("--n", fv_n, "single instance index");
    auto* fv_nmax_opt =
        form_verify->add_option("--n-max", fv_n_max, "check n = 0 .. n-max");
    fv_n_opt->excludes(fv_nmax_opt);
    form_verify->add_option("--q", fv_q, "rational point, repeatable")
        ->required();
    auto* fv_rad_opt = form_verify->add_option(
        "--max-radius-log2", fv_maxrad,
        "require the residual radius to stay below 2^this");
    form_verify->callback([&] {
      std::vector<int> ns;
      if (form_verify->count("--n") > 0) {
        ns.push_back(fv_n);
      } else if (form_verify->count("--n-max") > 0) {
        for (int n = 0; n <= fv_n_max; ++n) ns.push_back(n);
      } else {
        throw CLI::RequiredError("--n or --n-max");
      }
      std::optional<int> cap;
      if (fv_rad_opt->count() > 0) cap = fv_maxrad;
      rc = run_form_verify(g, fv_A, fv_r, ns, fv_q, cap);
    });

    auto* denom_cmd =
        app.add_subcommand("denom", "denominator scaling verification");
    denom_cmd->require_subcommand(1);
    auto* denom_verify = denom_cmd->add_subcommand(
        "verify", "check that scaled coefficients are Laurent in 1/q");
    denom_verify->fallthrough();
    int dv_A = 4, dv_r = 1, dv_n_min = 1, dv_n_max = 1, dv_d_power = 0;
    denom_verify->add_option("--A", dv_A, "pole order, even, >= 4")->required();
    denom_verify->add_option("--r", dv_r, "Pochhammer run parameter, >= 1")
        ->required();
    denom_verify->add_option("--n-min", dv_n_min, "first instance, >= 1");
    denom_verify->add_option("--n-max", dv_n_max, "last instance")->required();
    auto* dv_dp_opt = denom_verify->add_option(
        "--d-power", dv_d_power,
        "override the lcm power used for the constant coefficient");
    denom_verify->callback([&] {
      std::optional<int> dp;
      if (dv_dp_opt->count() > 0) dp = dv_d_power;
      rc = run_denom_verify(g, dv_A, dv_r, dv_n_min, dv_n_max, dp);
    });

    auto* identity_cmd = app.add_subcommand(
        "identity", "window-sum and transformation identities");
    identity_cmd->require_subcommand(1);
    auto* identity_verify = identity_cmd->add_subcommand(
        "verify", "closed-form window sums and hypergeometric instances");
    identity_verify->fallthrough();
    int iv_n_max = 6, iv_count = 50;
    identity_verify->add_option("--n-max", iv_n_max,
                                "largest window length (default 6)");
    identity_verify->add_option("--andrews-count", iv_count,
                                "number of seeded random instances (default 50)");
    identity_verify->callback(
        [&] { rc = run_identity_verify(g, iv_n_max, iv_count); });

    auto* blocks_cmd =
        app.add_subcommand("blocks", "building-block jet memberships");
    blocks_cmd->require_subcommand(1);
    auto* blocks_verify = blocks_cmd->add_subcommand(
        "verify", "scaled jet coefficients of the block families");
    blocks_verify->fallthrough();
    int bv_n_max = 4, bv_l_max = 3;
    blocks_verify->add_option("--n-max", bv_n_max, "largest index (default 4)");
    blocks_verify->add_option("--l-max", bv_l_max,
                              "largest jet order (default 3)");
    blocks_verify->callback(
        [&] { rc = run_blocks_verify(g, bv_n_max, bv_l_max); });

    auto* criterion_cmd = app.add_subcommand(
        "criterion", "irrationality dimension bounds");
    criterion_cmd->require_subcommand(1);
    auto* criterion_table = criterion_cmd->add_subcommand(
        "table", "maximized plain and refined bounds per even A");
    criterion_table->fallthrough();
    int ct_A_min = 4, ct_A_max = 4;
    std::string ct_format = "json";
    criterion_table->add_option("--A-min", ct_A_min, "first even A (default 4)");
    criterion_table->add_option("--A-max", ct_A_max, "last even A")->required();
    criterion_table->add_option("--format", ct_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    criterion_table->callback(
        [&] { rc = run_criterion_table(g, ct_A_min, ct_A_max, ct_format); });

    auto* criterion_check = criterion_cmd->add_subcommand(
        "check", "thresholds, reductions, monotonicity, asymptotics");
    criterion_check->fallthrough();
    criterion_check->callback([&] { rc = run_criterion_check(g); });

    auto* asym_cmd =
        app.add_subcommand("asymptotics", "growth-rate estimates");
    asym_cmd->require_subcommand(1);
    auto* asym_sweep = asym_cmd->add_subcommand(
        "sweep", "per-n slope of a growth quantity against its limit");
    asym_sweep->fallthrough();
    std::string as_quantity, as_q, as_format = "json";
    int as_A = 4, as_r = 1, as_n_min = 1, as_n_max = 1;
    asym_sweep->add_option("--quantity", as_quantity,
                           "series, lcm, or coeff-max")
        ->required()
        ->check(CLI::IsMember({"series", "lcm", "coeff-max"}));
    asym_sweep->add_option("--A", as_A, "pole order (default 4)");
    asym_sweep->add_option("--r", as_r, "run parameter (default 1)");
    asym_sweep->add_option("--q", as_q, "rational point")->required();
    asym_sweep->add_option("--n-min", as_n_min, "first instance, >= 1");
    asym_sweep->add_option("--n-max", as_n_max, "last instance")->required();
    asym_sweep->add_option("--format", as_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    asym_sweep->callback([&] {
      rc = run_asymptotics_sweep(g, as_quantity, as_A, as_r, as_q, as_n_min,
                                 as_n_max, as_format);
    });

    try {
      app.parse(argc, argv);
    } catch (const CLI::Success& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
