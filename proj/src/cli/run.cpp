#include "hocd/cli.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <numeric>
#include <ostream>
#include <random>
#include <variant>

#include "hocd/report.hpp"

namespace hocd::cli {

namespace {

using report::Json;

struct Triple {
  std::uint32_t classical, generic, zero;
};

// Reference rows of the inverse-map second-order table.
const std::map<std::uint32_t, Triple> kInverseTable{
    {4, {4, 5, 1}}, {5, {4, 4, 1}}, {6, {8, 5, 1}}, {7, {8, 5, 1}}, {8, {8, 6, 1}}, {9, {8, 6, 1}},
};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

struct Outcome {
  Json result;
  std::optional<std::string> csv;
  Json timing = Json::object();
  std::vector<std::string> failures;
};

struct Context {
  const RunConfig& config;
  FieldPtr field;
  FieldFunction f;
  SearchOptions options;
  std::ostream& out;
};

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

Element parse_element(const Field& field, std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    invalid("'" + std::string(text) + "' is not an element index");
  if (v >= field.order()) throw Error(ErrorKind::InvalidElement, std::to_string(v) + " is outside the field");
  return static_cast<Element>(v);
}

std::vector<Element> select_c(const Context& ctx) {
  const Field& k = *ctx.field;
  const std::string& sel = ctx.config.c;
  std::vector<Element> out;
  if (sel == "all") {
    out.assign(k.elements().begin(), k.elements().end());
  } else if (sel == "nonone") {
    for (Element c : k.elements())
      if (c != 1) out.push_back(c);
  } else if (sel == "subfield") {
    const std::uint32_t d = ctx.config.h.value_or(ctx.config.k.value_or(1));
    out = k.subfield(d);
    std::erase(out, Element{1});
  } else {
    out.push_back(parse_element(k, sel));
  }
  return out;
}

std::size_t require_t(const RunConfig& config) {
  if (!config.t) invalid("--op " + config.op + " needs --t");
  return *config.t;
}

void print_histogram(std::ostream& out, const SpectrumReport& r) {
  out << "c=" << r.c << "  t=" << r.t << "  max=" << r.max_count << "  histogram=" << report::histogram_cell(r.histogram);
  if (!r.witnesses.empty()) out << "  witness=" << report::witness_cell(r.witnesses);
  out << '\n';
}

Outcome op_derive(Context& ctx) {
  const Field& k = *ctx.field;
  std::vector<Element> shifts;
  if (ctx.config.shifts)
    for (std::uint32_t a : parse_coefficients(*ctx.config.shifts)) shifts.push_back(parse_element(k, std::to_string(a)));
  const std::size_t t = ctx.config.t.value_or(shifts.size());
  if (t != shifts.size()) invalid("--t " + std::to_string(t) + " does not match " + std::to_string(shifts.size()) + " shifts");
  Element c = 1;
  if (t > 0) {
    if (ctx.config.c == "all" || ctx.config.c == "nonone" || ctx.config.c == "subfield")
      invalid("--op derive needs a single --c index");
    c = parse_element(k, ctx.config.c);
  }
  const DerivativeSpec spec{c, shifts};
  const auto d = t <= kMaxClosedFormOrder ? higher_c_derivative_closed(ctx.f, spec) : higher_c_derivative_recursive(ctx.f, spec);
  for (Element v : d.table()) ctx.out << v << '\n';

  Outcome o;
  o.result["c"] = c;
  o.result["shifts"] = shifts;
  o.result["table"] = std::vector<Element>(d.table().begin(), d.table().end());
  return o;
}

Outcome op_spectrum(Context& ctx) {
  const std::size_t t = require_t(ctx.config);
  const auto cs = select_c(ctx);
  const auto reports = uniformity_sweep(ctx.f, t, cs, ctx.options);
  Outcome o;
  o.result["reports"] = Json::array();
  Json per_c = Json::array();
  for (const auto& [c, r] : reports) {
    print_histogram(ctx.out, r);
    o.result["reports"].push_back(report::to_json(r));
    per_c.push_back(Json::array({c, r.elapsed_seconds}));
  }
  o.timing["per_c"] = std::move(per_c);
  if (ctx.config.csv) o.csv = report::spectrum_csv(*ctx.field, ctx.config.function, reports);
  return o;
}

Outcome op_table1(Context& ctx) {
  const std::uint32_t n = ctx.field->degree();
  const auto* mono = std::get_if<Monomial>(&ctx.f.origin());
  if (ctx.field->characteristic() != 2 || !mono || mono->exponent != ctx.field->order() - 2)
    invalid("--op table1 needs --p 2 and --fn monomial:" + std::to_string((std::uint64_t{1} << n) - 2));
  if (ctx.config.t && *ctx.config.t != 2) invalid("--op table1 is second order; drop --t or pass --t 2");

  InverseTableOptions opts;
  opts.search = ctx.options;
  const auto row = inverse_second_order_case(n, opts);
  ctx.out << "n  c=1  c!=0,1  c=0  bound<=6  quartic\n";
  ctx.out << n << "  " << row.classical_max() << "  " << row.generic_max() << "  " << row.zero_max() << "  "
          << (row.bound_satisfied ? "yes" : "NO") << "  "
          << (row.quartic_cross_check ? (*row.quartic_cross_check ? "agrees" : "DISAGREES") : "skipped") << '\n';

  Outcome o;
  o.result = report::to_json(row);
  if (const auto it = kInverseTable.find(n); it != kInverseTable.end()) {
    const Triple& ref = it->second;
    o.result["reference"] = {ref.classical, ref.generic, ref.zero};
    if (row.classical_max() != ref.classical || row.generic_max() != ref.generic || row.zero_max() != ref.zero)
      o.failures.push_back("table row for n=" + std::to_string(n) + " differs from the reference (" +
                           std::to_string(ref.classical) + "," + std::to_string(ref.generic) + "," +
                           std::to_string(ref.zero) + ")");
  }
  if (n >= 4 && !row.bound_satisfied) o.failures.push_back("second-order uniformity exceeds 6 for some c outside {0,1}");
  if (row.quartic_cross_check && !*row.quartic_cross_check)
    o.failures.push_back("quartic root count disagrees with the table count");
  if (row.zero_max() != 1) o.failures.push_back("c = 0 column is not 1");
  for (auto [cnt, mult] : row.classical.histogram)
    if (cnt != 0 && cnt != 4 && cnt != 8)
      o.failures.push_back("classical solution count " + std::to_string(cnt) + " outside {0,4,8}");
  return o;
}

std::uint32_t gold_k(const Context& ctx) {
  const auto* mono = std::get_if<Monomial>(&ctx.f.origin());
  if (!mono) invalid("--op gold needs --fn monomial:d with d = p^k + 1");
  const std::uint32_t p = ctx.field->characteristic();
  for (std::uint32_t k = 1; k < ctx.field->degree(); ++k)
    if (ipow(p, k) + 1 == mono->exponent) {
      if (ctx.config.k && *ctx.config.k != k) invalid("--k does not match the exponent p^k + 1");
      return k;
    }
  invalid("exponent " + std::to_string(mono->exponent) + " is not p^k + 1 with 1 <= k < n");
}

Outcome op_gold(Context& ctx) {
  const std::uint32_t k = gold_k(ctx);
  const std::size_t t = ctx.config.t.value_or(2);
  Outcome o;
  o.result["k"] = k;
  if (t == 2) {
    const auto r = gold_second_order_max(ctx.field, k, ctx.options);
    ctx.out << "second order over c != 1: max=" << r.max_count << " bound=" << r.bound
            << (r.attained ? " attained" : " not attained") << " (c=" << r.argmax_c << ")\n";
    o.result["second_order"] = report::to_json(r);
    if (r.max_count > r.bound) o.failures.push_back("second-order maximum exceeds p^gcd(k,n) + 1");
    if (!r.attained) o.failures.push_back("bound p^gcd(k,n) + 1 is not attained");
  }
  if (t >= 1) {
    const auto s = gold_subfield_uniformity(ctx.field, k, t, ctx.options);
    ctx.out << "subfield c, order " << t << ": expected " << s.expected << (s.holds ? ", holds" : ", FAILS") << '\n';
    o.result["subfield"] = report::to_json(s);
    if (!s.holds) o.failures.push_back("subfield uniformity differs from gcd(p^k+1, p^n-1)");
  }
  return o;
}

Outcome op_quadratic(Context& ctx) {
  if (!ctx.config.h) invalid("--op quadratic needs --h");
  const std::size_t t_max = ctx.config.t.value_or(2);
  const auto r = quadratic_subfield_uniformity(ctx.f, *ctx.config.h, t_max, ctx.options);
  ctx.out << "delta=" << r.delta << '\n';
  for (const auto& s : r.by_order)
    for (auto [c, v] : s.by_c) ctx.out << "t=" << s.t << " c=" << c << " uniformity=" << v << '\n';
  Outcome o;
  o.result = report::to_json(r);
  if (!r.holds) o.failures.push_back("subfield uniformity differs from delta");
  return o;
}

Outcome op_verify(Context& ctx) {
  const Field& k = *ctx.field;
  const std::size_t t_mono = ctx.config.t.value_or(2);
  std::mt19937_64 rng(ctx.config.seed);
  std::uniform_int_distribution<Element> pick(0, k.order() - 1);
  std::uniform_int_distribution<std::size_t> order(1, 3);
  auto random_table = [&] {
    std::vector<Element> t(k.order());
    for (auto& v : t) v = pick(rng);
    return FieldFunction(ctx.field, std::move(t));
  };
  const bool fixed = !ctx.config.function.empty();

  std::map<std::string, std::size_t> failures{{"closed_vs_recursive", 0}, {"reconstruction", 0},
                                              {"sum_rule", 0}, {"product_rule", 0},
                                              {"shift_permutation", 0}, {"c0_bijectivity", 0},
                                              {"monotonicity", 0}};
  for (std::size_t i = 0; i < ctx.config.samples; ++i) {
    const FieldFunction f = fixed ? ctx.f : random_table();
    const FieldFunction g = random_table();
    DerivativeSpec spec{pick(rng), {}};
    spec.shifts.resize(order(rng));
    for (auto& a : spec.shifts) a = pick(rng);

    const auto closed = higher_c_derivative_closed(f, spec);
    if (!(closed == higher_c_derivative_recursive(f, spec))) ++failures["closed_vs_recursive"];
    if (!verify_reconstruction(f, spec)) ++failures["reconstruction"];
    if (!verify_sum_rule(f, g, spec.shifts[0], spec.c)) ++failures["sum_rule"];
    if (!verify_product_rule(f, g, spec.shifts[0], spec.c)) ++failures["product_rule"];

    DerivativeSpec shuffled = spec;
    std::shuffle(shuffled.shifts.begin(), shuffled.shifts.end(), rng);
    if (!(higher_c_derivative_closed(f, shuffled) == closed)) ++failures["shift_permutation"];

    std::vector<Element> perm(k.order());
    std::iota(perm.begin(), perm.end(), Element{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const FieldFunction pf(ctx.field, std::move(perm));
    if (!is_permutation(higher_c_derivative_closed(pf, {0, spec.shifts}))) ++failures["c0_bijectivity"];

    const Element c = spec.c == 1 ? 0 : spec.c;
    if (!verify_monotonicity(f, t_mono, c, ctx.options).holds) ++failures["monotonicity"];
  }

  Outcome o;
  o.result["samples"] = ctx.config.samples;
  o.result["seed"] = ctx.config.seed;
  Json props = Json::object();
  for (const auto& [name, count] : failures) {
    props[name] = {{"instances", ctx.config.samples}, {"failures", count}};
    ctx.out << name << ": " << ctx.config.samples - count << "/" << ctx.config.samples << " passed\n";
    if (count) o.failures.push_back(name + " failed on " + std::to_string(count) + " instances");
  }
  o.result["properties"] = std::move(props);
  return o;
}

ClassicalExclusion parse_exclusion(const std::string& text) {
  if (text == "vanishing") return ClassicalExclusion::Vanishing;
  if (text == "all-zero") return ClassicalExclusion::AllZero;
  invalid("--c1-exclusion must be 'vanishing' or 'all-zero'");
}

int execute(const RunConfig& config, std::ostream& out) {
  static const std::vector<std::string> ops{"derive", "spectrum", "table1", "gold", "quadratic", "verify"};
  if (std::ranges::find(ops, config.op) == ops.end()) invalid("unknown operation '" + config.op + "'");
  if (config.n == 0) invalid("--n must be positive");
  if (config.csv && config.op != "spectrum") invalid("--csv is only produced by --op spectrum");
  if (config.function.empty() && config.op != "verify") invalid("--fn is required");
  if (config.json && config.csv && *config.json == *config.csv) invalid("--json and --csv name the same file");

  std::optional<std::vector<std::uint32_t>> modulus;
  if (config.modulus) modulus = parse_coefficients(*config.modulus);
  auto field = Field::build(config.p, config.n, modulus);
  FieldFunction f = config.function.empty() ? FieldFunction::identity(field) : load_function(field, config.function);

  SearchOptions options;
  options.threads = config.threads;
  options.reduce_power = config.reduce;
  options.witness_cap = config.witness_cap;
  options.classical_exclusion = parse_exclusion(config.c1_exclusion);

  Context ctx{config, field, std::move(f), options, out};
  out << "GF(" << config.p << "^" << config.n << "), modulus";
  for (auto m : field->modulus()) out << ' ' << m;
  out << "; " << report::encoding_note(*field) << '\n';

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  if (config.op == "derive") o = op_derive(ctx);
  else if (config.op == "spectrum") o = op_spectrum(ctx);
  else if (config.op == "table1") o = op_table1(ctx);
  else if (config.op == "gold") o = op_gold(ctx);
  else if (config.op == "quadratic") o = op_quadratic(ctx);
  else o = op_verify(ctx);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json doc;
  doc["schema"] = report::kSchemaVersion;
  doc["operation"] = config.op;
  doc["field"] = report::field_header(*field);
  doc["function"] = config.function;
  doc["key"] = {{"p", config.p},
                {"n", config.n},
                {"k", o.result.contains("k") ? o.result["k"] : (config.k ? Json(*config.k) : Json())},
                {"t", config.op == "table1" ? Json(2) : (config.t ? Json(*config.t) : Json())}};
  doc["options"] = {{"c", config.c},
                    {"reduce", config.reduce},
                    {"witness_cap", config.witness_cap},
                    {"c1_exclusion", config.c1_exclusion}};
  doc["result"] = std::move(o.result);
  doc["verified"] = o.failures.empty();
  doc["failures"] = o.failures;

  std::vector<std::pair<std::filesystem::path, std::string>> files;
  if (config.json) {
    files.emplace_back(*config.json, doc.dump(2) + "\n");
    Json meta;
    meta["schema"] = report::kSchemaVersion;
    meta["elapsed_seconds"] = elapsed;
    meta["threads"] = config.threads ? config.threads : default_thread_count();
    for (auto& [key, value] : o.timing.items()) meta[key] = value;
    files.emplace_back(report::meta_path(*config.json), meta.dump(2) + "\n");
  }
  if (config.csv && o.csv) files.emplace_back(*config.csv, *o.csv);
  report::write_files_atomically(files);

  for (const auto& msg : o.failures) out << "FAILED: " << msg << '\n';
  return o.failures.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const int code = execute(config, out);
    if (code == kVerificationFailed) err << "verification failed\n";
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace hocd::cli
