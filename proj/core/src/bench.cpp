#include "cayley/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "cayley/applicative_cayley.hpp"
#include "cayley/free_applicative.hpp"
#include "cayley/free_monad.hpp"
#include "cayley/free_prearrow.hpp"
#include "cayley/gen.hpp"
#include "cayley/instrument.hpp"
#include "cayley/prearrow_cayley.hpp"
#include "cayley/set_monoid.hpp"
#include "json.hpp"

namespace cayley::bench {

namespace {

constexpr std::array<Suite, 4> kSuites = {Suite::dlist, Suite::codensity, Suite::freeap, Suite::prearrow};

using Clock = std::chrono::steady_clock;

std::string label(std::size_t i) { return "e" + std::to_string(i); }

Value::Int element(std::uint64_t seed, std::size_t i) {
  return static_cast<Value::Int>(mix_seed(seed, i) % 1000);
}

// dlist ----------------------------------------------------------------------

List<Value> dlist_naive(std::size_t n, std::uint64_t seed) {
  List<Value> acc;
  for (std::size_t i = 1; i <= n; ++i) acc = append(acc, list_ins(Value(element(seed, i))));
  return acc;
}

List<Value> dlist_cayley(std::size_t n, std::uint64_t seed) {
  DList<Value> acc;
  for (std::size_t i = 1; i <= n; ++i) acc = acc.append(DList<Value>::singleton(Value(element(seed, i))));
  return acc.to_list();
}

// codensity ------------------------------------------------------------------

using Program = FreeMonad<ConsoleF, Value>;
using ProgramF = FreeMonadF<ConsoleF>;

/// step_i x = Output label_i (Ret (x + c_i))
Program step(std::size_t i, std::uint64_t seed, const Value& x) {
  return fm_ins<ConsoleF, Value>(Console<Value>{label(i), Value(x.as_int() + element(seed, i))});
}

Program codensity_naive(std::size_t n, std::uint64_t seed) {
  Program m = Program::ret(Value(0));
  for (std::size_t i = 1; i <= n; ++i)
    m = bind(m, [i, seed](const Value& x) { return step(i, seed, x); });
  return m;
}

Program codensity_cayley(std::size_t n, std::uint64_t seed) {
  Codensity<ProgramF> c = cod_ret<ProgramF>(Value(0));
  for (std::size_t i = 1; i <= n; ++i)
    c = cod_bind(c, [i, seed](const Value& x) { return cod_rep<ProgramF>(step(i, seed, x)); });
  return cod_abs(c);
}

// freeap ---------------------------------------------------------------------

using Ap = FreeAp<ConsoleF>;
using ApF = FreeApF<ConsoleF>;

Fn add_curried() {
  return curry([](const Value& acc, const Value& c) { return Value(acc.as_int() + c.as_int()); });
}

Ap effect(std::size_t i, std::uint64_t seed) {
  return fa_ins<ConsoleF>(Console<Value>{label(i), Value(element(seed, i))});
}

Ap freeap_naive(std::size_t n, std::uint64_t seed) {
  const Fn add = add_curried();
  Ap p = ApF::pure(Value(0));
  for (std::size_t i = 1; i <= n; ++i) p = ApF::ap(ApF::map(add, p), effect(i, seed));
  return p;
}

Ap freeap_cayley(std::size_t n, std::uint64_t seed) {
  using R = RepApF<ApF>;
  const Fn add = add_curried();
  RepAp<ApF> r = R::pure(Value(0));
  for (std::size_t i = 1; i <= n; ++i) r = R::ap(R::map(add, r), ap_rep<ApF>(effect(i, seed)));
  return ap_abs<ApF>(r);
}

// prearrow -------------------------------------------------------------------

using Atom = KleisliP<WriterF>;
using Chain = FreePreArrowP<Atom>;

Chain::type atom(std::size_t i, std::uint64_t seed) {
  const Value::Int c = element(seed, i);
  return fp_ins<Atom>(logging(label(i), Fn([c](const Value& x) { return Value(x.as_int() + c); })));
}

Chain::type prearrow_naive(std::size_t n, std::uint64_t seed) {
  Chain::type p = atom(1, seed);
  for (std::size_t i = 2; i <= n; ++i) p = Chain::compose(p, atom(i, seed));
  return p;
}

Chain::type prearrow_cayley(std::size_t n, std::uint64_t seed) {
  using R = ProRepP<Chain>;
  R::type e = pre_rep<Chain>(atom(1, seed));
  for (std::size_t i = 2; i <= n; ++i) e = R::compose(e, pre_rep<Chain>(atom(i, seed)));
  return pre_abs(e);
}

Observation observe_chain(const Chain::type& p, std::uint64_t seed) {
  const std::array<Value, 1> input = {Value(element(seed, 0))};
  return Chain::observe(p, input);
}

/// Times `build`, then observes its result outside the timed region.
template <class Build, class Look>
Outcome measure(Build&& build, Look&& look) {
  instrument::Scope scope;
  const auto start = Clock::now();
  auto result = build();
  const auto stop = Clock::now();
  Outcome out;
  out.ops = scope.elapsed();
  out.ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  out.observation = look(result);
  return out;
}

std::uint64_t median(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[m];
  return (xs[m - 1] + xs[m]) / 2;
}

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

/// Largest n with 2n also present, else the last two sizes.
std::pair<std::size_t, std::size_t> doubling(const std::vector<std::size_t>& sizes) {
  for (std::size_t i = sizes.size(); i-- > 0;)
    if (std::find(sizes.begin(), sizes.end(), sizes[i] * 2) != sizes.end()) return {sizes[i], sizes[i] * 2};
  return {sizes[sizes.size() - 2], sizes.back()};
}

template <class E>
E lookup(std::string_view id, std::span<const E> options, const char* what) {
  for (E e : options)
    if (name(e) == id) return e;
  throw UsageError("unknown " + std::string(what) + " '" + std::string(id) + "'");
}

}  // namespace

std::string_view name(Suite s) noexcept {
  switch (s) {
    case Suite::dlist: return "dlist";
    case Suite::codensity: return "codensity";
    case Suite::freeap: return "freeap";
    case Suite::prearrow: return "prearrow";
  }
  return "?";
}

std::string_view name(Variant v) noexcept { return v == Variant::naive ? "naive" : "cayley"; }

std::string_view name(Format f) noexcept {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::table: return "table";
  }
  return "?";
}

std::span<const Suite> all_suites() noexcept { return kSuites; }

std::vector<Suite> parse_suites(std::string_view id) {
  if (id == "all") return {kSuites.begin(), kSuites.end()};
  return {lookup<Suite>(id, kSuites, "suite")};
}

Format parse_format(std::string_view id) {
  static constexpr std::array<Format, 3> formats = {Format::json, Format::csv, Format::table};
  return lookup<Format>(id, formats, "output format");
}

std::vector<std::size_t> default_sizes(Suite s) {
  if (s == Suite::dlist) return {1024, 2048, 4096, 8192};
  return {128, 256, 512};
}

std::uint64_t node_estimate(Suite s, std::size_t n) noexcept {
  const auto m = static_cast<std::uint64_t>(n);
  if (s == Suite::dlist) return 2 * m;
  return m * (m + 1) / 2;
}

void validate(const BenchConfig& config) {
  if (config.suites.empty()) throw UsageError("no suite selected");
  if (config.repeats < 1) throw UsageError("repeats must be at least 1");
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    if (config.sizes[i] == 0) throw UsageError("sizes must be positive");
    if (i > 0 && config.sizes[i] <= config.sizes[i - 1]) throw UsageError("sizes must be strictly increasing");
  }
  for (Suite s : config.suites) {
    const auto sizes = config.sizes.empty() ? default_sizes(s) : config.sizes;
    for (std::size_t n : sizes)
      if (node_estimate(s, n) > kMaxNodes)
        throw UsageError("size " + std::to_string(n) + " for suite " + std::string(name(s)) + " exceeds the " +
                         std::to_string(kMaxNodes) + "-node limit");
  }
}

Outcome run_once(Suite s, Variant v, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw UsageError("size must be positive");
  if (node_estimate(s, n) > kMaxNodes) throw UsageError("size " + std::to_string(n) + " exceeds the node limit");
  const bool naive = v == Variant::naive;
  switch (s) {
    case Suite::dlist:
      return measure([&] { return naive ? dlist_naive(n, seed) : dlist_cayley(n, seed); },
                     [](const List<Value>& xs) { return observe(xs); });
    case Suite::codensity:
      return measure([&] { return naive ? codensity_naive(n, seed) : codensity_cayley(n, seed); },
                     [](const Program& m) { return observe(m); });
    case Suite::freeap:
      return measure([&] { return naive ? freeap_naive(n, seed) : freeap_cayley(n, seed); },
                     [](const Ap& p) { return observe(p); });
    case Suite::prearrow:
      return measure([&] { return naive ? prearrow_naive(n, seed) : prearrow_cayley(n, seed); },
                     [seed](const Chain::type& p) { return observe_chain(p, seed); });
  }
  throw UsageError("unknown suite");
}

std::optional<std::string> check_agreement(Suite s, std::size_t max_n, std::uint64_t seed) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Observation a = run_once(s, Variant::naive, n, seed).observation;
    const Observation b = run_once(s, Variant::cayley, n, seed).observation;
    if (!(a == b))
      return std::string(name(s)) + " n=" + std::to_string(n) + ": " + a.describe() + " /= " + b.describe();
  }
  return std::nullopt;
}

BenchReport run(const BenchConfig& config) {
  validate(config);
  BenchReport report;
  for (Suite s : config.suites) {
    const auto sizes = config.sizes.empty() ? default_sizes(s) : config.sizes;
    for (Variant v : {Variant::naive, Variant::cayley}) {
      for (std::size_t n : sizes) {
        for (std::size_t w = 0; w < config.warmup; ++w) run_once(s, v, n, config.seed);
        std::vector<std::uint64_t> times;
        std::uint64_t ops = 0;
        for (std::size_t r = 0; r < config.repeats; ++r) {
          const Outcome o = run_once(s, v, n, config.seed);
          times.push_back(o.ns);
          ops = o.ops;
        }
        report.cells.push_back({s, v, n, median(std::move(times)), ops});
      }
      if (sizes.size() >= 2) {
        const auto [from, to] = doubling(sizes);
        const Cell* a = report.find(s, v, from);
        const Cell* b = report.find(s, v, to);
        report.growth.push_back({s, v, from, to, ratio(b->median_ns, a->median_ns), ratio(b->op_count, a->op_count)});
      }
    }
  }
  return report;
}

const Cell* BenchReport::find(Suite s, Variant v, std::size_t n) const {
  for (const Cell& c : cells)
    if (c.suite == s && c.variant == v && c.size == n) return &c;
  return nullptr;
}

const Growth* BenchReport::growth_of(Suite s, Variant v) const {
  for (const Growth& g : growth)
    if (g.suite == s && g.variant == v) return &g;
  return nullptr;
}

std::string emit(const BenchReport& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      nlohmann::json cells = nlohmann::json::array();
      for (const Cell& c : report.cells)
        cells.push_back({{"suite", name(c.suite)},
                         {"variant", name(c.variant)},
                         {"size", c.size},
                         {"median_ns", c.median_ns},
                         {"op_count", c.op_count}});
      nlohmann::json growth = nlohmann::json::array();
      for (const Growth& g : report.growth)
        growth.push_back({{"suite", name(g.suite)},
                          {"variant", name(g.variant)},
                          {"from", g.from},
                          {"to", g.to},
                          {"time_ratio", g.time_ratio},
                          {"op_ratio", g.op_ratio}});
      out << nlohmann::json{{"cells", cells}, {"growth", growth}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "suite,variant,size,median_ns,op_count\n";
      for (const Cell& c : report.cells)
        out << name(c.suite) << ',' << name(c.variant) << ',' << c.size << ',' << c.median_ns << ',' << c.op_count
            << '\n';
      break;
    case Format::table:
      out << std::left << std::setw(10) << "suite" << std::setw(8) << "variant" << std::right << std::setw(8)
          << "size" << std::setw(14) << "median_ns" << std::setw(12) << "op_count" << '\n';
      for (const Cell& c : report.cells)
        out << std::left << std::setw(10) << name(c.suite) << std::setw(8) << name(c.variant) << std::right
            << std::setw(8) << c.size << std::setw(14) << c.median_ns << std::setw(12) << c.op_count << '\n';
      if (!report.growth.empty()) {
        out << '\n' << std::left << std::setw(10) << "suite" << std::setw(8) << "variant" << std::right
            << std::setw(14) << "doubling" << std::setw(12) << "time x" << std::setw(10) << "ops x" << '\n';
        for (const Growth& g : report.growth) {
          const std::string span = std::to_string(g.from) + "->" + std::to_string(g.to);
          out << std::left << std::setw(10) << name(g.suite) << std::setw(8) << name(g.variant) << std::right
              << std::setw(14) << span << std::setw(12) << std::fixed << std::setprecision(2) << g.time_ratio
              << std::setw(10) << g.op_ratio << '\n';
        }
      }
      break;
  }
  return out.str();
}

BenchReport report_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  static constexpr std::array<Variant, 2> variants = {Variant::naive, Variant::cayley};
  BenchReport report;
  for (const auto& c : j.at("cells"))
    report.cells.push_back({lookup<Suite>(c.at("suite").get<std::string>(), kSuites, "suite"),
                            lookup<Variant>(c.at("variant").get<std::string>(), variants, "variant"),
                            c.at("size").get<std::size_t>(), c.at("median_ns").get<std::uint64_t>(),
                            c.at("op_count").get<std::uint64_t>()});
  for (const auto& g : j.at("growth"))
    report.growth.push_back({lookup<Suite>(g.at("suite").get<std::string>(), kSuites, "suite"),
                             lookup<Variant>(g.at("variant").get<std::string>(), variants, "variant"),
                             g.at("from").get<std::size_t>(), g.at("to").get<std::size_t>(),
                             g.at("time_ratio").get<double>(), g.at("op_ratio").get<double>()});
  return report;
}

}  // namespace cayley::bench
