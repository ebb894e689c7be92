// Naive vs Cayley benchmark driver.
//
//   bench --suite <dlist|codensity|freeap|prearrow|all> --sizes a,b,c
//         --repeats k --warmup w --output json|csv|table --seed n
//
// Exit status: 0 on success, 2 on a usage error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayley/bench.hpp"

namespace {

constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare naive and Cayley-represented constructions"};
  std::string suite = "all";
  std::vector<std::size_t> sizes;
  std::size_t repeats = 5;
  std::size_t warmup = 1;
  std::string output = "table";
  std::uint64_t seed = 0;

  app.add_option("--suite", suite, "dlist, codensity, freeap, prearrow or all");
  app.add_option("--sizes", sizes, "Comma-separated sizes; defaults per suite")->delimiter(',');
  app.add_option("--repeats", repeats, "Timed runs per cell");
  app.add_option("--warmup", warmup, "Untimed runs per cell");
  app.add_option("--output", output, "json, csv or table");
  app.add_option("--seed", seed, "Seed for labels and payloads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cayley::bench::BenchConfig config;
    config.suites = cayley::bench::parse_suites(suite);
    config.sizes = sizes;
    config.repeats = repeats;
    config.warmup = warmup;
    config.output = cayley::bench::parse_format(output);
    config.seed = seed;
    cayley::bench::validate(config);
    std::cout << cayley::bench::emit(cayley::bench::run(config), config.output);
  } catch (const cayley::bench::UsageError& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
