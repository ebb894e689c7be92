#include "cayley/laws.hpp"

#include <array>
#include <exception>

#include "json.hpp"

namespace cayley {

std::string to_json(const LawReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : report.failures) failures.push_back({{"seed", f.seed}, {"message", f.message}});
  nlohmann::json j = {{"law_name", report.law_name}, {"trials", report.trials}, {"failures", failures}};
  return j.dump();
}

LawReport law_report_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  LawReport report;
  report.law_name = j.at("law_name").get<std::string>();
  report.trials = j.at("trials").get<std::size_t>();
  for (const auto& f : j.at("failures"))
    report.failures.push_back({f.at("seed").get<std::uint64_t>(), f.at("message").get<std::string>()});
  return report;
}

std::optional<std::string> differ(const Observation& lhs, const Observation& rhs) {
  if (lhs == rhs) return std::nullopt;
  return lhs.describe() + " /= " + rhs.describe();
}

LawReport run_laws(std::string name, std::span<const Law> laws, const Gen& gen, std::size_t trials) {
  LawReport report{std::move(name), trials, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = mix_seed(gen.seed(), t);
    for (const Law& law : laws) {
      Gen g(seed, gen.size());
      std::optional<std::string> counterexample;
      try {
        counterexample = law.check(g);
      } catch (const std::exception& e) {
        counterexample = std::string("threw: ") + e.what();
      }
      if (counterexample) report.failures.push_back({seed, law.name + ": " + *counterexample});
    }
  }
  return report;
}

std::span<const std::string_view> suite_ids() {
  static constexpr std::array<std::string_view, 9> ids = {
      "monoid", "functor", "monad", "applicative", "monoidal", "profunctor", "prearrow", "strength", "arrow"};
  return ids;
}

}  // namespace cayley
