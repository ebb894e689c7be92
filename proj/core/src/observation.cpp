#include "cayley/observation.hpp"

#include <sstream>

namespace cayley {

std::string Observation::describe() const {
  std::ostringstream out;
  out << value << " trace=[";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out << ',';
    out << '"' << trace[i] << '"';
  }
  out << ']';
  return out.str();
}

Observation observe(const Value& v) { return Observation{v.encode(), {}}; }

Observation observe(const Value& v, Trace trace) { return Observation{v.encode(), std::move(trace)}; }

Observation observe(const Fn& f, std::span<const Value> probes) {
  std::vector<Value> outputs;
  outputs.reserve(probes.size());
  for (const Value& p : probes) outputs.push_back(f(p));
  return observe(Value::list(std::move(outputs)));
}

Observation tabulate(std::span<const Observation> points) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ',';
    out << points[i].describe();
  }
  out << ']';
  return Observation{out.str(), {}};
}

}  // namespace cayley
