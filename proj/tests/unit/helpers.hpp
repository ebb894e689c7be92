#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "instances.hpp"
#include "properties.hpp"

namespace cayley::testing {

inline List<Value> ints(std::initializer_list<Value::Int> xs) {
  std::vector<Value> out;
  for (Value::Int x : xs) out.push_back(Value(x));
  return List<Value>::of(std::span<const Value>(out));
}

inline Fn plus(Value::Int c) {
  return Fn([c](const Value& x) { return Value(x.as_int() + c); });
}

inline Fn times(Value::Int c) {
  return Fn([c](const Value& x) { return Value(x.as_int() * c); });
}

inline Writer<Value> logged(std::initializer_list<std::string> labels, Value v) {
  return Writer<Value>{Trace(labels), std::move(v)};
}

}  // namespace cayley::testing
