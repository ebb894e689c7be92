#pragma once

// The closed universe of test values.
//
// Quantified carriers (ends, coends, exponentials) are instantiated at this
// type. It is closed under pairs, lists and functions, which is what lets a
// closure written for "all z" be applied at z, at (z, w), at ((x, z), w) and
// so on without a separate instantiation per type.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cayley {

/// Raised when a Value is read at the wrong shape.
class TypeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Unit {
  friend bool operator==(Unit, Unit) = default;
};

class Value;

/// A function in the universe together with the points it is compared on.
///
/// Extensional equality is undecidable, so two functions are equal when they
/// agree on every probe point of either side.
class Fn {
 public:
  using Body = std::function<Value(const Value&)>;

  /// The identity function with no probes.
  Fn();
  Fn(Body body, std::vector<Value> probes = {});

  Value operator()(const Value& x) const;

  std::span<const Value> probes() const noexcept;
  bool has_probes() const noexcept;
  Fn with_probes(std::vector<Value> probes) const;

  /// `after.compose(*this)`: apply this, then `after`. Keeps this function's
  /// probes, or `after`'s when this has none.
  Fn then(const Fn& after) const;

  static Fn identity();

 private:
  std::shared_ptr<const Body> body_;
  std::shared_ptr<const std::vector<Value>> probes_;
};

class Value {
 public:
  using Int = std::int64_t;

  Value() noexcept : repr_(Unit{}) {}
  Value(Unit) noexcept : repr_(Unit{}) {}
  Value(Int i) noexcept : repr_(i) {}
  Value(int i) noexcept : repr_(static_cast<Int>(i)) {}
  Value(std::string s) : repr_(std::move(s)) {}
  Value(const char* s) : repr_(std::string(s)) {}
  Value(Fn f) : repr_(std::move(f)) {}

  static Value pair(Value a, Value b);
  static Value list(std::vector<Value> items);

  bool is_unit() const noexcept { return std::holds_alternative<Unit>(repr_); }
  bool is_int() const noexcept { return std::holds_alternative<Int>(repr_); }
  bool is_string() const noexcept { return std::holds_alternative<std::string>(repr_); }
  bool is_pair() const noexcept { return std::holds_alternative<PairPtr>(repr_); }
  bool is_list() const noexcept { return std::holds_alternative<ListPtr>(repr_); }
  bool is_fn() const noexcept { return std::holds_alternative<Fn>(repr_); }

  Int as_int() const;
  const std::string& as_string() const;
  const Value& first() const;
  const Value& second() const;
  std::span<const Value> items() const;
  const Fn& as_fn() const;

  /// Apply a function value.
  Value operator()(const Value& x) const { return as_fn()(x); }

  /// Canonical printable encoding. Functions are tabulated over their probes.
  std::string encode() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  using PairPtr = std::shared_ptr<const std::pair<Value, Value>>;
  using ListPtr = std::shared_ptr<const std::vector<Value>>;

  std::variant<Unit, Int, std::string, PairPtr, ListPtr, Fn> repr_;
};

/// 64-bit hash of the canonical encoding.
std::uint64_t hash(const Value& v);

// Small helpers used throughout the structure code.

inline Value pair(Value a, Value b) { return Value::pair(std::move(a), std::move(b)); }

/// Curried two-argument function value.
Fn curry(std::function<Value(const Value&, const Value&)> f);

/// (x, y) -> (y, x)
Value swap(const Value& p);

/// ((x, y), z) -> (x, (y, z))
Value assoc(const Value& p);

/// (x, (y, z)) -> ((x, y), z)
Value unassoc(const Value& p);

/// f x id: (x, z) -> (f x, z)
Fn on_first(const Fn& f);

/// id x f: (x, z) -> (x, f z)
Fn on_second(const Fn& f);

Fn fst_fn();
Fn snd_fn();

/// x -> (x, ())
Fn fst_inverse_fn();

/// Type descriptor for the generator.
class Ty {
 public:
  enum class Kind { unit, integer, string, pair, list, function };

  static Ty unit() { return Ty(Kind::unit); }
  static Ty integer() { return Ty(Kind::integer); }
  static Ty string() { return Ty(Kind::string); }
  static Ty pair(Ty a, Ty b) { return Ty(Kind::pair, std::move(a), std::move(b)); }
  static Ty list(Ty a) { return Ty(Kind::list, std::move(a), Ty::unit()); }
  static Ty function(Ty dom, Ty cod) { return Ty(Kind::function, std::move(dom), std::move(cod)); }

  Kind kind() const noexcept { return kind_; }
  const Ty& left() const { return args_->first; }
  const Ty& right() const { return args_->second; }

  std::string name() const;

 private:
  explicit Ty(Kind k) : kind_(k) {}
  Ty(Kind k, Ty a, Ty b)
      : kind_(k), args_(std::make_shared<const std::pair<Ty, Ty>>(std::move(a), std::move(b))) {}

  Kind kind_;
  std::shared_ptr<const std::pair<Ty, Ty>> args_;
};

}  // namespace cayley
