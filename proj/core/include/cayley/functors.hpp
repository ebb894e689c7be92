#pragma once

// Functor shapes and their instances.
//
// Higher-kinded parameters are passed as tag types: a tag names a type
// constructor through `template <class T> using of = ...` and carries the
// instance operations as static members. Code that is generic over "a functor
// F" takes the tag F and talks about `typename F::template of<T>`.

#include <concepts>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cayley/list.hpp"
#include "cayley/observation.hpp"
#include "cayley/value.hpp"

namespace cayley {

template <class F, class T>
using Apply = typename F::template of<T>;

template <class Fun, class T>
using ResultOf = std::decay_t<std::invoke_result_t<Fun&, const T&>>;

template <class F>
concept FunctorTag = requires(const Apply<F, Value>& x, const Fn& f) {
  { F::map(f, x) } -> std::convertible_to<Apply<F, Value>>;
};

template <class M>
concept MonadTag = FunctorTag<M> && requires(const Value& v, const Apply<M, Value>& m) {
  { M::pure(v) } -> std::convertible_to<Apply<M, Value>>;
  { M::bind(m, [](const Value& x) { return M::pure(x); }) } -> std::convertible_to<Apply<M, Value>>;
};

template <class A>
concept ApplicativeTag = FunctorTag<A> && requires(const Value& v, const Apply<A, Value>& x) {
  { A::pure(v) } -> std::convertible_to<Apply<A, Value>>;
  { A::ap(x, x) } -> std::convertible_to<Apply<A, Value>>;
};

// ---------------------------------------------------------------------------
// Shapes

template <class T>
struct Identity {
  T value;
  friend bool operator==(const Identity&, const Identity&) = default;
};

template <class T>
struct Maybe {
  std::optional<T> value;
  friend bool operator==(const Maybe&, const Maybe&) = default;
};

/// Effect signature with two continuations: F X = (X, X).
template <class T>
struct Pair {
  T left;
  T right;
};

/// Effect signature that emits a label: F X = Output(label, X).
template <class T>
struct Console {
  std::string label;
  T next;
};

/// The canonical observable effect: a log of labels and a result.
template <class T>
struct Writer {
  Trace log;
  T value;
  friend bool operator==(const Writer&, const Writer&) = default;
};

inline Trace concat(const Trace& a, const Trace& b) {
  Trace out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---------------------------------------------------------------------------
// Instances

struct IdentityF {
  template <class T>
  using of = Identity<T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const Identity<T>& x) -> Identity<ResultOf<Fun, T>> {
    return {f(x.value)};
  }
  template <class T>
  static Identity<T> pure(T x) {
    return {std::move(x)};
  }
  static Identity<Value> ap(const Identity<Value>& f, const Identity<Value>& x) {
    return {f.value(x.value)};
  }
  template <class T, class K>
  static auto bind(const Identity<T>& m, K&& k) {
    return k(m.value);
  }
};

struct MaybeF {
  template <class T>
  using of = Maybe<T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const Maybe<T>& x) -> Maybe<ResultOf<Fun, T>> {
    if (!x.value) return {std::nullopt};
    return {f(*x.value)};
  }
};

/// Lists with the nondeterminism monad.
struct ListF {
  template <class T>
  using of = List<T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const List<T>& xs) {
    return xs.map(std::forward<Fun>(f));
  }
  template <class T>
  static List<T> pure(T x) {
    return List<T>::cons(std::move(x), List<T>{});
  }
  template <class T, class K>
  static auto bind(const List<T>& xs, K&& k) -> std::invoke_result_t<K&, const T&> {
    using R = std::invoke_result_t<K&, const T&>;
    std::vector<typename R::value_type> out;
    for (const T& x : xs.to_vector())
      for (auto& y : k(x).to_vector()) out.push_back(std::move(y));
    return R::of(std::span<const typename R::value_type>(out));
  }
  static List<Value> ap(const List<Value>& fs, const List<Value>& xs) {
    return bind(fs, [&xs](const Value& f) { return xs.map([&f](const Value& x) { return f(x); }); });
  }
};

struct PairF {
  template <class T>
  using of = Pair<T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const Pair<T>& p) -> Pair<ResultOf<Fun, T>> {
    auto l = f(p.left);
    auto r = f(p.right);
    return {std::move(l), std::move(r)};
  }
};

struct ConsoleF {
  template <class T>
  using of = Console<T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const Console<T>& c) -> Console<ResultOf<Fun, T>> {
    return {c.label, f(c.next)};
  }
};

/// Writer over a list of labels; effects are logged left to right.
struct WriterF {
  template <class T>
  using of = Writer<T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const Writer<T>& w) -> Writer<ResultOf<Fun, T>> {
    return {w.log, f(w.value)};
  }
  template <class T>
  static Writer<T> pure(T x) {
    return {{}, std::move(x)};
  }
  template <class T, class K>
  static auto bind(const Writer<T>& m, K&& k) -> std::invoke_result_t<K&, const T&> {
    auto next = k(m.value);
    return {concat(m.log, next.log), std::move(next.value)};
  }
  static Writer<Value> ap(const Writer<Value>& f, const Writer<Value>& x) {
    return {concat(f.log, x.log), f.value(x.value)};
  }
  static Writer<Value> tell(std::string label, Value v = Unit{}) {
    return {{std::move(label)}, std::move(v)};
  }
};

// ---------------------------------------------------------------------------
// Observation

inline Observation observe(const Identity<Value>& x) { return observe(x.value); }

inline Observation observe(const Maybe<Value>& x) {
  return x.value ? observe(Value::list({*x.value})) : observe(Value::list({}));
}

inline Observation observe(const List<Value>& xs) { return observe(Value::list(xs.to_vector())); }

inline Observation observe(const Writer<Value>& w) { return observe(w.value, w.log); }

inline Observation observe(const Pair<Value>& p) { return observe(pair(p.left, p.right)); }

inline Observation observe(const Console<Value>& c) { return observe(c.next, {c.label}); }

inline Value to_value(const List<Value>& xs) { return Value::list(xs.to_vector()); }

}  // namespace cayley
