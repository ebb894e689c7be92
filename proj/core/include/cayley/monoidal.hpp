#pragma once

// The two presentations of an applicative functor and the adapters between
// them.
//
//   apply style:     pure :: a -> F a,   (<*>) :: F (a -> b) -> F a -> F b
//   monoidal style:  unit :: F (),       zip   :: F a -> F b -> F (a, b)
//
// From a unit alone the full pure is recovered through the strength of a
// Set functor: pure x = fmap (const x) unit, i.e. A -> A x 1 -> A x F 1 ->
// F (A x 1) -> F A.

#include "cayley/functors.hpp"

namespace cayley {

template <class M>
concept MonoidalTag = FunctorTag<M> && requires(const Apply<M, Value>& x) {
  { M::unit() } -> std::convertible_to<Apply<M, Value>>;
  { M::zip(x, x) } -> std::convertible_to<Apply<M, Value>>;
};

/// unit = pure (); zip x y = pure (,) <*> x <*> y
template <ApplicativeTag A>
struct MonoidalFrom {
  template <class T>
  using of = Apply<A, T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const Apply<A, T>& x) {
    return A::map(std::forward<Fun>(f), x);
  }
  static Apply<A, Value> unit() { return A::pure(Value(Unit{})); }
  static Apply<A, Value> zip(const Apply<A, Value>& x, const Apply<A, Value>& y) {
    Fn pairing = curry([](const Value& a, const Value& b) { return pair(a, b); });
    return A::ap(A::map(pairing, x), y);
  }
};

/// pure x = fmap (const x) unit; f <*> x = fmap (\(g, v) -> g v) (zip f x)
template <MonoidalTag M>
struct ApplicativeFrom {
  template <class T>
  using of = Apply<M, T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const Apply<M, T>& x) {
    return M::map(std::forward<Fun>(f), x);
  }
  static Apply<M, Value> pure(Value x) {
    return M::map(Fn([x](const Value&) { return x; }), M::unit());
  }
  static Apply<M, Value> ap(const Apply<M, Value>& f, const Apply<M, Value>& x) {
    return M::map(Fn([](const Value& p) { return p.first()(p.second()); }), M::zip(f, x));
  }
};

}  // namespace cayley
