#pragma once

// Monoids transported along monoidal functors, one instance per functor:
//
//   static arrow   applicative F  ->  arrow  F (X -> Y)
//   Kleisli arrow  monad M        ->  arrow  X -> M Y
//   identity       monad M        ->  applicative M
//   reversal       applicative F  ->  applicative with effects swapped

#include <utility>

#include "cayley/functors.hpp"
#include "cayley/profunctor.hpp"

namespace cayley {

// ---------------------------------------------------------------------------
// Static arrows: Cayley F X Y = F (X -> Y)

template <ApplicativeTag F>
struct StaticP {
  using type = Apply<F, Value>;

  static type dimap(const Fn& f, const Fn& g, const type& x) {
    Fn around([f, g](const Value& h) { return Value(Fn([f, g, h](const Value& v) { return g(h(f(v))); })); });
    return F::map(around, x);
  }

  /// arr f = Cayley (pure f)
  static type arr(const Fn& f) { return F::pure(Value(f)); }

  /// Cayley x >>> Cayley y = Cayley (pure (.) <*> y <*> x); y's effects come first.
  static type compose(const type& x, const type& y) {
    Fn dot = curry([](const Value& g, const Value& h) {
      return Value(Fn([g, h](const Value& v) { return g(h(v)); }));
    });
    return F::ap(F::ap(F::pure(Value(dot)), y), x);
  }

  /// first (Cayley x) = Cayley (pure (\f (b, d) -> (f b, d)) <*> x)
  static type first(const type& x) {
    Fn lift([](const Value& f) { return Value(on_first(f.as_fn())); });
    return F::ap(F::pure(Value(lift)), x);
  }

  static Observation observe(const type& x, std::span<const Value> xs) {
    return observe_at(xs, [&x](const Value& v) {
      return detail::look(F::map(Fn([v](const Value& h) { return h(v); }), x));
    });
  }
};

template <ApplicativeTag F>
Apply<F, Value> static_arr(const Fn& f) {
  return StaticP<F>::arr(f);
}

template <ApplicativeTag F>
Apply<F, Value> static_compose(const Apply<F, Value>& x, const Apply<F, Value>& y) {
  return StaticP<F>::compose(x, y);
}

template <ApplicativeTag F>
Apply<F, Value> static_first(const Apply<F, Value>& x) {
  return StaticP<F>::first(x);
}

// ---------------------------------------------------------------------------
// Kleisli arrows (carrier and instance live with the profunctors)

template <MonadTag M>
Kleisli<M> kleisli_arr(const Fn& f) {
  return KleisliP<M>::arr(f);
}

template <MonadTag M>
Kleisli<M> kleisli_compose(const Kleisli<M>& a, const Kleisli<M>& b) {
  return KleisliP<M>::compose(a, b);
}

template <MonadTag M>
Kleisli<M> kleisli_first(const Kleisli<M>& a) {
  return KleisliP<M>::first(a);
}

// ---------------------------------------------------------------------------
// Every monad is an applicative

/// pure = return; f <*> x = f >>= \g -> x >>= return . g
template <MonadTag M>
struct MonadApplicative {
  template <class T>
  using of = Apply<M, T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const Apply<M, T>& x) {
    return M::map(std::forward<Fun>(f), x);
  }
  static Apply<M, Value> pure(Value x) { return M::pure(std::move(x)); }
  static Apply<M, Value> ap(const Apply<M, Value>& f, const Apply<M, Value>& x) {
    return M::bind(f, [x](const Value& g) { return M::bind(x, [g](const Value& v) { return M::pure(g(v)); }); });
  }
};

// ---------------------------------------------------------------------------
// The reversed applicative

template <class F>
struct Rev {
  Apply<F, Value> inner;
};

/// Rev f <*> Rev x = Rev (pure (flip ($)) <*> x <*> f)
template <ApplicativeTag F>
struct ReversedF {
  template <class T>
  using of = Rev<F>;

  static Rev<F> map(const Fn& f, const Rev<F>& x) { return {F::map(f, x.inner)}; }
  static Rev<F> pure(Value x) { return {F::pure(std::move(x))}; }
  static Rev<F> ap(const Rev<F>& f, const Rev<F>& x) {
    Fn flip_apply = curry([](const Value& v, const Value& g) { return g(v); });
    return {F::ap(F::ap(F::pure(Value(flip_apply)), x.inner), f.inner)};
  }
};

template <ApplicativeTag F>
Rev<F> rev_pure(Value x) {
  return ReversedF<F>::pure(std::move(x));
}

template <ApplicativeTag F>
Rev<F> rev_ap(const Rev<F>& f, const Rev<F>& x) {
  return ReversedF<F>::ap(f, x);
}

template <class F>
Observation observe(const Rev<F>& r) {
  return observe(r.inner);
}

}  // namespace cayley
