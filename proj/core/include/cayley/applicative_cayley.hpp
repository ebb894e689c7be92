#pragma once

// Cayley representation for applicatives: Rep F = Exp F F, where
//
//   Exp F G B = forall a. F a -> G (B, a)
//
// rep x prepends x's effects to whatever the representation is later
// applied to, so a left-nested chain of <*> becomes a right-nested one.

#include <utility>

#include "cayley/day.hpp"
#include "cayley/functors.hpp"
#include "cayley/instrument.hpp"

namespace cayley {

template <class F>
using RepAp = DayExp<F, F>;

template <FunctorTag F>
struct RepApF {
  template <class T>
  using of = RepAp<F>;

  /// fmap f (Exp h) = Exp (fmap (\(x, y) -> (f x, y)) . h)
  static RepAp<F> map(const Fn& f, const RepAp<F>& r) {
    instrument::tick();
    Fn lift = on_first(f);
    return {[run = r.run, lift](const Apply<F, Value>& y) { return F::map(lift, run(y)); }};
  }

  /// pure c = Exp (fmap (c,))
  static RepAp<F> pure(Value c) {
    instrument::tick();
    Fn tag([c](const Value& a) { return pair(c, a); });
    return {[tag](const Apply<F, Value>& y) { return F::map(tag, y); }};
  }

  /// Exp f <*> Exp a = Exp (fmap g . f . a) where g (h, (x, c)) = (h x, c)
  ///
  /// The function side runs outermost so its effects come first.
  static RepAp<F> ap(const RepAp<F>& fs, const RepAp<F>& xs) {
    instrument::tick();
    Fn g([](const Value& p) {
      const Value& xc = p.second();
      return pair(p.first()(xc.first()), xc.second());
    });
    return {[f = fs.run, a = xs.run, g](const Apply<F, Value>& y) { return F::map(g, f(a(y))); }};
  }
};

/// rep x = Exp (\y -> pure (,) <*> x <*> y)
template <ApplicativeTag F>
RepAp<F> ap_rep(Apply<F, Value> x) {
  instrument::tick();
  Fn pairing = curry([](const Value& a, const Value& b) { return pair(a, b); });
  return {[x = std::move(x), pairing](const Apply<F, Value>& y) { return F::ap(F::map(pairing, x), y); }};
}

/// abs (Exp t) = fmap fst (t (pure ()))
template <ApplicativeTag F>
Apply<F, Value> ap_abs(const RepAp<F>& r) {
  return F::map(fst_fn(), r.run(F::pure(Value(Unit{}))));
}

}  // namespace cayley
