#pragma once

// A representation of arrows built from the Tambara functor applied to the
// pre-arrow exponential:
//
//   Rep A X Y = forall z' z. A (Y, z') z -> A (X, z') z

#include <functional>
#include <utility>

#include "cayley/instrument.hpp"
#include "cayley/profunctor.hpp"

namespace cayley {

template <class A>
struct ArrowRep {
  SharedFn<typename A::type(const typename A::type&)> run;
};

template <ArrowTag A>
struct ArrowRepP {
  using type = ArrowRep<A>;

  /// dimap f g (Rep x) = Rep (\y -> dimap (lift f) id (x (dimap (lift g) id y)))
  static type dimap(const Fn& f, const Fn& g, const type& r) {
    return {[lf = on_first(f), lg = on_first(g), x = r.run](const typename A::type& y) {
      return lmap<A>(lf, x(lmap<A>(lg, y)));
    }};
  }

  /// arr f = Rep (dimap (lift f) id)
  static type arr(const Fn& f) {
    instrument::tick();
    return {[lf = on_first(f)](const typename A::type& y) { return lmap<A>(lf, y); }};
  }

  /// Rep x >>> Rep y = Rep (\v -> x (y v))
  static type compose(const type& a, const type& b) {
    instrument::tick();
    return {[x = a.run, y = b.run](const typename A::type& v) { return x(y(v)); }};
  }

  /// first (Rep x) = Rep (\z -> dimap alpha id (x (dimap alpha^-1 id z)))
  static type first(const type& r) {
    Fn alpha([](const Value& p) { return assoc(p); });
    Fn alpha_inv([](const Value& p) { return unassoc(p); });
    return {[alpha, alpha_inv, x = r.run](const typename A::type& z) {
      return lmap<A>(alpha, x(lmap<A>(alpha_inv, z)));
    }};
  }

  static Observation observe(const type& r, std::span<const Value> xs);
};

/// rep x = Rep (\z -> first x >>> z)
template <ArrowTag A>
ArrowRep<A> arrow_rep(typename A::type x) {
  instrument::tick();
  return {[fx = A::first(x)](const typename A::type& z) { return A::compose(fx, z); }};
}

/// abs (Rep x) = arr fst^-1 >>> x (arr fst)
template <ArrowTag A>
typename A::type arrow_abs(const ArrowRep<A>& r) {
  return A::compose(A::arr(fst_inverse_fn()), r.run(A::arr(fst_fn())));
}

template <ArrowTag A>
Observation ArrowRepP<A>::observe(const type& r, std::span<const Value> xs) {
  return A::observe(arrow_abs(r), xs);
}

}  // namespace cayley
