#pragma once

// Exponential of profunctors and the Cayley representation of pre-arrows.
//
//   Exp A B X Y = forall d. A Y d -> B X d
//   Rep A = Exp A A

#include <functional>
#include <utility>

#include "cayley/instrument.hpp"
#include "cayley/profunctor.hpp"

namespace cayley {

template <class A, class B>
struct ProExp {
  SharedFn<typename B::type(const typename A::type&)> run;
};

/// Rep A as a pre-arrow. Observation goes through pre_abs.
template <PreArrowTag A>
struct ProRepP {
  using type = ProExp<A, A>;

  /// dimap m1 m2 (Exp gh) = Exp (dimap m1 id . gh . dimap m2 id)
  static type dimap(const Fn& m1, const Fn& m2, const type& e) {
    return {[m1, m2, gh = e.run](const typename A::type& y) { return lmap<A>(m1, gh(lmap<A>(m2, y))); }};
  }

  /// arr f = Exp (\y -> dimap f id y)
  static type arr(const Fn& f) {
    instrument::tick();
    return {[f](const typename A::type& y) { return lmap<A>(f, y); }};
  }

  /// Exp f >>> Exp g = Exp (\y -> f (g y))
  static type compose(const type& a, const type& b) {
    instrument::tick();
    return {[f = a.run, g = b.run](const typename A::type& y) { return f(g(y)); }};
  }

  static Observation observe(const type& e, std::span<const Value> xs);
};

/// rep x = Exp (\y -> x >>> y)
template <PreArrowTag A>
ProExp<A, A> pre_rep(typename A::type x) {
  instrument::tick();
  return {[x = std::move(x)](const typename A::type& y) { return A::compose(x, y); }};
}

/// abs (Exp f) = f (arr id)
template <PreArrowTag A>
typename A::type pre_abs(const ProExp<A, A>& e) {
  return e.run(A::arr(Fn::identity()));
}

template <PreArrowTag A>
Observation ProRepP<A>::observe(const type& e, std::span<const Value> xs) {
  return A::observe(pre_abs(e), xs);
}

/// phi m f = Exp (\g -> m (f (x) g))
template <class F, class G, class H, class Nat>
auto pre_phi(Nat m) {
  return [m = std::move(m)](const typename F::type& f) {
    return ProExp<G, H>{[m, f](const typename G::type& g) { return m(ProTensor<F, G>{f, g}); }};
  };
}

/// phi^-1 m (f (x) g) = e g where Exp e = m f
template <class F, class G, class H, class ToExp>
auto pre_phi_inv(ToExp m) {
  return [m = std::move(m)](const ProTensor<F, G>& t) -> typename H::type { return m(t.left).run(t.right); };
}

}  // namespace cayley
