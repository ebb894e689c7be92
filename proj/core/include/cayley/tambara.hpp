#pragma once

// The Tambara functor: a cofree strength for any profunctor.
//
//   Tambara B X Y = forall z. B (X, z) (Y, z)
//
// The quantifier is realised by a single B element that is parametric in
// the second component of its input; callers build inner values from
// operations that never inspect z.

#include <utility>

#include "cayley/profunctor.hpp"

namespace cayley {

template <class B>
struct Tambara {
  typename B::type inner;
};

/// Observation runs `inner` directly, so inputs must already carry a z.
template <ProfunctorTag B>
struct TambaraP {
  using type = Tambara<B>;

  /// dimap f g (Tambara x) = Tambara (dimap (lift f) (lift g) x), lift f (a, b) = (f a, b)
  static type dimap(const Fn& f, const Fn& g, const type& t) {
    return {B::dimap(on_first(f), on_first(g), t.inner)};
  }

  /// first (Tambara x) = Tambara (dimap alpha alpha^-1 x)
  static type first(const type& t) {
    Fn alpha([](const Value& p) { return assoc(p); });
    Fn alpha_inv([](const Value& p) { return unassoc(p); });
    return {B::dimap(alpha, alpha_inv, t.inner)};
  }

  static type arr(const Fn& f)
    requires PreArrowTag<B>
  {
    return {B::arr(on_first(f))};
  }

  static type compose(const type& a, const type& b)
    requires PreArrowTag<B>
  {
    return {B::compose(a.inner, b.inner)};
  }

  static Observation observe(const type& t, std::span<const Value> xs) { return B::observe(t.inner, xs); }
};

/// phi f a = Tambara (f (first a)), for a strong A and f : A -> B.
template <StrongTag A, ProfunctorTag B, class Nat>
auto tambara_phi(Nat f) {
  return [f = std::move(f)](const typename A::type& a) { return Tambara<B>{f(A::first(a))}; };
}

/// phi^-1 f a = dimap fst^-1 fst b where Tambara b = f a
template <class A, ProfunctorTag B, class ToTambara>
auto tambara_phi_inv(ToTambara f) {
  return [f = std::move(f)](const typename A::type& a) -> typename B::type {
    return B::dimap(fst_inverse_fn(), fst_fn(), f(a).inner);
  };
}

}  // namespace cayley
