#pragma once

// Yoneda and coYoneda isomorphisms as executable round trips.
//
//   F X  ~  forall y. (X -> y) -> F y        (end form)
//   F X  ~  exists y. (F y, y -> X)          (coend form)

#include <functional>
#include <utility>

#include "cayley/functors.hpp"

namespace cayley {

template <class F>
using Polymorphic = std::function<Apply<F, Value>(const Fn&)>;

/// phi v = \k -> fmap k v
template <FunctorTag F>
Polymorphic<F> yoneda_to(Apply<F, Value> fx) {
  return [fx = std::move(fx)](const Fn& k) { return F::map(k, fx); };
}

/// phi^-1 g = g id
template <FunctorTag F>
Apply<F, Value> yoneda_from(const Polymorphic<F>& poly) {
  return poly(Fn::identity());
}

/// A payload of hidden type together with the function out of it.
template <class F>
struct CoYoneda {
  Apply<F, Value> payload;
  Fn post;
};

/// psi v = (v, id)
template <FunctorTag F>
CoYoneda<F> coyoneda_to(Apply<F, Value> fx) {
  return {std::move(fx), Fn::identity()};
}

/// psi^-1 (x, g) = fmap g x
template <FunctorTag F>
Apply<F, Value> coyoneda_from(const CoYoneda<F>& c) {
  return F::map(c.post, c.payload);
}

/// Mapping only touches the post function.
template <FunctorTag F>
CoYoneda<F> coyoneda_map(const Fn& f, const CoYoneda<F>& c) {
  return {c.payload, c.post.then(f)};
}

}  // namespace cayley
