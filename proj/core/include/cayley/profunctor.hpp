#pragma once

// Profunctors, pre-arrows and strong profunctors as tag types.
//
// A profunctor tag P names its carrier `P::type` (an element of P(X, Y) with
// X and Y instantiated in the Value universe) and provides
//
//   dimap(f, g, a)                      all profunctors
//   arr(f), compose(a, b)               pre-arrows; compose is a >>> b
//   first(a)                            strong profunctors
//   observe(a, inputs)                  runs a at every input
//
// Composition tensor: (P (x) Q)(X, Y) = exists Z. (P(X, Z), Q(Z, Y)).

#include <concepts>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cayley/functors.hpp"
#include "cayley/shared_fn.hpp"
#include "cayley/observation.hpp"

namespace cayley {

template <class P>
concept ProfunctorTag = requires(const Fn& f, const typename P::type& a, std::span<const Value> xs) {
  { P::dimap(f, f, a) } -> std::convertible_to<typename P::type>;
  { P::observe(a, xs) } -> std::same_as<Observation>;
};

template <class P>
concept PreArrowTag = ProfunctorTag<P> && requires(const Fn& f, const typename P::type& a) {
  { P::arr(f) } -> std::convertible_to<typename P::type>;
  { P::compose(a, a) } -> std::convertible_to<typename P::type>;
};

template <class P>
concept StrongTag = ProfunctorTag<P> && requires(const typename P::type& a) {
  { P::first(a) } -> std::convertible_to<typename P::type>;
};

template <class P>
concept ArrowTag = PreArrowTag<P> && StrongTag<P>;

namespace detail {

/// Unqualified, so overloads declared after this header are found by ADL.
template <class T>
Observation look(const T& x) {
  return observe(x);
}

}  // namespace detail

/// One observation per input, kept separate.
template <class Run>
Observation observe_at(std::span<const Value> xs, Run&& run) {
  std::vector<Observation> points;
  points.reserve(xs.size());
  for (const Value& x : xs) points.push_back(run(x));
  return tabulate(points);
}

/// dimap f id
template <ProfunctorTag P>
typename P::type lmap(const Fn& f, const typename P::type& a) {
  return P::dimap(f, Fn::identity(), a);
}

/// dimap id g
template <ProfunctorTag P>
typename P::type rmap(const Fn& g, const typename P::type& a) {
  return P::dimap(Fn::identity(), g, a);
}

// ---------------------------------------------------------------------------
// Plain functions

struct HomP {
  using type = Fn;

  static Fn dimap(const Fn& f, const Fn& g, const Fn& h) {
    return Fn([f, g, h](const Value& x) { return g(h(f(x))); });
  }
  static Fn arr(const Fn& f) { return f; }
  static Fn compose(const Fn& a, const Fn& b) { return a.then(b); }
  static Fn first(const Fn& a) { return on_first(a); }
  static Observation observe(const Fn& a, std::span<const Value> xs) {
    return observe_at(xs, [&a](const Value& x) { return detail::look(a(x)); });
  }
};

// ---------------------------------------------------------------------------
// Kleisli arrows of a monad: X -> M Y

template <class M>
struct Kleisli {
  SharedFn<Apply<M, Value>(const Value&)> run;

  Apply<M, Value> operator()(const Value& x) const { return run(x); }
};

template <MonadTag M>
struct KleisliP {
  using type = Kleisli<M>;

  static type dimap(const Fn& f, const Fn& g, const type& a) {
    return {[f, g, run = a.run](const Value& x) { return M::map(g, run(f(x))); }};
  }
  /// arr f = return . f
  static type arr(const Fn& f) {
    return {[f](const Value& x) { return M::pure(f(x)); }};
  }
  /// f >>> g = \x -> f x >>= g
  static type compose(const type& a, const type& b) {
    return {[f = a.run, g = b.run](const Value& x) { return M::bind(f(x), g); }};
  }
  /// first f = \(b, d) -> f b >>= \c -> return (c, d)
  static type first(const type& a) {
    return {[f = a.run](const Value& bd) {
      Value d = bd.second();
      return M::bind(f(bd.first()), [d](const Value& c) { return M::pure(pair(c, d)); });
    }};
  }
  static Observation observe(const type& a, std::span<const Value> xs) {
    return observe_at(xs, [&a](const Value& x) { return detail::look(a(x)); });
  }
};

/// An atom that logs `label` and applies `f`.
inline Kleisli<WriterF> logging(std::string label, Fn f) {
  return {[label = std::move(label), f = std::move(f)](const Value& x) {
    return Writer<Value>{{label}, f(x)};
  }};
}

// ---------------------------------------------------------------------------
// Double: (X, X) -> (Y, Y), with two different lawful strengths

namespace detail {

/// lift f (a, a') = (f a, f a')
inline Fn lift_both(const Fn& f) {
  return Fn([f](const Value& p) { return pair(f(p.first()), f(p.second())); });
}

}  // namespace detail

struct DoubleBase {
  using type = Fn;

  /// dimap f g (Double h) = Double (lift g . h . lift f)
  static Fn dimap(const Fn& f, const Fn& g, const Fn& h) {
    Fn lf = detail::lift_both(f);
    Fn lg = detail::lift_both(g);
    return Fn([lf, lg, h](const Value& x) { return lg(h(lf(x))); });
  }
  /// Inputs are pairs (x, x').
  static Observation observe(const Fn& a, std::span<const Value> xs) {
    return observe_at(xs, [&a](const Value& x) { return detail::look(a(x)); });
  }
};

/// first: ((x, z), (x', z')) -> ((y, z), (y', z'))
struct DoubleStrengthA : DoubleBase {
  static Fn first(const Fn& h) {
    return Fn([h](const Value& p) {
      const Value& l = p.first();
      const Value& r = p.second();
      Value ys = h(pair(l.first(), r.first()));
      return pair(pair(ys.first(), l.second()), pair(ys.second(), r.second()));
    });
  }
};

/// first: ((x, z), (x', z')) -> ((y, z), (y', z))
struct DoubleStrengthB : DoubleBase {
  static Fn first(const Fn& h) {
    return Fn([h](const Value& p) {
      const Value& l = p.first();
      const Value& r = p.second();
      Value ys = h(pair(l.first(), r.first()));
      return pair(pair(ys.first(), l.second()), pair(ys.second(), l.second()));
    });
  }
};

inline Fn double_strength_a(const Fn& d) { return DoubleStrengthA::first(d); }
inline Fn double_strength_b(const Fn& d) { return DoubleStrengthB::first(d); }

/// Double (\(x, x') -> (x', x))
inline Fn double_swap() {
  return Fn([](const Value& p) { return swap(p); });
}

// ---------------------------------------------------------------------------
// Composition tensor

template <class P, class Q>
struct ProTensor {
  typename P::type left;
  typename Q::type right;
};

template <ProfunctorTag P, ProfunctorTag Q>
struct ProTensorP {
  using type = ProTensor<P, Q>;

  /// The hidden Z is untouched.
  static type dimap(const Fn& f, const Fn& g, const type& t) { return {lmap<P>(f, t.left), rmap<Q>(g, t.right)}; }
};

template <class P, class Q>
ProTensor<P, Q> tensor(typename P::type left, typename Q::type right) {
  return {std::move(left), std::move(right)};
}

/// lambda (f (x) x) = dimap f id x
template <ProfunctorTag P>
typename P::type tensor_lambda(const ProTensor<HomP, P>& t) {
  return lmap<P>(t.left, t.right);
}

/// x -> id (x) x
template <ProfunctorTag P>
ProTensor<HomP, P> tensor_lambda_inv(typename P::type x) {
  return {Fn::identity(), std::move(x)};
}

/// rho (x (x) f) = dimap id f x
template <ProfunctorTag P>
typename P::type tensor_rho(const ProTensor<P, HomP>& t) {
  return rmap<P>(t.right, t.left);
}

/// x -> x (x) id
template <ProfunctorTag P>
ProTensor<P, HomP> tensor_rho_inv(typename P::type x) {
  return {std::move(x), Fn::identity()};
}

/// (f (x) g) (x) h -> f (x) (g (x) h)
template <class P, class Q, class R>
ProTensor<P, ProTensorP<Q, R>> tensor_alpha(const ProTensor<ProTensorP<P, Q>, R>& t) {
  return {t.left.left, ProTensor<Q, R>{t.left.right, t.right}};
}

/// f (x) (g (x) h) -> (f (x) g) (x) h
template <class P, class Q, class R>
ProTensor<ProTensorP<P, Q>, R> tensor_alpha_inv(const ProTensor<P, ProTensorP<Q, R>>& t) {
  return {ProTensor<P, Q>{t.left, t.right.left}, t.right.right};
}

/// Collapse a tensor of a pre-arrow with itself by composing.
template <PreArrowTag P>
typename P::type tensor_compose(const ProTensor<P, P>& t) {
  return P::compose(t.left, t.right);
}

}  // namespace cayley
