#pragma once

// Day convolution of functors: the existential triple, its functor and
// bifunctor actions, the structural isomorphisms, the correspondence for
// morphisms out of a Day convolution, and the exponential G^F.
//
//   (F * G) B = exists c d. (F c, G d, (c, d) -> B)
//
// Payloads live at Value; the post function consumes the pair (c, d).

#include <functional>
#include <utility>
#include <vector>

#include "cayley/functors.hpp"
#include "cayley/shared_fn.hpp"
#include "cayley/instrument.hpp"

namespace cayley {

template <class F, class G>
struct Day {
  Apply<F, Value> left;
  Apply<G, Value> right;
  Fn post;
};

/// Day convolution as a functor tag. Only the Value instantiation is used.
template <class F, class G>
struct DayF {
  template <class T>
  using of = Day<F, G>;

  static Day<F, G> map(const Fn& f, const Day<F, G>& d) {
    instrument::tick();
    return {d.left, d.right, d.post.then(f)};
  }
};

template <class F, class G>
Day<F, G> day(Apply<F, Value> left, Apply<G, Value> right, Fn post = Fn::identity()) {
  return {std::move(left), std::move(right), std::move(post)};
}

/// fmap f (Day x y g) = Day x y (f . g)
template <class F, class G>
Day<F, G> day_map(const Fn& f, const Day<F, G>& d) {
  return DayF<F, G>::map(f, d);
}

/// bimap m1 m2 (Day x y f) = Day (m1 x) (m2 y) f
template <class H, class I, class F, class G, class M1, class M2>
Day<H, I> day_bimap(const M1& m1, const M2& m2, const Day<F, G>& d) {
  return {m1(d.left), m2(d.right), d.post};
}

// ---------------------------------------------------------------------------
// Structural isomorphisms

/// lambda x = Day (Id ()) x snd
template <class F>
Day<IdentityF, F> day_lambda(Apply<F, Value> x) {
  return {Identity<Value>{Unit{}}, std::move(x), snd_fn()};
}

/// lambda^-1 (Day (Id x) y f) = fmap (f . (x,)) y
template <FunctorTag F>
Apply<F, Value> day_lambda_inv(const Day<IdentityF, F>& d) {
  Value x = d.left.value;
  Fn f = d.post;
  return F::map(Fn([x, f](const Value& y) { return f(pair(x, y)); }), d.right);
}

/// rho x = Day x (Id ()) fst
template <class F>
Day<F, IdentityF> day_rho(Apply<F, Value> x) {
  return {std::move(x), Identity<Value>{Unit{}}, fst_fn()};
}

/// rho^-1 (Day x (Id y) f) = fmap (f . (,y)) x
template <FunctorTag F>
Apply<F, Value> day_rho_inv(const Day<F, IdentityF>& d) {
  Value y = d.right.value;
  Fn f = d.post;
  return F::map(Fn([y, f](const Value& z) { return f(pair(z, y)); }), d.left);
}

/// (F * G) * H -> F * (G * H)
template <class F, class G, class H>
Day<F, DayF<G, H>> day_alpha(const Day<DayF<F, G>, H>& d) {
  const Day<F, G>& inner = d.left;
  Fn f = inner.post;
  Fn g = d.post;
  // f1 (d, b) = (\c -> f (c, d), b)
  Fn f1([f](const Value& p) {
    Value dv = p.first();
    return pair(Value(Fn([f, dv](const Value& c) { return f(pair(c, dv)); })), p.second());
  });
  // f2 (c, (h, b)) = g (h c, b)
  Fn f2([g](const Value& p) {
    const Value& c = p.first();
    const Value& hb = p.second();
    return g(pair(hb.first()(c), hb.second()));
  });
  return {inner.left, Day<G, H>{inner.right, d.right, f1}, f2};
}

/// F * (G * H) -> (F * G) * H
template <class F, class G, class H>
Day<DayF<F, G>, H> day_alpha_inv(const Day<F, DayF<G, H>>& d) {
  const Day<G, H>& inner = d.right;
  Fn f = inner.post;
  Fn g = d.post;
  // f1 (c, e) = (c, \h -> f (e, h))
  Fn f1([f](const Value& p) {
    Value e = p.second();
    return pair(p.first(), Value(Fn([f, e](const Value& h) { return f(pair(e, h)); })));
  });
  // f2 ((c, h), d) = g (c, h d)
  Fn f2([g](const Value& p) {
    const Value& ch = p.first();
    return g(pair(ch.first(), ch.second()(p.second())));
  });
  return {Day<F, G>{d.left, inner.left, f1}, inner.right, f2};
}

/// gamma (Day x y f) = Day y x (f . swap)
template <class F, class G>
Day<G, F> day_gamma(const Day<F, G>& d) {
  Fn f = d.post;
  return {d.right, d.left, Fn([f](const Value& p) { return f(swap(p)); })};
}

// ---------------------------------------------------------------------------
// Morphisms out of a Day convolution

/// theta f (x, y) = f (Day x y id)
template <class F, class G, class Nat>
auto theta(Nat nat) {
  return [nat = std::move(nat)](const Apply<F, Value>& x, const Apply<G, Value>& y) {
    return nat(Day<F, G>{x, y, Fn::identity()});
  };
}

/// theta^-1 g (Day x y f) = fmap f (g (x, y))
template <FunctorTag H, class F, class G, class Pairing>
auto theta_inv(Pairing g) {
  return [g = std::move(g)](const Day<F, G>& d) -> Apply<H, Value> { return H::map(d.post, g(d.left, d.right)); };
}

// ---------------------------------------------------------------------------
// Exponential: G^F (B) = forall a. F a -> G (B, a)

template <class F, class G>
struct DayExp {
  SharedFn<Apply<G, Value>(const Apply<F, Value>&)> run;
};

/// phi m x = Exp (\y -> m (Day x y id))
template <class F, class G, class H, class Nat>
auto day_phi(Nat m) {
  return [m = std::move(m)](const Apply<F, Value>& x) {
    return DayExp<G, H>{[m, x](const Apply<G, Value>& y) { return m(Day<F, G>{x, y, Fn::identity()}); }};
  };
}

/// phi^-1 f (Day x y h) = fmap h (t y) where Exp t = f x
template <FunctorTag H, class F, class G, class ToExp>
auto day_phi_inv(ToExp f) {
  return [f = std::move(f)](const Day<F, G>& d) -> Apply<H, Value> {
    DayExp<G, H> e = f(d.left);
    return H::map(d.post, e.run(d.right));
  };
}

// ---------------------------------------------------------------------------
// Observation
//
// A Day value is observed by enumerating every combination of a left branch
// and a right branch, applying post to the pair of results and keeping the
// concatenated traces. Functors with one branch (Identity, Writer) give one
// entry; List and Maybe give several or none.

struct Branch {
  Trace trace;
  Value value;
};

inline std::vector<Branch> branches(const Identity<Value>& x) { return {{{}, x.value}}; }

inline std::vector<Branch> branches(const Maybe<Value>& x) {
  if (!x.value) return {};
  return {{{}, *x.value}};
}

inline std::vector<Branch> branches(const List<Value>& xs) {
  std::vector<Branch> out;
  for (const Value& v : xs.to_vector()) out.push_back({{}, v});
  return out;
}

inline std::vector<Branch> branches(const Writer<Value>& w) { return {{w.log, w.value}}; }

template <class F, class G>
std::vector<Branch> branches(const Day<F, G>& d) {
  std::vector<Branch> out;
  for (const Branch& l : branches(d.left))
    for (const Branch& r : branches(d.right)) out.push_back({concat(l.trace, r.trace), d.post(pair(l.value, r.value))});
  return out;
}

/// value: "[(trace, result), ...]" over all branches.
template <class T>
Observation observe_branches(const T& x) {
  std::vector<Value> rows;
  for (Branch& b : branches(x)) {
    std::vector<Value> labels(b.trace.begin(), b.trace.end());
    rows.push_back(pair(Value::list(std::move(labels)), std::move(b.value)));
  }
  return observe(Value::list(std::move(rows)));
}

template <class F, class G>
Observation observe(const Day<F, G>& d) {
  return observe_branches(d);
}

}  // namespace cayley
