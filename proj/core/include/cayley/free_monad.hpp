#pragma once

// Monads as monoids under functor composition: the free monad over an effect
// signature, the composition exponential, and the codensity monad as its
// Cayley representation.

#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "cayley/functors.hpp"
#include "cayley/shared_fn.hpp"
#include "cayley/instrument.hpp"

namespace cayley {

/// Ret a | Con (Sig (FreeMonad Sig a))
template <class Sig, class A = Value>
class FreeMonad {
 public:
  using value_type = A;
  using node_type = Apply<Sig, FreeMonad>;

  static FreeMonad ret(A a) {
    instrument::tick();
    FreeMonad m;
    m.repr_.template emplace<0>(std::move(a));
    return m;
  }

  static FreeMonad con(node_type node) {
    instrument::tick();
    FreeMonad m;
    m.repr_.template emplace<1>(std::make_shared<const node_type>(std::move(node)));
    return m;
  }

  bool is_ret() const noexcept { return repr_.index() == 0; }
  const A& value() const { return std::get<0>(repr_); }
  const node_type& node() const { return *std::get<1>(repr_); }

 private:
  FreeMonad() = default;

  std::variant<A, std::shared_ptr<const node_type>> repr_;
};

template <class Sig, class A, class K>
auto bind(const FreeMonad<Sig, A>& m, K&& k) -> std::invoke_result_t<K&, const A&> {
  using R = std::invoke_result_t<K&, const A&>;
  if (m.is_ret()) return k(m.value());
  return R::con(Sig::map([&k](const FreeMonad<Sig, A>& t) { return bind(t, k); }, m.node()));
}

template <class Sig, class A, class Fun>
auto fmap(Fun&& f, const FreeMonad<Sig, A>& m) {
  using B = ResultOf<Fun, A>;
  return bind(m, [&f](const A& a) { return FreeMonad<Sig, B>::ret(f(a)); });
}

/// ins x = Con (fmap Ret x)
template <class Sig, class A>
FreeMonad<Sig, A> fm_ins(const Apply<Sig, A>& fx) {
  return FreeMonad<Sig, A>::con(Sig::map([](const A& a) { return FreeMonad<Sig, A>::ret(a); }, fx));
}

/// The unique monad morphism out of the free monad extending `alg`, where
/// alg : Sig (M a) -> M a is natural.
template <class M, class Sig, class A, class Alg>
Apply<M, A> fold_free(const Alg& alg, const FreeMonad<Sig, A>& m) {
  if (m.is_ret()) return M::pure(m.value());
  return alg(Sig::map([&alg](const FreeMonad<Sig, A>& t) { return fold_free<M>(alg, t); }, m.node()));
}

template <class Sig>
struct FreeMonadF {
  template <class T>
  using of = FreeMonad<Sig, T>;

  template <class Fun, class T>
  static auto map(Fun&& f, const FreeMonad<Sig, T>& m) {
    return fmap(std::forward<Fun>(f), m);
  }
  template <class T>
  static FreeMonad<Sig, T> pure(T x) {
    return FreeMonad<Sig, T>::ret(std::move(x));
  }
  template <class T, class K>
  static auto bind(const FreeMonad<Sig, T>& m, K&& k) {
    return cayley::bind(m, std::forward<K>(k));
  }
};

// ---------------------------------------------------------------------------
// Interpreters and observation

/// Console programs run in the writer monad, one label per Output.
inline Writer<Value> console_alg(const Console<Writer<Value>>& c) {
  return {concat({c.label}, c.next.log), c.next.value};
}

/// Pair programs run in the list monad: the leaves, left to right.
inline List<Value> pair_alg(const Pair<List<Value>>& p) { return append(p.left, p.right); }

inline Writer<Value> run_console(const FreeMonad<ConsoleF, Value>& m) {
  return fold_free<WriterF>(console_alg, m);
}

inline List<Value> leaves(const FreeMonad<PairF, Value>& m) { return fold_free<ListF>(pair_alg, m); }

/// Ret 1 -> "1"; Con (l, r) -> "<l|r>"
inline std::string shape(const FreeMonad<PairF, Value>& m) {
  if (m.is_ret()) return m.value().encode();
  return "<" + shape(m.node().left) + "|" + shape(m.node().right) + ">";
}

inline Observation observe(const FreeMonad<ConsoleF, Value>& m) { return observe(run_console(m)); }

inline Observation observe(const FreeMonad<PairF, Value>& m) { return Observation{shape(m), {}}; }

// ---------------------------------------------------------------------------
// Exponential for functor composition

/// G^F at X: forall y. (X -> F y) -> G y. The quantifier is instantiated at R.
template <class F, class G, class X = Value, class R = Value>
struct CodExp {
  using Cont = std::function<Apply<F, R>(const X&)>;
  SharedFn<Apply<G, R>(const Cont&)> run;
};

/// phi t y = Exp (\k -> t (fmap k y)), for t : H (F x) -> G x natural.
template <class H, class F, class G, class R = Value, class Nat, class Y>
CodExp<F, G, Y, R> exp_to(Nat nat, Apply<H, Y> hy) {
  return {[nat = std::move(nat), hy = std::move(hy)](const typename CodExp<F, G, Y, R>::Cont& k) {
    return nat(H::map(k, hy));
  }};
}

/// phi^-1 t x = let Exp g = t x in g id
template <class F, class G, class R = Value, class T, class HFx>
Apply<G, R> exp_from(const T& t, const HFx& hfx) {
  CodExp<F, G, Apply<F, R>, R> e = t(hfx);
  return e.run([](const Apply<F, R>& x) { return x; });
}

// ---------------------------------------------------------------------------
// Codensity: the monoid of endomorphisms for composition

template <class M, class X = Value, class R = Value>
using Codensity = CodExp<M, M, X, R>;

/// return x = Exp (\h -> h x)
template <class M, class R = Value, class X>
Codensity<M, X, R> cod_ret(X x) {
  instrument::tick();
  return {[x = std::move(x)](const typename Codensity<M, X, R>::Cont& h) { return h(x); }};
}

/// Exp m >>= f = Exp (\h -> m (\x -> let Exp t = f x in t h))
template <class M, class X, class R, class K>
auto cod_bind(const Codensity<M, X, R>& m, K f) {
  using Out = std::invoke_result_t<K&, const X&>;
  instrument::tick();
  return Out{[run = m.run, f = std::move(f)](const typename Out::Cont& h) {
    return run([&f, &h](const X& x) { return f(x).run(h); });
  }};
}

/// rep m = Exp (m >>=)
template <class M, class R = Value, class X>
Codensity<M, X, R> cod_rep(Apply<M, X> m) {
  instrument::tick();
  return {[m = std::move(m)](const typename Codensity<M, X, R>::Cont& h) { return M::bind(m, h); }};
}

/// abs (Exp m) = m return
template <class M, class X>
Apply<M, X> cod_abs(const Codensity<M, X, X>& c) {
  return c.run([](const X& x) { return M::template pure<X>(x); });
}

template <class M, class X, class R, class Fun>
auto cod_map(Fun f, const Codensity<M, X, R>& c) {
  return cod_bind(c, [f = std::move(f)](const X& x) { return cod_ret<M, R>(f(x)); });
}

/// Codensity over M as a monad tag, with the quantifier at Value.
template <class M>
struct CodensityF {
  template <class T>
  using of = Codensity<M, T, Value>;

  template <class Fun, class T>
  static auto map(Fun&& f, const of<T>& c) {
    return cod_map(std::forward<Fun>(f), c);
  }
  template <class T>
  static of<T> pure(T x) {
    return cod_ret<M, Value>(std::move(x));
  }
  template <class T, class K>
  static auto bind(const of<T>& m, K&& k) {
    return cod_bind(m, std::forward<K>(k));
  }
};

}  // namespace cayley
