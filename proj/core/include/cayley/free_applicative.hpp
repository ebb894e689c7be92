#pragma once

// The free applicative functor in three encodings.
//
//   FreeAp:  Pure a | Rec (F c) (FreeAp d) ((c, d) -> a)
//   FreeApL: Pure a | Rec (F b) (FreeApL (b -> a))
//   FreeApR: Pure a | Rec (F (b -> a)) (FreeApR b)
//
// All three run effects head first. Result values and functions live at
// Value; post functions take a pair.

#include <memory>
#include <utility>
#include <variant>

#include "cayley/functors.hpp"
#include "cayley/instrument.hpp"

namespace cayley {

namespace detail {

/// \f. \x. f x, packaged as an uncurried post function on (f, x).
inline Fn apply_pair() {
  return Fn([](const Value& p) { return p.first()(p.second()); });
}

/// pure (,) as a curried function value.
inline Fn pair_curried() {
  return curry([](const Value& a, const Value& b) { return pair(a, b); });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Day-based encoding

template <class F>
class FreeAp {
 public:
  struct Node {
    Apply<F, Value> head;
    FreeAp rest;
    Fn post;
  };

  static FreeAp pure(Value a) {
    instrument::tick();
    FreeAp p;
    p.repr_ = std::move(a);
    return p;
  }

  static FreeAp rec(Apply<F, Value> head, FreeAp rest, Fn post) {
    instrument::tick();
    FreeAp p;
    p.repr_ = std::make_shared<const Node>(Node{std::move(head), std::move(rest), std::move(post)});
    return p;
  }

  bool is_pure() const noexcept { return repr_.index() == 0; }
  const Value& value() const { return std::get<0>(repr_); }
  const Node& node() const { return *std::get<1>(repr_); }

 private:
  FreeAp() = default;

  std::variant<Value, std::shared_ptr<const Node>> repr_;
};

template <class F>
struct FreeApF {
  template <class T>
  using of = FreeAp<F>;

  /// Constant time: only the top post function changes.
  static FreeAp<F> map(const Fn& g, const FreeAp<F>& p) {
    if (p.is_pure()) return FreeAp<F>::pure(g(p.value()));
    const auto& n = p.node();
    return FreeAp<F>::rec(n.head, n.rest, n.post.then(g));
  }

  static FreeAp<F> pure(Value a) { return FreeAp<F>::pure(std::move(a)); }

  /// Pure g <*> z = fmap g z
  /// Rec x y f <*> z = Rec x (pure (,) <*> y <*> z) (\(c, (d, a)) -> f (c, d) a)
  static FreeAp<F> ap(const FreeAp<F>& fs, const FreeAp<F>& z) {
    if (fs.is_pure()) return map(fs.value().as_fn(), z);
    const auto& n = fs.node();
    FreeAp<F> rest = ap(map(detail::pair_curried(), n.rest), z);
    Fn f = n.post;
    Fn post([f](const Value& p) {
      const Value& c = p.first();
      const Value& da = p.second();
      return f(pair(c, da.first()))(da.second());
    });
    return FreeAp<F>::rec(n.head, std::move(rest), std::move(post));
  }
};

/// ins x = Rec x (Pure ()) fst
template <class F>
FreeAp<F> fa_ins(Apply<F, Value> x) {
  return FreeAp<F>::rec(std::move(x), FreeAp<F>::pure(Unit{}), fst_fn());
}

template <class F>
FreeAp<F> fa_pure(Value a) {
  return FreeApF<F>::pure(std::move(a));
}

template <class F>
FreeAp<F> fa_map(const Fn& g, const FreeAp<F>& p) {
  return FreeApF<F>::map(g, p);
}

template <class F>
FreeAp<F> fa_ap(const FreeAp<F>& fs, const FreeAp<F>& xs) {
  return FreeApF<F>::ap(fs, xs);
}

/// free f (Pure x) = pure x
/// free f (Rec x y g) = pure (curry g) <*> f x <*> free f y
template <ApplicativeTag B, class F, class Nat>
Apply<B, Value> fa_fold(const Nat& nat, const FreeAp<F>& p) {
  if (p.is_pure()) return B::pure(p.value());
  const auto& n = p.node();
  Fn g = n.post;
  Fn curried = curry([g](const Value& c, const Value& d) { return g(pair(c, d)); });
  return B::ap(B::ap(B::pure(Value(curried)), nat(n.head)), fa_fold<B>(nat, n.rest));
}

/// Number of effects along the spine.
template <class F>
std::size_t fa_length(const FreeAp<F>& p) {
  std::size_t n = 0;
  for (const FreeAp<F>* q = &p; !q->is_pure(); q = &q->node().rest) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Left encoding: Rec' (F b) (FreeApL (b -> a))

template <class F>
class FreeApL {
 public:
  struct Node {
    Apply<F, Value> head;
    FreeApL rest;
  };

  static FreeApL pure(Value a) {
    instrument::tick();
    FreeApL p;
    p.repr_ = std::move(a);
    return p;
  }

  static FreeApL rec(Apply<F, Value> head, FreeApL rest) {
    instrument::tick();
    FreeApL p;
    p.repr_ = std::make_shared<const Node>(Node{std::move(head), std::move(rest)});
    return p;
  }

  bool is_pure() const noexcept { return repr_.index() == 0; }
  const Value& value() const { return std::get<0>(repr_); }
  const Node& node() const { return *std::get<1>(repr_); }

 private:
  FreeApL() = default;

  std::variant<Value, std::shared_ptr<const Node>> repr_;
};

template <class F>
struct FreeApLF {
  template <class T>
  using of = FreeApL<F>;

  /// fmap f (Rec' x k) = Rec' x (fmap (f .) k)
  static FreeApL<F> map(const Fn& f, const FreeApL<F>& p) {
    if (p.is_pure()) return FreeApL<F>::pure(f(p.value()));
    const auto& n = p.node();
    Fn post_compose([f](const Value& g) { return Value(g.as_fn().then(f)); });
    return FreeApL<F>::rec(n.head, map(post_compose, n.rest));
  }

  static FreeApL<F> pure(Value a) { return FreeApL<F>::pure(std::move(a)); }

  /// Rec' x k <*> y = Rec' x (pure (\g v c -> g c v) <*> k <*> y)
  static FreeApL<F> ap(const FreeApL<F>& fs, const FreeApL<F>& y) {
    if (fs.is_pure()) return map(fs.value().as_fn(), y);
    const auto& n = fs.node();
    Fn reorder = curry([](const Value& g, const Value& v) {
      return Value(Fn([g, v](const Value& c) { return g(c)(v); }));
    });
    return FreeApL<F>::rec(n.head, ap(map(reorder, n.rest), y));
  }
};

/// ins x = Rec' x (Pure id)
template <class F>
FreeApL<F> fal_ins(Apply<F, Value> x) {
  return FreeApL<F>::rec(std::move(x), FreeApL<F>::pure(Fn::identity()));
}

/// free f (Rec' x k) = fmap (\b g -> g b) (f x) <*> free f k
template <ApplicativeTag B, class F, class Nat>
Apply<B, Value> fal_fold(const Nat& nat, const FreeApL<F>& p) {
  if (p.is_pure()) return B::pure(p.value());
  const auto& n = p.node();
  Fn feed = curry([](const Value& b, const Value& g) { return g(b); });
  return B::ap(B::map(feed, nat(n.head)), fal_fold<B>(nat, n.rest));
}

/// Rec x y f -> Rec' x (fmap (\d c -> f (c, d)) (to_left y))
template <class F>
FreeApL<F> fa_to_left(const FreeAp<F>& p) {
  if (p.is_pure()) return FreeApL<F>::pure(p.value());
  const auto& n = p.node();
  Fn f = n.post;
  Fn flip_curry([f](const Value& d) { return Value(Fn([f, d](const Value& c) { return f(pair(c, d)); })); });
  return FreeApL<F>::rec(n.head, FreeApLF<F>::map(flip_curry, fa_to_left(n.rest)));
}

/// Rec' x k -> Rec x (from_left k) (\(c, h) -> h c)
template <class F>
FreeAp<F> fa_from_left(const FreeApL<F>& p) {
  if (p.is_pure()) return FreeAp<F>::pure(p.value());
  const auto& n = p.node();
  Fn apply_second([](const Value& ch) { return ch.second()(ch.first()); });
  return FreeAp<F>::rec(n.head, fa_from_left(n.rest), apply_second);
}

// ---------------------------------------------------------------------------
// Right encoding: Rec'' (F (b -> a)) (FreeApR b)

template <class F>
class FreeApR {
 public:
  struct Node {
    Apply<F, Value> head;
    FreeApR rest;
  };

  static FreeApR pure(Value a) {
    instrument::tick();
    FreeApR p;
    p.repr_ = std::move(a);
    return p;
  }

  static FreeApR rec(Apply<F, Value> head, FreeApR rest) {
    instrument::tick();
    FreeApR p;
    p.repr_ = std::make_shared<const Node>(Node{std::move(head), std::move(rest)});
    return p;
  }

  bool is_pure() const noexcept { return repr_.index() == 0; }
  const Value& value() const { return std::get<0>(repr_); }
  const Node& node() const { return *std::get<1>(repr_); }

 private:
  FreeApR() = default;

  std::variant<Value, std::shared_ptr<const Node>> repr_;
};

template <FunctorTag F>
struct FreeApRF {
  template <class T>
  using of = FreeApR<F>;

  /// fmap f (Rec'' h z) = Rec'' (fmap (f .) h) z
  static FreeApR<F> map(const Fn& f, const FreeApR<F>& p) {
    if (p.is_pure()) return FreeApR<F>::pure(f(p.value()));
    const auto& n = p.node();
    Fn post_compose([f](const Value& g) { return Value(g.as_fn().then(f)); });
    return FreeApR<F>::rec(F::map(post_compose, n.head), n.rest);
  }

  static FreeApR<F> pure(Value a) { return FreeApR<F>::pure(std::move(a)); }

  /// Rec'' h z <*> y = Rec'' (fmap (\g (d, v) -> g d v) h) (pure (,) <*> z <*> y)
  static FreeApR<F> ap(const FreeApR<F>& fs, const FreeApR<F>& y) {
    if (fs.is_pure()) return map(fs.value().as_fn(), y);
    const auto& n = fs.node();
    Fn uncurry2([](const Value& g) {
      return Value(Fn([g](const Value& dv) { return g(dv.first())(dv.second()); }));
    });
    return FreeApR<F>::rec(F::map(uncurry2, n.head), ap(map(detail::pair_curried(), n.rest), y));
  }
};

/// ins x = Rec'' (fmap const x) (Pure ())
template <FunctorTag F>
FreeApR<F> far_ins(const Apply<F, Value>& x) {
  Fn konst([](const Value& a) { return Value(Fn([a](const Value&) { return a; })); });
  return FreeApR<F>::rec(F::map(konst, x), FreeApR<F>::pure(Unit{}));
}

/// free f (Rec'' h z) = f h <*> free f z
template <ApplicativeTag B, class F, class Nat>
Apply<B, Value> far_fold(const Nat& nat, const FreeApR<F>& p) {
  if (p.is_pure()) return B::pure(p.value());
  const auto& n = p.node();
  return B::ap(nat(n.head), far_fold<B>(nat, n.rest));
}

/// Rec x y f -> Rec'' (fmap (\c d -> f (c, d)) x) (to_right y)
template <FunctorTag F>
FreeApR<F> fa_to_right(const FreeAp<F>& p) {
  if (p.is_pure()) return FreeApR<F>::pure(p.value());
  const auto& n = p.node();
  Fn f = n.post;
  Fn curried([f](const Value& c) { return Value(Fn([f, c](const Value& d) { return f(pair(c, d)); })); });
  return FreeApR<F>::rec(F::map(curried, n.head), fa_to_right(n.rest));
}

/// Rec'' h z -> Rec h (from_right z) (\(g, d) -> g d)
template <class F>
FreeAp<F> fa_from_right(const FreeApR<F>& p) {
  if (p.is_pure()) return FreeAp<F>::pure(p.value());
  const auto& n = p.node();
  return FreeAp<F>::rec(n.head, fa_from_right(n.rest), detail::apply_pair());
}

// ---------------------------------------------------------------------------
// Running Console programs in the writer applicative

inline Writer<Value> console_to_writer(const Console<Value>& c) { return {{c.label}, c.next}; }

inline Writer<Value> run_console(const FreeAp<ConsoleF>& p) {
  return fa_fold<WriterF>(console_to_writer, p);
}

inline Writer<Value> run_console(const FreeApL<ConsoleF>& p) {
  return fal_fold<WriterF>(console_to_writer, p);
}

inline Writer<Value> run_console(const FreeApR<ConsoleF>& p) {
  return far_fold<WriterF>(console_to_writer, p);
}

inline Observation observe(const FreeAp<ConsoleF>& p) { return observe(run_console(p)); }
inline Observation observe(const FreeApL<ConsoleF>& p) { return observe(run_console(p)); }
inline Observation observe(const FreeApR<ConsoleF>& p) { return observe(run_console(p)); }

}  // namespace cayley
