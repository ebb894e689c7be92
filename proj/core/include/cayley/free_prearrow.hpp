#pragma once

// The free pre-arrow over a profunctor, and the free arrow over a strong
// profunctor (the same carrier with first pushed through the chain).
//
//   Hom (x -> y) | Comp (A x p) (Free A p y)

#include <memory>
#include <utility>
#include <variant>

#include "cayley/instrument.hpp"
#include "cayley/profunctor.hpp"

namespace cayley {

template <class A>
class FreePreArrow {
 public:
  struct Node {
    typename A::type head;
    FreePreArrow rest;
  };

  static FreePreArrow hom(Fn f) {
    instrument::tick();
    FreePreArrow p;
    p.repr_ = std::move(f);
    return p;
  }

  static FreePreArrow comp(typename A::type head, FreePreArrow rest) {
    instrument::tick();
    FreePreArrow p;
    p.repr_ = std::make_shared<const Node>(Node{std::move(head), std::move(rest)});
    return p;
  }

  bool is_hom() const noexcept { return repr_.index() == 0; }
  const Fn& fn() const { return std::get<0>(repr_); }
  const Node& node() const { return *std::get<1>(repr_); }

 private:
  FreePreArrow() = default;

  std::variant<Fn, std::shared_ptr<const Node>> repr_;
};

/// Tag for the free pre-arrow. `Target` interprets atoms for observation:
/// observe folds with the identity into Target, so A must equal Target
/// whenever observe is used.
template <ProfunctorTag A, class Target = A>
struct FreePreArrowP {
  using type = FreePreArrow<A>;

  /// dimap f id only touches the first atom.
  static type lmap(const Fn& f, const type& p) {
    if (p.is_hom()) return type::hom(f.then(p.fn()));
    return type::comp(cayley::lmap<A>(f, p.node().head), p.node().rest);
  }

  /// dimap id g only touches the trailing Hom.
  static type rmap(const Fn& g, const type& p) {
    if (p.is_hom()) return type::hom(p.fn().then(g));
    return type::comp(p.node().head, rmap(g, p.node().rest));
  }

  /// dimap f g (Hom h) = Hom (g . h . f)
  /// dimap f g (Comp x y) = Comp (dimap f id x) (dimap id g y)
  static type dimap(const Fn& f, const Fn& g, const type& p) { return lmap(f, rmap(g, p)); }

  static type arr(const Fn& f) { return type::hom(f); }

  /// Hom f >>> c = dimap f id c; Comp x y >>> c = Comp x (y >>> c)
  static type compose(const type& a, const type& c) {
    if (a.is_hom()) return lmap(a.fn(), c);
    return type::comp(a.node().head, compose(a.node().rest, c));
  }

  /// first (Hom f) = Hom (f x id); first (Comp x y) = Comp (first x) (first y)
  static type first(const type& p)
    requires StrongTag<A>
  {
    if (p.is_hom()) return type::hom(on_first(p.fn()));
    return type::comp(A::first(p.node().head), first(p.node().rest));
  }

  static Observation observe(const type& p, std::span<const Value> xs)
    requires PreArrowTag<Target>
  {
    return Target::observe(fold(p), xs);
  }

  static typename Target::type fold(const type& p)
    requires PreArrowTag<Target>
  {
    if (p.is_hom()) return Target::arr(p.fn());
    return Target::compose(p.node().head, fold(p.node().rest));
  }
};

/// ins x = Comp x (arr id)
template <class A>
FreePreArrow<A> fp_ins(typename A::type x) {
  return FreePreArrow<A>::comp(std::move(x), FreePreArrow<A>::hom(Fn::identity()));
}

/// free f (Hom g) = arr g; free f (Comp x y) = f x >>> free f y
///
/// For the free arrow the result preserves first only when nat does.
template <PreArrowTag B, class A, class Nat>
typename B::type fp_fold(const Nat& nat, const FreePreArrow<A>& p) {
  if (p.is_hom()) return B::arr(p.fn());
  return B::compose(nat(p.node().head), fp_fold<B>(nat, p.node().rest));
}

/// Number of atoms in the chain.
template <class A>
std::size_t fp_length(const FreePreArrow<A>& p) {
  std::size_t n = 0;
  for (const FreePreArrow<A>* q = &p; !q->is_hom(); q = &q->node().rest) ++n;
  return n;
}

}  // namespace cayley
