#pragma once

// Ordinary monoids, the monoid of endomorphisms, the Cayley embedding of one
// into the other, difference lists, and the fold out of the free monoid.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "cayley/instrument.hpp"
#include "cayley/list.hpp"
#include "cayley/shared_fn.hpp"

namespace cayley {

template <class M>
struct Monoid {
  M empty;
  std::function<M(const M&, const M&)> combine;
};

/// An endomorphism on M. Composition is associative with identity as unit.
template <class M>
struct Endo {
  SharedFn<M(const M&)> fn;

  M operator()(const M& x) const { return fn(x); }

  static Endo identity() {
    return {[](const M& x) { return x; }};
  }

  /// (f.compose(g))(x) = f(g(x))
  Endo compose(const Endo& inner) const {
    return {[outer = fn, inner = inner.fn](const M& x) { return outer(inner(x)); }};
  }
};

/// The monoid (M -> M, compose, id).
template <class M>
Monoid<Endo<M>> endo_monoid() {
  return {Endo<M>::identity(), [](const Endo<M>& f, const Endo<M>& g) { return f.compose(g); }};
}

/// rep(m) = \m'. m <> m'. A monoid homomorphism into Endo<M>.
template <class M>
Endo<M> cayley_rep(const M& m, const Monoid<M>& mon) {
  return {[m, combine = mon.combine](const M& rest) { return combine(m, rest); }};
}

/// abs(k) = k(e). abs(rep(m)) = m.
template <class M>
M cayley_abs(const Endo<M>& k, const Monoid<M>& mon) {
  return k(mon.empty);
}

// ---------------------------------------------------------------------------
// Standard monoids

inline Monoid<std::int64_t> sum_monoid() {
  return {0, [](const std::int64_t& a, const std::int64_t& b) { return a + b; }};
}

inline Monoid<std::int64_t> product_monoid() {
  return {1, [](const std::int64_t& a, const std::int64_t& b) { return a * b; }};
}

inline Monoid<std::string> string_monoid() {
  return {std::string{}, [](const std::string& a, const std::string& b) { return a + b; }};
}

template <class T>
Monoid<List<T>> list_monoid() {
  return {List<T>{}, [](const List<T>& a, const List<T>& b) { return append(a, b); }};
}

// ---------------------------------------------------------------------------
// Difference lists

/// A list represented by the function that prepends it, (xs ++). Appending is
/// composition, so it costs the same whatever the lengths involved.
template <class T>
class DList {
 public:
  using Body = std::function<List<T>(const List<T>&)>;

  DList() : body_(identity_body()) {}

  static DList from(List<T> xs) {
    return DList(std::make_shared<const Body>(
        [xs = std::move(xs)](const List<T>& rest) { return cayley::append(xs, rest); }));
  }

  static DList singleton(T x) {
    return DList(std::make_shared<const Body>(
        [x = std::move(x)](const List<T>& rest) { return List<T>::cons(x, rest); }));
  }

  /// Function composition: this, then `rhs`, in list order.
  DList append(const DList& rhs) const {
    instrument::tick();
    return DList(std::make_shared<const Body>(
        [l = body_, r = rhs.body_](const List<T>& rest) { return (*l)((*r)(rest)); }));
  }

  List<T> operator()(const List<T>& rest) const { return (*body_)(rest); }

  /// abs: apply to the empty list.
  List<T> to_list() const { return (*body_)(List<T>{}); }

 private:
  explicit DList(std::shared_ptr<const Body> body) : body_(std::move(body)) {}

  static std::shared_ptr<const Body> identity_body() {
    static const auto id = std::make_shared<const Body>([](const List<T>& rest) { return rest; });
    return id;
  }

  std::shared_ptr<const Body> body_;
};

template <class T>
DList<T> dlist_from(List<T> xs) {
  return DList<T>::from(std::move(xs));
}

template <class T>
DList<T> dlist_append(const DList<T>& a, const DList<T>& b) {
  return a.append(b);
}

template <class T>
List<T> dlist_to(const DList<T>& d) {
  return d.to_list();
}

template <class T>
Monoid<DList<T>> dlist_monoid() {
  return {DList<T>{}, [](const DList<T>& a, const DList<T>& b) { return a.append(b); }};
}

// ---------------------------------------------------------------------------
// Free monoid

/// The unique monoid homomorphism List<A> -> G extending f. Folds from the
/// right, matching the carrier's initial-algebra structure I + A x X.
template <class A, class G, class F>
G list_fold_free(F&& f, const Monoid<G>& target, const List<A>& xs) {
  const auto items = xs.to_vector();
  G acc = target.empty;
  for (std::size_t i = items.size(); i-- > 0;) acc = target.combine(f(items[i]), acc);
  return acc;
}

/// Insertion of generators: a -> [a].
template <class A>
List<A> list_ins(A a) {
  return List<A>::cons(std::move(a), List<A>{});
}

}  // namespace cayley
