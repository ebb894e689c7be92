#pragma once

// Law suites for every algebraic structure in the library.
//
// A subject is a small object that supplies the operations of the structure
// under test plus a generator and an observation for its carrier. Laws are
// checked by observational equality: both sides are interpreted into an
// Observation and compared. Natural transformations are checked at a single
// instantiation (bounded integers, with short strings for strength
// payloads).

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/gen.hpp"
#include "cayley/observation.hpp"
#include "cayley/value.hpp"

namespace cayley {

/// Bad harness configuration, e.g. an unknown suite id.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Failure {
  std::uint64_t seed = 0;
  std::string message;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct LawReport {
  std::string law_name;
  std::size_t trials = 0;
  std::vector<Failure> failures;

  bool passed() const noexcept { return failures.empty(); }
  friend bool operator==(const LawReport&, const LawReport&) = default;
};

/// {"law_name": ..., "trials": ..., "failures": [{"seed": ..., "message": ...}]}
std::string to_json(const LawReport& report);
LawReport law_report_from_json(std::string_view json);

/// One equation. `check` returns a counterexample description, or nothing
/// when both sides agree.
struct Law {
  std::string name;
  std::function<std::optional<std::string>(Gen&)> check;
};

/// Runs every law `trials` times. Trial t of every law uses
/// Gen(mix_seed(gen.seed(), t), gen.size()); that seed is what a failure
/// reports, so rerunning the law with it reproduces the counterexample.
LawReport run_laws(std::string name, std::span<const Law> laws, const Gen& gen, std::size_t trials);

/// Nothing when equal, otherwise "lhs /= rhs".
std::optional<std::string> differ(const Observation& lhs, const Observation& rhs);

/// Known suite ids, in the order check_laws recognises them.
std::span<const std::string_view> suite_ids();

namespace laws {

// ---------------------------------------------------------------------------
// Subject concepts

template <class I>
concept MonoidSubject = requires(const I& i, Gen& g, const typename I::value_type& a) {
  { i.empty() } -> std::convertible_to<typename I::value_type>;
  { i.combine(a, a) } -> std::convertible_to<typename I::value_type>;
  { i.generate(g) } -> std::convertible_to<typename I::value_type>;
  { i.observe(a) } -> std::same_as<Observation>;
};

template <class I>
concept FunctorSubject =
    requires(const I& i, Gen& g, const Ty& ty, const Fn& f, const typename I::value_type& a) {
      { i.map(f, a) } -> std::convertible_to<typename I::value_type>;
      { i.generate(g, ty) } -> std::convertible_to<typename I::value_type>;
      { i.observe(a) } -> std::same_as<Observation>;
    };

template <class I>
using KleisliOf = std::function<typename I::value_type(const Value&)>;

template <class I>
concept MonadSubject =
    requires(const I& i, Gen& g, const Value& v, const typename I::value_type& m, const KleisliOf<I>& k) {
      { i.pure(v) } -> std::convertible_to<typename I::value_type>;
      { i.bind(m, k) } -> std::convertible_to<typename I::value_type>;
      { i.generate(g) } -> std::convertible_to<typename I::value_type>;
      { i.kleisli(g) } -> std::convertible_to<KleisliOf<I>>;
      { i.observe(m) } -> std::same_as<Observation>;
    };

template <class I>
concept ApplicativeSubject =
    requires(const I& i, Gen& g, const Ty& ty, const Value& v, const typename I::value_type& a) {
      { i.pure(v) } -> std::convertible_to<typename I::value_type>;
      { i.ap(a, a) } -> std::convertible_to<typename I::value_type>;
      { i.generate(g, ty) } -> std::convertible_to<typename I::value_type>;
      { i.observe(a) } -> std::same_as<Observation>;
    };

template <class I>
concept MonoidalSubject =
    FunctorSubject<I> && requires(const I& i, const typename I::value_type& a) {
      { i.unit() } -> std::convertible_to<typename I::value_type>;
      { i.zip(a, a) } -> std::convertible_to<typename I::value_type>;
    };

template <class I>
concept ProfunctorSubject = requires(const I& i, Gen& g, const Ty& ty, const Fn& f,
                                     const typename I::value_type& a, std::span<const Value> xs) {
  { i.dimap(f, f, a) } -> std::convertible_to<typename I::value_type>;
  { i.generate(g) } -> std::convertible_to<typename I::value_type>;
  { i.input(g, ty) } -> std::convertible_to<Value>;
  { i.observe(a, xs) } -> std::same_as<Observation>;
};

template <class I>
concept PreArrowSubject =
    ProfunctorSubject<I> && requires(const I& i, const Fn& f, const typename I::value_type& a) {
      { i.arr(f) } -> std::convertible_to<typename I::value_type>;
      { i.compose(a, a) } -> std::convertible_to<typename I::value_type>;
    };

template <class I>
concept StrongSubject = ProfunctorSubject<I> && requires(const I& i, const typename I::value_type& a) {
  { i.first(a) } -> std::convertible_to<typename I::value_type>;
};

template <class I>
concept ArrowSubject = PreArrowSubject<I> && StrongSubject<I>;

// ---------------------------------------------------------------------------
// Helpers

inline Ty int_ty() { return Ty::integer(); }
inline Ty int_fn_ty() { return Ty::function(Ty::integer(), Ty::integer()); }

inline Fn compose_fn(const Fn& outer, const Fn& inner) { return inner.then(outer); }

template <ProfunctorSubject I>
std::vector<Value> inputs(const I& inst, Gen& g, const Ty& ty, std::size_t n = kDefaultProbes) {
  std::vector<Value> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(inst.input(g, ty));
  return out;
}

template <ProfunctorSubject I>
std::optional<std::string> same_at(const I& inst, const typename I::value_type& lhs,
                                   const typename I::value_type& rhs, std::span<const Value> xs) {
  return differ(inst.observe(lhs, xs), inst.observe(rhs, xs));
}

// ---------------------------------------------------------------------------
// Suites

template <MonoidSubject I>
std::vector<Law> monoid(const I& inst) {
  return {
      {"monoid.left_unit",
       [inst](Gen& g) {
         auto a = inst.generate(g);
         return differ(inst.observe(inst.combine(inst.empty(), a)), inst.observe(a));
       }},
      {"monoid.right_unit",
       [inst](Gen& g) {
         auto a = inst.generate(g);
         return differ(inst.observe(inst.combine(a, inst.empty())), inst.observe(a));
       }},
      {"monoid.associativity",
       [inst](Gen& g) {
         auto a = inst.generate(g);
         auto b = inst.generate(g);
         auto c = inst.generate(g);
         return differ(inst.observe(inst.combine(inst.combine(a, b), c)),
                       inst.observe(inst.combine(a, inst.combine(b, c))));
       }},
  };
}

template <FunctorSubject I>
std::vector<Law> functor(const I& inst) {
  return {
      {"functor.identity",
       [inst](Gen& g) {
         auto a = inst.generate(g, int_ty());
         return differ(inst.observe(inst.map(Fn::identity(), a)), inst.observe(a));
       }},
      {"functor.composition",
       [inst](Gen& g) {
         auto a = inst.generate(g, int_ty());
         Fn f = g.function(int_ty(), int_ty());
         Fn h = g.function(int_ty(), int_ty());
         return differ(inst.observe(inst.map(compose_fn(h, f), a)),
                       inst.observe(inst.map(h, inst.map(f, a))));
       }},
  };
}

template <MonadSubject I>
std::vector<Law> monad(const I& inst) {
  using M = typename I::value_type;
  return {
      {"monad.left_unit",
       [inst](Gen& g) {
         Value a = g.integer();
         auto k = inst.kleisli(g);
         return differ(inst.observe(inst.bind(inst.pure(a), k)), inst.observe(k(a)));
       }},
      {"monad.right_unit",
       [inst](Gen& g) {
         M m = inst.generate(g);
         KleisliOf<I> ret = [inst](const Value& x) { return inst.pure(x); };
         return differ(inst.observe(inst.bind(m, ret)), inst.observe(m));
       }},
      {"monad.associativity",
       [inst](Gen& g) {
         M m = inst.generate(g);
         auto k = inst.kleisli(g);
         auto h = inst.kleisli(g);
         KleisliOf<I> kh = [inst, k, h](const Value& x) { return inst.bind(k(x), h); };
         return differ(inst.observe(inst.bind(inst.bind(m, k), h)), inst.observe(inst.bind(m, kh)));
       }},
  };
}

template <ApplicativeSubject I>
std::vector<Law> applicative(const I& inst) {
  return {
      {"applicative.identity",
       [inst](Gen& g) {
         auto v = inst.generate(g, int_ty());
         return differ(inst.observe(inst.ap(inst.pure(Fn::identity()), v)), inst.observe(v));
       }},
      {"applicative.homomorphism",
       [inst](Gen& g) {
         Fn f = g.function(int_ty(), int_ty());
         Value x = g.integer();
         return differ(inst.observe(inst.ap(inst.pure(f), inst.pure(x))), inst.observe(inst.pure(f(x))));
       }},
      {"applicative.interchange",
       [inst](Gen& g) {
         auto u = inst.generate(g, int_fn_ty());
         Value y = g.integer();
         Fn at_y([y](const Value& f) { return f(y); });
         return differ(inst.observe(inst.ap(u, inst.pure(y))), inst.observe(inst.ap(inst.pure(at_y), u)));
       }},
      {"applicative.composition",
       [inst](Gen& g) {
         auto u = inst.generate(g, int_fn_ty());
         auto v = inst.generate(g, int_fn_ty());
         auto w = inst.generate(g, int_ty());
         Fn dot = curry([](const Value& f, const Value& h) { return Value(compose_fn(f.as_fn(), h.as_fn())); });
         auto lhs = inst.ap(inst.ap(inst.ap(inst.pure(dot), u), v), w);
         auto rhs = inst.ap(u, inst.ap(v, w));
         return differ(inst.observe(lhs), inst.observe(rhs));
       }},
  };
}

template <MonoidalSubject I>
std::vector<Law> monoidal(const I& inst) {
  std::vector<Law> out = {
      {"monoidal.left_unit",
       [inst](Gen& g) {
         auto v = inst.generate(g, int_ty());
         return differ(inst.observe(inst.map(snd_fn(), inst.zip(inst.unit(), v))), inst.observe(v));
       }},
      {"monoidal.right_unit",
       [inst](Gen& g) {
         auto v = inst.generate(g, int_ty());
         return differ(inst.observe(inst.map(fst_fn(), inst.zip(v, inst.unit()))), inst.observe(v));
       }},
      {"monoidal.associativity",
       [inst](Gen& g) {
         auto u = inst.generate(g, int_ty());
         auto v = inst.generate(g, int_ty());
         auto w = inst.generate(g, int_ty());
         auto lhs = inst.map(Fn([](const Value& p) { return assoc(p); }), inst.zip(inst.zip(u, v), w));
         return differ(inst.observe(lhs), inst.observe(inst.zip(u, inst.zip(v, w))));
       }},
      {"monoidal.naturality",
       [inst](Gen& g) {
         auto u = inst.generate(g, int_ty());
         auto v = inst.generate(g, int_ty());
         Fn f = g.function(int_ty(), int_ty());
         Fn h = g.function(int_ty(), int_ty());
         Fn both([f, h](const Value& p) { return pair(f(p.first()), h(p.second())); });
         return differ(inst.observe(inst.map(both, inst.zip(u, v))),
                       inst.observe(inst.zip(inst.map(f, u), inst.map(h, v))));
       }},
  };
  if constexpr (ApplicativeSubject<I>) {
    out.push_back({"monoidal.agrees_with_ap", [inst](Gen& g) {
                     auto f = inst.generate(g, int_fn_ty());
                     auto x = inst.generate(g, int_ty());
                     Fn apply([](const Value& p) { return p.first()(p.second()); });
                     return differ(inst.observe(inst.ap(f, x)), inst.observe(inst.map(apply, inst.zip(f, x))));
                   }});
  }
  return out;
}

template <ProfunctorSubject I>
std::vector<Law> profunctor(const I& inst) {
  return {
      {"profunctor.identity",
       [inst](Gen& g) {
         auto a = inst.generate(g);
         auto xs = inputs(inst, g, int_ty());
         return same_at(inst, inst.dimap(Fn::identity(), Fn::identity(), a), a, xs);
       }},
      {"profunctor.composition",
       [inst](Gen& g) {
         auto a = inst.generate(g);
         Fn f = g.function(int_ty(), int_ty());
         Fn h = g.function(int_ty(), int_ty());
         Fn p = g.function(int_ty(), int_ty());
         Fn q = g.function(int_ty(), int_ty());
         auto xs = inputs(inst, g, int_ty());
         // dimap (f . h) (p . q) = dimap h p . dimap f q
         auto lhs = inst.dimap(compose_fn(f, h), compose_fn(p, q), a);
         auto rhs = inst.dimap(h, p, inst.dimap(f, q, a));
         return same_at(inst, lhs, rhs, xs);
       }},
  };
}

template <PreArrowSubject I>
std::vector<Law> prearrow(const I& inst) {
  return {
      {"prearrow.associativity",
       [inst](Gen& g) {
         auto a = inst.generate(g);
         auto b = inst.generate(g);
         auto c = inst.generate(g);
         auto xs = inputs(inst, g, int_ty());
         return same_at(inst, inst.compose(inst.compose(a, b), c), inst.compose(a, inst.compose(b, c)), xs);
       }},
      {"prearrow.arr_left",
       [inst](Gen& g) {
         auto a = inst.generate(g);
         Fn f = g.function(int_ty(), int_ty());
         auto xs = inputs(inst, g, int_ty());
         return same_at(inst, inst.compose(inst.arr(f), a), inst.dimap(f, Fn::identity(), a), xs);
       }},
      {"prearrow.arr_right",
       [inst](Gen& g) {
         auto a = inst.generate(g);
         Fn f = g.function(int_ty(), int_ty());
         auto xs = inputs(inst, g, int_ty());
         return same_at(inst, inst.compose(a, inst.arr(f)), inst.dimap(Fn::identity(), f, a), xs);
       }},
      {"prearrow.arr_functor",
       [inst](Gen& g) {
         Fn f = g.function(int_ty(), int_ty());
         Fn h = g.function(int_ty(), int_ty());
         auto xs = inputs(inst, g, int_ty());
         return same_at(inst, inst.arr(compose_fn(h, f)), inst.compose(inst.arr(f), inst.arr(h)), xs);
       }},
  };
}

template <StrongSubject I>
std::vector<Law> strength(const I& inst) {
  const Ty with_z = Ty::pair(int_ty(), Ty::string());
  const Ty nested = Ty::pair(with_z, Ty::string());
  return {
      {"strength.unit",
       [inst, with_z](Gen& g) {
         auto a = inst.generate(g);
         auto xs = inputs(inst, g, with_z);
         return same_at(inst, inst.dimap(Fn::identity(), fst_fn(), inst.first(a)),
                        inst.dimap(fst_fn(), Fn::identity(), a), xs);
       }},
      {"strength.associativity",
       [inst, nested](Gen& g) {
         auto a = inst.generate(g);
         auto xs = inputs(inst, g, nested);
         Fn alpha([](const Value& p) { return assoc(p); });
         Fn alpha_inv([](const Value& p) { return unassoc(p); });
         return same_at(inst, inst.first(inst.first(a)), inst.dimap(alpha, alpha_inv, inst.first(a)), xs);
       }},
      {"strength.dinaturality",
       [inst, with_z](Gen& g) {
         auto a = inst.generate(g);
         Fn f = g.function(Ty::string(), Ty::string());
         auto xs = inputs(inst, g, with_z);
         return same_at(inst, inst.dimap(on_second(f), Fn::identity(), inst.first(a)),
                        inst.dimap(Fn::identity(), on_second(f), inst.first(a)), xs);
       }},
  };
}

/// The two compatibility laws between first and the pre-arrow structure.
template <ArrowSubject I>
std::vector<Law> arrow_compatibility(const I& inst) {
  const Ty with_z = Ty::pair(int_ty(), Ty::string());
  return {
      {"arrow.first_arr",
       [inst, with_z](Gen& g) {
         Fn f = g.function(int_ty(), int_ty());
         auto xs = inputs(inst, g, with_z);
         return same_at(inst, inst.first(inst.arr(f)), inst.arr(on_first(f)), xs);
       }},
      {"arrow.first_compose",
       [inst, with_z](Gen& g) {
         auto a = inst.generate(g);
         auto b = inst.generate(g);
         auto xs = inputs(inst, g, with_z);
         return same_at(inst, inst.first(inst.compose(a, b)), inst.compose(inst.first(a), inst.first(b)), xs);
       }},
  };
}

template <ArrowSubject I>
std::vector<Law> arrow(const I& inst) {
  std::vector<Law> out = prearrow(inst);
  for (auto& l : strength(inst)) out.push_back(std::move(l));
  for (auto& l : arrow_compatibility(inst)) out.push_back(std::move(l));
  return out;
}

}  // namespace laws

/// Runs suite `suite` against `instance`. Throws ConfigError for an unknown
/// suite id or when the instance lacks the operations the suite needs.
template <class I>
LawReport check_laws(std::string_view suite, const I& instance, const Gen& gen, std::size_t trials) {
  auto run = [&](std::vector<Law> ls) { return run_laws(std::string(suite), ls, gen, trials); };
  auto missing = [&]() -> LawReport {
    throw ConfigError("instance does not provide the operations of suite '" + std::string(suite) + "'");
  };
  if (suite == "monoid") {
    if constexpr (laws::MonoidSubject<I>) return run(laws::monoid(instance)); else return missing();
  }
  if (suite == "functor") {
    if constexpr (laws::FunctorSubject<I>) return run(laws::functor(instance)); else return missing();
  }
  if (suite == "monad") {
    if constexpr (laws::MonadSubject<I>) return run(laws::monad(instance)); else return missing();
  }
  if (suite == "applicative") {
    if constexpr (laws::ApplicativeSubject<I>) return run(laws::applicative(instance)); else return missing();
  }
  if (suite == "monoidal") {
    if constexpr (laws::MonoidalSubject<I>) return run(laws::monoidal(instance)); else return missing();
  }
  if (suite == "profunctor") {
    if constexpr (laws::ProfunctorSubject<I>) return run(laws::profunctor(instance)); else return missing();
  }
  if (suite == "prearrow") {
    if constexpr (laws::PreArrowSubject<I>) return run(laws::prearrow(instance)); else return missing();
  }
  if (suite == "strength") {
    if constexpr (laws::StrongSubject<I>) return run(laws::strength(instance)); else return missing();
  }
  if (suite == "arrow") {
    if constexpr (laws::ArrowSubject<I>) return run(laws::arrow(instance)); else return missing();
  }
  throw ConfigError("unknown law suite '" + std::string(suite) + "'");
}

}  // namespace cayley
