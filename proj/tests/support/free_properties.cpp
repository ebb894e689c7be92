#include "instances.hpp"
#include "properties.hpp"

namespace cayley::testing {

namespace {

// Free monoid ----------------------------------------------------------------

template <class G>
void free_monoid(Collector& c, const std::string& name, const Monoid<G>& target, const Ty& cod,
                 std::function<G(const Value&)> from) {
  auto lift = [cod, from](Gen& g) {
    Fn f = g.function(int_ty(), cod);
    return [f, from](const Value& a) { return from(f(a)); };
  };
  auto draw = [](Gen& g) { return Sample<ListF>::draw(g, int_ty()); };
  c.add(name + ".fold_ins", [target, lift](Gen& g) {
    auto f = lift(g);
    Value a = g.integer();
    return differ(observe(Value(list_fold_free<Value>(f, target, list_ins(a)))), observe(Value(f(a))));
  });
  c.add(name + ".fold_unit", [target, lift](Gen& g) {
    auto f = lift(g);
    return differ(observe(Value(list_fold_free<Value>(f, target, List<Value>{}))), observe(Value(target.empty)));
  });
  c.add(name + ".fold_mult", [target, lift, draw](Gen& g) {
    auto f = lift(g);
    auto xs = draw(g);
    auto ys = draw(g);
    G lhs = list_fold_free<Value>(f, target, append(xs, ys));
    G rhs = target.combine(list_fold_free<Value>(f, target, xs), list_fold_free<Value>(f, target, ys));
    return differ(observe(Value(lhs)), observe(Value(rhs)));
  });
}

// Free monad -----------------------------------------------------------------

/// Interpret a writer as a console program.
FreeMonad<ConsoleF> writer_to_console(const Writer<Value>& w) {
  FreeMonad<ConsoleF> m = FreeMonad<ConsoleF>::ret(w.value);
  for (auto it = w.log.rbegin(); it != w.log.rend(); ++it) m = FreeMonad<ConsoleF>::con({*it, m});
  return m;
}

template <class Sig, class M, class Alg>
void free_monad(Collector& c, const std::string& name, Alg alg, std::function<Apply<Sig, Value>(Gen&)> effect) {
  using Program = FreeMonad<Sig>;
  auto fold = [alg](const Program& m) { return fold_free<M>(alg, m); };
  c.add(name + ".fold_ins", [alg, fold, effect](Gen& g) {
    auto fx = effect(g);
    auto lifted = alg(Sig::map([](const Value& x) { return M::pure(x); }, fx));
    return differ(observe(fold(fm_ins<Sig, Value>(fx))), observe(lifted));
  });
  c.add(name + ".fold_unit", [fold](Gen& g) {
    Value x = g.integer();
    return differ(observe(fold(Program::ret(x))), observe(M::pure(x)));
  });
  c.add(name + ".fold_mult", [fold](Gen& g) {
    auto m = Sample<FreeMonadF<Sig>>::draw(g, int_ty());
    auto k = MonadOf<FreeMonadF<Sig>>{}.kleisli(g);
    auto lhs = fold(cayley::bind(m, k));
    auto rhs = M::bind(fold(m), [fold, k](const Value& x) { return fold(k(x)); });
    return differ(observe(lhs), observe(rhs));
  });
}

// Free applicative -----------------------------------------------------------

Writer<Value> to_writer(const Console<Value>& c) { return console_to_writer(c); }
Rev<WriterF> to_reversed(const Console<Value>& c) { return {console_to_writer(c)}; }

template <class A, class B, class Ins, class Fold, class Nat>
void free_applicative(Collector& c, const std::string& name, Ins ins, Fold fold, Nat nat) {
  auto look = [](const Apply<B, Value>& x) { return Look<B>::at(x); };
  auto effect = [](Gen& g) {
    std::string label = g.label();
    return Console<Value>{label, g.integer()};
  };
  c.add(name + ".fold_ins", [ins, fold, nat, look, effect](Gen& g) {
    auto e = effect(g);
    return differ(look(fold(nat, ins(e))), look(nat(e)));
  });
  c.add(name + ".fold_unit", [fold, nat, look](Gen& g) {
    Value x = g.integer();
    return differ(look(fold(nat, A::pure(x))), look(B::pure(x)));
  });
  c.add(name + ".fold_map", [fold, nat, look](Gen& g) {
    auto p = Sample<A>::draw(g, int_ty());
    Fn h = g.function(int_ty(), int_ty());
    return differ(look(fold(nat, A::map(h, p))), look(B::map(h, fold(nat, p))));
  });
  c.add(name + ".fold_mult", [fold, nat, look](Gen& g) {
    auto f = Sample<A>::draw(g, int_fn_ty());
    auto x = Sample<A>::draw(g, int_ty());
    return differ(look(fold(nat, A::ap(f, x))), look(B::ap(fold(nat, f), fold(nat, x))));
  });
}

void encodings(Collector& c) {
  using L = FreeApLF<ConsoleF>;
  using R = FreeApRF<ConsoleF>;
  c.add("free applicative.left_round_trip", [](Gen& g) {
    auto p = Sample<ApC>::draw(g, int_ty());
    return differ(observe(fa_from_left(fa_to_left(p))), observe(p));
  });
  c.add("free applicative.right_round_trip", [](Gen& g) {
    auto p = Sample<ApC>::draw(g, int_ty());
    return differ(observe(fa_from_right(fa_to_right(p))), observe(p));
  });
  c.add("free applicative left.round_trip", [](Gen& g) {
    auto p = Sample<L>::draw(g, int_ty());
    return differ(observe(fa_to_left(fa_from_left(p))), observe(p));
  });
  c.add("free applicative right.round_trip", [](Gen& g) {
    auto p = Sample<R>::draw(g, int_ty());
    return differ(observe(fa_to_right(fa_from_right(p))), observe(p));
  });
  c.add("free applicative.to_left_ap", [](Gen& g) {
    auto f = Sample<ApC>::draw(g, int_fn_ty());
    auto x = Sample<ApC>::draw(g, int_ty());
    return differ(observe(fa_to_left(ApC::ap(f, x))), observe(L::ap(fa_to_left(f), fa_to_left(x))));
  });
  c.add("free applicative.to_right_ap", [](Gen& g) {
    auto f = Sample<ApC>::draw(g, int_fn_ty());
    auto x = Sample<ApC>::draw(g, int_ty());
    return differ(observe(fa_to_right(ApC::ap(f, x))), observe(R::ap(fa_to_right(f), fa_to_right(x))));
  });
  c.add("free applicative.to_left_pure", [](Gen& g) {
    Value x = g.integer();
    return differ(observe(fa_to_left(ApC::pure(x))), observe(L::pure(x)));
  });
  c.add("free applicative.to_right_pure", [](Gen& g) {
    Value x = g.integer();
    return differ(observe(fa_to_right(ApC::pure(x))), observe(R::pure(x)));
  });
}

// Free pre-arrow and free arrow ----------------------------------------------

template <class B, class Nat>
void free_prearrow(Collector& c, const std::string& target, Nat nat) {
  const std::string name = "free prearrow into " + target;
  using P = FreePre;
  auto fold = [nat](const FreePreArrow<KW>& p) { return fp_fold<B>(nat, p); };
  c.add(name + ".fold_ins", [nat, fold](Gen& g) {
    auto a = ArrowSample<KW>::draw(g);
    auto xs = draw_inputs(g, int_ty());
    return differ(B::observe(fold(fp_ins<KW>(a)), xs), B::observe(nat(a), xs));
  });
  c.add(name + ".fold_unit", [fold](Gen& g) {
    Fn f = g.function(int_ty(), int_ty());
    auto xs = draw_inputs(g, int_ty());
    return differ(B::observe(fold(P::arr(f)), xs), B::observe(B::arr(f), xs));
  });
  c.add(name + ".fold_mult", [fold](Gen& g) {
    auto p = ArrowSample<P>::draw(g);
    auto q = ArrowSample<P>::draw(g);
    auto xs = draw_inputs(g, int_ty());
    return differ(B::observe(fold(P::compose(p, q)), xs), B::observe(B::compose(fold(p), fold(q)), xs));
  });
  c.add(name + ".fold_dimap", [fold](Gen& g) {
    auto p = ArrowSample<P>::draw(g);
    Fn f = g.function(int_ty(), int_ty());
    Fn h = g.function(int_ty(), int_ty());
    auto xs = draw_inputs(g, int_ty());
    return differ(B::observe(fold(P::dimap(f, h, p)), xs), B::observe(B::dimap(f, h, fold(p)), xs));
  });
  c.add("free arrow into " + target + ".fold_first", [fold](Gen& g) {
    auto p = ArrowSample<P>::draw(g);
    auto xs = draw_inputs(g, with_z());
    return differ(B::observe(fold(P::first(p)), xs), B::observe(B::first(fold(p)), xs));
  });
}

}  // namespace

Reports free_properties(std::uint64_t seed, std::size_t trials) {
  Collector c{seed, trials, {}};

  free_monoid<std::int64_t>(c, "free monoid into sum", sum_monoid(), int_ty(),
                            [](const Value& v) { return v.as_int(); });
  free_monoid<std::string>(c, "free monoid into string", string_monoid(), Ty::string(),
                           [](const Value& v) { return v.as_string(); });

  free_monad<ConsoleF, WriterF>(c, "free monad into writer", console_alg, [](Gen& g) {
    std::string label = g.label();
    return Console<Value>{label, g.integer()};
  });
  free_monad<PairF, ListF>(c, "free monad into list", pair_alg, [](Gen& g) {
    Value a = g.integer();
    return Pair<Value>{a, g.integer()};
  });
  free_monad<ConsoleF, FmC>(
      c, "free monad into itself", [](const Console<FreeMonad<ConsoleF>>& t) { return FreeMonad<ConsoleF>::con(t); },
      [](Gen& g) {
        std::string label = g.label();
        return Console<Value>{label, g.integer()};
      });

  free_applicative<ApC, WriterF>(
      c, "free applicative into writer", [](const Console<Value>& e) { return fa_ins<ConsoleF>(e); },
      [](auto nat, const FreeAp<ConsoleF>& p) { return fa_fold<WriterF>(nat, p); }, to_writer);
  free_applicative<ApC, ReversedF<WriterF>>(
      c, "free applicative into reversed writer", [](const Console<Value>& e) { return fa_ins<ConsoleF>(e); },
      [](auto nat, const FreeAp<ConsoleF>& p) { return fa_fold<ReversedF<WriterF>>(nat, p); }, to_reversed);
  free_applicative<FreeApLF<ConsoleF>, WriterF>(
      c, "free applicative left into writer", [](const Console<Value>& e) { return fal_ins<ConsoleF>(e); },
      [](auto nat, const FreeApL<ConsoleF>& p) { return fal_fold<WriterF>(nat, p); }, to_writer);
  free_applicative<FreeApRF<ConsoleF>, WriterF>(
      c, "free applicative right into writer", [](const Console<Value>& e) { return far_ins<ConsoleF>(e); },
      [](auto nat, const FreeApR<ConsoleF>& p) { return far_fold<WriterF>(nat, p); }, to_writer);
  encodings(c);

  free_prearrow<KW>(c, "kleisli writer", [](const Kleisli<WriterF>& a) { return a; });
  free_prearrow<KleisliP<FmC>>(c, "kleisli console", [](const Kleisli<WriterF>& a) {
    return Kleisli<FmC>{[a](const Value& x) { return writer_to_console(a(x)); }};
  });

  return std::move(c.out);
}

}  // namespace cayley::testing
