#include "instances.hpp"
#include "properties.hpp"

#include "cayley/yoneda.hpp"

namespace cayley::testing {

namespace {

Ty int_pair() { return Ty::pair(int_ty(), int_ty()); }

// Yoneda and coYoneda --------------------------------------------------------

template <class F>
void yoneda(Collector& c, const std::string& name) {
  c.add("yoneda " + name + ".from_to", [](Gen& g) {
    auto x = Sample<F>::draw(g, int_ty());
    return differ(observe(yoneda_from<F>(yoneda_to<F>(x))), observe(x));
  });
  c.add("yoneda " + name + ".to_from", [](Gen& g) {
    auto x = Sample<F>::draw(g, int_ty());
    Fn h = g.function(int_ty(), int_ty());
    Polymorphic<F> poly = [x, h](const Fn& k) { return F::map(k, F::map(h, x)); };
    Fn k = g.function(int_ty(), int_ty());
    return differ(observe(yoneda_to<F>(yoneda_from<F>(poly))(k)), observe(poly(k)));
  });
  c.add("coyoneda " + name + ".from_to", [](Gen& g) {
    auto x = Sample<F>::draw(g, int_ty());
    return differ(observe(coyoneda_from<F>(coyoneda_to<F>(x))), observe(x));
  });
  c.add("coyoneda " + name + ".to_from", [](Gen& g) {
    CoYoneda<F> v{Sample<F>::draw(g, int_ty()), g.function(int_ty(), int_ty())};
    return differ(observe(coyoneda_from<F>(coyoneda_to<F>(coyoneda_from<F>(v)))), observe(coyoneda_from<F>(v)));
  });
  c.add("coyoneda " + name + ".map", [](Gen& g) {
    CoYoneda<F> v{Sample<F>::draw(g, int_ty()), g.function(int_ty(), int_ty())};
    Fn f = g.function(int_ty(), int_ty());
    return differ(observe(coyoneda_from<F>(coyoneda_map<F>(f, v))), observe(F::map(f, coyoneda_from<F>(v))));
  });
}

// Composition exponential ----------------------------------------------------

/// An H value of F values, each inner value drawn from a generator forked at its outer value.
template <class H, class F>
Apply<H, Apply<F, Value>> nested(Gen& g) {
  auto outer = Sample<H>::draw(g, int_ty());
  std::uint64_t salt = g.integer();
  std::size_t size = g.size();
  return H::map(
      [salt, size](const Value& x) {
        Gen inner = gen_at(salt, x, size);
        return Sample<F>::draw(inner, int_ty());
      },
      outer);
}

template <class H, class F, class G, class Nat>
void exponential(Collector& c, const std::string& name, Nat nat) {
  using Exp = CodExp<F, G>;
  auto to = [nat](const Apply<H, Value>& hy) { return exp_to<H, F, G>(nat, hy); };
  auto to_nested = [nat](const Apply<H, Apply<F, Value>>& hy) { return exp_to<H, F, G>(nat, hy); };
  c.add(name + ".from_to", [nat, to_nested](Gen& g) {
    auto hfx = nested<H, F>(g);
    return differ(observe(exp_from<F, G>(to_nested, hfx)), observe(nat(hfx)));
  });
  c.add(name + ".to_from", [nat, to](Gen& g) {
    auto hy = Sample<H>::draw(g, int_ty());
    auto k = MonadOf<F>{}.kleisli(g);
    // phi^-1 (phi nat) = nat, so phi (phi^-1 t) = t reduces to this at every y and k.
    Exp e = to(hy);
    typename Exp::Cont cont = k;
    auto back = [nat](const Apply<H, Apply<F, Value>>& hfx) { return exp_to<H, F, G>(nat, hfx); };
    Apply<G, Value> lhs = exp_to<H, F, G>(
        [back](const Apply<H, Apply<F, Value>>& hfx) { return exp_from<F, G>(back, hfx); }, hy)
                              .run(cont);
    return differ(observe(lhs), observe(e.run(cont)));
  });
}

List<Value> list_join(const List<List<Value>>& xss) {
  return ListF::bind(xss, [](const List<Value>& xs) { return xs; });
}

Writer<Value> writer_join(const Writer<Writer<Value>>& w) {
  return WriterF::bind(w, [](const Writer<Value>& x) { return x; });
}

Writer<Value> identity_writer(const Identity<Writer<Value>>& x) { return x.value; }

// Day convolution ------------------------------------------------------------

List<Value> list_product(const List<Value>& xs, const List<Value>& ys) {
  return ListF::bind(xs, [ys](const Value& x) { return ListF::map([x](const Value& y) { return pair(x, y); }, ys); });
}

Writer<Value> writer_product(const Writer<Value>& x, const Writer<Value>& y) {
  return Writer<Value>{concat(x.log, y.log), pair(x.value, y.value)};
}

template <class F, class G>
Day<F, G> draw_day(Gen& g) {
  auto l = Sample<F>::draw(g, int_ty());
  auto r = Sample<G>::draw(g, int_ty());
  return day<F, G>(l, r, g.function(int_pair(), int_ty()));
}

template <class F, class G, class H, class Pairing>
void day_maps(Collector& c, const std::string& name, Pairing pairing) {
  auto nat = theta_inv<H, F, G>(pairing);
  c.add(name + ".theta_inv_theta", [nat](Gen& g) {
    auto d = draw_day<F, G>(g);
    return differ(observe(theta_inv<H, F, G>(theta<F, G>(nat))(d)), observe(nat(d)));
  });
  c.add(name + ".theta_theta_inv", [pairing](Gen& g) {
    auto x = Sample<F>::draw(g, int_ty());
    auto y = Sample<G>::draw(g, int_ty());
    return differ(observe(theta<F, G>(theta_inv<H, F, G>(pairing))(x, y)), observe(pairing(x, y)));
  });
  c.add(name + ".phi_inv_phi", [nat](Gen& g) {
    auto d = draw_day<F, G>(g);
    return differ(observe(day_phi_inv<H, F, G>(day_phi<F, G, H>(nat))(d)), observe(nat(d)));
  });
  c.add(name + ".phi_phi_inv", [nat](Gen& g) {
    auto x = Sample<F>::draw(g, int_ty());
    auto y = Sample<G>::draw(g, int_ty());
    auto to = day_phi<F, G, H>(nat);
    return differ(observe(day_phi<F, G, H>(day_phi_inv<H, F, G>(to))(x).run(y)), observe(to(x).run(y)));
  });
}

template <class F, class G>
void day_structure(Collector& c, const std::string& name) {
  c.add(name + ".lambda_inv_lambda", [](Gen& g) {
    auto x = Sample<F>::draw(g, int_ty());
    return differ(observe(day_lambda_inv<F>(day_lambda<F>(x))), observe(x));
  });
  c.add(name + ".lambda_lambda_inv", [](Gen& g) {
    Day<IdentityF, F> d = draw_day<IdentityF, F>(g);
    return differ(observe(day_lambda<F>(day_lambda_inv<F>(d))), observe(d));
  });
  c.add(name + ".rho_inv_rho", [](Gen& g) {
    auto x = Sample<F>::draw(g, int_ty());
    return differ(observe(day_rho_inv<F>(day_rho<F>(x))), observe(x));
  });
  c.add(name + ".rho_rho_inv", [](Gen& g) {
    Day<F, IdentityF> d = draw_day<F, IdentityF>(g);
    return differ(observe(day_rho<F>(day_rho_inv<F>(d))), observe(d));
  });
  c.add(name + ".alpha_inv_alpha", [](Gen& g) {
    Day<F, G> inner = draw_day<F, G>(g);
    Day<DayF<F, G>, F> d{inner, Sample<F>::draw(g, int_ty()), g.function(int_pair(), int_ty())};
    return differ(observe(day_alpha_inv(day_alpha(d))), observe(d));
  });
  c.add(name + ".alpha_alpha_inv", [](Gen& g) {
    auto l = Sample<F>::draw(g, int_ty());
    Day<G, F> inner = draw_day<G, F>(g);
    Day<F, DayF<G, F>> d{l, inner, g.function(int_pair(), int_ty())};
    return differ(observe(day_alpha(day_alpha_inv(d))), observe(d));
  });
  c.add(name + ".gamma_gamma", [](Gen& g) {
    Day<F, G> d = draw_day<F, G>(g);
    return differ(observe(day_gamma(day_gamma(d))), observe(d));
  });
  c.add(name + ".gamma_swaps", [](Gen& g) {
    Day<F, G> d = draw_day<F, G>(g);
    Day<G, F> e = day_gamma(d);
    return differ(observe(Day<F, G>{d.left, d.right, Fn([f = e.post](const Value& p) { return f(swap(p)); })}),
                  observe(d));
  });
}

/// Triangle and pentagon, with each side observed after the rebracketing.
template <class F, class G>
void day_coherence(Collector& c, const std::string& name) {
  auto id = [](const auto& x) { return x; };
  c.add(name + ".triangle", [id](Gen& g) {
    Day<F, IdentityF> inner = draw_day<F, IdentityF>(g);
    Day<DayF<F, IdentityF>, G> d{inner, Sample<G>::draw(g, int_ty()), g.function(int_pair(), int_ty())};
    auto lhs = day_bimap<F, G>([](const Day<F, IdentityF>& x) { return day_rho_inv<F>(x); }, id, d);
    auto rhs = day_bimap<F, G>(id, [](const Day<IdentityF, G>& x) { return day_lambda_inv<G>(x); }, day_alpha(d));
    return differ(observe(lhs), observe(rhs));
  });
  c.add(name + ".pentagon", [id](Gen& g) {
    Day<F, G> fg = draw_day<F, G>(g);
    Day<DayF<F, G>, F> fgh{fg, Sample<F>::draw(g, int_ty()), g.function(int_pair(), int_ty())};
    Day<DayF<DayF<F, G>, F>, G> d{fgh, Sample<G>::draw(g, int_ty()), g.function(int_pair(), int_ty())};
    auto lhs = day_alpha(day_alpha(d));
    auto step = day_bimap<DayF<F, DayF<G, F>>, G>([](const Day<DayF<F, G>, F>& x) { return day_alpha(x); }, id, d);
    auto rhs = day_bimap<F, DayF<G, DayF<F, G>>>(id, [](const Day<DayF<G, F>, G>& x) { return day_alpha(x); },
                                                 day_alpha(step));
    return differ(observe(lhs), observe(rhs));
  });
}

// Profunctor exponential -----------------------------------------------------

template <class F, class G, class H, class Nat>
void pre_exponential(Collector& c, const std::string& name, Nat m) {
  c.add(name + ".phi_inv_phi", [m](Gen& g) {
    ProTensor<F, G> t{ArrowSample<F>::draw(g), ArrowSample<G>::draw(g)};
    auto xs = draw_inputs(g, int_ty());
    return differ(H::observe(pre_phi_inv<F, G, H>(pre_phi<F, G, H>(m))(t), xs), H::observe(m(t), xs));
  });
  c.add(name + ".phi_phi_inv", [m](Gen& g) {
    auto f = ArrowSample<F>::draw(g);
    auto y = ArrowSample<G>::draw(g);
    auto xs = draw_inputs(g, int_ty());
    auto to = pre_phi<F, G, H>(m);
    return differ(H::observe(pre_phi<F, G, H>(pre_phi_inv<F, G, H>(to))(f).run(y), xs),
                  H::observe(to(f).run(y), xs));
  });
}

// Tambara --------------------------------------------------------------------

Kleisli<WriterF> prefix_log(const Kleisli<WriterF>& a) {
  return {[a](const Value& x) {
    Writer<Value> w = a(x);
    return Writer<Value>{concat(Trace{"p"}, w.log), w.value};
  }};
}

template <class Nat>
void tambara(Collector& c, const std::string& name, Nat f) {
  using T = TambaraP<KW>;
  c.add(name + ".phi_inv_phi", [f](Gen& g) {
    auto a = ArrowSample<KW>::draw(g);
    auto xs = draw_inputs(g, int_ty());
    return differ(KW::observe(tambara_phi_inv<KW, KW>(tambara_phi<KW, KW>(f))(a), xs), KW::observe(f(a), xs));
  });
  c.add(name + ".phi_phi_inv", [f](Gen& g) {
    auto a = ArrowSample<KW>::draw(g);
    auto xs = draw_inputs(g, with_z());
    auto to = tambara_phi<KW, KW>(f);
    return differ(T::observe(tambara_phi<KW, KW>(tambara_phi_inv<KW, KW>(to))(a), xs), T::observe(to(a), xs));
  });
}

}  // namespace

Reports iso_properties(std::uint64_t seed, std::size_t trials) {
  Collector c{seed, trials, {}};

  yoneda<IdentityF>(c, "identity");
  yoneda<MaybeF>(c, "maybe");
  yoneda<ListF>(c, "list");
  yoneda<WriterF>(c, "writer");

  exponential<ListF, ListF, ListF>(c, "exponential list", list_join);
  exponential<WriterF, WriterF, WriterF>(c, "exponential writer", writer_join);
  exponential<IdentityF, WriterF, WriterF>(c, "exponential identity", identity_writer);

  day_maps<ListF, ListF, ListF>(c, "day list", list_product);
  day_maps<WriterF, WriterF, WriterF>(c, "day writer", writer_product);
  day_structure<ListF, WriterF>(c, "day list writer");
  day_structure<WriterF, ListF>(c, "day writer list");
  day_structure<MaybeF, IdentityF>(c, "day maybe identity");
  day_coherence<ListF, WriterF>(c, "day list writer");
  day_coherence<WriterF, ListF>(c, "day writer list");

  pre_exponential<KW, KW, KW>(c, "prearrow exponential kleisli", tensor_compose<KW>);
  pre_exponential<HomP, KW, KW>(c, "prearrow exponential hom", tensor_lambda<KW>);
  pre_exponential<FreePre, FreePre, FreePre>(c, "prearrow exponential free", tensor_compose<FreePre>);

  tambara(c, "tambara identity", [](const Kleisli<WriterF>& a) { return a; });
  tambara(c, "tambara prefix", prefix_log);

  return std::move(c.out);
}

}  // namespace cayley::testing
