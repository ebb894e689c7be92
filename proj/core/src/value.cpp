#include "cayley/value.hpp"

#include <sstream>

namespace cayley {

namespace {

const std::vector<Value>& no_probes() {
  static const std::vector<Value> empty;
  return empty;
}

void encode_string(std::ostringstream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out << '\\';
    out << c;
  }
  out << '"';
}

}  // namespace

Fn::Fn() : Fn(identity()) {}

Fn::Fn(Body body, std::vector<Value> probes)
    : body_(std::make_shared<const Body>(std::move(body))),
      probes_(probes.empty() ? nullptr
                             : std::make_shared<const std::vector<Value>>(std::move(probes))) {}

Value Fn::operator()(const Value& x) const { return (*body_)(x); }

std::span<const Value> Fn::probes() const noexcept {
  return probes_ ? std::span<const Value>(*probes_) : std::span<const Value>(no_probes());
}

bool Fn::has_probes() const noexcept { return probes_ != nullptr; }

Fn Fn::with_probes(std::vector<Value> probes) const {
  Fn out = *this;
  out.probes_ = probes.empty() ? nullptr
                               : std::make_shared<const std::vector<Value>>(std::move(probes));
  return out;
}

Fn Fn::then(const Fn& after) const {
  Fn out([inner = *this, after](const Value& x) { return after(inner(x)); });
  out.probes_ = probes_ ? probes_ : after.probes_;
  return out;
}

Fn Fn::identity() {
  static const auto body = std::make_shared<const Body>([](const Value& x) { return x; });
  Fn out(Body{});
  out.body_ = body;
  return out;
}

Value Value::pair(Value a, Value b) {
  Value v;
  v.repr_ = std::make_shared<const std::pair<Value, Value>>(std::move(a), std::move(b));
  return v;
}

Value Value::list(std::vector<Value> items) {
  Value v;
  v.repr_ = std::make_shared<const std::vector<Value>>(std::move(items));
  return v;
}

Value::Int Value::as_int() const {
  if (auto* i = std::get_if<Int>(&repr_)) return *i;
  throw TypeError("expected an integer, got " + encode());
}

const std::string& Value::as_string() const {
  if (auto* s = std::get_if<std::string>(&repr_)) return *s;
  throw TypeError("expected a string, got " + encode());
}

const Value& Value::first() const {
  if (auto* p = std::get_if<PairPtr>(&repr_)) return (*p)->first;
  throw TypeError("expected a pair, got " + encode());
}

const Value& Value::second() const {
  if (auto* p = std::get_if<PairPtr>(&repr_)) return (*p)->second;
  throw TypeError("expected a pair, got " + encode());
}

std::span<const Value> Value::items() const {
  if (auto* l = std::get_if<ListPtr>(&repr_)) return **l;
  throw TypeError("expected a list, got " + encode());
}

const Fn& Value::as_fn() const {
  if (auto* f = std::get_if<Fn>(&repr_)) return *f;
  throw TypeError("expected a function, got " + encode());
}

std::string Value::encode() const {
  std::ostringstream out;
  std::visit(
      [&out](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Unit>) {
          out << "()";
        } else if constexpr (std::is_same_v<R, Int>) {
          out << r;
        } else if constexpr (std::is_same_v<R, std::string>) {
          encode_string(out, r);
        } else if constexpr (std::is_same_v<R, PairPtr>) {
          out << '(' << r->first.encode() << ',' << r->second.encode() << ')';
        } else if constexpr (std::is_same_v<R, ListPtr>) {
          out << '[';
          for (std::size_t i = 0; i < r->size(); ++i) {
            if (i) out << ',';
            out << (*r)[i].encode();
          }
          out << ']';
        } else {
          if (!r.has_probes()) {
            out << "<fn>";
            return;
          }
          out << '[';
          bool sep = false;
          for (const Value& p : r.probes()) {
            if (sep) out << ',';
            out << r(p).encode();
            sep = true;
          }
          out << ']';
        }
      },
      repr_);
  return out.str();
}

bool operator==(const Value& a, const Value& b) {
  if (a.repr_.index() != b.repr_.index()) return false;
  if (a.is_fn()) {
    const Fn& f = a.as_fn();
    const Fn& g = b.as_fn();
    if (!f.has_probes() && !g.has_probes()) return a.encode() == b.encode();
    for (const Value& p : f.probes())
      if (!(f(p) == g(p))) return false;
    for (const Value& p : g.probes())
      if (!(f(p) == g(p))) return false;
    return true;
  }
  if (a.is_pair()) return a.first() == b.first() && a.second() == b.second();
  if (a.is_list()) {
    auto xs = a.items();
    auto ys = b.items();
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!(xs[i] == ys[i])) return false;
    return true;
  }
  return a.repr_ == b.repr_;
}

std::uint64_t hash(const Value& v) {
  // FNV-1a
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : v.encode()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Fn curry(std::function<Value(const Value&, const Value&)> f) {
  auto shared = std::make_shared<const std::function<Value(const Value&, const Value&)>>(std::move(f));
  return Fn([shared](const Value& a) {
    return Value(Fn([shared, a](const Value& b) { return (*shared)(a, b); }));
  });
}

Value swap(const Value& p) { return pair(p.second(), p.first()); }

Value assoc(const Value& p) {
  return pair(p.first().first(), pair(p.first().second(), p.second()));
}

Value unassoc(const Value& p) {
  return pair(pair(p.first(), p.second().first()), p.second().second());
}

Fn on_first(const Fn& f) {
  return Fn([f](const Value& p) { return pair(f(p.first()), p.second()); });
}

Fn on_second(const Fn& f) {
  return Fn([f](const Value& p) { return pair(p.first(), f(p.second())); });
}

Fn fst_fn() {
  return Fn([](const Value& p) { return p.first(); });
}

Fn snd_fn() {
  return Fn([](const Value& p) { return p.second(); });
}

Fn fst_inverse_fn() {
  return Fn([](const Value& x) { return pair(x, Unit{}); });
}

std::string Ty::name() const {
  switch (kind_) {
    case Kind::unit: return "()";
    case Kind::integer: return "int";
    case Kind::string: return "str";
    case Kind::pair: return "(" + left().name() + "," + right().name() + ")";
    case Kind::list: return "[" + left().name() + "]";
    case Kind::function: return "(" + left().name() + "->" + right().name() + ")";
  }
  return "?";
}

}  // namespace cayley
