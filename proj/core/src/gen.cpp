#include "cayley/gen.hpp"

#include <algorithm>

namespace cayley {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Gen::Gen(std::uint64_t seed, std::size_t size)
    : seed_(seed), size_(std::max<std::size_t>(size, 1)), rng_(seed) {}

Gen Gen::fork(std::uint64_t salt) const { return Gen(mix_seed(seed_, salt), size_); }

Gen Gen::shrink() const {
  Gen out = *this;
  out.size_ = std::max<std::size_t>(size_ / 2, 1);
  return out;
}

std::uint64_t Gen::next() { return rng_(); }

std::size_t Gen::below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

bool Gen::coin() { return (rng_() & 1u) != 0; }

Value::Int Gen::integer() {
  return static_cast<Value::Int>(below(2 * kIntBound + 1)) - kIntBound;
}

Value::Int Gen::natural() { return static_cast<Value::Int>(below(kNatBound + 1)); }

std::string Gen::label() {
  static constexpr char alphabet[] = "abcde";
  const std::size_t len = below(std::min<std::size_t>(size_, 3) + 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[below(5)]);
  return s;
}

Value Gen::value(const Ty& ty) {
  switch (ty.kind()) {
    case Ty::Kind::unit: return Unit{};
    case Ty::Kind::integer: return integer();
    case Ty::Kind::string: return label();
    case Ty::Kind::pair: {
      Value a = value(ty.left());
      Value b = value(ty.right());
      return Value::pair(std::move(a), std::move(b));
    }
    case Ty::Kind::list: {
      Gen inner = shrink();
      inner.rng_.seed(next());
      const std::size_t len = below(size_ + 1);
      std::vector<Value> items;
      items.reserve(len);
      for (std::size_t i = 0; i < len; ++i) items.push_back(inner.value(ty.left()));
      return Value::list(std::move(items));
    }
    case Ty::Kind::function: return function(ty.left(), ty.right());
  }
  return Unit{};
}

Fn Gen::function(const Ty& dom, const Ty& cod, std::size_t probe_count) {
  const std::uint64_t fseed = next();
  const std::size_t fsize = size_;
  Fn f([fseed, fsize, cod](const Value& x) {
    Gen g(mix_seed(fseed, hash(x)), fsize);
    return g.value(cod);
  });
  return f.with_probes(probes(dom, probe_count));
}

std::vector<Value> Gen::probes(const Ty& dom, std::size_t count) {
  std::vector<Value> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(value(dom));
  return out;
}

}  // namespace cayley
