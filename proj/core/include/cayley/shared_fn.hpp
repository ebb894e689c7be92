#pragma once

// A callable with shared, immutable state. Copies are O(1), so closures that
// capture other closures do not re-copy the whole chain they close over.

#include <functional>
#include <memory>
#include <type_traits>
#include <utility>

namespace cayley {

template <class Sig>
class SharedFn;

template <class R, class... Args>
class SharedFn<R(Args...)> {
 public:
  SharedFn() = default;

  template <class F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, SharedFn> && std::is_invocable_r_v<R, const F&, Args...>)
  SharedFn(F&& f)  // NOLINT(google-explicit-constructor)
      : body_(std::make_shared<const std::function<R(Args...)>>(std::forward<F>(f))) {}

  R operator()(Args... args) const { return (*body_)(std::forward<Args>(args)...); }

  explicit operator bool() const noexcept { return body_ && *body_; }

 private:
  std::shared_ptr<const std::function<R(Args...)>> body_;
};

}  // namespace cayley
