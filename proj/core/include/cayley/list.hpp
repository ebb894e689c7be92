#pragma once

// Persistent singly linked list: the free monoid over a set, and the naive
// side of the append benchmark. Appending copies every cell of the left
// argument, so a left-nested chain of appends is quadratic.

#include <cstddef>
#include <memory>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "cayley/instrument.hpp"

namespace cayley {

template <class T>
class List {
  struct Node {
    T head;
    std::shared_ptr<Node> next;
  };

 public:
  using value_type = T;

  List() = default;
  List(const List&) = default;
  List(List&&) noexcept = default;
  List& operator=(const List&) = default;
  List& operator=(List&&) noexcept = default;

  // Long lists are released iteratively to keep destruction off the stack.
  ~List() {
    std::shared_ptr<Node> n = std::move(node_);
    while (n && n.use_count() == 1) {
      std::shared_ptr<Node> next = std::move(n->next);
      n = std::move(next);
    }
  }

  static List cons(T head, List tail) {
    instrument::tick();
    List out;
    out.node_ = std::make_shared<Node>(Node{std::move(head), std::move(tail.node_)});
    return out;
  }

  static List of(std::span<const T> items) {
    List out;
    for (std::size_t i = items.size(); i-- > 0;) out = cons(items[i], std::move(out));
    return out;
  }

  static List of(std::initializer_list<T> items) {
    return of(std::span<const T>(items.begin(), items.size()));
  }

  bool empty() const noexcept { return node_ == nullptr; }
  const T& head() const { return node_->head; }
  List tail() const {
    List out;
    out.node_ = node_->next;
    return out;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const Node* p = node_.get(); p; p = p->next.get()) ++n;
    return n;
  }

  std::vector<T> to_vector() const {
    std::vector<T> out;
    for (const Node* p = node_.get(); p; p = p->next.get()) out.push_back(p->head);
    return out;
  }

  template <class Fun>
  auto map(Fun&& f) const -> List<std::decay_t<std::invoke_result_t<Fun&, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<Fun&, const T&>>;
    std::vector<U> mapped;
    for (const Node* p = node_.get(); p; p = p->next.get()) mapped.push_back(f(p->head));
    return List<U>::of(std::span<const U>(mapped));
  }

  friend bool operator==(const List& a, const List& b) {
    const Node* p = a.node_.get();
    const Node* q = b.node_.get();
    for (; p && q; p = p->next.get(), q = q->next.get())
      if (!(p->head == q->head)) return false;
    return p == nullptr && q == nullptr;
  }

 private:
  template <class U>
  friend List<U> append(const List<U>& xs, const List<U>& ys);

  std::shared_ptr<Node> node_;
};

/// xs ++ ys. Copies the cells of xs and shares ys; linear in the first
/// argument only.
template <class T>
List<T> append(const List<T>& xs, const List<T>& ys) {
  if (xs.empty()) return ys;
  std::vector<const T*> heads;
  for (auto* p = xs.node_.get(); p; p = p->next.get()) heads.push_back(&p->head);
  List<T> out = ys;
  for (std::size_t i = heads.size(); i-- > 0;) out = List<T>::cons(*heads[i], std::move(out));
  return out;
}

}  // namespace cayley
