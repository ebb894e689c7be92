#include <gtest/gtest.h>

#include "helpers.hpp"

namespace cayley::testing {
namespace {

TEST(CayleyRep, ProductMonoid) {
  EXPECT_EQ(cayley_rep<std::int64_t>(3, product_monoid())(4), 12);
}

TEST(CayleyRep, UnitIsIdentity) {
  auto e = cayley_rep<std::int64_t>(0, sum_monoid());
  for (std::int64_t x : {-3, 0, 17}) EXPECT_EQ(e(x), x);
}

TEST(CayleyRep, StringConcat) {
  EXPECT_EQ(cayley_rep<std::string>("ab", string_monoid())("cd"), "abcd");
}

TEST(CayleyAbs, IdentityOnListsIsEmpty) {
  EXPECT_TRUE(cayley_abs(Endo<List<Value>>::identity(), list_monoid<Value>()).empty());
}

TEST(CayleyAbs, AbsOfRep) {
  EXPECT_EQ(cayley_abs(cayley_rep<std::int64_t>(5, sum_monoid()), sum_monoid()), 5);
}

TEST(CayleyAbs, AppliesAtUnit) {
  Endo<std::int64_t> times3{[](const std::int64_t& x) { return x * 3; }};
  EXPECT_EQ(cayley_abs(times3, product_monoid()), 3);
}

TEST(CayleyRep, Homomorphism) {
  auto mon = string_monoid();
  auto lhs = cayley_rep<std::string>(mon.combine("x", "yz"), mon);
  auto rhs = cayley_rep<std::string>("x", mon).compose(cayley_rep<std::string>("yz", mon));
  EXPECT_EQ(lhs("!"), rhs("!"));
}

TEST(DList, FromTo) {
  EXPECT_EQ(dlist_to(dlist_from(ints({1, 2}))), ints({1, 2}));
}

TEST(DList, AppendConcatenates) {
  EXPECT_EQ(dlist_to(dlist_append(dlist_from(ints({1})), dlist_from(ints({2})))), ints({1, 2}));
}

TEST(DList, EmptyIsUnit) {
  auto d = dlist_from(ints({4, 5}));
  EXPECT_EQ(dlist_to(dlist_append(dlist_from(List<Value>{}), d)), dlist_to(d));
  EXPECT_EQ(dlist_to(dlist_append(d, dlist_from(List<Value>{}))), dlist_to(d));
}

TEST(DList, LeftNestedChain) {
  DList<Value> acc;
  for (Value::Int i = 1; i <= 8; ++i) acc = dlist_append(acc, dlist_from(ints({i})));
  EXPECT_EQ(dlist_to(acc), ints({1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(DList, LinearOpsWhereListsAreQuadratic) {
  auto naive = [](std::size_t n) {
    instrument::Scope s;
    List<Value> acc;
    for (std::size_t i = 0; i < n; ++i) acc = append(acc, list_ins(Value(1)));
    return s.elapsed();
  };
  auto cayley = [](std::size_t n) {
    instrument::Scope s;
    DList<Value> acc;
    for (std::size_t i = 0; i < n; ++i) acc = acc.append(DList<Value>::singleton(Value(1)));
    (void)acc.to_list();
    return s.elapsed();
  };
  EXPECT_GE(static_cast<double>(naive(128)) / static_cast<double>(naive(64)), 3.0);
  EXPECT_LE(static_cast<double>(cayley(128)) / static_cast<double>(cayley(64)), 2.5);
}

TEST(FreeMonoid, EmptyFoldsToUnit) {
  EXPECT_EQ(list_fold_free<Value>([](const Value& v) { return v.as_int(); }, sum_monoid(), List<Value>{}), 0);
}

TEST(FreeMonoid, SumOfIdentity) {
  EXPECT_EQ(list_fold_free<Value>([](const Value& v) { return v.as_int(); }, sum_monoid(), ints({1, 2, 3})), 6);
}

TEST(FreeMonoid, SingletonFactorsThroughIns) {
  auto f = [](const Value& v) { return std::string(static_cast<std::size_t>(v.as_int()), '*'); };
  EXPECT_EQ(list_fold_free<Value>(f, string_monoid(), list_ins(Value(3))), "***");
}

TEST(MonoidLaws, ShippedMonoids) {
  for (auto r : {check_laws("monoid", sum_subject(), Gen(1), 200), check_laws("monoid", string_subject(), Gen(2), 200),
                 check_laws("monoid", dlist_subject(), Gen(3), 200), check_laws("monoid", endo_subject(), Gen(4), 200)})
    EXPECT_TRUE(r.passed()) << summarize_failures({r});
}

}  // namespace
}  // namespace cayley::testing
