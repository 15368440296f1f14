#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ydhopf/error.hpp"
#include "ydhopf/group.hpp"

using namespace ydhopf;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IoError;
}

}  // namespace

TEST(Field, InverseTableMod5) {
  Field f(5);
  const Scalar expect[5] = {0, 1, 3, 2, 4};
  for (Scalar a = 1; a < 5; ++a) EXPECT_EQ(f.inv(a), expect[a]);
}

TEST(Field, ArithmeticAgainstIntegerOracle) {
  for (std::int64_t p : {2, 3, 5, 7, 101, 65537, 2147483647}) {
    Field f(static_cast<std::uint64_t>(p));
    for (std::int64_t a : {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}, p - 1, p / 2}) {
      for (std::int64_t b : {std::int64_t{0}, std::int64_t{1}, p - 1, p / 3}) {
        Scalar x = f.from_int(a), y = f.from_int(b);
        EXPECT_EQ(f.add(x, y), oracle::md(a + b, p));
        EXPECT_EQ(f.sub(x, y), oracle::md(a - b, p));
        EXPECT_EQ(f.mul(x, y), static_cast<Scalar>((static_cast<unsigned __int128>(oracle::md(a, p)) * oracle::md(b, p)) % p));
      }
      if (oracle::md(a, p) != 0) {
        EXPECT_EQ(f.mul(f.from_int(a), f.inv(f.from_int(a))), 1u);
      }
    }
    EXPECT_EQ(f.from_int(-1), static_cast<Scalar>(p - 1));
  }
}

TEST(Field, RejectsNonPrimes) {
  for (std::uint64_t p : {0ull, 1ull, 4ull, 9ull, 561ull, 1ull << 31, (1ull << 31) + 11})
    EXPECT_EQ(kind_of([&] { Field f(p); }), ErrorKind::NonPrimeModulus) << p;
}

TEST(Field, InverseOfZeroIsInvalid) {
  Field f(7);
  EXPECT_EQ(kind_of([&] { f.inv(0); }), ErrorKind::InvalidArgument);
}

TEST(Field, PrimitiveRoots) {
  Field f(5);
  EXPECT_EQ(primitive_root_of_unity(f, 4), 2u);
  EXPECT_EQ(primitive_root_of_unity(f, 2), 4u);
  EXPECT_EQ(primitive_root_of_unity(f, 1), 1u);
  EXPECT_EQ(kind_of([&] { primitive_root_of_unity(f, 3); }), ErrorKind::NoSuchRoot);
  Field g(13);
  EXPECT_EQ(primitive_root_of_unity(g, 12), 2u);
  EXPECT_EQ(primitive_root_of_unity(g, 3), 3u);
  EXPECT_EQ(multiplicative_order(g, 3), 3u);
  EXPECT_EQ(multiplicative_order(f, 4), 2u);
}

TEST(Group, LexicographicEnumeration) {
  Group g({2, 3});
  EXPECT_EQ(g.size(), 6u);
  for (GroupElement x = 0; x < 6; ++x) {
    auto e = g.exponents(x);
    EXPECT_EQ(e[0] * 3 + e[1], x);
  }
  EXPECT_EQ(g.generator(0), 3u);
  EXPECT_EQ(g.generator(1), 1u);
  EXPECT_EQ(g.element({3, -1}), g.element({1, 2}));
}

TEST(Group, AddNegAgainstExponents) {
  Group g({4, 2, 3});
  for (GroupElement a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g.add(a, g.neg(a)), g.identity());
    for (GroupElement b = 0; b < g.size(); ++b) {
      auto ea = g.exponents(a), eb = g.exponents(b);
      std::vector<std::int64_t> s;
      for (std::size_t j = 0; j < 3; ++j) s.push_back(ea[j] + eb[j]);
      EXPECT_EQ(g.add(a, b), g.element(s));
    }
  }
}

TEST(Group, Errors) {
  EXPECT_EQ(kind_of([] { Group g({}); }), ErrorKind::EmptyOrderList);
  EXPECT_EQ(kind_of([] { Group g({2, 0}); }), ErrorKind::InvalidArgument);
  Group g({2, 2});
  EXPECT_EQ(kind_of([&] { g.element({1}); }), ErrorKind::MismatchedGroup);
}

TEST(Group, TrivialFactorGenerator) {
  Group g({1, 3});
  EXPECT_EQ(g.generator(0), g.identity());
  EXPECT_EQ(g.size(), 3u);
}

TEST(Character, EvaluationMatchesPowerOracle) {
  Field f(5);
  Group g({4, 2});
  Character chi = make_character(f, g, {2, 4});
  for (GroupElement x = 0; x < g.size(); ++x) {
    auto e = g.exponents(x);
    EXPECT_EQ(character_eval(f, g, chi, x), oracle::pw(2, e[0], 5) * oracle::pw(4, e[1], 5) % 5);
  }
}

TEST(Character, RejectsWrongOrderAndRank) {
  Field f(5);
  Group g({2});
  EXPECT_EQ(kind_of([&] { make_character(f, g, {2}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { make_character(f, g, {4, 1}); }), ErrorKind::MismatchedGroup);
}

TEST(Context, Equality) {
  EXPECT_TRUE(*make_context(5, {2}) == *make_context(5, {2}));
  EXPECT_FALSE(*make_context(5, {2}) == *make_context(7, {2}));
  EXPECT_FALSE(*make_context(5, {2}) == *make_context(5, {4}));
}
