#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ydhopf/field.hpp"

namespace ydhopf {

// Index of an element in the lexicographic enumeration of exponent vectors
// (first cyclic factor most significant).
using GroupElement = std::uint32_t;

class Group {
 public:
  // Throws EmptyOrderList for an empty list, InvalidArgument for an order < 1.
  explicit Group(std::vector<std::uint32_t> orders);

  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }

  GroupElement identity() const { return 0; }
  GroupElement generator(std::size_t j) const;
  std::vector<std::uint32_t> exponents(GroupElement g) const;
  // Exponents are reduced modulo the factor orders.
  GroupElement element(const std::vector<std::int64_t>& exps) const;

  GroupElement add(GroupElement a, GroupElement b) const;
  GroupElement neg(GroupElement a) const;

  bool operator==(const Group& o) const { return orders_ == o.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint64_t> strides_;
  std::size_t size_;
};

struct Character {
  std::vector<Scalar> images;  // value on each cyclic generator
};

// Checks that images[j]^{n_j} = 1 for every factor (MismatchedGroup on a length mismatch,
// InvalidArgument on a bad order).
Character make_character(const Field& f, const Group& g, std::vector<Scalar> images);
Scalar character_eval(const Field& f, const Group& g, const Character& chi, GroupElement x);

// Field plus group: every object, morphism and algebra lives over exactly one.
struct Context {
  Field field;
  Group group;
  bool operator==(const Context& o) const { return field == o.field && group == o.group; }
};
using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::uint64_t p, std::vector<std::uint32_t> orders);

}  // namespace ydhopf
