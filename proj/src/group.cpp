#include "ydhopf/group.hpp"

#include <string>

#include "ydhopf/error.hpp"

namespace ydhopf {

Group::Group(std::vector<std::uint32_t> orders) : orders_(std::move(orders)), size_(1) {
  if (orders_.empty()) fail(ErrorKind::EmptyOrderList, "group needs at least one cyclic factor");
  strides_.assign(orders_.size(), 1);
  for (std::size_t j = orders_.size(); j-- > 0;) {
    if (orders_[j] < 1) fail(ErrorKind::InvalidArgument, "cyclic order must be >= 1");
    strides_[j] = size_;
    size_ *= orders_[j];
    if (size_ > (1u << 24)) fail(ErrorKind::InvalidArgument, "group too large");
  }
}

GroupElement Group::generator(std::size_t j) const {
  if (j >= orders_.size()) fail(ErrorKind::InvalidArgument, "generator index out of range");
  return static_cast<GroupElement>(orders_[j] > 1 ? strides_[j] : 0);
}

std::vector<std::uint32_t> Group::exponents(GroupElement g) const {
  std::vector<std::uint32_t> e(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j)
    e[j] = static_cast<std::uint32_t>(g / strides_[j] % orders_[j]);
  return e;
}

GroupElement Group::element(const std::vector<std::int64_t>& exps) const {
  if (exps.size() != orders_.size())
    fail(ErrorKind::MismatchedGroup, "exponent vector has length " + std::to_string(exps.size()) +
                                         ", group rank is " + std::to_string(orders_.size()));
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    std::int64_t r = exps[j] % static_cast<std::int64_t>(orders_[j]);
    if (r < 0) r += orders_[j];
    idx += static_cast<std::uint64_t>(r) * strides_[j];
  }
  return static_cast<GroupElement>(idx);
}

GroupElement Group::add(GroupElement a, GroupElement b) const {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    std::uint64_t ea = a / strides_[j] % orders_[j];
    std::uint64_t eb = b / strides_[j] % orders_[j];
    idx += (ea + eb) % orders_[j] * strides_[j];
  }
  return static_cast<GroupElement>(idx);
}

GroupElement Group::neg(GroupElement a) const {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    std::uint64_t ea = a / strides_[j] % orders_[j];
    idx += (orders_[j] - ea) % orders_[j] * strides_[j];
  }
  return static_cast<GroupElement>(idx);
}

Character make_character(const Field& f, const Group& g, std::vector<Scalar> images) {
  if (images.size() != g.rank())
    fail(ErrorKind::MismatchedGroup, "character has " + std::to_string(images.size()) +
                                         " images, group rank is " + std::to_string(g.rank()));
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j] >= f.p() || images[j] == 0 || f.pow(images[j], g.orders()[j]) != 1)
      fail(ErrorKind::InvalidArgument, "character image " + std::to_string(images[j]) +
                                           " does not have order dividing " +
                                           std::to_string(g.orders()[j]));
  }
  return Character{std::move(images)};
}

Scalar character_eval(const Field& f, const Group& g, const Character& chi, GroupElement x) {
  if (chi.images.size() != g.rank()) fail(ErrorKind::MismatchedGroup, "character/group rank mismatch");
  if (x >= g.size()) fail(ErrorKind::MismatchedGroup, "element not in group");
  auto e = g.exponents(x);
  Scalar v = 1;
  for (std::size_t j = 0; j < e.size(); ++j) v = f.mul(v, f.pow(chi.images[j], e[j]));
  return v;
}

ContextPtr make_context(std::uint64_t p, std::vector<std::uint32_t> orders) {
  return std::make_shared<const Context>(Context{Field(p), Group(std::move(orders))});
}

}  // namespace ydhopf
