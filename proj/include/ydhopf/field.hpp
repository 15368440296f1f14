#pragma once

#include <cstdint>

namespace ydhopf {

// Canonical residue in [0, p).
using Scalar = std::uint32_t;

class Field {
 public:
  // Throws NonPrimeModulus unless p is a prime below 2^31.
  explicit Field(std::uint64_t p);

  std::uint32_t p() const { return p_; }

  Scalar from_int(std::int64_t v) const;
  Scalar add(Scalar a, Scalar b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  // Throws InvalidArgument for a == 0.
  Scalar inv(Scalar a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const Field& f, Scalar a);

// Smallest element of exact multiplicative order n. Throws NoSuchRoot if n does not divide p-1.
Scalar primitive_root_of_unity(const Field& f, std::uint64_t n);

}  // namespace ydhopf
