#include "ydhopf/field.hpp"

#include <string>
#include <vector>

#include "ydhopf/error.hpp"

namespace ydhopf {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(std::uint64_t p) : p_(0) {
  if (p >= (1ull << 31) || !is_prime(p))
    fail(ErrorKind::NonPrimeModulus, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  p_ = static_cast<std::uint32_t>(p);
  if (p_ <= 10000) {
    for (Scalar a = 1; a < p_; ++a)
      if (mul(a, inv(a)) != 1)
        fail(ErrorKind::NonPrimeModulus, "inverse check failed for " + std::to_string(a));
  }
}

Scalar Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar Field::inv(Scalar a) const {
  if (a % p_ == 0) fail(ErrorKind::InvalidArgument, "zero has no inverse");
  return pow(a, p_ - 2);
}

std::uint64_t multiplicative_order(const Field& f, Scalar a) {
  if (a == 0) fail(ErrorKind::InvalidArgument, "zero has no multiplicative order");
  std::uint64_t order = f.p() - 1;
  for (std::uint64_t q : prime_factors(f.p() - 1))
    while (order % q == 0 && f.pow(a, order / q) == 1) order /= q;
  return order;
}

Scalar primitive_root_of_unity(const Field& f, std::uint64_t n) {
  if (n == 0 || (f.p() - 1) % n != 0)
    fail(ErrorKind::NoSuchRoot,
         std::to_string(n) + " does not divide p-1 = " + std::to_string(f.p() - 1));
  for (Scalar z = 1; z < f.p(); ++z)
    if (multiplicative_order(f, z) == n) return z;
  fail(ErrorKind::NoSuchRoot, "no element of order " + std::to_string(n));
}

}  // namespace ydhopf
