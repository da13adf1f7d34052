#include "pbracket/modring.hpp"

#include <numeric>

namespace pbracket {

NotAUnit::NotAUnit(std::int64_t value, std::int64_t modulus)
    : std::domain_error(std::to_string(value) + " is not a unit mod " + std::to_string(modulus)) {}

ModulusMismatch::ModulusMismatch(std::int64_t lhs, std::int64_t rhs)
    : std::invalid_argument("modulus mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

RingZm::RingZm(std::int64_t modulus) : m_(modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw std::invalid_argument("modulus out of range [2, 2^31-1]: " + std::to_string(modulus));
  }
}

namespace {

void check_same(const RingElem& a, const RingElem& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
}

}  // namespace

RingElem add(const RingElem& a, const RingElem& b) {
  check_same(a, b);
  return RingElem(a.value() + b.value(), a.ring());
}

RingElem mul(const RingElem& a, const RingElem& b) {
  check_same(a, b);
  return RingElem(a.value() * b.value(), a.ring());
}

RingElem neg(const RingElem& a) { return RingElem(-a.value(), a.ring()); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw NotAUnit(((a % m) + m) % m, m);
  return ((old_s % m) + m) % m;
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t base = ((a % m) + m) % m;
  if (e < 0) {
    base = inverse_mod(base, m);
    e = -e;
  }
  std::int64_t result = 1 % m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

RingElem inv(const RingElem& a) { return RingElem(inverse_mod(a.value(), a.modulus()), a.ring()); }

RingElem pow(const RingElem& a, std::int64_t e) {
  return RingElem(powmod(a.value(), e, a.modulus()), a.ring());
}

bool is_unit(const RingElem& a) { return std::gcd(a.value(), a.modulus()) == 1; }

std::vector<RingElem> units(const RingZm& ring) {
  std::vector<RingElem> out;
  for (std::int64_t v = 1; v < ring.modulus(); ++v) {
    if (std::gcd(v, ring.modulus()) == 1) out.emplace_back(v, ring);
  }
  return out;
}

}  // namespace pbracket
