#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbracket {

class NotAUnit : public std::domain_error {
 public:
  NotAUnit(std::int64_t value, std::int64_t modulus);
};

class ModulusMismatch : public std::invalid_argument {
 public:
  ModulusMismatch(std::int64_t lhs, std::int64_t rhs);
};

/// The coefficient ring Z_m, 2 <= m <= 2^31 - 1.
class RingZm {
 public:
  static constexpr std::int64_t kMaxModulus = 2147483647;

  explicit RingZm(std::int64_t modulus);

  std::int64_t modulus() const noexcept { return m_; }

  /// Canonical residue of an arbitrary integer.
  std::int64_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % m_;
    return r < 0 ? r + m_ : r;
  }

  bool operator==(const RingZm&) const = default;

 private:
  std::int64_t m_;
};

/// An element of Z_m. The value is always the canonical residue in [0, m).
class RingElem {
 public:
  RingElem(std::int64_t value, const RingZm& ring)
      : value_(ring.reduce(value)), modulus_(ring.modulus()) {}

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  RingZm ring() const { return RingZm(modulus_); }

  bool operator==(const RingElem&) const = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

RingElem add(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);
RingElem neg(const RingElem& a);

/// Multiplicative inverse via extended Euclid; throws NotAUnit when gcd(a, m) != 1.
RingElem inv(const RingElem& a);

/// a^e by repeated squaring; negative exponents go through inv(a).
RingElem pow(const RingElem& a, std::int64_t e);

bool is_unit(const RingElem& a);

/// All residues coprime to m, ascending.
std::vector<RingElem> units(const RingZm& ring);

// Raw residue helpers used by the hot loops (verifier, state sums).
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept {
  return (a * b) % m;
}
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m);

}  // namespace pbracket
