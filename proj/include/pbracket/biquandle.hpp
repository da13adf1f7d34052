#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbracket/modring.hpp"
#include "pbracket/table.hpp"

namespace pbracket {

// Elements are 0-based indices in the C++ API. Text formats and reports use
// the 1-based labels {1..n}.
using Element = int;

class MalformedTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BiquandleViolation {
  enum class Kind {
    Idempotence,    // x under x != x over x
    BetaNotBijective,   // x -> x under y not a bijection for this y
    AlphaNotBijective,  // x -> x over y not a bijection for this y
    SwitchNotBijective,  // S(x,y) = (y over x, x under y) collides
    Exchange1,
    Exchange2,
    Exchange3,
  };
  Kind kind;
  std::vector<Element> witness;

  int axiom() const noexcept;
  std::string describe() const;
};

struct BiquandleValidation;

/// A finite biquandle given by its two operation tables.
/// under(x, y) is x under-triangle y, over(x, y) is x over-triangle y.
class Biquandle {
 public:
  int size() const noexcept { return under_.size(); }

  Element under(Element x, Element y) const { return under_(x, y); }
  Element over(Element x, Element y) const { return over_(x, y); }

  const SquareTable<Element>& under_table() const noexcept { return under_; }
  const SquareTable<Element>& over_table() const noexcept { return over_; }

  /// Inverse of S(x, y) = (y over x, x under y).
  std::pair<Element, Element> switch_inverse(Element a, Element b) const;

  bool operator==(const Biquandle&) const = default;

 private:
  friend struct BiquandleValidation;
  friend BiquandleValidation validate(const SquareTable<Element>&, const SquareTable<Element>&);
  Biquandle(SquareTable<Element> under, SquareTable<Element> over);

  SquareTable<Element> under_;
  SquareTable<Element> over_;
  std::vector<int> switch_inverse_;  // index a*n+b -> x*n+y
};

struct BiquandleValidation {
  std::optional<Biquandle> biquandle;
  std::vector<BiquandleViolation> violations;

  bool ok() const noexcept { return biquandle.has_value(); }
};

/// Checks all three axioms and reports every violation. Throws MalformedTable
/// when the tables are not n x n over {0..n-1}.
BiquandleValidation validate(const SquareTable<Element>& under, const SquareTable<Element>& over);

/// Like validate, but throws std::invalid_argument listing the violations.
Biquandle make_biquandle(const SquareTable<Element>& under, const SquareTable<Element>& over);

/// x under y = x over y = sigma(x).
Biquandle constant_action(const std::vector<Element>& sigma);

/// Elements encode residues 0..m-1; x under y = t x + (s - t) y, x over y = s x.
Biquandle alexander(std::int64_t modulus, std::int64_t s, std::int64_t t);

/// Finest partition of the elements closed under both operations, blocks
/// sorted by their smallest element.
std::vector<std::vector<Element>> orbit_decomposition(const Biquandle& X);

/// Induced structure on a block closed under both operations, elements renumbered
/// in block order. Returns nullopt when the block is not closed.
std::optional<Biquandle> sub_biquandle(const Biquandle& X, const std::vector<Element>& block);

// Text format: `biquandle <n>`, n rows of the under table, n rows of the over
// table, entries 1..n, `#` starts a comment.
Biquandle parse_biquandle(std::istream& in);
/// Raw tables of a biquandle file, range-checked but not validated.
struct BiquandleTables {
  SquareTable<Element> under;
  SquareTable<Element> over;
};
BiquandleTables parse_biquandle_tables(std::istream& in);
BiquandleTables load_biquandle_tables(const std::string& path);
Biquandle parse_biquandle(const std::string& text);
Biquandle load_biquandle(const std::string& path);
std::string serialize_biquandle(const Biquandle& X);

}  // namespace pbracket
