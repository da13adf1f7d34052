#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pbracket/biquandle.hpp"
#include "pbracket/modring.hpp"
#include "pbracket/table.hpp"

namespace pbracket {

/// Subset of the biquandle elements; bit k is set iff element k (0-based) is in the set.
using ColorSet = std::uint32_t;

inline constexpr ColorSet singleton(Element x) noexcept { return ColorSet{1} << x; }

using CoefficientTable = SquareTable<std::int64_t>;

/// Skein coefficients A, B, Abar, Bbar on X x X, writhe unit w and the
/// component weight delta on subsets of X, all over Z_m. Entries are stored
/// as canonical residues. delta(empty set) is stored but never read by the
/// axioms or by state sums.
class PowerBracket {
 public:
  /// Throws MalformedTable on shape errors and NotAUnit when w is not a unit.
  PowerBracket(Biquandle biquandle, RingZm ring, CoefficientTable A, CoefficientTable B,
               CoefficientTable Abar, CoefficientTable Bbar, std::int64_t w,
               std::vector<std::int64_t> delta);

  const Biquandle& biquandle() const noexcept { return X_; }
  const RingZm& ring() const noexcept { return ring_; }
  std::int64_t modulus() const noexcept { return ring_.modulus(); }
  int size() const noexcept { return X_.size(); }

  const CoefficientTable& A() const noexcept { return A_; }
  const CoefficientTable& B() const noexcept { return B_; }
  const CoefficientTable& Abar() const noexcept { return Abar_; }
  const CoefficientTable& Bbar() const noexcept { return Bbar_; }
  std::int64_t w() const noexcept { return w_; }
  std::int64_t w_inverse() const noexcept { return w_inv_; }
  std::int64_t delta(ColorSet s) const { return delta_[s]; }
  const std::vector<std::int64_t>& delta_table() const noexcept { return delta_; }

  bool operator==(const PowerBracket&) const = default;

 private:
  Biquandle X_;
  RingZm ring_;
  CoefficientTable A_, B_, Abar_, Bbar_;
  std::int64_t w_;
  std::int64_t w_inv_;
  std::vector<std::int64_t> delta_;
};

enum class Axiom { I, II_I, II_II, III_I, III_II, III_III, III_IV, III_V };

std::string axiom_tag(Axiom a);

struct BracketViolation {
  Axiom axiom;
  int equation;                   // 0-based equation index within the axiom
  std::vector<Element> elements;  // x, y[, z] (0-based)
  std::vector<ColorSet> sets;     // C or C1, C2[, C3]
  std::int64_t left;
  std::int64_t right;

  std::string describe() const;
  bool operator==(const BracketViolation&) const = default;
};

struct ViolationReport {
  std::vector<BracketViolation> violations;
  bool truncated = false;  // stopped at the cap or at the first violation

  bool empty() const noexcept { return violations.empty(); }
};

struct VerifyOptions {
  std::size_t max_violations = 0;  // 0 = unlimited
  bool first_violation = false;
  /// Also check the union/intersection membership variants of the type II
  /// equations that appear in the move-by-move derivation.
  bool derivation_variants = false;
  /// Worker threads for the type III loops; the report does not depend on it.
  int jobs = 1;
};

/// Exhaustively checks every axiom in the order (i), (ii.*), (iii.*),
/// iterating elements ascending and then subsets by ascending mask.
ViolationReport verify(const PowerBracket& bracket, const VerifyOptions& options = {});

/// Lift of a classical biquandle bracket: delta is constant at
/// -A B^-1 - A^-1 B, which must agree for every (x, y).
class InconsistentDelta : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

PowerBracket from_standard(const Biquandle& X, const RingZm& ring, const CoefficientTable& A,
                           const CoefficientTable& B, std::int64_t w);

// Bracket file format: the biquandle block, `ring <m>`, then `A`, `B`,
// `Abar`, `Bbar` each followed by n rows, `w <int>`, `delta` followed by 2^n
// values indexed by subset mask.
PowerBracket parse_bracket(std::istream& in);
PowerBracket parse_bracket(const std::string& text);
PowerBracket load_bracket(const std::string& path);
std::string serialize_bracket(const PowerBracket& b);

namespace checks {

/// Flat, non-owning view over bracket data; lets the search test partially
/// built candidates without constructing a PowerBracket.
struct BracketView {
  const Biquandle* X;
  std::int64_t m;
  const std::int64_t* A;  // n*n row-major
  const std::int64_t* B;
  const std::int64_t* Abar;
  const std::int64_t* Bbar;
  std::int64_t w;
  std::int64_t w_inv;
  const std::int64_t* delta;  // 2^n
};

BracketView view_of(const PowerBracket& b);

/// Receives violations; returning false stops the check.
using Sink = std::function<bool(const BracketViolation&)>;

/// Type I equations at element x. Returns false if the sink asked to stop.
bool check_i(const BracketView& v, Element x, const Sink& sink);
/// Type II equations at the ordered pair (x, y).
bool check_ii(const BracketView& v, Element x, Element y, bool derivation_variants,
              const Sink& sink);
/// All five type III equations at (x, y, z).
bool check_iii(const BracketView& v, Element x, Element y, Element z, const Sink& sink);

/// True iff no equation fails; fastest path for search filters.
bool holds_i(const BracketView& v, Element x);
bool holds_ii(const BracketView& v, Element x, Element y);
bool holds_iii(const BracketView& v, Element x, Element y, Element z);

}  // namespace checks

}  // namespace pbracket
