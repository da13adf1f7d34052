#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pbracket/diagram.hpp"
#include "pbracket/homset.hpp"
#include "pbracket/powerbracket.hpp"

namespace pbracket {

/// Multiset of state-sum values over the homset.
struct InvariantResult {
  std::int64_t modulus = 0;
  std::map<std::int64_t, std::uint64_t> multiset;  // canonical residue -> multiplicity

  std::uint64_t total() const noexcept;
  bool operator==(const InvariantResult&) const = default;
};

/// Writhe-corrected state sum of one colored diagram.
std::int64_t evaluate(const LinkDiagram& d, const Coloring& c, const PowerBracket& b);

/// Contribution of a single Kauffman state, including the writhe factor.
std::int64_t state_contribution(const LinkDiagram& d, const Coloring& c, const PowerBracket& b,
                                SmoothingChoice s);

InvariantResult invariant(const LinkDiagram& d, const PowerBracket& b);

/// sum of u^beta over the multiset, e.g. "8 + 4u^3 + 4u^4".
std::string to_polynomial(const InvariantResult& r);

}  // namespace pbracket
