#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pbracket/biquandle.hpp"
#include "pbracket/diagram.hpp"

namespace pbracket {

struct Coloring {
  std::vector<Element> semiarcs;  // by semiarc index
  std::vector<Element> loops;     // by free-loop index

  bool operator==(const Coloring&) const = default;
  auto operator<=>(const Coloring&) const = default;
};

/// True iff every crossing satisfies xy = x under y and yx = y over x.
bool is_coloring(const LinkDiagram& d, const Biquandle& X, const Coloring& c);

/// Calls `visit` for every coloring in lexicographic order (semiarcs by
/// index, then free loops). Stops early when `visit` returns false.
void for_each_coloring(const LinkDiagram& d, const Biquandle& X,
                       const std::function<bool(const Coloring&)>& visit);

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const Biquandle& X);

std::uint64_t counting_invariant(const LinkDiagram& d, const Biquandle& X);

}  // namespace pbracket
