#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbracket {

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Port roles at a crossing. x and xy lie on the under strand, y and yx on
/// the over strand; the colors satisfy xy = x under y and yx = y over x.
enum Port { kX = 0, kY = 1, kXY = 2, kYX = 3 };

struct Crossing {
  int sign;                  // +1 or -1
  std::array<int, 4> ports;  // semiarc indices, ordered by Port

  int x() const noexcept { return ports[kX]; }
  int y() const noexcept { return ports[kY]; }
  int xy() const noexcept { return ports[kXY]; }
  int yx() const noexcept { return ports[kYX]; }

  bool operator==(const Crossing&) const = default;
};

/// A state picks one smoothing per crossing; bit k set means crossing k is
/// given the trace smoothing, clear means the oriented one.
using SmoothingChoice = std::uint64_t;

/// Oriented link diagram with role-annotated crossings.
///
/// Semiarcs are indexed 0..semiarc_count()-1 internally; `semiarc_label`
/// keeps the positive ids used in the text format.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Validates that every semiarc index occurs exactly twice among the ports.
  LinkDiagram(std::string name, std::vector<Crossing> crossings, int free_loops,
              std::vector<int> semiarc_labels = {});

  const std::string& name() const noexcept { return name_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int semiarc_count() const noexcept { return static_cast<int>(labels_.size()); }
  int free_loops() const noexcept { return free_loops_; }
  int semiarc_label(int index) const { return labels_.at(index); }

  bool operator==(const LinkDiagram&) const = default;

 private:
  std::string name_;
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<int> labels_;
};

int writhe(const LinkDiagram& d);

/// Mirror image: every crossing changes sign. The over strand becomes the
/// under strand, so the ports are relabelled to keep the role pattern valid.
LinkDiagram mirror(const LinkDiagram& d);

/// Number of link components, free loops included.
int link_components(const LinkDiagram& d);

/// One closed curve of a smoothed diagram.
struct StateComponent {
  std::vector<int> semiarcs;  // ascending; empty for a free loop
  int free_loop = -1;         // index of the free loop, or -1

  bool operator==(const StateComponent&) const = default;
};

/// Components of the crossingless state, ordered by smallest semiarc, free loops last.
std::vector<StateComponent> state_components(const LinkDiagram& d, SmoothingChoice s);

/// Disjoint union, semiarc labels of the second diagram shifted past the first.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

// Text format:
//   link <name>
//   crossing <+|-> <x> <y> <xy> <yx>
//   loop
// Semiarc ids are positive integers; `#` starts a comment.
LinkDiagram parse_diagram(std::istream& in);
LinkDiagram parse_diagram(const std::string& text);
LinkDiagram load_diagram(const std::string& path);
std::string serialize_diagram(const LinkDiagram& d);

}  // namespace pbracket
