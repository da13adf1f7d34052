#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pbracket/diagram.hpp"

namespace pbracket {

class UnknownLink : public std::out_of_range {
 public:
  explicit UnknownLink(const std::string& name);
};

struct LinkEntry {
  std::string name;
  LinkDiagram diagram;
  int components = 0;
};

/// Directory holding the bundled `<name>.lnk` files. POWERBRACKET_LINK_DIR
/// wins over the compiled-in default.
std::string link_directory();

/// Names of the tabulated links, sorted.
const std::vector<std::string>& link_names();

/// Loads a tabulated link. Throws UnknownLink for names outside the table,
/// DiagramError if the file disagrees with the stored component count.
LinkEntry load_link(const std::string& name);

/// Loads any file in the link directory, e.g. the Reidemeister variants.
LinkDiagram load_link_file(const std::string& stem);

/// A tabulated name, a stem in the link directory, or a path to a file.
LinkDiagram resolve_link(const std::string& name_or_path);

}  // namespace pbracket
