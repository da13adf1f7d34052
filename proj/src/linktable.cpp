#include "pbracket/linktable.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>

#ifndef PBRACKET_LINK_DIR
#define PBRACKET_LINK_DIR "links"
#endif

namespace pbracket {

namespace {

const std::map<std::string, int>& table() {
  static const std::map<std::string, int> t = {
      {"L2a1", 2}, {"L4a1", 2}, {"L5a1", 2}, {"L6a1", 2}, {"L6a2", 2}, {"L6a3", 2},
      {"L6a4", 3}, {"L6a5", 3}, {"L6n1", 3}, {"L7a1", 2}, {"L7a2", 2}, {"L7a3", 2},
      {"L7a4", 2}, {"L7a5", 2}, {"L7a6", 2}, {"L7a7", 3}, {"L7n1", 2}, {"L7n2", 2},
  };
  return t;
}

}  // namespace

UnknownLink::UnknownLink(const std::string& name) : std::out_of_range("unknown link: " + name) {}

std::string link_directory() {
  if (const char* env = std::getenv("POWERBRACKET_LINK_DIR"); env && *env) return env;
  return PBRACKET_LINK_DIR;
}

const std::vector<std::string>& link_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, comps] : table()) v.push_back(name);
    return v;
  }();
  return names;
}

LinkDiagram load_link_file(const std::string& stem) {
  return load_diagram((std::filesystem::path(link_directory()) / (stem + ".lnk")).string());
}

LinkEntry load_link(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw UnknownLink(name);
  LinkEntry e{name, load_link_file(name), it->second};
  if (link_components(e.diagram) != e.components)
    throw DiagramError(name + ": expected " + std::to_string(e.components) + " components, found " +
                       std::to_string(link_components(e.diagram)));
  return e;
}

LinkDiagram resolve_link(const std::string& name_or_path) {
  if (table().count(name_or_path)) return load_link(name_or_path).diagram;
  if (std::filesystem::exists(name_or_path) && !std::filesystem::is_directory(name_or_path))
    return load_diagram(name_or_path);
  auto p = std::filesystem::path(link_directory()) / (name_or_path + ".lnk");
  if (std::filesystem::exists(p)) return load_diagram(p.string());
  throw UnknownLink(name_or_path);
}

}  // namespace pbracket
