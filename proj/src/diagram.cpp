#include "pbracket/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "tokens.hpp"
#include "union_find.hpp"

namespace pbracket {

LinkDiagram::LinkDiagram(std::string name, std::vector<Crossing> crossings, int free_loops,
                         std::vector<int> semiarc_labels)
    : name_(std::move(name)), crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw DiagramError("negative free loop count");
  if (crossings_.size() > 62) throw DiagramError("at most 62 crossings are supported");
  const int k = 2 * static_cast<int>(crossings_.size());
  std::vector<int> seen(k, 0);
  for (const auto& c : crossings_) {
    if (c.sign != 1 && c.sign != -1) throw DiagramError("crossing sign must be +1 or -1");
    for (int p : c.ports) {
      if (p < 0 || p >= k) throw DiagramError("semiarc index out of range");
      ++seen[p];
    }
  }
  for (int i = 0; i < k; ++i) {
    if (seen[i] != 2) {
      const int label = semiarc_labels.empty() ? i + 1 : semiarc_labels.at(i);
      throw DiagramError("semiarc " + std::to_string(label) + " has " + std::to_string(seen[i]) +
                         " endpoints, expected 2");
    }
  }
  if (semiarc_labels.empty()) {
    labels_.resize(k);
    std::iota(labels_.begin(), labels_.end(), 1);
  } else {
    if (static_cast<int>(semiarc_labels.size()) != k) throw DiagramError("wrong number of labels");
    labels_ = std::move(semiarc_labels);
  }
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> out;
  out.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) {
    out.push_back(Crossing{-c.sign, {c.y(), c.x(), c.yx(), c.xy()}});
  }
  std::vector<int> labels(d.semiarc_count());
  for (int i = 0; i < d.semiarc_count(); ++i) labels[i] = d.semiarc_label(i);
  return LinkDiagram(d.name(), std::move(out), d.free_loops(), std::move(labels));
}

int link_components(const LinkDiagram& d) {
  detail::UnionFind uf(d.semiarc_count());
  for (const auto& c : d.crossings()) {
    uf.unite(c.x(), c.xy());
    uf.unite(c.y(), c.yx());
  }
  return uf.classes() + d.free_loops();
}

std::vector<StateComponent> state_components(const LinkDiagram& d, SmoothingChoice s) {
  const int k = d.semiarc_count();
  detail::UnionFind uf(k);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossings()[i];
    if ((s >> i) & 1) {
      uf.unite(c.x(), c.yx());
      uf.unite(c.y(), c.xy());
    } else {
      uf.unite(c.x(), c.y());
      uf.unite(c.xy(), c.yx());
    }
  }
  std::vector<StateComponent> out;
  std::vector<int> slot(k, -1);
  for (int a = 0; a < k; ++a) {
    const int r = uf.find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].semiarcs.push_back(a);
  }
  for (int l = 0; l < d.free_loops(); ++l) out.push_back(StateComponent{{}, l});
  return out;
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<Crossing> cs = a.crossings();
  const int shift = a.semiarc_count();
  int top = 0;
  std::vector<int> labels;
  for (int i = 0; i < a.semiarc_count(); ++i) {
    labels.push_back(a.semiarc_label(i));
    top = std::max(top, a.semiarc_label(i));
  }
  for (int i = 0; i < b.semiarc_count(); ++i) labels.push_back(top + b.semiarc_label(i));
  for (Crossing c : b.crossings()) {
    for (int& p : c.ports) p += shift;
    cs.push_back(c);
  }
  return LinkDiagram(a.name() + "+" + b.name(), std::move(cs), a.free_loops() + b.free_loops(),
                     std::move(labels));
}

LinkDiagram parse_diagram(std::istream& in) {
  detail::Tokens tok(in);
  tok.expect("link");
  std::string name = tok.next();
  struct Raw {
    int sign;
    std::array<std::int64_t, 4> ids;
  };
  std::vector<Raw> raw;
  int loops = 0;
  std::map<std::int64_t, int> index;
  while (!tok.done()) {
    const int at = tok.line();
    const std::string kw = tok.next();
    if (kw == "loop") {
      ++loops;
    } else if (kw == "crossing") {
      const std::string s = tok.next();
      if (s != "+" && s != "-") {
        throw detail::ParseError("line " + std::to_string(at) + ": bad sign '" + s + "'");
      }
      Raw r{s == "+" ? 1 : -1, {}};
      for (auto& id : r.ids) {
        id = tok.integer();
        if (id <= 0) {
          throw detail::ParseError("line " + std::to_string(at) + ": semiarc ids must be positive");
        }
        index.emplace(id, 0);
      }
      raw.push_back(r);
    } else {
      throw detail::ParseError("line " + std::to_string(at) + ": unknown keyword '" + kw + "'");
    }
  }
  // Ids are compacted in ascending order so the coloring order follows them.
  std::vector<int> labels;
  for (auto& [id, ix] : index) {
    ix = static_cast<int>(labels.size());
    labels.push_back(static_cast<int>(id));
  }
  if (labels.size() != 2 * raw.size()) {
    // Report the offending id rather than a bare count mismatch.
    std::map<std::int64_t, int> count;
    for (const auto& r : raw)
      for (auto id : r.ids) ++count[id];
    for (auto [id, n] : count) {
      if (n != 2) {
        throw DiagramError("semiarc " + std::to_string(id) + " has " + std::to_string(n) +
                           " endpoints, expected 2");
      }
    }
    throw DiagramError("semiarc ids do not pair up");
  }
  std::vector<Crossing> cs;
  for (const auto& r : raw) {
    Crossing c{r.sign, {}};
    for (int p = 0; p < 4; ++p) c.ports[p] = index.at(r.ids[p]);
    cs.push_back(c);
  }
  return LinkDiagram(std::move(name), std::move(cs), loops, std::move(labels));
}

LinkDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

LinkDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_diagram(in);
}

std::string serialize_diagram(const LinkDiagram& d) {
  std::ostringstream os;
  os << "link " << d.name() << "\n";
  for (const auto& c : d.crossings()) {
    os << "crossing " << (c.sign > 0 ? '+' : '-');
    for (int p : c.ports) os << " " << d.semiarc_label(p);
    os << "\n";
  }
  for (int l = 0; l < d.free_loops(); ++l) os << "loop\n";
  return os.str();
}

}  // namespace pbracket
