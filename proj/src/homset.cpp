#include "pbracket/homset.hpp"

#include <tuple>

namespace pbracket {

bool is_coloring(const LinkDiagram& d, const Biquandle& X, const Coloring& c) {
  if (static_cast<int>(c.semiarcs.size()) != d.semiarc_count()) return false;
  if (static_cast<int>(c.loops.size()) != d.free_loops()) return false;
  for (Element e : c.semiarcs)
    if (e < 0 || e >= X.size()) return false;
  for (Element e : c.loops)
    if (e < 0 || e >= X.size()) return false;
  for (const auto& k : d.crossings()) {
    const Element x = c.semiarcs[k.x()], y = c.semiarcs[k.y()];
    if (c.semiarcs[k.xy()] != X.under(x, y) || c.semiarcs[k.yx()] != X.over(y, x)) return false;
  }
  return true;
}

namespace {

class Solver {
 public:
  Solver(const LinkDiagram& d, const Biquandle& X,
         const std::function<bool(const Coloring&)>& visit)
      : d_(d), X_(X), visit_(visit), at_(d.semiarc_count()) {
    color_.semiarcs.assign(d.semiarc_count(), -1);
    color_.loops.assign(d.free_loops(), 0);
    for (int i = 0; i < d.crossing_count(); ++i) {
      for (int p : d.crossings()[i].ports) at_[p].push_back(i);
    }
  }

  void run() { descend(0); }

 private:
  // Returns false to abort the whole enumeration.
  bool descend(int next) {
    while (next < d_.semiarc_count() && color_.semiarcs[next] >= 0) ++next;
    if (next == d_.semiarc_count()) return loops(0);
    for (Element e = 0; e < X_.size(); ++e) {
      const std::size_t mark = trail_.size();
      if (assign(next, e) && propagate(mark)) {
        if (!descend(next + 1)) return false;
      }
      undo(mark);
    }
    return true;
  }

  bool loops(int l) {
    if (l == d_.free_loops()) return visit_(color_);
    for (Element e = 0; e < X_.size(); ++e) {
      color_.loops[l] = e;
      if (!loops(l + 1)) return false;
    }
    return true;
  }

  bool assign(int arc, Element e) {
    Element& slot = color_.semiarcs[arc];
    if (slot >= 0) return slot == e;
    slot = e;
    trail_.push_back(arc);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      color_.semiarcs[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Any two of a crossing's four colors that determine the others are used:
  // (x, y) forward, (xy, yx) through the inverse switch, and the mixed pairs
  // through the column bijections.
  bool propagate(std::size_t from) {
    for (std::size_t q = from; q < trail_.size(); ++q) {
      for (int ci : at_[trail_[q]]) {
        const Crossing& k = d_.crossings()[ci];
        const auto& s = color_.semiarcs;
        const Element x = s[k.x()], y = s[k.y()], xy = s[k.xy()], yx = s[k.yx()];
        Element nx = x, ny = y;
        if (x < 0 || y < 0) {
          if (xy >= 0 && yx >= 0) {
            std::tie(nx, ny) = X_.switch_inverse(yx, xy);
          } else if (y >= 0 && xy >= 0) {
            nx = under_solve(xy, y);
          } else if (x >= 0 && yx >= 0) {
            ny = over_solve(yx, x);
          } else {
            continue;
          }
        }
        if (!assign(k.x(), nx) || !assign(k.y(), ny)) return false;
        if (!assign(k.xy(), X_.under(nx, ny)) || !assign(k.yx(), X_.over(ny, nx))) return false;
      }
    }
    return true;
  }

  // The x with x under y = target.
  Element under_solve(Element target, Element y) const {
    for (Element x = 0; x < X_.size(); ++x)
      if (X_.under(x, y) == target) return x;
    return -1;
  }

  // The y with y over x = target.
  Element over_solve(Element target, Element x) const {
    for (Element y = 0; y < X_.size(); ++y)
      if (X_.over(y, x) == target) return y;
    return -1;
  }

  const LinkDiagram& d_;
  const Biquandle& X_;
  const std::function<bool(const Coloring&)>& visit_;
  std::vector<std::vector<int>> at_;
  Coloring color_;
  std::vector<int> trail_;
};

}  // namespace

void for_each_coloring(const LinkDiagram& d, const Biquandle& X,
                       const std::function<bool(const Coloring&)>& visit) {
  Solver(d, X, visit).run();
}

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const Biquandle& X) {
  std::vector<Coloring> out;
  for_each_coloring(d, X, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::uint64_t counting_invariant(const LinkDiagram& d, const Biquandle& X) {
  std::uint64_t n = 0;
  for_each_coloring(d, X, [&](const Coloring&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace pbracket
