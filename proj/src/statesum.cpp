#include "pbracket/statesum.hpp"

#include <stdexcept>

#include "union_find.hpp"

namespace pbracket {

std::uint64_t InvariantResult::total() const noexcept {
  std::uint64_t n = 0;
  for (const auto& [value, count] : multiset) n += count;
  return n;
}

namespace {

void check_inputs(const LinkDiagram& d, const Coloring& c, const PowerBracket& b) {
  if (!is_coloring(d, b.biquandle(), c)) {
    throw std::invalid_argument("not a coloring of this diagram by the bracket's biquandle");
  }
  if (d.crossing_count() > 30) throw std::invalid_argument("too many crossings for a state sum");
}

std::int64_t writhe_factor(const LinkDiagram& d, const PowerBracket& b) {
  // w^(n - p) = (w^-1)^writhe
  return powmod(b.w(), -writhe(d), b.modulus());
}

// Sum over states without the writhe factor.
std::int64_t raw_state(const LinkDiagram& d, const Coloring& c, const PowerBracket& b,
                       SmoothingChoice s) {
  const std::int64_t m = b.modulus();
  std::int64_t value = 1;
  for (int i = 0; i < d.crossing_count() && value != 0; ++i) {
    const Crossing& k = d.crossings()[i];
    const Element x = c.semiarcs[k.x()], y = c.semiarcs[k.y()];
    const bool trace = (s >> i) & 1;
    const CoefficientTable& t =
        k.sign > 0 ? (trace ? b.B() : b.A()) : (trace ? b.Bbar() : b.Abar());
    value = value * t(x, y) % m;
  }
  if (value == 0) return 0;

  const int arcs = d.semiarc_count();
  detail::UnionFind uf(arcs);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& k = d.crossings()[i];
    if ((s >> i) & 1) {
      uf.unite(k.x(), k.yx());
      uf.unite(k.y(), k.xy());
    } else {
      uf.unite(k.x(), k.y());
      uf.unite(k.xy(), k.yx());
    }
  }
  std::vector<ColorSet> colors(arcs, 0);
  for (int a = 0; a < arcs; ++a) colors[uf.find(a)] |= singleton(c.semiarcs[a]);
  for (int a = 0; a < arcs; ++a) {
    if (uf.find(a) == a) value = value * b.delta(colors[a]) % m;
  }
  for (Element e : c.loops) value = value * b.delta(singleton(e)) % m;
  return value;
}

}  // namespace

std::int64_t state_contribution(const LinkDiagram& d, const Coloring& c, const PowerBracket& b,
                                SmoothingChoice s) {
  check_inputs(d, c, b);
  return raw_state(d, c, b, s) * writhe_factor(d, b) % b.modulus();
}

std::int64_t evaluate(const LinkDiagram& d, const Coloring& c, const PowerBracket& b) {
  check_inputs(d, c, b);
  const std::int64_t m = b.modulus();
  const SmoothingChoice states = SmoothingChoice{1} << d.crossing_count();
  std::int64_t sum = 0;
  for (SmoothingChoice s = 0; s < states; ++s) sum = (sum + raw_state(d, c, b, s)) % m;
  return sum * writhe_factor(d, b) % m;
}

InvariantResult invariant(const LinkDiagram& d, const PowerBracket& b) {
  InvariantResult r;
  r.modulus = b.modulus();
  for_each_coloring(d, b.biquandle(), [&](const Coloring& c) {
    ++r.multiset[evaluate(d, c, b)];
    return true;
  });
  return r;
}

std::string to_polynomial(const InvariantResult& r) {
  std::string out;
  for (const auto& [beta, count] : r.multiset) {
    if (count == 0) continue;
    if (!out.empty()) out += " + ";
    if (beta == 0) {
      out += std::to_string(count);
      continue;
    }
    if (count != 1) out += std::to_string(count);
    out += "u";
    if (beta != 1) out += "^" + std::to_string(beta);
  }
  return out.empty() ? "0" : out;
}

}  // namespace pbracket
