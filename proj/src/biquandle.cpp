#include "pbracket/biquandle.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "io_detail.hpp"

namespace pbracket {

int BiquandleViolation::axiom() const noexcept {
  switch (kind) {
    case Kind::Idempotence:
      return 1;
    case Kind::BetaNotBijective:
    case Kind::AlphaNotBijective:
    case Kind::SwitchNotBijective:
      return 2;
    default:
      return 3;
  }
}

std::string BiquandleViolation::describe() const {
  std::ostringstream os;
  os << "axiom " << axiom() << " ";
  switch (kind) {
    case Kind::Idempotence:
      os << "(x under x = x over x)";
      break;
    case Kind::BetaNotBijective:
      os << "(x -> x under y bijective)";
      break;
    case Kind::AlphaNotBijective:
      os << "(x -> x over y bijective)";
      break;
    case Kind::SwitchNotBijective:
      os << "(S bijective)";
      break;
    case Kind::Exchange1:
      os << "(exchange law 1)";
      break;
    case Kind::Exchange2:
      os << "(exchange law 2)";
      break;
    case Kind::Exchange3:
      os << "(exchange law 3)";
      break;
  }
  os << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i] + 1;
  os << ")";
  return os.str();
}

Biquandle::Biquandle(SquareTable<Element> under, SquareTable<Element> over)
    : under_(std::move(under)), over_(std::move(over)) {
  const int n = under_.size();
  switch_inverse_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      switch_inverse_[over_(y, x) * n + under_(x, y)] = x * n + y;
    }
  }
}

std::pair<Element, Element> Biquandle::switch_inverse(Element a, Element b) const {
  const int n = size();
  const int xy = switch_inverse_[a * n + b];
  return {xy / n, xy % n};
}

namespace {

void check_shape(const SquareTable<Element>& t, int n, const char* name) {
  if (t.size() != n) throw MalformedTable(std::string(name) + " table has wrong size");
  for (Element v : t.data()) {
    if (v < 0 || v >= n) {
      throw MalformedTable(std::string(name) + " table entry " + std::to_string(v + 1) +
                           " out of range 1.." + std::to_string(n));
    }
  }
}

}  // namespace

BiquandleValidation validate(const SquareTable<Element>& U, const SquareTable<Element>& O) {
  using Kind = BiquandleViolation::Kind;
  const int n = U.size();
  if (n < 1) throw MalformedTable("biquandle must have at least one element");
  check_shape(U, n, "under");
  check_shape(O, n, "over");

  BiquandleValidation result;
  auto& out = result.violations;

  for (int x = 0; x < n; ++x) {
    if (U(x, x) != O(x, x)) out.push_back({Kind::Idempotence, {x}});
  }

  std::vector<int> seen(n);
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) ++seen[U(x, y)];
    if (std::count(seen.begin(), seen.end(), 1) != n) out.push_back({Kind::BetaNotBijective, {y}});
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) ++seen[O(x, y)];
    if (std::count(seen.begin(), seen.end(), 1) != n) {
      out.push_back({Kind::AlphaNotBijective, {y}});
    }
  }

  std::vector<int> preimage(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int& slot = preimage[O(y, x) * n + U(x, y)];
      if (slot >= 0) {
        out.push_back({Kind::SwitchNotBijective, {x, y}});
      } else {
        slot = x * n + y;
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (U(U(x, y), U(z, y)) != U(U(x, z), O(y, z))) out.push_back({Kind::Exchange1, {x, y, z}});
        if (O(U(x, y), U(z, y)) != U(O(x, z), O(y, z))) out.push_back({Kind::Exchange2, {x, y, z}});
        if (O(O(x, y), O(z, y)) != O(O(x, z), U(y, z))) out.push_back({Kind::Exchange3, {x, y, z}});
      }
    }
  }

  if (out.empty()) result.biquandle = Biquandle(U, O);
  return result;
}

Biquandle make_biquandle(const SquareTable<Element>& under, const SquareTable<Element>& over) {
  auto v = validate(under, over);
  if (!v.ok()) {
    std::string msg = "not a biquandle:";
    for (const auto& viol : v.violations) msg += "\n  " + viol.describe();
    throw std::invalid_argument(msg);
  }
  return *std::move(v.biquandle);
}

Biquandle constant_action(const std::vector<Element>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> hit(n, 0);
  for (Element s : sigma) {
    if (s < 0 || s >= n || hit[s]++) throw std::invalid_argument("sigma is not a permutation");
  }
  SquareTable<Element> t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t(x, y) = sigma[x];
  return make_biquandle(t, t);
}

Biquandle alexander(std::int64_t modulus, std::int64_t s, std::int64_t t) {
  const RingZm ring(modulus);
  const RingElem se(s, ring), te(t, ring);
  if (!is_unit(se)) throw NotAUnit(se.value(), modulus);
  if (!is_unit(te)) throw NotAUnit(te.value(), modulus);
  const int n = static_cast<int>(modulus);
  SquareTable<Element> U(n), O(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      U(x, y) = static_cast<Element>(ring.reduce(te.value() * x + (se.value() - te.value()) * y));
      O(x, y) = static_cast<Element>(ring.reduce(se.value() * x));
    }
  }
  return make_biquandle(U, O);
}

std::vector<std::vector<Element>> orbit_decomposition(const Biquandle& X) {
  const int n = X.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      unite(x, X.under(x, y));
      unite(x, X.over(x, y));
    }
  }
  std::vector<std::vector<Element>> blocks;
  std::vector<int> index(n, -1);
  for (int x = 0; x < n; ++x) {
    const int r = find(x);
    if (index[r] < 0) {
      index[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[r]].push_back(x);
  }
  return blocks;
}

std::optional<Biquandle> sub_biquandle(const Biquandle& X, const std::vector<Element>& block) {
  const int k = static_cast<int>(block.size());
  std::vector<int> local(X.size(), -1);
  for (int i = 0; i < k; ++i) local[block[i]] = i;
  SquareTable<Element> U(k), O(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int u = local[X.under(block[i], block[j])];
      const int o = local[X.over(block[i], block[j])];
      if (u < 0 || o < 0) return std::nullopt;
      U(i, j) = u;
      O(i, j) = o;
    }
  }
  auto v = validate(U, O);
  return v.biquandle;
}

namespace detail {

namespace {

SquareTable<Element> read_rows(Tokens& tok, int n) {
  SquareTable<Element> t(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int at = tok.line();
      const std::int64_t v = tok.integer();
      if (v < 1 || v > n) {
        throw MalformedTable("line " + std::to_string(at) + ": entry " + std::to_string(v) +
                             " out of range 1.." + std::to_string(n));
      }
      t(r, c) = static_cast<Element>(v - 1);
    }
  }
  return t;
}

}  // namespace

BiquandleTables read_tables(Tokens& tok) {
  tok.expect("biquandle");
  const std::int64_t n = tok.integer();
  if (n < 1 || n > 30) throw MalformedTable("biquandle size must be in 1..30");
  auto U = read_rows(tok, static_cast<int>(n));
  auto O = read_rows(tok, static_cast<int>(n));
  return {std::move(U), std::move(O)};
}

Biquandle read_biquandle(Tokens& tok) {
  auto t = read_tables(tok);
  return make_biquandle(t.under, t.over);
}

}  // namespace detail

BiquandleTables parse_biquandle_tables(std::istream& in) {
  detail::Tokens tok(in);
  auto t = detail::read_tables(tok);
  if (!tok.done()) throw detail::ParseError("trailing tokens after biquandle tables");
  return t;
}

BiquandleTables load_biquandle_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_biquandle_tables(in);
}

Biquandle parse_biquandle(std::istream& in) {
  detail::Tokens tok(in);
  Biquandle X = detail::read_biquandle(tok);
  if (!tok.done()) throw detail::ParseError("trailing tokens after biquandle tables");
  return X;
}

Biquandle parse_biquandle(const std::string& text) {
  std::istringstream in(text);
  return parse_biquandle(in);
}

Biquandle load_biquandle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_biquandle(in);
}

std::string serialize_biquandle(const Biquandle& X) {
  std::ostringstream os;
  const int n = X.size();
  os << "biquandle " << n << "\n";
  for (const auto* t : {&X.under_table(), &X.over_table()}) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) os << (c ? " " : "") << (*t)(r, c) + 1;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace pbracket
