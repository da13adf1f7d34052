#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "pbracket/biquandle.hpp"

using namespace pbracket;

namespace {

using Table = SquareTable<Element>;

// Straight transcription of the three biquandle axioms.
bool axioms_hold(const Table& U, const Table& O) {
  const int n = U.size();
  for (int x = 0; x < n; ++x)
    if (U(x, x) != O(x, x)) return false;
  for (int y = 0; y < n; ++y) {
    std::set<int> a, b;
    for (int x = 0; x < n; ++x) {
      a.insert(O(x, y));
      b.insert(U(x, y));
    }
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) return false;
  }
  std::set<std::pair<int, int>> s;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) s.insert({O(y, x), U(x, y)});
  if (static_cast<int>(s.size()) != n * n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (U(U(x, y), U(z, y)) != U(U(x, z), O(y, z))) return false;
        if (O(U(x, y), U(z, y)) != U(O(x, z), O(y, z))) return false;
        if (O(O(x, y), O(z, y)) != O(O(x, z), U(y, z))) return false;
      }
  return true;
}

Table from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  Table t(static_cast<int>(rows.size()));
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (int v : row) t(r, c++) = v;
    ++r;
  }
  return t;
}

const char* kTwoElement =
    "biquandle 2\n"
    "2 2\n1 1\n"
    "# over\n"
    "2 2\n1 1\n";

}  // namespace

TEST_SUITE("biquandle") {
  TEST_CASE("validator agrees with a direct axiom check on all 2x2 tables") {
    int valid = 0;
    for (int u = 0; u < 16; ++u)
      for (int o = 0; o < 16; ++o) {
        Table U(2), O(2);
        for (int k = 0; k < 4; ++k) {
          U(k / 2, k % 2) = (u >> k) & 1;
          O(k / 2, k % 2) = (o >> k) & 1;
        }
        const bool ok = validate(U, O).ok();
        CHECK(ok == axioms_hold(U, O));
        valid += ok;
      }
    CHECK(valid > 0);
  }

  TEST_CASE("constant action biquandles are valid for every permutation up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
      std::vector<Element> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        Biquandle X = constant_action(sigma);
        CHECK(axioms_hold(X.under_table(), X.over_table()));
        for (int x = 0; x < n; ++x) CHECK(X.under(x, (x + 1) % n) == sigma[x]);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    CHECK_THROWS_AS(constant_action({0, 0, 1}), std::invalid_argument);
  }

  TEST_CASE("Alexander biquandles are valid for unit s, t and m <= 7") {
    for (std::int64_t m = 2; m <= 7; ++m)
      for (std::int64_t s = 1; s < m; ++s)
        for (std::int64_t t = 1; t < m; ++t) {
          if (std::gcd(s, m) != 1 || std::gcd(t, m) != 1) {
            CHECK_THROWS_AS(alexander(m, s, t), NotAUnit);
            continue;
          }
          Biquandle X = alexander(m, s, t);
          CHECK(X.size() == m);
          CHECK(axioms_hold(X.under_table(), X.over_table()));
        }
  }

  TEST_CASE("violations name the failing axiom") {
    // x under y = x + 1 mod 3, x over y = x: idempotence fails everywhere
    Table U(3), O(3);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        U(x, y) = (x + 1) % 3;
        O(x, y) = x;
      }
    auto v = validate(U, O);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violations.front().axiom() == 1);
    CHECK_THROWS_AS(make_biquandle(U, O), std::invalid_argument);

    Table Z(2, 0);
    auto w = validate(Z, Z);
    REQUIRE_FALSE(w.ok());
    bool has2 = false;
    for (const auto& e : w.violations) has2 |= e.axiom() == 2;
    CHECK(has2);
  }

  TEST_CASE("malformed tables are rejected") {
    Table U(2, 0), O(3, 0);
    CHECK_THROWS_AS(validate(U, O), MalformedTable);
    Table bad = from_rows({{0, 5}, {1, 0}});
    CHECK_THROWS_AS(validate(bad, bad), MalformedTable);
  }

  TEST_CASE("switch inverse undoes the switch map") {
    Biquandle X = alexander(5, 2, 3);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        auto [a, b] = X.switch_inverse(X.over(y, x), X.under(x, y));
        CHECK(a == x);
        CHECK(b == y);
      }
  }

  TEST_CASE("orbit decomposition is a partition into closed blocks") {
    std::vector<Biquandle> samples = {constant_action({1, 0, 2, 4, 3}), alexander(6, 5, 1),
                                      alexander(4, 1, 3), constant_action({0})};
    samples.push_back(parse_biquandle(std::string(kTwoElement)));
    for (const auto& X : samples) {
      auto blocks = orbit_decomposition(X);
      std::vector<int> seen(X.size(), 0);
      Element prev = -1;
      for (const auto& block : blocks) {
        REQUIRE_FALSE(block.empty());
        CHECK(block.front() > prev);
        prev = block.front();
        std::set<Element> in(block.begin(), block.end());
        for (Element x : block) {
          ++seen[x];
          for (Element y : block) {
            CHECK(in.count(X.under(x, y)));
            CHECK(in.count(X.over(x, y)));
          }
        }
        auto sub = sub_biquandle(X, block);
        REQUIRE(sub.has_value());
        CHECK(sub->size() == static_cast<int>(block.size()));
        CHECK(axioms_hold(sub->under_table(), sub->over_table()));
      }
      for (int c : seen) CHECK(c == 1);
    }
  }

  TEST_CASE("orbit decomposition is the finest closed partition") {
    CHECK(orbit_decomposition(constant_action({1, 0, 2, 4, 3})) ==
          std::vector<std::vector<Element>>{{0, 1}, {2}, {3, 4}});
    CHECK(orbit_decomposition(constant_action({0, 1, 2})).size() == 3);
    CHECK(orbit_decomposition(parse_biquandle(std::string(kTwoElement))).size() == 1);
    CHECK_FALSE(sub_biquandle(constant_action({1, 0, 2}), {0, 2}).has_value());
  }

  TEST_CASE("text format round trip") {
    Biquandle X = parse_biquandle(std::string(kTwoElement));
    CHECK(X.size() == 2);
    CHECK(X.under(0, 0) == 1);
    CHECK(X.over(1, 0) == 0);
    CHECK(parse_biquandle(serialize_biquandle(X)) == X);
    Biquandle Y = alexander(5, 2, 3);
    CHECK(parse_biquandle(serialize_biquandle(Y)) == Y);
  }

  TEST_CASE("text format errors") {
    CHECK_THROWS(parse_biquandle(std::string("biquandle 2\n1 2\n")));
    CHECK_THROWS_AS(parse_biquandle(std::string("biquandle 2\n1 3\n1 1\n1 1\n1 1\n")),
                    MalformedTable);
    CHECK_THROWS(parse_biquandle(std::string("quandle 2\n")));
    // well-formed but not a biquandle
    CHECK_THROWS_AS(parse_biquandle(std::string("biquandle 2\n1 1\n1 1\n1 1\n1 1\n")),
                    std::invalid_argument);
    std::istringstream raw("biquandle 2\n1 1\n1 1\n1 1\n1 1\n");
    auto t = parse_biquandle_tables(raw);
    CHECK(t.under.size() == 2);
    CHECK_FALSE(validate(t.under, t.over).ok());
  }
}
