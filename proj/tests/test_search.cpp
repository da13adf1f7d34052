#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pbracket/search.hpp"

using namespace pbracket;

namespace {

oracle::Scalar scalar_of(const PowerBracket& b) {
  return {b.w(), b.delta(1), b.A()(0, 0), b.B()(0, 0), b.Abar()(0, 0), b.Bbar()(0, 0)};
}

Biquandle two_element() {
  return load_bracket(std::string(PBRACKET_SOURCE_DIR) + "/data/brackets/z4_two_element.pbk").biquandle();
}

// every table and delta for a 2-element biquandle over Z2, w = 1
std::set<std::vector<std::int64_t>> brute_two_element_z2(const Biquandle& X) {
  std::set<std::vector<std::int64_t>> out;
  oracle::Bracket b;
  b.n = 2;
  b.m = 2;
  b.U = X.under_table().data();
  b.O = X.over_table().data();
  b.w = 1;
  b.A = b.B = b.Abar = b.Bbar = std::vector<std::int64_t>(4);
  b.delta = std::vector<std::int64_t>(4);
  for (unsigned bits = 0; bits < (1u << 19); ++bits) {
    for (int k = 0; k < 4; ++k) {
      b.A[k] = (bits >> k) & 1;
      b.B[k] = (bits >> (4 + k)) & 1;
      b.Abar[k] = (bits >> (8 + k)) & 1;
      b.Bbar[k] = (bits >> (12 + k)) & 1;
    }
    for (int s = 1; s < 4; ++s) b.delta[s] = (bits >> (15 + s)) & 1;
    if (oracle::Verifier(b).holds()) out.insert({static_cast<std::int64_t>(bits)});
  }
  return out;
}

std::vector<std::int64_t> encode_z2(const PowerBracket& b) {
  unsigned bits = 0;
  for (int k = 0; k < 4; ++k) {
    bits |= static_cast<unsigned>(b.A().data()[k]) << k;
    bits |= static_cast<unsigned>(b.B().data()[k]) << (4 + k);
    bits |= static_cast<unsigned>(b.Abar().data()[k]) << (8 + k);
    bits |= static_cast<unsigned>(b.Bbar().data()[k]) << (12 + k);
  }
  for (int s = 1; s < 4; ++s) bits |= static_cast<unsigned>(b.delta(s)) << (15 + s);
  return {static_cast<std::int64_t>(bits)};
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("one-element exhaustive search equals the scalar solution set") {
    for (std::int64_t m : {2, 3, 5}) {
      SearchConfig cfg{constant_action({0}), m};
      auto found = search_all(cfg);
      std::set<oracle::Scalar> got;
      for (const auto& b : found) {
        CHECK(b.delta(0) == 0);
        got.insert(scalar_of(b));
      }
      CHECK(got.size() == found.size());
      CHECK(got == oracle::scalar_solutions(m));
    }
  }

  TEST_CASE("two-element exhaustive search over Z2 equals brute force") {
    for (const Biquandle& X : {two_element(), constant_action({0, 1})}) {
      SearchConfig cfg{X, 2};
      std::set<std::vector<std::int64_t>> got;
      for (const auto& b : search_all(cfg)) got.insert(encode_z2(b));
      CHECK(got == brute_two_element_z2(X));
      CHECK_FALSE(got.empty());
    }
  }

  TEST_CASE("exhaustive order does not depend on jobs or pruning") {
    SearchConfig cfg{constant_action({0}), 5};
    auto one = search_all(cfg);
    cfg.jobs = 3;
    CHECK(search_all(cfg) == one);
    cfg.jobs = 1;
    cfg.prune_ii = cfg.prune_iii = false;
    CHECK(search_all(cfg) == one);
  }

  TEST_CASE("sink can stop the search") {
    SearchConfig cfg{constant_action({0}), 3};
    int n = 0;
    auto st = search(cfg, [&](const PowerBracket&) { return ++n < 5; });
    CHECK(n == 5);
    CHECK(st.emitted == 5);
  }

  TEST_CASE("exhaustive budget") {
    SearchConfig cfg{two_element(), 3};
    cfg.max_candidates = 1000;
    SearchStats st;
    search_all(cfg, &st);
    CHECK(st.budget_exhausted);
  }

  TEST_CASE("randomized search emits verified brackets reproducibly") {
    SearchConfig cfg{two_element(), 4, SearchMode::Randomized, 7, 20000};
    SearchStats st;
    auto a = search_all(cfg, &st);
    REQUIRE_FALSE(a.empty());
    CHECK(st.emitted == a.size());
    CHECK(st.candidates <= 20000);
    std::set<std::string> distinct;
    for (std::size_t i = 0; i < a.size(); ++i) {
      distinct.insert(serialize_bracket(a[i]));
      CHECK(verify(a[i]).empty());
      if (i % 97 == 0) CHECK(oracle::Verifier(oracle::raw(a[i])).holds());
    }
    CHECK(distinct.size() == a.size());
    CHECK(search_all(cfg) == a);
    cfg.jobs = 3;
    CHECK(search_all(cfg) == a);
    cfg.seed = 8;
    CHECK(search_all(cfg) != a);
  }

  TEST_CASE("randomized search over a biquandle with several orbits") {
    SearchConfig cfg{constant_action({1, 0, 2}), 3, SearchMode::Randomized, 1, 5000};
    auto found = search_all(cfg);
    REQUIRE_FALSE(found.empty());
    for (const auto& b : found) CHECK(oracle::Verifier(oracle::raw(b)).holds());
  }

  TEST_CASE("initial candidate comes first") {
    PowerBracket z5 = load_bracket(std::string(PBRACKET_SOURCE_DIR) + "/data/brackets/z5_two_element.pbk");
    SearchConfig cfg{z5.biquandle(), 5, SearchMode::Randomized, 3, 200, 1, z5};
    auto found = search_all(cfg);
    REQUIRE_FALSE(found.empty());
    CHECK(found.front().A() == z5.A());
    CHECK(found.front().delta(0) == 0);
    CHECK(found.front().delta(3) == z5.delta(3));
    // a failing candidate is skipped
    PowerBracket z4 = load_bracket(std::string(PBRACKET_SOURCE_DIR) + "/data/brackets/z4_two_element.pbk");
    SearchConfig c4{z4.biquandle(), 4, SearchMode::Randomized, 3, 200, 1, z4};
    for (const auto& b : search_all(c4)) CHECK(verify(b).empty());
  }

  TEST_CASE("configuration errors") {
    SearchConfig cfg{constant_action({0}), 1};
    CHECK_THROWS_AS(search_all(cfg), SearchError);
    SearchConfig r{constant_action({0}), 3, SearchMode::Randomized};
    CHECK_THROWS_AS(search_all(r), SearchError);
    SearchConfig j{constant_action({0}), 3};
    j.jobs = 0;
    CHECK_THROWS_AS(search_all(j), SearchError);
    PowerBracket z5 = load_bracket(std::string(PBRACKET_SOURCE_DIR) + "/data/brackets/z5_two_element.pbk");
    SearchConfig wrong{z5.biquandle(), 4, SearchMode::Exhaustive, 0, 0, 1, z5};
    CHECK_THROWS_AS(search_all(wrong), SearchError);
  }

  TEST_CASE("search space estimate") {
    auto e = search_space_estimate(2, 4);
    CHECK(e.closed_form == "165888");
    CHECK(e.naive_count == "2199023255552");
    CHECK(search_space_estimate(1, 3).naive_count == "1458");
    CHECK_THROWS_AS(search_space_estimate(0, 3), SearchError);
  }
}
