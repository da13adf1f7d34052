#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbracket/biquandle.hpp"
#include "pbracket/powerbracket.hpp"

namespace pbracket {

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SearchMode { Exhaustive, Randomized };

struct SearchConfig {
  Biquandle biquandle;
  std::int64_t modulus = 2;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
  /// Randomized: number of random completions tried (required).
  /// Exhaustive: optional cap on filter work, 0 = none.
  std::uint64_t max_candidates = 0;
  int jobs = 1;
  /// Tried before anything else; emitted if it verifies.
  std::optional<PowerBracket> initial;
  /// Pruning stages. Turning them off only slows the search down; every
  /// emission is verified in full regardless.
  bool prune_ii = true;
  bool prune_iii = true;
};

struct SearchStats {
  std::uint64_t candidates = 0;       // tuples examined by the filters
  std::uint64_t block_systems = 0;  // randomized: feasible (w, delta) systems over all orbit blocks
  std::uint64_t emitted = 0;
  bool budget_exhausted = false;
  bool blocks_truncated = false;  // some block system was given up on undecided
};

/// Receives each bracket found; return false to stop the search.
using BracketSink = std::function<bool(const PowerBracket&)>;

/// Emission order does not depend on `jobs`. delta(empty set) is fixed to 0.
SearchStats search(const SearchConfig& cfg, const BracketSink& sink);

std::vector<PowerBracket> search_all(const SearchConfig& cfg, SearchStats* stats = nullptr);

struct SearchSpaceEstimate {
  std::string closed_form;  // 4 n^(2m+1) (2^n - 1)^m, decimal
  std::string naive_count;    // m^(4 n^2) * |units(Z_m)| * m^(2^n), decimal
};

SearchSpaceEstimate search_space_estimate(std::int64_t n, std::int64_t m);

}  // namespace pbracket
