#include "pbracket/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "pbracket/modring.hpp"

namespace pbracket {

namespace {

using Quad = std::array<std::int64_t, 4>;  // A, B, Abar, Bbar at one index pair

// Exhaustive solver for fixed (w, delta). The type I and II equations only
// read the coefficients at their own index pair, so each pair gets a
// candidate list up front. Type III only reads A and B, so the candidates are
// grouped by (A, B); a depth-first walk assigns the groups pair by pair in
// row-major order, checking each type III triple as soon as its six pairs are
// known, and the (Abar, Bbar) choices are expanded at the leaves.
class PairSolver {
 public:
  PairSolver(const Biquandle& X, std::int64_t m, bool prune_ii, bool prune_iii)
      : X_(X), n_(X.size()), m_(m), prune_ii_(prune_ii), prune_iii_(prune_iii) {
    const int nn = n_ * n_;
    A_.assign(nn, 0);
    B_.assign(nn, 0);
    Ab_.assign(nn, 0);
    Bb_.assign(nn, 0);
    auto due = std::make_shared<Due>(nn);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element z = 0; z < n_; ++z) {
          const Element xy = X.under(x, y), zy = X.over(z, y), yx = X.over(y, x);
          const Element zx = X.over(z, x), xz = X.under(x, z), yz = X.under(y, z);
          std::vector<int> pairs = {idx(x, y),   idx(y, z),   idx(xy, zy),
                                    idx(x, z),   idx(yx, zx), idx(xz, yz)};
          std::sort(pairs.begin(), pairs.end());
          pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
          (*due)[pairs.back()].push_back(Triple{{x, y, z}, std::move(pairs), 0});
        }
    // memo slots, for triples whose key space is small enough
    std::size_t total = 0;
    for (auto& level : *due)
      for (auto& t : level) {
        std::size_t size = 1;
        for (std::size_t i = 0; i < t.pairs.size() && size <= kMemoLimit; ++i)
          size *= static_cast<std::size_t>(m_ * m_);
        if (size > kMemoLimit || total + size > kMemoLimit) {
          t.slot = kNoMemo;
        } else {
          t.slot = total;
          total += size;
        }
      }
    memo_size_ = total;
    due_ = std::move(due);
  }

  std::uint64_t work() const noexcept { return work_; }

  void reset(std::int64_t w, const std::vector<std::int64_t>& delta) {
    w_ = w;
    w_inv_ = inverse_mod(w, m_);
    delta_ = delta;
  }

  // Calls leaf(*this) on every complete assignment surviving the filters
  // until leaf returns false or more than node_limit tuples were examined
  // (0 = no limit). Returns false if it stopped early.
  template <typename Leaf>
  bool solve(Leaf&& leaf, std::uint64_t node_limit = 0) {
    if (!prepare()) return true;
    limit_ = node_limit == 0 ? 0 : work_ + node_limit;
    return dfs(0, leaf, nullptr);
  }

  // One assignment found by a depth-first walk that starts each level at a
  // random position of its candidate list; the bar entries are drawn
  // uniformly. Requires prepared lists.
  bool solve_random(std::mt19937_64& rng, std::uint64_t node_limit) {
    limit_ = work_ + node_limit;
    bool found = false;
    auto leaf = [&](const PairSolver&) {
      found = true;
      return false;
    };
    dfs(0, leaf, &rng);
    return found;
  }

  // Builds the type I/II candidate lists; false if some pair has none.
  bool prepare() {
    limit_ = 0;
    auto lists = std::make_shared<Lists>(n_ * n_);
    const auto v = view();
    bool ok = true;
    for (int p = 0; p < n_ * n_ && ok; ++p) {
      const Element x = p / n_, y = p % n_;
      auto& groups = (*lists)[p];
      for (std::int64_t a = 0; a < m_; ++a)
        for (std::int64_t b = 0; b < m_; ++b) {
          Group g{a, b, {}};
          for (std::int64_t ab = 0; ab < m_; ++ab)
            for (std::int64_t bb = 0; bb < m_; ++bb) {
              ++work_;
              set(p, {a, b, ab, bb});
              if (x == y && !checks::holds_i(v, x)) continue;
              if (prune_ii_ && !checks::holds_ii(v, x, y)) continue;
              g.bars.push_back({ab, bb});
            }
          if (!g.bars.empty()) groups.push_back(std::move(g));
        }
      ok = !groups.empty();
    }
    lists_ = std::move(lists);
    auto memo = std::make_shared<Memo>();
    memo->cells = std::make_unique<std::atomic<std::uint8_t>[]>(memo_size_);
    memo_ = std::move(memo);
    return ok;
  }

  PowerBracket bracket() const {
    auto table = [&](const std::vector<std::int64_t>& v) {
      CoefficientTable t(n_);
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) t(x, y) = v[idx(x, y)];
      return t;
    };
    return PowerBracket(X_, RingZm(m_), table(A_), table(B_), table(Ab_), table(Bb_), w_, delta_);
  }

  Quad at(Element x, Element y) const {
    const int p = idx(x, y);
    return {A_[p], B_[p], Ab_[p], Bb_[p]};
  }
  std::int64_t w() const noexcept { return w_; }
  const std::vector<std::int64_t>& delta() const noexcept { return delta_; }

 private:
  struct Group {
    std::int64_t a, b;
    std::vector<std::array<std::int64_t, 2>> bars;  // admissible (Abar, Bbar)
  };
  using Lists = std::vector<std::vector<Group>>;
  struct Triple {
    std::array<Element, 3> xyz;
    std::vector<int> pairs;  // distinct coefficient pairs read by the check
    std::size_t slot;        // offset into the memo, or kNoMemo
  };
  using Due = std::vector<std::vector<Triple>>;
  static constexpr std::size_t kNoMemo = static_cast<std::size_t>(-1);
  static constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

  // Type III outcomes keyed by the (A, B) values at a triple's pairs:
  // 0 unknown, 1 holds, 2 fails. Valid for one delta.
  struct Memo {
    std::unique_ptr<std::atomic<std::uint8_t>[]> cells;
  };

  bool triple_holds(const checks::BracketView& v, const Triple& t) const {
    if (t.slot == kNoMemo) return checks::holds_iii(v, t.xyz[0], t.xyz[1], t.xyz[2]);
    std::size_t key = 0;
    for (int p : t.pairs) key = key * static_cast<std::size_t>(m_ * m_) + A_[p] * m_ + B_[p];
    auto& cell = memo_->cells[t.slot + key];
    const std::uint8_t known = cell.load(std::memory_order_relaxed);
    if (known != 0) return known == 1;
    const bool ok = checks::holds_iii(v, t.xyz[0], t.xyz[1], t.xyz[2]);
    cell.store(ok ? 1 : 2, std::memory_order_relaxed);
    return ok;
  }

  int idx(Element x, Element y) const { return x * n_ + y; }

  checks::BracketView view() const {
    return {&X_, m_, A_.data(), B_.data(), Ab_.data(), Bb_.data(), w_, w_inv_, delta_.data()};
  }

  void set(int p, const Quad& q) {
    A_[p] = q[0];
    B_[p] = q[1];
    Ab_[p] = q[2];
    Bb_[p] = q[3];
  }

  template <typename Leaf>
  bool dfs(int p, Leaf& leaf, std::mt19937_64* rng) {
    if (p == n_ * n_) return expand(0, leaf, rng);
    const auto v = view();
    const auto& list = (*lists_)[p];
    chosen_.resize(n_ * n_);
    const std::size_t start =
        rng ? std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(*rng) : 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (limit_ != 0 && work_ >= limit_) return false;
      ++work_;
      const Group& g = list[(start + i) % list.size()];
      chosen_[p] = &g;
      A_[p] = g.a;
      B_[p] = g.b;
      bool ok = true;
      if (prune_iii_) {
        for (const auto& t : (*due_)[p]) {
          if (!triple_holds(v, t)) {
            ok = false;
            break;
          }
        }
      }
      if (ok && !dfs(p + 1, leaf, rng)) return false;
    }
    return true;
  }

  template <typename Leaf>
  bool expand(int p, Leaf& leaf, std::mt19937_64* rng) {
    if (p == n_ * n_) return leaf(*this);
    const auto& bars = chosen_[p]->bars;
    if (rng) {
      const auto& q = bars[std::uniform_int_distribution<std::size_t>(0, bars.size() - 1)(*rng)];
      Ab_[p] = q[0];
      Bb_[p] = q[1];
      return expand(p + 1, leaf, rng);
    }
    for (const auto& q : bars) {
      ++work_;
      Ab_[p] = q[0];
      Bb_[p] = q[1];
      if (!expand(p + 1, leaf, rng)) return false;
    }
    return true;
  }

  const Biquandle& X_;
  int n_;
  std::int64_t m_;
  bool prune_ii_, prune_iii_;
  std::int64_t w_ = 1, w_inv_ = 1;
  std::vector<std::int64_t> delta_;
  std::vector<std::int64_t> A_, B_, Ab_, Bb_;
  // shared so copies of a prepared solver do not duplicate them
  std::shared_ptr<const Lists> lists_;
  std::shared_ptr<const Due> due_;
  std::shared_ptr<Memo> memo_;
  std::size_t memo_size_ = 0;
  std::vector<const Group*> chosen_;
  std::uint64_t work_ = 0;
  std::uint64_t limit_ = 0;
};

std::vector<std::int64_t> unit_residues(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (const auto& u : units(RingZm(m))) out.push_back(u.value());
  return out;
}

// Number of delta tables with delta(empty) = 0, or 0 if it does not fit.
std::uint64_t delta_count(int n, std::int64_t m) {
  boost::multiprecision::cpp_int c = boost::multiprecision::pow(
      boost::multiprecision::cpp_int(m), static_cast<unsigned>((1u << n) - 1));
  if (c > boost::multiprecision::cpp_int(std::numeric_limits<std::uint64_t>::max() / 1024)) return 0;
  return c.convert_to<std::uint64_t>();
}

std::vector<std::int64_t> delta_at(int n, std::int64_t m, std::uint64_t index) {
  std::vector<std::int64_t> d(std::size_t{1} << n, 0);
  for (std::size_t s = d.size() - 1; s >= 1; --s) {
    d[s] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(m));
    index /= static_cast<std::uint64_t>(m);
  }
  return d;
}

// Compact identity of a bracket for duplicate detection.
std::string bracket_key(const PowerBracket& b) {
  std::string k;
  auto put = [&](std::int64_t v) {
    for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  for (const auto* t : {&b.A(), &b.B(), &b.Abar(), &b.Bbar()})
    for (std::int64_t v : t->data()) put(v);
  put(b.w());
  for (std::int64_t v : b.delta_table()) put(v);
  return k;
}

bool verifies(const PowerBracket& b) {
  VerifyOptions opt;
  opt.first_violation = true;
  return verify(b, opt).empty();
}

// Runs fn(task, slot) for tasks [begin, end) on `jobs` threads.
template <typename Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, int jobs, Fn&& fn) {
  if (jobs <= 1 || end - begin <= 1) {
    for (std::uint64_t t = begin; t < end; ++t) fn(t);
    return;
  }
  std::atomic<std::uint64_t> next{begin};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::uint64_t t = next++; t < end; t = next++) fn(t);
    });
  for (auto& th : pool) th.join();
}

struct TaskResult {
  std::uint64_t work = 0;
  std::vector<PowerBracket> found;
};

class Stopped {};

void exhaustive(const SearchConfig& cfg, const BracketSink& sink, std::set<std::string>& seen,
                SearchStats& stats) {
  const Biquandle& X = cfg.biquandle;
  const int n = X.size();
  const auto ws = unit_residues(cfg.modulus);
  const std::uint64_t per_w = delta_count(n, cfg.modulus);
  if (per_w == 0) throw SearchError("delta space too large for exhaustive search");
  const std::uint64_t tasks = per_w * ws.size();

  // Assignments are distinct by construction; only the initial candidate can
  // repeat.
  auto fresh = [&](const PowerBracket& b) { return seen.empty() || !seen.count(bracket_key(b)); };
  auto over_budget = [&] { return cfg.max_candidates != 0 && stats.candidates >= cfg.max_candidates; };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    // streamed, so huge solution sets never sit in memory
    for (std::uint64_t t = 0; t < tasks; ++t) {
      PairSolver solver(X, cfg.modulus, cfg.prune_ii, cfg.prune_iii);
      solver.reset(ws[t / per_w], delta_at(n, cfg.modulus, t % per_w));
      solver.solve(
          [&](const PairSolver& s) {
            PowerBracket b = s.bracket();
            if (!verifies(b) || !fresh(b)) return true;
            ++stats.emitted;
            if (!sink(b)) {
              stats.candidates += s.work();
              throw Stopped{};
            }
            return true;
          },
          cfg.max_candidates);
      stats.candidates += solver.work();
      if (over_budget()) {
        stats.budget_exhausted = true;
        return;
      }
    }
    return;
  }

  auto run = [&](std::uint64_t t) {
    TaskResult r;
    PairSolver solver(X, cfg.modulus, cfg.prune_ii, cfg.prune_iii);
    solver.reset(ws[t / per_w], delta_at(n, cfg.modulus, t % per_w));
    solver.solve(
        [&](const PairSolver& s) {
          PowerBracket b = s.bracket();
          if (verifies(b)) r.found.push_back(std::move(b));
          return true;
        },
        cfg.max_candidates);
    r.work = solver.work();
    return r;
  };

  const std::uint64_t batch = static_cast<std::uint64_t>(jobs) * 4;
  for (std::uint64_t begin = 0; begin < tasks; begin += batch) {
    const std::uint64_t end = std::min(tasks, begin + batch);
    std::vector<TaskResult> results(end - begin);
    parallel_for(begin, end, jobs, [&](std::uint64_t t) { results[t - begin] = run(t); });
    // Merged in task order, which is what jobs == 1 produces as well.
    for (auto& r : results) {
      stats.candidates += r.work;
      for (auto& b : r.found) {
        if (!fresh(b)) continue;
        ++stats.emitted;
        if (!sink(b)) throw Stopped{};
      }
      if (over_budget()) {
        stats.budget_exhausted = true;
        return;
      }
    }
  }
  return;
}

// The restricted system of one orbit block for one (w, delta) choice, with
// its type I/II candidate lists already built.
struct BlockSystem {
  std::vector<Element> elements;
  std::shared_ptr<const Biquandle> sub;
  std::shared_ptr<const PairSolver> solver;  // lists prepared for (w, delta)
  std::size_t wi;
};

constexpr std::uint64_t kMaxBlockTasks = 2'000'000;
constexpr std::uint64_t kFeasibilityNodes = 2'000'000;
constexpr std::uint64_t kAttemptNodes = 20'000;

void randomized(const SearchConfig& cfg, const BracketSink& sink, std::set<std::string>& seen,
                SearchStats& stats) {
  if (cfg.max_candidates == 0) throw SearchError("randomized search needs a candidate budget");
  const Biquandle& X = cfg.biquandle;
  const int n = X.size();
  const std::int64_t m = cfg.modulus;
  const auto blocks = orbit_decomposition(X);
  const auto ws = unit_residues(m);

  // Stage 1: for every w and every delta on the subsets of a block, decide
  // whether the block's restricted system has a solution.
  std::vector<std::vector<std::vector<BlockSystem>>> feasible(
      ws.size(), std::vector<std::vector<BlockSystem>>(blocks.size()));
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const int k = static_cast<int>(blocks[bi].size());
    const auto sub = std::make_shared<const Biquandle>(*sub_biquandle(X, blocks[bi]));
    const std::uint64_t per_w = delta_count(k, m);
    if (per_w == 0 || per_w * ws.size() > kMaxBlockTasks)
      throw SearchError("orbit block of size " + std::to_string(k) +
                        " is too large to solve exhaustively over Z_" + std::to_string(m));
    std::vector<std::optional<BlockSystem>> slot(per_w * ws.size());
    std::atomic<bool> truncated{false};
    parallel_for(0, slot.size(), std::max(1, cfg.jobs), [&](std::uint64_t t) {
      auto solver = std::make_shared<PairSolver>(*sub, m, cfg.prune_ii, cfg.prune_iii);
      solver->reset(ws[t / per_w], delta_at(k, m, t % per_w));
      bool found = false;
      const bool complete = solver->solve(
          [&](const PairSolver& s) {
            found = verifies(s.bracket());
            return !found;
          },
          kFeasibilityNodes);
      if (!found && !complete) truncated = true;
      if (found) slot[t] = BlockSystem{blocks[bi], sub, solver, t / per_w};
    });
    if (truncated) stats.blocks_truncated = true;
    for (auto& sys : slot) {
      if (!sys) continue;
      ++stats.block_systems;
      feasible[sys->wi][bi].push_back(std::move(*sys));
    }
  }
  std::vector<std::size_t> usable;
  for (std::size_t wi = 0; wi < ws.size(); ++wi) {
    bool all = true;
    for (const auto& f : feasible[wi]) all = all && !f.empty();
    if (all) usable.push_back(wi);
  }
  if (usable.empty()) {
    stats.budget_exhausted = true;
    return;
  }

  std::vector<int> block_of(n), pos_of(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      block_of[blocks[b][i]] = static_cast<int>(b);
      pos_of[blocks[b][i]] = static_cast<int>(i);
    }
  const ColorSet full = (ColorSet{1} << n) - 1;
  std::vector<ColorSet> block_mask(blocks.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Element e : blocks[b]) block_mask[b] |= singleton(e);

  // Stage 2: pick a feasible system per block, complete each block by a
  // randomized walk, then draw the cross-orbit coefficients and delta
  // values uniformly and test the whole candidate.
  auto attempt = [&](std::uint64_t i) -> std::optional<PowerBracket> {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    auto pick = [&](std::uint64_t bound) {
      return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
    };
    const std::size_t wi = usable[pick(usable.size())];
    CoefficientTable A(n), B(n), Ab(n), Bb(n);
    std::vector<std::int64_t> delta(std::size_t{1} << n, 0);
    std::vector<bool> assigned(delta.size(), false);
    assigned[0] = true;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& options = feasible[wi][bi];
      const BlockSystem& sys = options[pick(options.size())];
      PairSolver solver = *sys.solver;
      if (!solver.solve_random(rng, kAttemptNodes)) return std::nullopt;
      const int k = static_cast<int>(sys.elements.size());
      for (int a = 0; a < k; ++a)
        for (int c = 0; c < k; ++c) {
          const Quad q = solver.at(a, c);
          const Element x = sys.elements[a], y = sys.elements[c];
          A(x, y) = q[0];
          B(x, y) = q[1];
          Ab(x, y) = q[2];
          Bb(x, y) = q[3];
        }
      for (ColorSet local = 1; local < (ColorSet{1} << k); ++local) {
        ColorSet s = 0;
        for (int a = 0; a < k; ++a)
          if (local & singleton(a)) s |= singleton(sys.elements[a]);
        delta[s] = solver.delta()[local];
        assigned[s] = true;
      }
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (block_of[x] == block_of[y]) continue;
        A(x, y) = static_cast<std::int64_t>(pick(m));
        B(x, y) = static_cast<std::int64_t>(pick(m));
        Ab(x, y) = static_cast<std::int64_t>(pick(m));
        Bb(x, y) = static_cast<std::int64_t>(pick(m));
      }
    for (ColorSet s = 1; s <= full; ++s)
      if (!assigned[s]) delta[s] = static_cast<std::int64_t>(pick(m));

    PowerBracket b(X, RingZm(m), A, B, Ab, Bb, ws[wi], std::move(delta));
    // with a single orbit the candidate is a block solution; only the final
    // verification before emission remains
    if (blocks.size() == 1) return b;
    const auto v = checks::view_of(b);
    for (Element x = 0; x < n; ++x)
      if (!checks::holds_i(v, x)) return std::nullopt;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!checks::holds_ii(v, x, y)) return std::nullopt;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (!checks::holds_iii(v, x, y, z)) return std::nullopt;
    return b;
  };

  const int jobs = std::max(1, cfg.jobs);
  const std::uint64_t batch = 4096;
  for (std::uint64_t begin = 0; begin < cfg.max_candidates; begin += batch) {
    const std::uint64_t end = std::min(cfg.max_candidates, begin + batch);
    std::vector<std::optional<PowerBracket>> results(end - begin);
    parallel_for(begin, end, jobs, [&](std::uint64_t t) { results[t - begin] = attempt(t); });
    for (auto& r : results) {
      ++stats.candidates;
      if (!r) continue;
      if (!seen.insert(bracket_key(*r)).second) continue;
      if (!verifies(*r)) continue;
      ++stats.emitted;
      if (!sink(*r)) throw Stopped{};
    }
  }
  stats.budget_exhausted = true;
  return;
}

}  // namespace

SearchStats search(const SearchConfig& cfg, const BracketSink& sink) {
  if (cfg.modulus < 2) throw SearchError("modulus must be at least 2");
  if (cfg.biquandle.size() < 1) throw SearchError("empty biquandle");
  if (cfg.jobs < 1) throw SearchError("jobs must be positive");
  if (cfg.initial && (cfg.initial->biquandle() != cfg.biquandle ||
                      cfg.initial->modulus() != cfg.modulus))
    throw SearchError("initial candidate does not match the biquandle and modulus");

  SearchStats stats;
  std::set<std::string> seen;
  try {
    if (cfg.initial) {
      ++stats.candidates;
      // delta(empty) is normalised like every other emission
      auto d = cfg.initial->delta_table();
      d[0] = 0;
      const PowerBracket& b0 = *cfg.initial;
      PowerBracket b(b0.biquandle(), b0.ring(), b0.A(), b0.B(), b0.Abar(), b0.Bbar(), b0.w(), d);
      if (verifies(b)) {
        seen.insert(bracket_key(b));
        ++stats.emitted;
        if (!sink(b)) return stats;
      }
    }
    if (cfg.mode == SearchMode::Exhaustive)
      exhaustive(cfg, sink, seen, stats);
    else
      randomized(cfg, sink, seen, stats);
  } catch (const Stopped&) {
  }
  return stats;
}

std::vector<PowerBracket> search_all(const SearchConfig& cfg, SearchStats* stats) {
  std::vector<PowerBracket> out;
  SearchStats s = search(cfg, [&](const PowerBracket& b) {
    out.push_back(b);
    return true;
  });
  if (stats) *stats = s;
  return out;
}

SearchSpaceEstimate search_space_estimate(std::int64_t n, std::int64_t m) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  if (n < 1 || m < 1) throw SearchError("n and m must be positive");
  if (n > 30 || m > 1'000'000) throw SearchError("estimate arguments out of range");
  const cpp_int N(n), M(m);
  const cpp_int two_n = pow(cpp_int(2), static_cast<unsigned>(n));
  const cpp_int closed = 4 * pow(N, static_cast<unsigned>(2 * m + 1)) *
                        pow(two_n - 1, static_cast<unsigned>(m));
  std::int64_t unit_count = 0;
  for (std::int64_t a = 0; a < m; ++a)
    if (std::gcd(a, m) == 1) ++unit_count;
  if (m == 1) unit_count = 1;
  const cpp_int naive = pow(M, static_cast<unsigned>(4 * n * n)) * unit_count *
                        pow(M, static_cast<unsigned>(two_n));
  return {closed.str(), naive.str()};
}

}  // namespace pbracket
