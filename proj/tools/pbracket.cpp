// pbracket: command line front end for the biquandle power bracket library.
//
// Exit codes: 0 success or valid, 1 validation failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include "pbracket/biquandle.hpp"
#include "pbracket/homset.hpp"
#include "pbracket/linktable.hpp"
#include "pbracket/powerbracket.hpp"
#include "pbracket/search.hpp"
#include "pbracket/statesum.hpp"

using namespace pbracket;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2 };

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

std::vector<int> labels(const std::vector<Element>& elements) {
  std::vector<int> out;
  for (Element e : elements) out.push_back(e + 1);
  return out;
}

std::vector<int> set_labels(ColorSet s) {
  std::vector<int> out;
  for (int i = 0; s >> i; ++i)
    if (s >> i & 1) out.push_back(i + 1);
  return out;
}

json multiset_json(const InvariantResult& r) {
  json m = json::object();
  for (const auto& [value, count] : r.multiset) m[std::to_string(value)] = count;
  return m;
}

std::string multiset_text(const InvariantResult& r) {
  std::string s = "{";
  bool first = true;
  for (const auto& [value, count] : r.multiset) {
    s += (first ? "" : ", ") + std::to_string(value) + "x" + std::to_string(count);
    first = false;
  }
  return s + "}";
}

int check_biquandle(const Options& o, const std::string& path) {
  const auto tables = load_biquandle_tables(path);
  const auto v = validate(tables.under, tables.over);
  if (o.json()) {
    json j{{"valid", v.ok()}, {"size", tables.under.size()}, {"violations", json::array()}};
    for (const auto& viol : v.violations)
      j["violations"].push_back(
          {{"axiom", viol.axiom()}, {"witness", labels(viol.witness)}, {"description", viol.describe()}});
    std::cout << j.dump(2) << "\n";
  } else if (v.ok()) {
    std::cout << "valid biquandle of order " << tables.under.size() << "\n";
  } else {
    for (const auto& viol : v.violations) std::cout << viol.describe() << "\n";
  }
  return v.ok() ? kOk : kInvalid;
}

int verify_bracket(const Options& o, const std::string& path, const VerifyOptions& vo) {
  const PowerBracket b = load_bracket(path);
  const ViolationReport r = verify(b, vo);
  if (o.json()) {
    json j{{"valid", r.empty()}, {"truncated", r.truncated}, {"violations", json::array()}};
    for (const auto& viol : r.violations) {
      json sets = json::array();
      for (ColorSet s : viol.sets) sets.push_back(set_labels(s));
      j["violations"].push_back({{"axiom", axiom_tag(viol.axiom)},
                                 {"equation", viol.equation},
                                 {"elements", labels(viol.elements)},
                                 {"sets", sets},
                                 {"left", viol.left},
                                 {"right", viol.right}});
    }
    std::cout << j.dump(2) << "\n";
  } else if (r.empty()) {
    std::cout << "valid\n";
  } else {
    for (const auto& viol : r.violations) std::cout << viol.describe() << "\n";
    if (r.truncated) std::cout << "(stopped early)\n";
  }
  return r.empty() ? kOk : kInvalid;
}

int colorings(const Options& o, const std::string& link, const std::string& biquandle, bool verbose) {
  const LinkDiagram d = resolve_link(link);
  const Biquandle X = load_biquandle(biquandle);
  const auto all = enumerate_colorings(d, X);
  if (o.json()) {
    json j{{"link", d.name()}, {"count", all.size()}};
    if (verbose) {
      j["colorings"] = json::array();
      for (const auto& c : all) {
        json arcs = json::object();
        for (int i = 0; i < d.semiarc_count(); ++i)
          arcs[std::to_string(d.semiarc_label(i))] = c.semiarcs[i] + 1;
        j["colorings"].push_back({{"semiarcs", arcs}, {"loops", labels(c.loops)}});
      }
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << all.size() << "\n";
  if (verbose) {
    for (const auto& c : all) {
      std::string line;
      for (int i = 0; i < d.semiarc_count(); ++i)
        line += (i ? " " : "") + std::to_string(d.semiarc_label(i)) + "=" + std::to_string(c.semiarcs[i] + 1);
      for (std::size_t k = 0; k < c.loops.size(); ++k)
        line += (line.empty() ? "" : " ") + std::string("loop") + std::to_string(k + 1) + "=" +
                std::to_string(c.loops[k] + 1);
      std::cout << line << "\n";
    }
  }
  return kOk;
}

int eval(const Options& o, const std::string& link, const std::string& bracket, bool multiset) {
  const LinkDiagram d = resolve_link(link);
  const PowerBracket b = load_bracket(bracket);
  const InvariantResult r = invariant(d, b);
  if (o.json()) {
    json j{{"link", d.name()}, {"modulus", r.modulus}, {"polynomial", to_polynomial(r)}};
    if (multiset) j["multiset"] = multiset_json(r);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_polynomial(r) << "\n";
    if (multiset) std::cout << multiset_text(r) << "\n";
  }
  return kOk;
}

int tabulate(const Options& o, const std::string& bracket, std::vector<std::string> links, int jobs) {
  const PowerBracket b = load_bracket(bracket);
  if (links.empty()) links = link_names();
  std::vector<std::string> poly(links.size());
  std::vector<LinkDiagram> diagrams;
  for (const auto& name : links) diagrams.push_back(resolve_link(name));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < links.size(); i = next++) poly[i] = to_polynomial(invariant(diagrams[i], b));
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::map<std::string, std::vector<std::string>> rows;
  for (std::size_t i = 0; i < links.size(); ++i) rows[poly[i]].push_back(diagrams[i].name());
  for (auto& [p, names] : rows) std::sort(names.begin(), names.end());

  if (o.json()) {
    json j{{"modulus", b.modulus()}, {"rows", json::array()}};
    for (const auto& [p, names] : rows) j["rows"].push_back({{"polynomial", p}, {"links", names}});
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::size_t width = 3;
  for (const auto& [p, names] : rows) width = std::max(width, p.size());
  std::cout << std::string(width - 3, ' ') << "Phi | L\n" << std::string(width + 1, '-') << "+" << std::string(30, '-') << "\n";
  for (const auto& [p, names] : rows) {
    std::cout << std::string(width - p.size(), ' ') << p << " | ";
    for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? ", " : "") << names[i];
    std::cout << "\n";
  }
  return kOk;
}

struct SearchArgs {
  std::string biquandle, mode = "exhaustive", out, initial;
  std::int64_t modulus = 0;
  std::uint64_t seed = 0, budget = 0, limit = 0;
  int jobs = 1;
  bool no_prune_ii = false, no_prune_iii = false;
};

int run_search(const Options& o, const SearchArgs& a) {
  SearchConfig cfg{load_biquandle(a.biquandle), a.modulus};
  cfg.mode = a.mode == "randomized" ? SearchMode::Randomized : SearchMode::Exhaustive;
  cfg.seed = a.seed;
  cfg.max_candidates = a.budget;
  cfg.jobs = a.jobs;
  cfg.prune_ii = !a.no_prune_ii;
  cfg.prune_iii = !a.no_prune_iii;
  if (!a.initial.empty()) cfg.initial = load_bracket(a.initial);
  if (!a.out.empty()) std::filesystem::create_directories(a.out);

  std::vector<std::string> files;
  std::uint64_t count = 0;
  const SearchStats st = search(cfg, [&](const PowerBracket& b) {
    ++count;
    const std::string text = serialize_bracket(b);
    if (!a.out.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "bracket_%06llu.pbk", static_cast<unsigned long long>(count));
      const auto path = (std::filesystem::path(a.out) / name).string();
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot write " + path);
      f << text;
      files.push_back(path);
    } else if (!o.json()) {
      std::cout << text << "\n";
    }
    return a.limit == 0 || count < a.limit;
  });
  if (o.json()) {
    json j{{"emitted", st.emitted},
           {"candidates", st.candidates},
           {"budget_exhausted", st.budget_exhausted},
           {"files", files}};
    if (cfg.mode == SearchMode::Randomized) j["feasible_block_systems"] = st.block_systems;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "emitted " << st.emitted << " bracket(s) after " << st.candidates << " candidates\n";
  }
  return kOk;
}

int estimate(const Options& o, std::int64_t n, std::int64_t m) {
  const auto e = search_space_estimate(n, m);
  if (o.json()) {
    std::cout << json{{"n", n}, {"m", m}, {"closed_form", e.closed_form}, {"naive_count", e.naive_count}}.dump(2)
              << "\n";
  } else {
    std::cout << "closed form 4n^(2m+1)(2^n-1)^m: " << e.closed_form << "\n"
              << "naive count m^(4n^2)*units*m^(2^n): " << e.naive_count << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biquandle power brackets: verification, colorings, invariants and search"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string biquandle, bracket, link;
  int jobs = 1;

  auto* cb = app.add_subcommand("check-biquandle", "Validate biquandle operation tables");
  cb->add_option("--biquandle", biquandle, "Biquandle file")->required();

  VerifyOptions vo;
  auto* vb = app.add_subcommand("verify-bracket", "Check every power bracket axiom");
  vb->add_option("--bracket", bracket, "Bracket file")->required();
  vb->add_flag("--first-violation", vo.first_violation, "Stop at the first failing equation");
  vb->add_flag("--also-derivation-variants", vo.derivation_variants,
               "Also check the union-membership variant of the single-closure (ii.i) equation");
  vb->add_option("--max-violations", vo.max_violations, "Report at most this many (0 = all)");
  vb->add_option("--jobs", vo.jobs, "Worker threads")->check(CLI::PositiveNumber);

  bool verbose = false;
  auto* co = app.add_subcommand("colorings", "Count (and list) the colorings of a link");
  co->add_option("--link", link, "Link name or diagram file")->required();
  co->add_option("--biquandle", biquandle, "Biquandle file")->required();
  co->add_flag("-v,--verbose", verbose, "List every coloring as semiarc=color pairs");

  bool multiset = false;
  auto* ev = app.add_subcommand("eval", "Evaluate the power bracket invariant of a link");
  ev->add_option("--link", link, "Link name or diagram file")->required();
  ev->add_option("--bracket", bracket, "Bracket file")->required();
  ev->add_flag("--multiset", multiset, "Also print the multiset of state-sum values");

  std::vector<std::string> links;
  auto* tb = app.add_subcommand("tabulate", "Evaluate a bracket over the bundled link table");
  tb->add_option("--bracket", bracket, "Bracket file")->required();
  tb->add_option("--links", links, "Restrict to these links")->delimiter(',');
  tb->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  SearchArgs sa;
  auto* se = app.add_subcommand("search", "Search for power brackets over a biquandle");
  se->add_option("--biquandle", sa.biquandle, "Biquandle file")->required();
  se->add_option("--mod", sa.modulus, "Modulus of the coefficient ring")->required()->check(CLI::Range(2, 1 << 20));
  se->add_option("--mode", sa.mode, "Search mode")->check(CLI::IsMember({"exhaustive", "randomized"}));
  se->add_option("--seed", sa.seed, "Random seed");
  se->add_option("--budget", sa.budget, "Candidate budget (required for randomized)");
  se->add_option("--out", sa.out, "Directory for the brackets found");
  se->add_option("--initial", sa.initial, "Bracket file tried first");
  se->add_option("--limit", sa.limit, "Stop after this many brackets (0 = no limit)");
  se->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);
  se->add_flag("--no-prune-ii", sa.no_prune_ii, "Do not filter pairs by the type II equations");
  se->add_flag("--no-prune-iii", sa.no_prune_iii, "Do not prune with the type III equations");

  std::int64_t en = 0, em = 0;
  auto* es = app.add_subcommand("estimate", "Size of the naive search space");
  es->add_option("--n", en, "Biquandle order")->required()->check(CLI::PositiveNumber);
  es->add_option("--m", em, "Modulus")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*cb) return check_biquandle(o, biquandle);
    if (*vb) return verify_bracket(o, bracket, vo);
    if (*co) return colorings(o, link, biquandle, verbose);
    if (*ev) return eval(o, link, bracket, multiset);
    if (*tb) return tabulate(o, bracket, links, jobs);
    if (*se) {
      if (sa.mode == "randomized" && sa.budget == 0) {
        std::cerr << "error: randomized search needs --budget\n";
        return kUsage;
      }
      return run_search(o, sa);
    }
    if (*es) return estimate(o, en, em);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
