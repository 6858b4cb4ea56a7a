#include "kdeg/clique_enum.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "kdeg/suffix_tree.hpp"

namespace kdeg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<int> intersect_sorted(std::span<const int> a,
                                  std::span<const int> b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

struct BkContext {
  const LocalGraph& g;
  const std::function<void(std::span<const int>)>& emit;
  std::vector<int> clique;
  std::vector<char> mark;  // scratch for the counting sort at emission
  std::vector<int> sorted;
};

// Emits the current clique as ascending local ids. Local ids are pre-ranked,
// so a bucket sweep sorts each clique in O(|V(g)|).
void emit_sorted(BkContext& ctx) {
  for (int v : ctx.clique) ctx.mark[v] = 1;
  ctx.sorted.clear();
  for (int v = 0; v < ctx.g.num_vertices(); ++v)
    if (ctx.mark[v]) ctx.sorted.push_back(v);
  for (int v : ctx.clique) ctx.mark[v] = 0;
  ctx.emit(ctx.sorted);
}

void bk_rec(BkContext& ctx, std::vector<int> p, std::vector<int> x) {
  if (p.empty()) {
    if (x.empty()) emit_sorted(ctx);
    return;
  }
  // Tomita pivot: u in P ∪ X maximizing |P ∩ N(u)|.
  int pivot = -1;
  int best = -1;
  for (const auto* side : {&p, &x}) {
    for (int u : *side) {
      const auto nu = ctx.g.neighbors(u);
      int cnt = 0;
      std::size_t i = 0, j = 0;
      while (i < p.size() && j < nu.size()) {
        if (p[i] < nu[j]) ++i;
        else if (p[i] > nu[j]) ++j;
        else { ++cnt; ++i; ++j; }
      }
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  std::vector<int> ext;
  const auto np = ctx.g.neighbors(pivot);
  std::set_difference(p.begin(), p.end(), np.begin(), np.end(),
                      std::back_inserter(ext));
  for (int v : ext) {
    const auto nv = ctx.g.neighbors(v);
    ctx.clique.push_back(v);
    bk_rec(ctx, intersect_sorted(p, nv), intersect_sorted(x, nv));
    ctx.clique.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  }
}

struct Pipeline {
  const CliqueEnumOptions& opts;
  SuffixIndex index;
  MaximalCliqueReport* report;                            // may be null
  const std::function<void(std::span<const int>)>* sink;  // may be null
  std::uint64_t emitted = 0;
  double bk_ms = 0;
  double dedup_ms = 0;
  CliqueWord word;
  std::vector<CliqueWord> stored;  // debug mode only

  Pipeline(int n, const CliqueEnumOptions& o) : opts(o), index(n) {}

  // Runs BK on one graph of the family and routes every candidate through
  // the dedup step. `residual` words are queried but never inserted.
  void process(const LocalGraph& lg, std::size_t graph_index, bool residual,
               GraphCounters& counters) {
    const int owner = lg.owner();
    const bool check = residual || !opts.root_letter_skip ||
                       index.has_root_letter(owner);
    const auto t_bk = Clock::now();
    double inner = 0;
    bron_kerbosch_pivot(lg, [&](std::span<const int> local) {
      const auto t_cb = Clock::now();
      word.clear();
      if (!residual) word.push_back(owner);
      for (int l : local) word.push_back(lg.global(l));
      if (opts.debug_witnesses && check) check_no_full_match();
      candidate(graph_index, residual, check, counters);
      inner += ms_since(t_cb);
    });
    bk_ms += ms_since(t_bk) - inner;
    dedup_ms += inner;
  }

  void candidate(std::size_t graph_index, bool residual, bool check,
                 GraphCounters& counters) {
    if (report && opts.debug_witnesses)
      report->candidates.emplace_back(graph_index, word);
    if (check && index.is_suffix(word)) {
      ++counters.rejected;
      if (report && opts.debug_witnesses) record_witness(graph_index);
      return;
    }
    ++counters.accepted;
    if (!residual) {
      index.insert(word);
      if (opts.debug_witnesses) stored.push_back(word);
    }
    ++emitted;
    if (sink) (*sink)(word);
    if (report) report->cliques.push_back(word);
  }

  void record_witness(std::size_t graph_index) {
    for (const auto& w : stored) {
      if (w.size() > word.size() &&
          std::equal(word.begin(), word.end(), w.end() - word.size())) {
        report->witnesses.push_back({graph_index, word, w});
        return;
      }
    }
    throw std::logic_error("rejected clique lacks a containing witness");
  }

  void check_no_full_match() const {
    for (const auto& w : stored)
      if (w == word)
        throw std::logic_error("query word equals a stored full word");
  }
};

std::uint64_t run_pipeline(const Graph& g, const CliqueEnumOptions& opts,
                           const std::function<void(std::span<const int>)>* sink,
                           MaximalCliqueReport* report) {
  const auto t_total = Clock::now();
  const auto t_family = Clock::now();
  const auto fam = build_family(g, degeneracy_ordering(g));
  const double family_ms = ms_since(t_family);

  Pipeline pipe(g.num_vertices(), opts);
  pipe.sink = sink;
  pipe.report = report;

  std::vector<GraphCounters> local_counters;
  auto& counters = report ? report->per_graph : local_counters;
  counters.assign(fam.subgraphs.size() + 1, {});

  for (std::size_t i = 0; i < fam.subgraphs.size(); ++i)
    pipe.process(fam.subgraphs[i], i, /*residual=*/false, counters[i]);
  if (fam.residual.num_vertices() > 0)
    pipe.process(fam.residual, fam.subgraphs.size(), /*residual=*/true,
                 counters[fam.subgraphs.size()]);

  if (opts.stats) {
    opts.stats->family_ms = family_ms;
    opts.stats->bk_ms = pipe.bk_ms;
    opts.stats->dedup_ms = pipe.dedup_ms;
    opts.stats->total_ms = ms_since(t_total);
  }
  return pipe.emitted;
}

}  // namespace

void bron_kerbosch_pivot(
    const LocalGraph& g,
    const std::function<void(std::span<const int>)>& emit) {
  BkContext ctx{g, emit, {}, std::vector<char>(g.num_vertices(), 0), {}};
  std::vector<int> p(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) p[v] = v;
  bk_rec(ctx, std::move(p), {});
}

std::uint64_t for_each_maximal_clique(
    const Graph& g, const std::function<void(std::span<const int>)>& emit,
    const CliqueEnumOptions& opts) {
  return run_pipeline(g, opts, emit ? &emit : nullptr, nullptr);
}

MaximalCliqueReport list_maximal_cliques(const Graph& g,
                                         const CliqueEnumOptions& opts) {
  MaximalCliqueReport report;
  run_pipeline(g, opts, nullptr, &report);
  return report;
}

std::uint64_t count_maximal_cliques(const Graph& g,
                                    const CliqueEnumOptions& opts) {
  return run_pipeline(g, opts, nullptr, nullptr);
}

}  // namespace kdeg
