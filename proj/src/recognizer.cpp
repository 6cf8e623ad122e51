#include "creg/recognizer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace creg {

namespace {

struct CfgHash {
  size_t operator()(const std::vector<std::pair<int, int>>& cfg) const {
    size_t h = 1469598103934665603ull;
    for (const auto& [s, c] : cfg) {
      h = (h ^ static_cast<size_t>(s)) * 1099511628211ull;
      h = (h ^ static_cast<size_t>(c)) * 1099511628211ull;
    }
    return h;
  }
};

void require_plain(const DottedWord& x) {
  if (!is_strong(x))
    throw std::invalid_argument("input word contains dotted letters");
}

Nfa dotted_plus(const Alphabet& a) {
  Nfa n(a);
  int s0 = n.add_state();
  int s1 = n.add_state();
  n.mark_initial(s0);
  n.mark_accepting(s1);
  for (int i = 0; i < a.size(); ++i) {
    n.add_edge(s0, dotted(i), s1);
    n.add_edge(s1, dotted(i), s1);
  }
  n.normalize();
  return n;
}

}  // namespace

ConsensualRecognizer::ConsensualRecognizer(const Nfa& base)
    : dfa_(base.alphabet()) {
  Nfa violation = intersect(base, dotted_plus(base.alphabet()));
  if (!violation.empty()) {
    throw std::invalid_argument(
        "base accepts a fully dotted word: " +
        format_word(*violation.shortest_word(), base.alphabet()));
  }
  dfa_ = minimize(determinize(base));
  int k = dfa_.alphabet().size();
  plain_next_.assign(static_cast<size_t>(k), {});
  dotted_next_.assign(static_cast<size_t>(k), {});
  for (int a = 0; a < k; ++a) {
    plain_next_[static_cast<size_t>(a)].resize(static_cast<size_t>(dfa_.size()));
    dotted_next_[static_cast<size_t>(a)].resize(static_cast<size_t>(dfa_.size()));
    for (int q = 0; q < dfa_.size(); ++q) {
      plain_next_[static_cast<size_t>(a)][static_cast<size_t>(q)] = dfa_.step(q, plain(a));
      dotted_next_[static_cast<size_t>(a)][static_cast<size_t>(q)] = dfa_.step(q, dotted(a));
    }
  }
  empty_member_ = dfa_.accepting[static_cast<size_t>(dfa_.initial)] != 0;
}

// Thread state encoding: 2*q + placed_flag.
void ConsensualRecognizer::successors(
    const Cfg& cfg, int letter, int remaining_after,
    std::vector<std::pair<Cfg, int>>& out) const {
  const auto& pn = plain_next_[static_cast<size_t>(letter)];
  const auto& dn = dotted_next_[static_cast<size_t>(letter)];
  for (size_t pick = 0; pick < cfg.size(); ++pick) {
    int pq = cfg[pick].first >> 1;
    int placed_to = pn[static_cast<size_t>(pq)];
    if (placed_to < 0) continue;
    Cfg next;
    next.reserve(cfg.size() + 1);
    bool dead = false;
    long long unplaced = 0;
    auto push = [&next](int state) {
      for (auto& [s, c] : next)
        if (s == state) {
          ++c;
          return;
        }
      next.emplace_back(state, 1);
    };
    push(placed_to * 2 + 1);
    for (size_t j = 0; j < cfg.size() && !dead; ++j) {
      int cnt = cfg[j].second - (j == pick ? 1 : 0);
      if (cnt == 0) continue;
      int q = cfg[j].first >> 1;
      int flag = cfg[j].first & 1;
      int to = dn[static_cast<size_t>(q)];
      if (to < 0) {
        dead = true;
        break;
      }
      if (!flag) unplaced += cnt;
      int state = to * 2 + flag;
      for (auto& [s, c] : next)
        if (s == state) {
          c += cnt;
          state = -1;
          break;
        }
      if (state >= 0) next.emplace_back(state, cnt);
    }
    if (dead) continue;
    // Every still-idle thread must place a letter in the remaining input.
    if (unplaced > remaining_after) continue;
    std::sort(next.begin(), next.end());
    out.emplace_back(std::move(next), cfg[pick].first);
  }
}

bool ConsensualRecognizer::cfg_accepting(const Cfg& cfg) const {
  for (const auto& [s, c] : cfg) {
    if ((s & 1) == 0) return false;
    if (!dfa_.accepting[static_cast<size_t>(s >> 1)]) return false;
  }
  return !cfg.empty();
}

bool ConsensualRecognizer::member(const DottedWord& x) const {
  require_plain(x);
  if (x.empty()) return empty_member_;
  int n = static_cast<int>(x.size());
  int q0 = dfa_.initial;
  for (int t = 1; t <= n; ++t) {
    std::unordered_set<Cfg, CfgHash> frontier;
    frontier.insert(Cfg{{q0 * 2, t}});
    for (int i = 0; i < n && !frontier.empty(); ++i) {
      std::unordered_set<Cfg, CfgHash> next;
      std::vector<std::pair<Cfg, int>> succ;
      for (const Cfg& cfg : frontier) {
        succ.clear();
        successors(cfg, x[static_cast<size_t>(i)].letter, n - i - 1, succ);
        for (auto& [c, place] : succ) next.insert(std::move(c));
      }
      frontier = std::move(next);
    }
    for (const Cfg& cfg : frontier)
      if (cfg_accepting(cfg)) return true;
  }
  return false;
}

std::optional<Witness> ConsensualRecognizer::witness(const DottedWord& x) const {
  require_plain(x);
  if (x.empty()) {
    if (empty_member_) return Witness{{DottedWord{}}};
    return std::nullopt;
  }
  int n = static_cast<int>(x.size());
  int q0 = dfa_.initial;
  for (int t = 1; t <= n; ++t) {
    // preds[i] maps a configuration reached after i letters to its
    // predecessor and the thread state that placed letter i-1.
    std::vector<std::unordered_map<Cfg, std::pair<Cfg, int>, CfgHash>> preds(
        static_cast<size_t>(n) + 1);
    Cfg start{{q0 * 2, t}};
    preds[0].emplace(start, std::make_pair(Cfg{}, -1));
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<Cfg, int>> succ;
      for (const auto& [cfg, pred] : preds[static_cast<size_t>(i)]) {
        succ.clear();
        successors(cfg, x[static_cast<size_t>(i)].letter, n - i - 1, succ);
        for (auto& [c, place] : succ)
          preds[static_cast<size_t>(i) + 1].emplace(std::move(c),
                                                    std::make_pair(cfg, place));
      }
    }
    const Cfg* hit = nullptr;
    for (const auto& [cfg, pred] : preds[static_cast<size_t>(n)])
      if (cfg_accepting(cfg)) {
        hit = &cfg;
        break;
      }
    if (!hit) continue;
    // Collect the placing thread state per position by walking back.
    std::vector<int> placing(static_cast<size_t>(n));
    Cfg cur = *hit;
    for (int i = n; i > 0; --i) {
      const auto& [prev, place] = preds[static_cast<size_t>(i)].at(cur);
      placing[static_cast<size_t>(i) - 1] = place;
      cur = prev;
    }
    // Replay forward, assigning moves to individual threads.
    std::vector<int> threads(static_cast<size_t>(t), q0 * 2);
    std::vector<DottedWord> rows(static_cast<size_t>(t));
    for (int i = 0; i < n; ++i) {
      int letter = x[static_cast<size_t>(i)].letter;
      const auto& pn = plain_next_[static_cast<size_t>(letter)];
      const auto& dn = dotted_next_[static_cast<size_t>(letter)];
      int who = -1;
      for (size_t j = 0; j < threads.size(); ++j)
        if (threads[j] == placing[static_cast<size_t>(i)]) {
          who = static_cast<int>(j);
          break;
        }
      if (who < 0) throw std::logic_error("witness replay lost a thread");
      for (size_t j = 0; j < threads.size(); ++j) {
        int q = threads[j] >> 1;
        int flag = threads[j] & 1;
        if (static_cast<int>(j) == who) {
          rows[j].push_back(plain(letter));
          threads[j] = pn[static_cast<size_t>(q)] * 2 + 1;
        } else {
          rows[j].push_back(dotted(letter));
          threads[j] = dn[static_cast<size_t>(q)] * 2 + flag;
        }
      }
    }
    return Witness{std::move(rows)};
  }
  return std::nullopt;
}

void ConsensualRecognizer::enumerate_rec(DottedWord& prefix,
                                         const std::vector<Cfg>& frontier,
                                         int max_len,
                                         std::vector<DottedWord>& out) const {
  int k = dfa_.alphabet().size();
  int depth = static_cast<int>(prefix.size());
  std::vector<std::pair<Cfg, int>> succ;
  for (int letter = 0; letter < k; ++letter) {
    std::unordered_set<Cfg, CfgHash> next_set;
    for (const Cfg& cfg : frontier) {
      succ.clear();
      successors(cfg, letter, max_len - depth - 1, succ);
      for (auto& [c, place] : succ) next_set.insert(std::move(c));
    }
    if (next_set.empty()) continue;
    std::vector<Cfg> next(next_set.begin(), next_set.end());
    std::sort(next.begin(), next.end());
    prefix.push_back(plain(letter));
    for (const Cfg& cfg : next)
      if (cfg_accepting(cfg)) {
        out.push_back(prefix);
        break;
      }
    if (depth + 1 < max_len) enumerate_rec(prefix, next, max_len, out);
    prefix.pop_back();
  }
}

std::vector<DottedWord> ConsensualRecognizer::enumerate(int max_len,
                                                        int jobs) const {
  std::vector<DottedWord> out;
  if (max_len < 0) return out;
  if (empty_member_) out.push_back(DottedWord{});
  if (max_len == 0) return out;
  std::vector<Cfg> frontier;
  for (int t = 1; t <= max_len; ++t) frontier.push_back(Cfg{{dfa_.initial * 2, t}});
  int k = dfa_.alphabet().size();
  if (jobs <= 1 || k < 2 || max_len < 3) {
    DottedWord prefix;
    enumerate_rec(prefix, frontier, max_len, out);
  } else {
    // Distribute the depth-2 prefix subtrees over worker threads; the
    // per-task outputs are concatenated in prefix order, so the result is
    // identical to the sequential run.
    struct Task {
      DottedWord prefix;
      std::vector<Cfg> frontier;
      std::vector<DottedWord> found;  // words of length <= 2 plus subtree
    };
    std::vector<Task> tasks;
    std::vector<std::pair<Cfg, int>> succ;
    for (int l1 = 0; l1 < k; ++l1) {
      std::unordered_set<Cfg, CfgHash> s1;
      for (const Cfg& cfg : frontier) {
        succ.clear();
        successors(cfg, l1, max_len - 1, succ);
        for (auto& [c, p] : succ) s1.insert(std::move(c));
      }
      if (s1.empty()) continue;
      std::vector<Cfg> f1(s1.begin(), s1.end());
      std::sort(f1.begin(), f1.end());
      DottedWord w1{plain(l1)};
      for (const Cfg& cfg : f1)
        if (cfg_accepting(cfg)) {
          out.push_back(w1);
          break;
        }
      for (int l2 = 0; l2 < k; ++l2) {
        std::unordered_set<Cfg, CfgHash> s2;
        for (const Cfg& cfg : f1) {
          succ.clear();
          successors(cfg, l2, max_len - 2, succ);
          for (auto& [c, p] : succ) s2.insert(std::move(c));
        }
        if (s2.empty()) continue;
        Task task;
        task.prefix = DottedWord{plain(l1), plain(l2)};
        task.frontier.assign(s2.begin(), s2.end());
        std::sort(task.frontier.begin(), task.frontier.end());
        for (const Cfg& cfg : task.frontier)
          if (cfg_accepting(cfg)) {
            task.found.push_back(task.prefix);
            break;
          }
        tasks.push_back(std::move(task));
      }
    }
    std::atomic<size_t> next_task{0};
    auto worker = [&]() {
      for (;;) {
        size_t idx = next_task.fetch_add(1);
        if (idx >= tasks.size()) break;
        Task& task = tasks[idx];
        DottedWord prefix = task.prefix;
        enumerate_rec(prefix, task.frontier, max_len, task.found);
      }
    };
    int nthreads = std::min<int>(jobs, static_cast<int>(tasks.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (Task& task : tasks)
      out.insert(out.end(), task.found.begin(), task.found.end());
  }
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

bool is_witness(const Nfa& base, const std::vector<DottedWord>& rows,
                const DottedWord& x) {
  if (rows.empty()) return false;
  for (const DottedWord& row : rows) {
    if (row.size() != x.size()) return false;
    if (!base.accepts(row)) return false;
  }
  auto m = match_all(rows);
  return m && is_strong(*m) && *m == x;
}

bool brute_force_member(const Nfa& base, const DottedWord& x) {
  require_plain(x);
  if (x.empty()) return base.accepts(x);
  if (x.size() > 25)
    throw std::invalid_argument("brute-force oracle limited to short words");
  Nfa a = without_epsilons(base);
  if (a.size() == 0) return false;
  int n = static_cast<int>(x.size());
  // All plain-position masks of base words that unmark to x.
  std::unordered_set<std::uint32_t> masks;
  struct Frame {
    std::vector<int> states;
    int pos;
    std::uint32_t mask;
  };
  std::vector<Frame> stack;
  std::vector<int> init = a.initial();
  std::sort(init.begin(), init.end());
  stack.push_back({init, 0, 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.pos == n) {
      for (int s : f.states)
        if (a.is_accepting(s)) {
          masks.insert(f.mask);
          break;
        }
      continue;
    }
    int letter = x[static_cast<size_t>(f.pos)].letter;
    for (int dot = 0; dot <= 1; ++dot) {
      Symbol sym{static_cast<std::uint8_t>(letter), dot != 0};
      std::vector<int> nextv;
      for (int s : f.states)
        for (const auto& [es, t] : a.edges(s))
          if (es == sym) nextv.push_back(t);
      if (nextv.empty()) continue;
      std::sort(nextv.begin(), nextv.end());
      nextv.erase(std::unique(nextv.begin(), nextv.end()), nextv.end());
      std::uint32_t mask = f.mask | (dot ? 0u : (1u << f.pos));
      stack.push_back({std::move(nextv), f.pos + 1, mask});
    }
  }
  // Exact cover of all positions by disjoint masks.
  std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  std::vector<std::uint32_t> cands(masks.begin(), masks.end());
  std::sort(cands.begin(), cands.end());
  std::unordered_set<std::uint32_t> failed;
  auto cover = [&](auto&& self, std::uint32_t covered) -> bool {
    if (covered == full) return true;
    if (failed.count(covered)) return false;
    std::uint32_t bit = (~covered) & (covered + 1);  // lowest uncovered
    for (std::uint32_t cand : cands)
      if ((cand & bit) && !(cand & covered))
        if (self(self, covered | cand)) return true;
    failed.insert(covered);
    return false;
  };
  return cover(cover, 0);
}

std::vector<DottedWord> consensual_enumerate(const Nfa& base, int max_len) {
  return ConsensualRecognizer(base).enumerate(max_len);
}

}  // namespace creg
