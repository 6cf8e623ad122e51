#include "creg/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace creg {

namespace {

void require_same_alphabet(const Nfa& a, const Nfa& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("automata are over different alphabets");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Epsilon closure of a sorted state set.
std::vector<int> closure(const Nfa& a, std::vector<int> states) {
  std::vector<char> seen(static_cast<size_t>(a.size()), 0);
  std::deque<int> work(states.begin(), states.end());
  for (int s : states) seen[static_cast<size_t>(s)] = 1;
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    for (int t : a.eps(s))
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        states.push_back(t);
        work.push_back(t);
      }
  }
  return sorted_unique(std::move(states));
}

long long pair_key(int p, int q, int width) {
  return static_cast<long long>(p) * width + q;
}

}  // namespace

Nfa Nfa::empty_lang(const Alphabet& a) { return Nfa(a); }

Nfa Nfa::epsilon_lang(const Alphabet& a) {
  Nfa n(a);
  int s = n.add_state();
  n.mark_initial(s);
  n.mark_accepting(s);
  return n;
}

Nfa Nfa::atom(const Alphabet& a, Symbol s) {
  return single_word(a, DottedWord{s});
}

Nfa Nfa::single_word(const Alphabet& a, const DottedWord& w) {
  Nfa n(a);
  int prev = n.add_state();
  n.mark_initial(prev);
  for (Symbol s : w) {
    int next = n.add_state();
    n.add_edge(prev, s, next);
    prev = next;
  }
  n.mark_accepting(prev);
  return n;
}

Nfa Nfa::symbols_star(const Alphabet& a, const std::vector<Symbol>& syms) {
  Nfa n(a);
  int s = n.add_state();
  n.mark_initial(s);
  n.mark_accepting(s);
  for (Symbol sym : syms) n.add_edge(s, sym, s);
  n.normalize();
  return n;
}

Nfa Nfa::all_dotted_star(const Alphabet& a) {
  std::vector<Symbol> syms;
  for (int i = 0; i < a.size(); ++i) syms.push_back(dotted(i));
  return symbols_star(a, syms);
}

Nfa Nfa::all_plain_star(const Alphabet& a) {
  std::vector<Symbol> syms;
  for (int i = 0; i < a.size(); ++i) syms.push_back(plain(i));
  return symbols_star(a, syms);
}

int Nfa::add_state() {
  out_.emplace_back();
  eps_.emplace_back();
  init_.push_back(0);
  acc_.push_back(0);
  return size() - 1;
}

void Nfa::add_edge(int from, Symbol s, int to) {
  out_[static_cast<size_t>(from)].emplace_back(s, to);
}

void Nfa::add_eps(int from, int to) {
  if (from != to) eps_[static_cast<size_t>(from)].push_back(to);
}

void Nfa::mark_initial(int s) {
  if (!init_[static_cast<size_t>(s)]) {
    init_[static_cast<size_t>(s)] = 1;
    initial_.push_back(s);
  }
}

void Nfa::mark_accepting(int s) {
  if (!acc_[static_cast<size_t>(s)]) {
    acc_[static_cast<size_t>(s)] = 1;
    accepting_.push_back(s);
  }
}

bool Nfa::has_eps() const {
  for (const auto& e : eps_)
    if (!e.empty()) return true;
  return false;
}

size_t Nfa::num_edges() const {
  size_t n = 0;
  for (const auto& e : out_) n += e.size();
  return n;
}

void Nfa::normalize() {
  for (auto& e : out_) {
    std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return x.second < y.second;
    });
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  for (auto& e : eps_) e = sorted_unique(std::move(e));
  initial_ = sorted_unique(std::move(initial_));
  accepting_ = sorted_unique(std::move(accepting_));
}

bool Nfa::accepts(const DottedWord& w) const {
  if (size() == 0) return false;
  std::vector<int> cur = closure(*this, initial_);
  for (Symbol s : w) {
    std::vector<int> next;
    for (int p : cur)
      for (const auto& [sym, t] : edges(p))
        if (sym == s) next.push_back(t);
    if (next.empty()) return false;
    cur = closure(*this, sorted_unique(std::move(next)));
  }
  for (int p : cur)
    if (is_accepting(p)) return true;
  return false;
}

bool Nfa::empty() const {
  if (size() == 0) return true;
  std::vector<char> seen(static_cast<size_t>(size()), 0);
  std::deque<int> work;
  for (int s : initial_) {
    seen[static_cast<size_t>(s)] = 1;
    work.push_back(s);
  }
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    if (is_accepting(s)) return false;
    for (const auto& [sym, t] : edges(s))
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        work.push_back(t);
      }
    for (int t : eps(s))
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        work.push_back(t);
      }
  }
  return true;
}

std::optional<DottedWord> Nfa::shortest_word() const {
  Nfa a = without_epsilons(*this);
  if (a.size() == 0) return std::nullopt;
  std::vector<int> pred_state(static_cast<size_t>(a.size()), -1);
  std::vector<Symbol> pred_sym(static_cast<size_t>(a.size()));
  std::vector<char> seen(static_cast<size_t>(a.size()), 0);
  std::deque<int> work;
  for (int s : a.initial()) {
    seen[static_cast<size_t>(s)] = 1;
    work.push_back(s);
  }
  int hit = -1;
  for (int s : a.initial())
    if (a.is_accepting(s)) hit = s;
  while (hit < 0 && !work.empty()) {
    int s = work.front();
    work.pop_front();
    for (const auto& [sym, t] : a.edges(s)) {
      if (seen[static_cast<size_t>(t)]) continue;
      seen[static_cast<size_t>(t)] = 1;
      pred_state[static_cast<size_t>(t)] = s;
      pred_sym[static_cast<size_t>(t)] = sym;
      if (a.is_accepting(t)) {
        hit = t;
        break;
      }
      work.push_back(t);
    }
  }
  if (hit < 0) return std::nullopt;
  DottedWord w;
  for (int s = hit; pred_state[static_cast<size_t>(s)] >= 0;
       s = pred_state[static_cast<size_t>(s)])
    w.push_back(pred_sym[static_cast<size_t>(s)]);
  std::reverse(w.begin(), w.end());
  return w;
}

namespace {

void enumerate_rec(const Nfa& a, const std::vector<int>& subset, DottedWord& cur,
                   int max_len, std::vector<DottedWord>& out) {
  for (int p : subset)
    if (a.is_accepting(p)) {
      out.push_back(cur);
      break;
    }
  if (static_cast<int>(cur.size()) == max_len) return;
  int nsyms = a.alphabet().num_symbols();
  std::vector<std::vector<int>> succ(static_cast<size_t>(nsyms));
  for (int p : subset)
    for (const auto& [sym, t] : a.edges(p))
      succ[static_cast<size_t>(sym.id())].push_back(t);
  for (int id = 0; id < nsyms; ++id) {
    if (succ[static_cast<size_t>(id)].empty()) continue;
    cur.push_back(Symbol::from_id(id));
    enumerate_rec(a, sorted_unique(std::move(succ[static_cast<size_t>(id)])),
                  cur, max_len, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DottedWord> Nfa::enumerate(int max_len) const {
  std::vector<DottedWord> out;
  Nfa a = without_epsilons(*this);
  if (a.size() == 0) return out;
  DottedWord cur;
  enumerate_rec(a, a.initial(), cur, max_len, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const DottedWord& x, const DottedWord& y) {
                     return x.size() < y.size();
                   });
  return out;
}

Nfa trimmed(const Nfa& a) {
  if (a.size() == 0) return a;
  std::vector<char> fwd(static_cast<size_t>(a.size()), 0);
  std::deque<int> work;
  for (int s : a.initial()) {
    fwd[static_cast<size_t>(s)] = 1;
    work.push_back(s);
  }
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    for (const auto& [sym, t] : a.edges(s))
      if (!fwd[static_cast<size_t>(t)]) {
        fwd[static_cast<size_t>(t)] = 1;
        work.push_back(t);
      }
    for (int t : a.eps(s))
      if (!fwd[static_cast<size_t>(t)]) {
        fwd[static_cast<size_t>(t)] = 1;
        work.push_back(t);
      }
  }
  // Reverse reachability from accepting states, restricted to fwd.
  std::vector<std::vector<int>> rev(static_cast<size_t>(a.size()));
  for (int s = 0; s < a.size(); ++s) {
    if (!fwd[static_cast<size_t>(s)]) continue;
    for (const auto& [sym, t] : a.edges(s))
      if (fwd[static_cast<size_t>(t)]) rev[static_cast<size_t>(t)].push_back(s);
    for (int t : a.eps(s))
      if (fwd[static_cast<size_t>(t)]) rev[static_cast<size_t>(t)].push_back(s);
  }
  std::vector<char> alive(static_cast<size_t>(a.size()), 0);
  for (int s : a.accepting())
    if (fwd[static_cast<size_t>(s)]) {
      alive[static_cast<size_t>(s)] = 1;
      work.push_back(s);
    }
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    for (int t : rev[static_cast<size_t>(s)])
      if (!alive[static_cast<size_t>(t)]) {
        alive[static_cast<size_t>(t)] = 1;
        work.push_back(t);
      }
  }
  std::vector<int> remap(static_cast<size_t>(a.size()), -1);
  Nfa r(a.alphabet());
  for (int s = 0; s < a.size(); ++s)
    if (alive[static_cast<size_t>(s)]) remap[static_cast<size_t>(s)] = r.add_state();
  if (r.size() == 0) return Nfa::empty_lang(a.alphabet());
  for (int s = 0; s < a.size(); ++s) {
    int rs = remap[static_cast<size_t>(s)];
    if (rs < 0) continue;
    for (const auto& [sym, t] : a.edges(s))
      if (remap[static_cast<size_t>(t)] >= 0)
        r.add_edge(rs, sym, remap[static_cast<size_t>(t)]);
    for (int t : a.eps(s))
      if (remap[static_cast<size_t>(t)] >= 0)
        r.add_eps(rs, remap[static_cast<size_t>(t)]);
  }
  for (int s : a.initial())
    if (remap[static_cast<size_t>(s)] >= 0) r.mark_initial(remap[static_cast<size_t>(s)]);
  for (int s : a.accepting())
    if (remap[static_cast<size_t>(s)] >= 0)
      r.mark_accepting(remap[static_cast<size_t>(s)]);
  if (r.initial().empty() || r.accepting().empty())
    return Nfa::empty_lang(a.alphabet());
  r.normalize();
  return r;
}

Nfa without_epsilons(const Nfa& a) {
  if (!a.has_eps()) return trimmed(a);
  Nfa r(a.alphabet());
  for (int s = 0; s < a.size(); ++s) r.add_state();
  for (int s = 0; s < a.size(); ++s) {
    std::vector<int> cl = closure(a, {s});
    for (int q : cl) {
      for (const auto& [sym, t] : a.edges(q)) r.add_edge(s, sym, t);
      if (a.is_accepting(q)) r.mark_accepting(s);
    }
  }
  for (int s : a.initial()) r.mark_initial(s);
  r.normalize();
  return trimmed(r);
}

Nfa unite(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Nfa r(a.alphabet());
  for (int s = 0; s < a.size() + b.size(); ++s) r.add_state();
  auto copy_in = [&r](const Nfa& src, int off) {
    for (int s = 0; s < src.size(); ++s) {
      for (const auto& [sym, t] : src.edges(s)) r.add_edge(s + off, sym, t + off);
      for (int t : src.eps(s)) r.add_eps(s + off, t + off);
    }
    for (int s : src.initial()) r.mark_initial(s + off);
    for (int s : src.accepting()) r.mark_accepting(s + off);
  };
  copy_in(a, 0);
  copy_in(b, a.size());
  r.normalize();
  return trimmed(r);
}

Nfa concat(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  if (a.size() == 0 || b.size() == 0) return Nfa::empty_lang(a.alphabet());
  Nfa r(a.alphabet());
  for (int s = 0; s < a.size() + b.size(); ++s) r.add_state();
  for (int s = 0; s < a.size(); ++s) {
    for (const auto& [sym, t] : a.edges(s)) r.add_edge(s, sym, t);
    for (int t : a.eps(s)) r.add_eps(s, t);
  }
  int off = a.size();
  for (int s = 0; s < b.size(); ++s) {
    for (const auto& [sym, t] : b.edges(s)) r.add_edge(s + off, sym, t + off);
    for (int t : b.eps(s)) r.add_eps(s + off, t + off);
  }
  for (int s : a.initial()) r.mark_initial(s);
  for (int s : a.accepting())
    for (int t : b.initial()) r.add_eps(s, t + off);
  for (int s : b.accepting()) r.mark_accepting(s + off);
  r.normalize();
  return trimmed(r);
}

Nfa star(const Nfa& a) {
  Nfa r(a.alphabet());
  for (int s = 0; s < a.size(); ++s) r.add_state();
  for (int s = 0; s < a.size(); ++s) {
    for (const auto& [sym, t] : a.edges(s)) r.add_edge(s, sym, t);
    for (int t : a.eps(s)) r.add_eps(s, t);
  }
  int hub = r.add_state();
  r.mark_initial(hub);
  r.mark_accepting(hub);
  for (int s : a.initial()) r.add_eps(hub, s);
  for (int s : a.accepting()) r.add_eps(s, hub);
  r.normalize();
  return trimmed(r);
}

Nfa plus(const Nfa& a) {
  if (a.size() == 0) return a;
  Nfa r(a.alphabet());
  for (int s = 0; s < a.size(); ++s) r.add_state();
  for (int s = 0; s < a.size(); ++s) {
    for (const auto& [sym, t] : a.edges(s)) r.add_edge(s, sym, t);
    for (int t : a.eps(s)) r.add_eps(s, t);
  }
  for (int s : a.initial()) r.mark_initial(s);
  for (int s : a.accepting()) {
    r.mark_accepting(s);
    for (int t : a.initial()) r.add_eps(s, t);
  }
  r.normalize();
  return trimmed(r);
}

namespace {

// Reachable-pair product machine shared by intersect/shuffle/match_product.
// step(p, q, emit) enumerates joint moves as emit(symbol, p', q').
template <typename StepFn>
Nfa pair_product(const Nfa& a0, const Nfa& b0, StepFn step) {
  require_same_alphabet(a0, b0);
  Nfa a = without_epsilons(a0);
  Nfa b = without_epsilons(b0);
  Nfa r(a.alphabet());
  if (a.size() == 0 || b.size() == 0) return r;
  std::unordered_map<long long, int> ids;
  std::deque<std::pair<int, int>> work;
  auto lookup = [&](int p, int q) {
    long long key = pair_key(p, q, b.size());
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = r.add_state();
    ids.emplace(key, id);
    if (a.is_accepting(p) && b.is_accepting(q)) r.mark_accepting(id);
    work.emplace_back(p, q);
    return id;
  };
  for (int p : a.initial())
    for (int q : b.initial()) r.mark_initial(lookup(p, q));
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    int from = ids[pair_key(p, q, b.size())];
    step(a, b, p, q, [&](Symbol s, int tp, int tq) {
      r.add_edge(from, s, lookup(tp, tq));
    });
  }
  r.normalize();
  return trimmed(r);
}

}  // namespace

Nfa intersect(const Nfa& a, const Nfa& b) {
  return pair_product(a, b,
                      [](const Nfa& x, const Nfa& y, int p, int q, auto emit) {
                        for (const auto& [s1, t1] : x.edges(p))
                          for (const auto& [s2, t2] : y.edges(q))
                            if (s1 == s2) emit(s1, t1, t2);
                      });
}

Nfa shuffle(const Nfa& a, const Nfa& b) {
  return pair_product(a, b,
                      [](const Nfa& x, const Nfa& y, int p, int q, auto emit) {
                        for (const auto& [s, t] : x.edges(p)) emit(s, t, q);
                        for (const auto& [s, t] : y.edges(q)) emit(s, p, t);
                      });
}

Nfa match_product(const Nfa& a, const Nfa& b) {
  return pair_product(a, b,
                      [](const Nfa& x, const Nfa& y, int p, int q, auto emit) {
                        for (const auto& [s1, t1] : x.edges(p))
                          for (const auto& [s2, t2] : y.edges(q))
                            if (auto m = match(s1, s2)) emit(*m, t1, t2);
                      });
}

Nfa map_image(const Nfa& a, DotOp op) {
  Nfa r(a.alphabet());
  for (int s = 0; s < a.size(); ++s) r.add_state();
  for (int s = 0; s < a.size(); ++s) {
    for (const auto& [sym, t] : a.edges(s)) r.add_edge(s, apply(op, sym), t);
    for (int t : a.eps(s)) r.add_eps(s, t);
  }
  for (int s : a.initial()) r.mark_initial(s);
  for (int s : a.accepting()) r.mark_accepting(s);
  r.normalize();
  return trimmed(r);
}

Dfa determinize(const Nfa& in) {
  Nfa a = without_epsilons(in);
  Dfa d(a.alphabet());
  int nsyms = a.alphabet().num_symbols();
  if (a.size() == 0) {
    d.next.assign(1, std::vector<int>(static_cast<size_t>(nsyms), -1));
    d.accepting.assign(1, 0);
    d.initial = 0;
    return d;
  }
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> work;
  auto lookup = [&](std::vector<int> subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(d.next.size());
    d.next.emplace_back(static_cast<size_t>(nsyms), -1);
    char acc = 0;
    for (int s : subset)
      if (a.is_accepting(s)) acc = 1;
    d.accepting.push_back(acc);
    ids.emplace(subset, id);
    work.push_back(std::move(subset));
    return id;
  };
  d.initial = lookup(a.initial());
  while (!work.empty()) {
    std::vector<int> subset = std::move(work.front());
    work.pop_front();
    int from = ids[subset];
    std::vector<std::vector<int>> succ(static_cast<size_t>(nsyms));
    for (int p : subset)
      for (const auto& [sym, t] : a.edges(p))
        succ[static_cast<size_t>(sym.id())].push_back(t);
    for (int id = 0; id < nsyms; ++id) {
      if (succ[static_cast<size_t>(id)].empty()) continue;
      d.next[static_cast<size_t>(from)][static_cast<size_t>(id)] =
          lookup(sorted_unique(std::move(succ[static_cast<size_t>(id)])));
    }
  }
  return d;
}

Dfa minimize(const Dfa& d) {
  int n = d.size();
  int nsyms = d.alphabet().num_symbols();
  int sink = n;  // virtual completion state
  auto nxt = [&](int q, int s) {
    if (q == sink) return sink;
    int t = d.next[static_cast<size_t>(q)][static_cast<size_t>(s)];
    return t < 0 ? sink : t;
  };
  auto acc = [&](int q) {
    return q != sink && d.accepting[static_cast<size_t>(q)];
  };
  std::vector<int> cls(static_cast<size_t>(n + 1));
  for (int q = 0; q <= n; ++q) cls[static_cast<size_t>(q)] = acc(q) ? 1 : 0;
  int num_classes = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(static_cast<size_t>(n + 1));
    for (int q = 0; q <= n; ++q) {
      std::vector<int> sig;
      sig.reserve(static_cast<size_t>(nsyms) + 1);
      sig.push_back(cls[static_cast<size_t>(q)]);
      for (int s = 0; s < nsyms; ++s)
        sig.push_back(cls[static_cast<size_t>(nxt(q, s))]);
      auto [it, inserted] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      next_cls[static_cast<size_t>(q)] = it->second;
      (void)inserted;
    }
    int count = static_cast<int>(sig_ids.size());
    cls.swap(next_cls);
    if (count == num_classes) break;
    num_classes = count;
  }
  int sink_cls = cls[static_cast<size_t>(sink)];
  int init_cls = cls[static_cast<size_t>(d.initial)];
  Dfa r(d.alphabet());
  if (init_cls == sink_cls) {
    r.next.assign(1, std::vector<int>(static_cast<size_t>(nsyms), -1));
    r.accepting.assign(1, 0);
    r.initial = 0;
    return r;
  }
  // Class representatives and class-level transitions.
  std::vector<int> rep(static_cast<size_t>(num_classes), -1);
  for (int q = 0; q <= n; ++q)
    if (rep[static_cast<size_t>(cls[static_cast<size_t>(q)])] < 0)
      rep[static_cast<size_t>(cls[static_cast<size_t>(q)])] = q;
  // Keep classes reachable from the initial class, sink class excluded.
  std::vector<int> remap(static_cast<size_t>(num_classes), -1);
  std::deque<int> work;
  remap[static_cast<size_t>(init_cls)] = 0;
  r.next.emplace_back(static_cast<size_t>(nsyms), -1);
  r.accepting.push_back(0);
  r.initial = 0;
  work.push_back(init_cls);
  while (!work.empty()) {
    int c = work.front();
    work.pop_front();
    int q = rep[static_cast<size_t>(c)];
    if (acc(q)) r.accepting[static_cast<size_t>(remap[static_cast<size_t>(c)])] = 1;
    for (int s = 0; s < nsyms; ++s) {
      int tc = cls[static_cast<size_t>(nxt(q, s))];
      if (tc == sink_cls) continue;
      if (remap[static_cast<size_t>(tc)] < 0) {
        remap[static_cast<size_t>(tc)] = static_cast<int>(r.next.size());
        r.next.emplace_back(static_cast<size_t>(nsyms), -1);
        r.accepting.push_back(0);
        work.push_back(tc);
      }
      r.next[static_cast<size_t>(remap[static_cast<size_t>(c)])][static_cast<size_t>(s)] =
          remap[static_cast<size_t>(tc)];
    }
  }
  return r;
}

Nfa Dfa::to_nfa() const {
  Nfa r(alphabet_);
  for (int s = 0; s < size(); ++s) r.add_state();
  for (int s = 0; s < size(); ++s)
    for (int id = 0; id < alphabet_.num_symbols(); ++id) {
      int t = next[static_cast<size_t>(s)][static_cast<size_t>(id)];
      if (t >= 0) r.add_edge(s, Symbol::from_id(id), t);
    }
  r.mark_initial(initial);
  for (int s = 0; s < size(); ++s)
    if (accepting[static_cast<size_t>(s)]) r.mark_accepting(s);
  r.normalize();
  return trimmed(r);
}

Nfa minimal(const Nfa& a) { return minimize(determinize(a)).to_nfa(); }

Nfa complement(const Nfa& a) {
  Dfa d = determinize(a);
  int nsyms = a.alphabet().num_symbols();
  // Complete with an explicit sink, then flip acceptance.
  int sink = d.size();
  d.next.emplace_back(static_cast<size_t>(nsyms), sink);
  d.accepting.push_back(0);
  for (auto& row : d.next)
    for (auto& t : row)
      if (t < 0) t = sink;
  for (auto& f : d.accepting) f = f ? 0 : 1;
  return d.to_nfa();
}

Nfa difference(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  return intersect(a, complement(b));
}

bool subset_of(const Nfa& a, const Nfa& b) { return difference(a, b).empty(); }

bool equivalent(const Nfa& a, const Nfa& b) {
  return subset_of(a, b) && subset_of(b, a);
}

FactorSplit factor_at_last(const Nfa& in, int letter) {
  Nfa a = without_epsilons(in);
  const Alphabet& alpha = a.alphabet();
  if (a.size() == 0) return {Nfa::empty_lang(alpha), Nfa::empty_lang(alpha)};
  // States from which an accepting state is reachable without the letter.
  std::vector<std::vector<int>> rev(static_cast<size_t>(a.size()));
  for (int s = 0; s < a.size(); ++s)
    for (const auto& [sym, t] : a.edges(s))
      if (sym.letter != letter) rev[static_cast<size_t>(t)].push_back(s);
  std::vector<char> can_finish(static_cast<size_t>(a.size()), 0);
  std::deque<int> work;
  for (int s : a.accepting()) {
    can_finish[static_cast<size_t>(s)] = 1;
    work.push_back(s);
  }
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    for (int t : rev[static_cast<size_t>(s)])
      if (!can_finish[static_cast<size_t>(t)]) {
        can_finish[static_cast<size_t>(t)] = 1;
        work.push_back(t);
      }
  }
  Nfa head(alpha);
  for (int s = 0; s < a.size(); ++s) head.add_state();
  int final_state = head.add_state();
  head.mark_accepting(final_state);
  for (int s = 0; s < a.size(); ++s)
    for (const auto& [sym, t] : a.edges(s)) {
      head.add_edge(s, sym, t);
      if (sym.letter == letter && can_finish[static_cast<size_t>(t)])
        head.add_edge(s, sym, final_state);
    }
  for (int s : a.initial()) head.mark_initial(s);
  // Accept the empty head exactly when some accepted word avoids the letter.
  bool letter_free_word = false;
  for (int s : a.initial())
    if (can_finish[static_cast<size_t>(s)]) letter_free_word = true;
  if (letter_free_word) {
    int e = head.add_state();
    head.mark_initial(e);
    head.mark_accepting(e);
  }
  head.normalize();

  Nfa tail(alpha);
  for (int s = 0; s < a.size(); ++s) tail.add_state();
  for (int s = 0; s < a.size(); ++s)
    for (const auto& [sym, t] : a.edges(s))
      if (sym.letter != letter) tail.add_edge(s, sym, t);
  for (int s : a.initial()) tail.mark_initial(s);
  for (int s = 0; s < a.size(); ++s)
    for (const auto& [sym, t] : a.edges(s))
      if (sym.letter == letter) tail.mark_initial(t);
  for (int s : a.accepting()) tail.mark_accepting(s);
  tail.normalize();
  return {trimmed(head), trimmed(tail)};
}

Nfa append_letter(const Nfa& in, int letter, long long count) {
  if (count < 0) throw std::invalid_argument("negative appendage count");
  Nfa a = without_epsilons(in);
  const Alphabet& alpha = a.alphabet();
  if (a.size() == 0) return a;
  int n = a.size();
  int counters = static_cast<int>(count) + 1;
  // State layout: [0, n) = before the split point; then (state, inserted
  // count) pairs after it, where moves on the letter are insertions only.
  auto after_id = [&](int s, int c) { return n + s * counters + c; };
  Nfa r(alpha);
  for (int s = 0; s < n + n * counters; ++s) r.add_state();
  for (int s = 0; s < n; ++s)
    for (const auto& [sym, t] : a.edges(s)) {
      r.add_edge(s, sym, t);
      if (sym.letter == letter) {
        // The consumed occurrence may be the word's last one.
        r.add_edge(s, sym, after_id(t, 0));
      } else {
        for (int c = 0; c < counters; ++c)
          r.add_edge(after_id(s, c), sym, after_id(t, c));
      }
    }
  Symbol ins = plain(letter);
  for (int s = 0; s < n; ++s)
    for (int c = 0; c + 1 < counters; ++c)
      r.add_edge(after_id(s, c), ins, after_id(s, c + 1));
  for (int s : a.initial()) {
    r.mark_initial(s);
    r.mark_initial(after_id(s, 0));  // words without the letter at all
  }
  for (int s : a.accepting()) r.mark_accepting(after_id(s, static_cast<int>(count)));
  r.normalize();
  return trimmed(r);
}

}  // namespace creg
