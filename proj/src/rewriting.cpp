#include "vpb/rewriting.h"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "vpb/autfn.h"
#include "vpb/cabling.h"
#include "vpb/parallel.h"
#include "vpb/simplicial.h"

namespace vpb {

std::string to_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

Word cyclically_reduce(const Word& w) {
  int a = 0, b = w.size();
  const auto& code = w.code();
  while (b - a >= 2 && code[a] == -code[b - 1]) {
    ++a;
    --b;
  }
  return w.subword(a, b);
}

Word rotation(const Word& w, int r) {
  std::vector<detail::Code> cs;
  cs.reserve(w.size());
  const auto& code = w.code();
  for (int k = 0; k < w.size(); ++k) cs.push_back(code[(k + r) % w.size()]);
  return Word(std::move(cs));
}

}  // namespace

std::vector<RewriteRule> compile_rules(std::span<const Relator> relators) {
  std::vector<RewriteRule> rules;
  std::unordered_set<size_t> seen;
  auto key = [](const Word& a, const Word& b) {
    WordHash h;
    return h(a) * 1000003u ^ h(b);
  };
  std::vector<std::pair<Word, Word>> seen_words;

  for (const Relator& rel : relators) {
    Word w0 = cyclically_reduce(rel.word);
    if (w0.empty()) continue;
    for (bool backward : {false, true}) {
      Word base = backward ? w0.inverse() : w0;
      const int k = base.size();
      for (int r = 0; r < k; ++r) {
        Word rot = rotation(base, r);
        if (rot.size() != k) continue;  // rotation not reduced (cannot happen
                                        // after cyclic reduction; kept as a guard)
        for (int split = 1; split <= k; ++split) {
          Word lhs = rot.subword(0, split);
          Word rhs = rot.subword(split, k).inverse();
          size_t h = key(lhs, rhs);
          bool dup = false;
          if (!seen.insert(h).second) {
            for (const auto& [a, b] : seen_words)
              if (a == lhs && b == rhs) {
                dup = true;
                break;
              }
          }
          if (dup) continue;
          seen_words.emplace_back(lhs, rhs);
          rules.push_back(RewriteRule{std::move(lhs), std::move(rhs), rel.id, backward,
                                      static_cast<int>(rules.size())});
        }
      }
    }
  }
  return rules;
}

std::vector<RewriteRule> compile_rules(const Presentation& p) {
  return compile_rules(std::span<const Relator>(p.relators));
}

std::optional<Word> apply_rule(const Word& w, const RewriteRule& r, int position, int max_len) {
  const int ll = r.lhs.size();
  if (position < 0 || position + ll > w.size()) return std::nullopt;
  const auto& wc = w.code();
  const auto& lc = r.lhs.code();
  for (int k = 0; k < ll; ++k)
    if (wc[position + k] != lc[k]) return std::nullopt;

  std::vector<detail::Code> out;
  out.reserve(w.size() - ll + r.rhs.size());
  auto push = [&](detail::Code c) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  };
  for (int k = 0; k < position; ++k) out.push_back(wc[k]);
  for (detail::Code c : r.rhs.code()) push(c);
  for (int k = position + ll; k < w.size(); ++k) push(wc[k]);
  if (static_cast<int>(out.size()) > max_len) return std::nullopt;
  return Word(std::move(out));
}

Word replay(const DerivationCertificate& c, std::span<const RewriteRule> rules) {
  Word w = c.start;
  for (const Step& s : c.steps) {
    if (s.rule_id < 0 || s.rule_id >= static_cast<int>(rules.size()))
      throw std::runtime_error("replay: rule id out of range");
    auto res = apply_rule(w, rules[s.rule_id], s.position);
    if (!res) throw std::runtime_error("replay: rule does not match at recorded position");
    if (res->size() != s.result_length)
      throw std::runtime_error("replay: recorded result length differs");
    w = std::move(*res);
  }
  if (!(w == c.end)) throw std::runtime_error("replay: end word differs");
  return w;
}

namespace {

struct RuleIndex {
  std::span<const RewriteRule> rules;
  std::unordered_map<Word, std::vector<int>, WordHash> by_lhs;
  std::unordered_map<Word, std::vector<int>, WordHash> by_rhs;  // nonempty rhs only
  std::vector<int> eps_rhs;                                     // rules with empty rhs
  int max_lhs = 0, max_rhs = 0;

  explicit RuleIndex(std::span<const RewriteRule> rs) : rules(rs) {
    for (const RewriteRule& r : rs) {
      by_lhs[r.lhs].push_back(r.id);
      max_lhs = std::max(max_lhs, r.lhs.size());
      if (r.rhs.empty())
        eps_rhs.push_back(r.id);
      else {
        by_rhs[r.rhs].push_back(r.id);
        max_rhs = std::max(max_rhs, r.rhs.size());
      }
    }
  }
};

struct Successor {
  int rule_id;
  int position;
  Word word;
};

// Forward moves from w, ordered by (rule id, position) for deterministic
// tie-breaking.
std::vector<Successor> forward_successors(const Word& w, const RuleIndex& ix, int max_len) {
  std::vector<Successor> out;
  for (int pos = 0; pos < w.size(); ++pos) {
    int top = std::min(ix.max_lhs, w.size() - pos);
    for (int len = 1; len <= top; ++len) {
      auto it = ix.by_lhs.find(w.subword(pos, pos + len));
      if (it == ix.by_lhs.end()) continue;
      for (int rid : it->second) {
        auto res = apply_rule(w, ix.rules[rid], pos, max_len);
        if (res) out.push_back({rid, pos, std::move(*res)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Successor& a, const Successor& b) {
    return a.rule_id != b.rule_id ? a.rule_id < b.rule_id : a.position < b.position;
  });
  return out;
}

// Predecessor moves: words z with z -> x in one verified forward step.
// Reverse-matching the rhs (or inserting an eps-rule lhs) proposes z; the
// proposal is kept only if the forward application provably lands on x,
// which free reduction at the seam can otherwise spoil.
std::vector<Successor> predecessor_moves(const Word& x, const RuleIndex& ix, int max_len) {
  std::vector<Successor> out;
  auto try_candidate = [&](const Word& z, int rid) {
    const RewriteRule& r = ix.rules[rid];
    for (int p = 0; p + r.lhs.size() <= z.size(); ++p) {
      auto res = apply_rule(z, r, p);
      if (res && *res == x) {
        out.push_back({rid, p, z});
        return;
      }
    }
  };
  for (int pos = 0; pos < x.size(); ++pos) {
    int top = std::min(ix.max_rhs, x.size() - pos);
    for (int len = 1; len <= top; ++len) {
      auto it = ix.by_rhs.find(x.subword(pos, pos + len));
      if (it == ix.by_rhs.end()) continue;
      for (int rid : it->second) {
        const RewriteRule& r = ix.rules[rid];
        std::vector<detail::Code> cs;
        const auto& xc = x.code();
        cs.reserve(x.size() - len + r.lhs.size());
        for (int k = 0; k < pos; ++k) cs.push_back(xc[k]);
        for (detail::Code c : r.lhs.code()) cs.push_back(c);
        for (int k = pos + len; k < x.size(); ++k) cs.push_back(xc[k]);
        Word z(std::move(cs));
        if (z.size() <= max_len) try_candidate(z, rid);
      }
    }
  }
  for (int rid : ix.eps_rhs) {
    const RewriteRule& r = ix.rules[rid];
    for (int pos = 0; pos <= x.size(); ++pos) {
      std::vector<detail::Code> cs;
      const auto& xc = x.code();
      cs.reserve(x.size() + r.lhs.size());
      for (int k = 0; k < pos; ++k) cs.push_back(xc[k]);
      for (detail::Code c : r.lhs.code()) cs.push_back(c);
      for (int k = pos; k < x.size(); ++k) cs.push_back(xc[k]);
      Word z(std::move(cs));
      if (z.size() <= max_len) try_candidate(z, rid);
    }
  }
  std::sort(out.begin(), out.end(), [](const Successor& a, const Successor& b) {
    return a.rule_id != b.rule_id ? a.rule_id < b.rule_id : a.position < b.position;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Successor& a, const Successor& b) { return a.word == b.word; }),
            out.end());
  return out;
}

// Each tree expands its unexpanded node with the shortest word first
// (ties: oldest first), so the search follows the short-word corridor
// where hand derivations of these relations live instead of flooding
// whole depth levels.
struct Tree {
  std::vector<Word> words;
  std::vector<int> parent;
  std::vector<Step> step;  // tree1: step at parent producing node; tree2:
                           // step at node producing parent
  std::vector<int> depth;
  // min-heap over (word length, insertion order)
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>>
      open;
  long expanded = 0;

  int add(Word w, int par, Step st, int d) {
    int len = w.size();
    words.push_back(std::move(w));
    parent.push_back(par);
    step.push_back(st);
    depth.push_back(d);
    int idx = static_cast<int>(words.size()) - 1;
    open.emplace(len, idx);
    return idx;
  }
};

struct Slot {
  int t1 = -1, t2 = -1;
};

DerivationCertificate stitch(const Word& w1, const Word& w2, const Tree& t1, const Tree& t2,
                             int i1, int i2) {
  DerivationCertificate cert;
  cert.start = w1;
  cert.end = w2;
  std::vector<Step> down;
  for (int k = i1; t1.parent[k] != -1; k = t1.parent[k]) down.push_back(t1.step[k]);
  cert.steps.assign(down.rbegin(), down.rend());
  for (int k = i2; t2.parent[k] != -1; k = t2.parent[k]) cert.steps.push_back(t2.step[k]);
  return cert;
}

}  // namespace

EqualModResult equal_mod(const Word& w1, const Word& w2, std::span<const RewriteRule> rules,
                         const SearchBudget& budget) {
  EqualModResult res;
  res.certificate.start = w1;
  res.certificate.end = w2;
  if (w1 == w2) {
    res.equal = true;
    res.states = 1;
    return res;
  }
  if (w1.size() > budget.max_word_length || w2.size() > budget.max_word_length) {
    res.budget_exhausted = true;
    return res;
  }

  RuleIndex ix(rules);
  Tree t1, t2;
  std::unordered_map<Word, Slot, WordHash> visited;
  visited[w1].t1 = t1.add(w1, -1, {}, 0);
  visited[w2].t2 = t2.add(w2, -1, {}, 0);
  long states = 2;
  bool pruned = false;

  while (true) {
    bool can1 = !t1.open.empty();
    bool can2 = !t2.open.empty();
    if (!can1 && !can2) {
      res.states = states;
      res.budget_exhausted = pruned;
      return res;
    }
    bool grow1 = can1 && (!can2 || t1.expanded <= t2.expanded);
    Tree& tr = grow1 ? t1 : t2;
    int idx = tr.open.top().second;
    tr.open.pop();
    if (tr.depth[idx] + 1 > budget.max_depth) {  // cannot extend a certificate
      pruned = true;
      continue;
    }
    ++tr.expanded;
    std::vector<Successor> moves =
        grow1 ? forward_successors(tr.words[idx], ix, budget.max_word_length)
              : predecessor_moves(tr.words[idx], ix, budget.max_word_length);
    for (Successor& mv : moves) {
      if (mv.word.size() > budget.max_word_length) {
        pruned = true;
        continue;
      }
      Slot& slot = visited[mv.word];
      int& mine = grow1 ? slot.t1 : slot.t2;
      if (mine != -1) continue;
      Step st{mv.rule_id, mv.position, grow1 ? mv.word.size() : tr.words[idx].size()};
      mine = tr.add(std::move(mv.word), idx, st, tr.depth[idx] + 1);
      ++states;
      int other = grow1 ? slot.t2 : slot.t1;
      if (other != -1) {
        int total = grow1 ? t1.depth[mine] + t2.depth[other] : t1.depth[other] + t2.depth[mine];
        if (total <= budget.max_depth) {
          res.equal = true;
          res.states = states;
          res.certificate = grow1 ? stitch(w1, w2, t1, t2, mine, other)
                                  : stitch(w1, w2, t1, t2, other, mine);
          replay(res.certificate, rules);  // certificates must replay; fail loudly here
          return res;
        }
        pruned = true;
      }
      if (states >= budget.max_states) {
        res.states = states;
        res.budget_exhausted = true;
        return res;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Lifting theorem driver

WaveResolution resolve_in_waves(std::vector<Relator> rule_relators,
                                const std::vector<Relator>& targets, const SearchBudget& budget,
                                int jobs, bool full_budget_retry) {
  WaveResolution out;
  out.certificates.resize(targets.size());
  out.states.assign(targets.size(), 0);
  out.proven.assign(targets.size(), 0);

  // Failed attempts in early waves are retried later, so cap their cost:
  // successful finds stay far below this.
  SearchBudget wave_budget = budget;
  wave_budget.max_states = std::min<long>(budget.max_states, 200'000);

  bool final_pass = false;
  while (true) {
    for (size_t k = 0; k < rule_relators.size(); ++k)
      rule_relators[k].id = static_cast<int>(k);
    auto rules = compile_rules(rule_relators);
    std::vector<size_t> todo;
    for (size_t k = 0; k < targets.size(); ++k)
      if (!out.proven[k]) todo.push_back(k);
    if (todo.empty()) {
      out.rules = std::move(rules);
      return out;
    }
    std::vector<EqualModResult> results(todo.size());
    const SearchBudget& b = final_pass ? budget : wave_budget;
    parallel_for(todo.size(), jobs, [&](size_t i) {
      auto [lhs, rhs] = targets[todo[i]].equation();
      results[i] = equal_mod(lhs, rhs, rules, b);
    });
    int progress = 0;
    for (size_t i = 0; i < todo.size(); ++i) {
      out.states[todo[i]] += results[i].states;
      if (!results[i].equal) continue;
      out.proven[todo[i]] = 1;
      out.certificates[todo[i]] = std::move(results[i].certificate);
      Relator derived = targets[todo[i]];
      derived.id = static_cast<int>(rule_relators.size());
      rule_relators.push_back(std::move(derived));
      ++progress;
    }
    if (progress == 0) {
      if (final_pass || !full_budget_retry ||
          wave_budget.max_states == budget.max_states) {
        out.rules = std::move(rules);
        return out;
      }
      final_pass = true;  // one full-budget pass over the leftovers
    } else {
      final_pass = false;
    }
  }
}

LiftingReport verify_lifting(int n, const SearchBudget& budget, int jobs) {
  if (n < 3) throw std::invalid_argument("verify_lifting: need n >= 3");
  Presentation base = vp_presentation(n);
  Presentation target = vp_presentation(n + 1);

  std::vector<Relator> axioms = base.relators;
  for (int t = 0; t < n; ++t)
    for (const Relator& r : base.relators) {
      Relator lifted;
      lifted.word = apply_degeneracy(t, n, r.word);
      lifted.family = r.family;
      lifted.lhs_len = lifted.word.size();
      axioms.push_back(lifted);
    }
  const size_t aux_begin = axioms.size();
  for (const Relator& r : target.relators)
    if (r.family.kind == FamilyKind::Comm) axioms.push_back(r);

  std::unordered_set<Word, WordHash> base_words;
  for (const Relator& r : base.relators) base_words.insert(r.word);

  LiftingReport report;
  report.n = n;
  report.entries.resize(target.relators.size());
  std::vector<Relator> open_targets;
  std::vector<size_t> open_index;
  for (size_t k = 0; k < target.relators.size(); ++k) {
    const Relator& r = target.relators[k];
    LiftingEntry e;
    e.relator_id = r.id;
    e.family = r.family;
    e.word = r.word;
    if (base_words.count(r.word)) {
      e.status = LiftingEntry::Status::InLower;
    } else {
      open_targets.push_back(r);
      open_index.push_back(k);
    }
    report.entries[k] = std::move(e);
  }

  WaveResolution waves = resolve_in_waves(axioms, open_targets, budget, jobs);
  for (size_t i = 0; i < open_targets.size(); ++i) {
    LiftingEntry& e = report.entries[open_index[i]];
    e.states = waves.states[i];
    if (waves.proven[i]) {
      e.status = LiftingEntry::Status::Certified;
      e.certificate = std::move(waves.certificates[i]);
    } else {
      e.status = LiftingEntry::Status::NotProven;
    }
  }
  report.rules = std::move(waves.rules);

  // The stronger statement for the commutativity relators: derive them
  // without the level-(n+1) commutativity axioms (waves again: these
  // derivations build on each other).
  {
    std::vector<Relator> strict_axioms(axioms.begin(), axioms.begin() + aux_begin);
    std::vector<Relator> comm_targets;
    std::vector<size_t> comm_index;
    for (size_t k = 0; k < target.relators.size(); ++k) {
      const Relator& r = target.relators[k];
      if (r.family.kind != FamilyKind::Comm ||
          report.entries[k].status == LiftingEntry::Status::InLower)
        continue;
      comm_targets.push_back(r);
      comm_index.push_back(k);
    }
    // informational column: capped waves, no full-budget retry
    SearchBudget strict_budget = budget;
    strict_budget.max_states = std::min<long>(budget.max_states, 100'000);
    WaveResolution strict =
        resolve_in_waves(strict_axioms, comm_targets, strict_budget, jobs, false);
    for (size_t i = 0; i < comm_targets.size(); ++i)
      report.entries[comm_index[i]].certified_without_aux = strict.proven[i] != 0;
  }

  for (const LiftingEntry& e : report.entries) switch (e.status) {
      case LiftingEntry::Status::InLower: ++report.in_lower; break;
      case LiftingEntry::Status::Certified: ++report.certified; break;
      case LiftingEntry::Status::NotProven: ++report.not_proven; break;
    }
  return report;
}

// ---------------------------------------------------------------------------
// T_n relators

TnReport verify_tn_relators(int n, int exponent_bound, const SearchBudget& budget, int jobs) {
  if (n < 2 || n > 4) throw std::invalid_argument("verify_tn_relators: n must be 2, 3 or 4");
  if (exponent_bound < 0) throw std::invalid_argument("verify_tn_relators: bound must be >= 0");
  const int ambient = n + 1;

  TnReport report;
  report.n = n;
  report.exponent_bound = exponent_bound;
  report.degenerate = (n == 2);

  std::vector<std::vector<int>> vectors;
  {
    std::vector<int> cur(n - 1, -exponent_bound);
    while (true) {
      vectors.push_back(cur);
      int pos = n - 2;
      while (pos >= 0 && cur[pos] == exponent_bound) cur[pos--] = -exponent_bound;
      if (pos < 0) break;
      ++cur[pos];
    }
  }

  struct Task {
    Family fam;
    int i, j;
    const std::vector<int>* exps;
  };
  std::vector<Task> tasks;
  for (Family fam : {Family::CabA, Family::CabB})
    for (int i = n; i >= 2; --i)
      for (int j = i - 1; j >= 1; --j)
        for (const auto& v : vectors) tasks.push_back({fam, i, j, &v});

  Presentation amb = vp_presentation(ambient);
  auto rules = compile_rules(amb);

  report.entries.resize(tasks.size());
  parallel_for(tasks.size(), jobs, [&](size_t k) {
    const Task& t = tasks[k];
    TnEntry e;
    e.i = t.i;
    e.j = t.j;
    e.family = t.fam;
    e.exponents = *t.exps;
    Relator rel = tn_relator(n, t.i, t.j, *t.exps, t.fam);
    e.relator_word = rel.word;
    e.expanded = expand_cabled_word(rel.word, ambient);
    try {
      e.oracle = is_identity(rep_of_word(e.expanded, ambient)) ? CheckStatus::Pass
                                                               : CheckStatus::Fail;
    } catch (const RepOverflow&) {
      e.oracle = CheckStatus::Indeterminate;
    }
    bool zero = std::all_of(t.exps->begin(), t.exps->end(), [](int v) { return v == 0; });
    if (zero) {
      Word x = expand_cabled(CabledGenerator{t.fam, t.i, n + 1 - t.i}, ambient);
      Word y = expand_cabled(CabledGenerator{t.fam, t.j, n + 1 - t.j}, ambient);
      EqualModResult em = equal_mod(x * y, y * x, rules, budget);
      e.rewriting = em.equal ? CheckStatus::Pass : CheckStatus::Indeterminate;
      if (em.equal) e.certificate = std::move(em.certificate);
    }
    report.entries[k] = std::move(e);
  });

  report.rules = std::move(rules);
  for (const TnEntry& e : report.entries) {
    if (e.oracle == CheckStatus::Fail) ++report.oracle_failures;
    if (e.rewriting == CheckStatus::Pass) ++report.certified;
    if (e.rewriting == CheckStatus::Indeterminate &&
        std::all_of(e.exponents.begin(), e.exponents.end(), [](int v) { return v == 0; }))
      ++report.not_proven;
  }
  return report;
}

}  // namespace vpb
