#include "potalg/automaton.hpp"

#include <map>
#include <queue>

namespace potalg {

namespace {

struct TrieNode {
  std::map<int, int> child;
  int fail = 0;
  bool terminal = false;
};

}  // namespace

FactorAvoidanceAutomaton::FactorAvoidanceAutomaton(
    const std::vector<Word>& forbidden, int alphabet)
    : alphabet_(alphabet) {
  if (alphabet_ < 1) throw StructuralError("alphabet must be nonempty");

  std::vector<TrieNode> trie(1);
  bool root_terminal = false;
  for (const Word& w : forbidden) {
    if (w.empty()) {
      root_terminal = true;
      continue;
    }
    int node = 0;
    for (int i = 0; i < w.degree(); ++i) {
      int a = w.letter(i);
      if (a >= alphabet_)
        throw StructuralError("forbidden word letter outside alphabet");
      auto it = trie[size_t(node)].child.find(a);
      if (it == trie[size_t(node)].child.end()) {
        trie.emplace_back();
        it = trie[size_t(node)].child.emplace(a, int(trie.size()) - 1).first;
      }
      node = it->second;
    }
    trie[size_t(node)].terminal = true;
  }
  if (root_terminal) return;  // empty word forbidden: no live states

  // breadth-first failure links; a node is terminal if its failure chain is
  std::queue<int> bfs;
  for (auto& [a, ch] : trie[0].child) {
    trie[size_t(ch)].fail = 0;
    bfs.push(ch);
  }
  std::vector<std::vector<int>> go(trie.size(),
                                   std::vector<int>(size_t(alphabet_), 0));
  for (int a = 0; a < alphabet_; ++a) {
    auto it = trie[0].child.find(a);
    go[0][size_t(a)] = it == trie[0].child.end() ? 0 : it->second;
  }
  std::vector<int> order;
  while (!bfs.empty()) {
    int node = bfs.front();
    bfs.pop();
    order.push_back(node);
    int f = trie[size_t(node)].fail;
    if (trie[size_t(f)].terminal) trie[size_t(node)].terminal = true;
    for (int a = 0; a < alphabet_; ++a) {
      auto it = trie[size_t(node)].child.find(a);
      if (it == trie[size_t(node)].child.end()) {
        go[size_t(node)][size_t(a)] = go[size_t(f)][size_t(a)];
      } else {
        go[size_t(node)][size_t(a)] = it->second;
        trie[size_t(it->second)].fail = go[size_t(f)][size_t(a)];
        bfs.push(it->second);
      }
    }
  }

  // live states = non-terminal nodes, renumbered densely
  std::vector<int> live_id(trie.size(), -1);
  int count = 0;
  for (size_t i = 0; i < trie.size(); ++i)
    if (!trie[i].terminal) live_id[i] = count++;
  next_.assign(size_t(count), std::vector<int>(size_t(alphabet_), -1));
  for (size_t i = 0; i < trie.size(); ++i) {
    if (trie[i].terminal) continue;
    for (int a = 0; a < alphabet_; ++a) {
      int t = go[i][size_t(a)];
      next_[size_t(live_id[i])][size_t(a)] =
          trie[size_t(t)].terminal ? -1 : live_id[size_t(t)];
    }
  }
}

std::vector<mpz_class> FactorAvoidanceAutomaton::census(int max_degree) const {
  std::vector<mpz_class> counts;
  counts.reserve(size_t(max_degree) + 1);
  const int n = state_count();
  std::vector<mpz_class> occ(size_t(n), 0);
  if (n > 0) occ[0] = 1;
  for (int d = 0; d <= max_degree; ++d) {
    mpz_class total = 0;
    for (const auto& v : occ) total += v;
    counts.push_back(total);
    if (d == max_degree) break;
    std::vector<mpz_class> nxt(size_t(n), 0);
    for (int s = 0; s < n; ++s) {
      if (occ[size_t(s)] == 0) continue;
      for (int a = 0; a < alphabet_; ++a) {
        int t = next_[size_t(s)][size_t(a)];
        if (t >= 0) nxt[size_t(t)] += occ[size_t(s)];
      }
    }
    occ.swap(nxt);
  }
  return counts;
}

bool FactorAvoidanceAutomaton::language_is_finite() const {
  const int n = state_count();
  // cycle detection among states reachable from the start state
  std::vector<int> color(size_t(n), 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<std::pair<int, int>> stack;
  if (n == 0) return true;
  stack.emplace_back(0, 0);
  color[0] = 1;
  while (!stack.empty()) {
    auto& [s, ai] = stack.back();
    if (ai == alphabet_) {
      color[size_t(s)] = 2;
      stack.pop_back();
      continue;
    }
    int t = next_[size_t(s)][size_t(ai++)];
    if (t < 0) continue;
    if (color[size_t(t)] == 1) return false;
    if (color[size_t(t)] == 0) {
      color[size_t(t)] = 1;
      stack.emplace_back(t, 0);
    }
  }
  return true;
}

std::optional<mpz_class> FactorAvoidanceAutomaton::total_count() const {
  if (!language_is_finite()) return std::nullopt;
  // longest avoiding word has length < #states; sum the census that far
  std::vector<mpz_class> c = census(state_count());
  mpz_class total = 0;
  for (const auto& v : c) total += v;
  return total;
}

}  // namespace potalg
