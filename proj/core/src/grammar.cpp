#include <cstdint>
#include <deque>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "strew/pushdown.hpp"

namespace strew {

namespace {

constexpr char kEpsilon = '\0';

// ---------------------------------------------------------------------------
// Normalized machine: every move touches one stack cell (pop it, keep it, or
// push one cell above it). Multi-cell reductions run through intermediate
// control states, which is what makes the state-pair construction apply.
// ---------------------------------------------------------------------------

struct MachineState {
  enum class Kind { Scan0, Scan, Pop, Push, Check, Done };
  Kind kind;
  std::size_t rule = 0;   // Pop/Push
  std::size_t index = 0;  // Pop: pops remaining; Push: next rhs index; Check: symbols left
};

struct Cell {
  char symbol;
  MatchAutomaton::State matcher_state;
};

enum class Action { PopCell, KeepCell, PushCell };

struct Transition {
  int state;
  int cell;
  char terminal;  // kEpsilon for silent moves
  Action action;
  int target;
  int pushed_cell = -1;  // PushCell only
};

class Machine {
public:
  explicit Machine(const CollapsePda& pda);

  const std::vector<MachineState>& states() const { return states_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<int>& transitions_from(int state, int cell) const;
  const std::vector<int>& initial_cells() const { return initial_cells_; }  // bottom first
  int scan0() const { return scan0_; }
  int done() const { return done_; }
  const Alphabet& alphabet() const { return alphabet_; }

  static std::uint64_t pair_key(int state, int cell) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(state)) << 20) |
           static_cast<std::uint32_t>(cell);
  }

  std::string state_name(int s) const;
  std::string cell_name(int c) const;

  // Shortlex over the input alphabet extended with the end marker, using
  // precedence ranks rather than character codes.
  bool cost_less(const Word& a, const Word& b) const;

private:
  int intern_cell(char symbol, MatchAutomaton::State state);

  Alphabet alphabet_;
  std::vector<MachineState> states_;
  std::vector<Cell> cells_;
  std::vector<Transition> transitions_;
  std::vector<int> initial_cells_;
  std::unordered_map<std::uint64_t, int> cell_index_;
  mutable std::unordered_map<std::uint64_t, std::vector<int>> by_source_;
  mutable bool by_source_built_ = false;
  std::vector<int> empty_list_;
  int scan0_ = 0;
  int done_ = 0;
};

const std::vector<int>& Machine::transitions_from(int state, int cell) const {
  if (!by_source_built_) {
    for (std::size_t t = 0; t < transitions_.size(); ++t)
      by_source_[pair_key(transitions_[t].state, transitions_[t].cell)].push_back(
          static_cast<int>(t));
    by_source_built_ = true;
  }
  auto it = by_source_.find(pair_key(state, cell));
  return it == by_source_.end() ? empty_list_ : it->second;
}

int Machine::intern_cell(char symbol, MatchAutomaton::State state) {
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<unsigned char>(symbol)) << 32) |
                      static_cast<std::uint32_t>(state);
  auto [it, inserted] = cell_index_.try_emplace(key, static_cast<int>(cells_.size()));
  if (inserted)
    cells_.push_back({symbol, state});
  return it->second;
}

Machine::Machine(const CollapsePda& pda) : alphabet_(pda.system().alphabet()) {
  const MatchAutomaton& matcher = pda.matcher();
  const auto& rules = pda.system().rules();
  const Word& v = pda.v();

  // Cell 0 is the bottom marker paired with the matcher root.
  intern_cell(CollapsePda::kBottomMarker, MatchAutomaton::kRoot);
  // Any cell a run can ever hold: matchless successors of any state.
  for (std::size_t s = 0; s < matcher.state_count(); ++s) {
    for (std::size_t c = 0; c < alphabet_.size(); ++c) {
      char symbol = alphabet_.symbol(c);
      auto state = matcher.go(static_cast<MatchAutomaton::State>(s), symbol);
      if (!matcher.has_match(state))
        intern_cell(symbol, state);
    }
  }

  auto add_state = [this](MachineState s) {
    states_.push_back(s);
    return static_cast<int>(states_.size() - 1);
  };
  scan0_ = add_state({MachineState::Kind::Scan0});
  int scan = add_state({MachineState::Kind::Scan});
  std::vector<std::vector<int>> pop_state(rules.size());
  std::vector<std::vector<int>> push_state(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::size_t m = rules[i].lhs.size();
    pop_state[i].resize(m >= 2 ? m - 1 : 0, -1);
    for (std::size_t k = 1; m >= 3 && k <= m - 2; ++k)
      pop_state[i][k] = add_state({MachineState::Kind::Pop, i, k});
    push_state[i].resize(rules[i].rhs.size(), -1);
    for (std::size_t j = 0; j < rules[i].rhs.size(); ++j)
      push_state[i][j] = add_state({MachineState::Kind::Push, i, j});
  }
  std::vector<int> check_state(v.size() + 1);
  for (std::size_t j = 0; j <= v.size(); ++j)
    check_state[j] = add_state({MachineState::Kind::Check, 0, j});
  done_ = add_state({MachineState::Kind::Done});

  auto after_pops = [&](std::size_t i) {
    return rules[i].rhs.empty() ? scan : push_state[i][0];
  };

  // Scanning: push the symbol, or reduce at the completed l-part. The first
  // pop of a reduction happens at the consuming transition itself.
  for (int b : {scan0_, scan}) {
    for (std::size_t x = 0; x < cells_.size(); ++x) {
      const Cell& cell = cells_[x];
      for (std::size_t c = 0; c < alphabet_.size(); ++c) {
        char a = alphabet_.symbol(c);
        auto state = matcher.go(cell.matcher_state, a);
        auto match = matcher.longest_match(state);
        if (!match) {
          transitions_.push_back({b, static_cast<int>(x), a, Action::PushCell, scan,
                                  intern_cell(a, state)});
          continue;
        }
        std::size_t i = *match;
        std::size_t m = rules[i].lhs.size();
        if (m == 1)
          transitions_.push_back({b, static_cast<int>(x), a, Action::KeepCell, after_pops(i)});
        else if (m == 2)
          transitions_.push_back({b, static_cast<int>(x), a, Action::PopCell, after_pops(i)});
        else
          transitions_.push_back(
              {b, static_cast<int>(x), a, Action::PopCell, pop_state[i][m - 2]});
      }
      if (b == scan)
        transitions_.push_back({b, static_cast<int>(x), CollapsePda::kEndMarker,
                                Action::KeepCell, check_state[v.size()]});
    }
  }

  // Blind pops of the remaining l-part cells; the popped symbols are pinned
  // by the rule, which keeps the useless state-pair combinations out.
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t k = 1; k + 1 < rules[i].lhs.size(); ++k) {
      char expected = rules[i].lhs[k - 1];
      int next = k > 1 ? pop_state[i][k - 1] : after_pops(i);
      for (std::size_t x = 0; x < cells_.size(); ++x) {
        if (cells_[x].symbol == expected)
          transitions_.push_back(
              {pop_state[i][k], static_cast<int>(x), kEpsilon, Action::PopCell, next});
      }
    }
  }

  // Pushing a right-hand side symbol by symbol; a completed redex here
  // would contradict forward closure, so such moves do not exist.
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules[i].rhs.size(); ++j) {
      char c = rules[i].rhs[j];
      int next = j + 1 < rules[i].rhs.size() ? push_state[i][j + 1] : scan;
      for (std::size_t x = 0; x < cells_.size(); ++x) {
        auto state = matcher.go(cells_[x].matcher_state, c);
        if (matcher.has_match(state))
          continue;
        transitions_.push_back({push_state[i][j], static_cast<int>(x), kEpsilon,
                                Action::PushCell, next, intern_cell(c, state)});
      }
    }
  }

  // End-of-input check: pop v from the top, then the bottom marker.
  for (std::size_t j = v.size(); j >= 1; --j) {
    char expected = v[j - 1];
    for (std::size_t x = 0; x < cells_.size(); ++x) {
      if (cells_[x].symbol == expected)
        transitions_.push_back({check_state[j], static_cast<int>(x), kEpsilon,
                                Action::PopCell, check_state[j - 1]});
    }
  }
  transitions_.push_back({check_state[0], 0, kEpsilon, Action::PopCell, done_});

  initial_cells_.push_back(0);
  for (const StackCell& cell : pda.initial_stack()) {
    if (cell.symbol == CollapsePda::kBottomMarker)
      continue;
    initial_cells_.push_back(intern_cell(cell.symbol, cell.matcher_state));
  }
}

std::string Machine::state_name(int s) const {
  const MachineState& state = states_[static_cast<std::size_t>(s)];
  switch (state.kind) {
    case MachineState::Kind::Scan0: return "scan0";
    case MachineState::Kind::Scan: return "scan";
    case MachineState::Kind::Pop:
      return "pop(" + std::to_string(state.rule) + "," + std::to_string(state.index) + ")";
    case MachineState::Kind::Push:
      return "push(" + std::to_string(state.rule) + "," + std::to_string(state.index) + ")";
    case MachineState::Kind::Check: return "chk(" + std::to_string(state.index) + ")";
    case MachineState::Kind::Done: return "done";
  }
  return "?";
}

std::string Machine::cell_name(int c) const {
  const Cell& cell = cells_[static_cast<std::size_t>(c)];
  return std::string(1, cell.symbol) + "@" + std::to_string(cell.matcher_state);
}

bool Machine::cost_less(const Word& a, const Word& b) const {
  if (a.size() != b.size())
    return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i])
      continue;
    int ra = a[i] == CollapsePda::kEndMarker ? static_cast<int>(alphabet_.size())
                                             : alphabet_.rank(a[i]);
    int rb = b[i] == CollapsePda::kEndMarker ? static_cast<int>(alphabet_.size())
                                             : alphabet_.rank(b[i]);
    return ra < rb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Bottom-up saturation of the state-pair facts (p, X, q): the words that can
// drive the machine from state p with X on top until X is popped, entering
// state q. Knuth-style settling yields, per fact, the shortest such word
// with precedence-least tie-breaking. Only derivable facts ever materialize.
// ---------------------------------------------------------------------------

struct Fact {
  int state;
  int cell;
  int target;
  Word cost;
  bool settled = false;
};

class Saturation {
public:
  explicit Saturation(const Machine& machine);

  const std::vector<Fact>& facts() const { return facts_; }
  const std::vector<int>& facts_from(int state, int cell) const;
  std::optional<int> fact_id(int state, int cell, int target) const;

private:
  static std::uint64_t pair_key(int state, int cell) { return Machine::pair_key(state, cell); }
  static std::uint64_t triple_key(int state, int cell, int target) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(state)) << 40) |
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cell)) << 20) |
           static_cast<std::uint32_t>(target);
  }

  void relax(int state, int cell, int target, Word cost);
  void run();

  const Machine& machine_;
  std::vector<Fact> facts_;
  std::unordered_map<std::uint64_t, int> fact_index_;
  std::unordered_map<std::uint64_t, std::vector<int>> settled_by_source_;
  std::vector<int> empty_list_;

  // Transition indexes.
  std::unordered_map<std::uint64_t, std::vector<int>> keep_by_target_;   // (target, cell)
  std::unordered_map<std::uint64_t, std::vector<int>> push_by_inner_;    // (target, pushed)
  std::unordered_map<std::uint64_t, std::vector<std::pair<int, Word>>> waiters_;  // (state, cell)

  struct QueueEntry {
    Word cost;
    int fact;
  };
  struct QueueCompare {
    const Machine* machine;
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
      if (machine->cost_less(a.cost, b.cost))
        return false;
      if (machine->cost_less(b.cost, a.cost))
        return true;
      return a.fact > b.fact;
    }
  };
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueCompare> queue_;
};

Saturation::Saturation(const Machine& machine)
    : machine_(machine), queue_(QueueCompare{&machine}) {
  for (std::size_t t = 0; t < machine_.transitions().size(); ++t) {
    const Transition& tr = machine_.transitions()[t];
    switch (tr.action) {
      case Action::PopCell:
        break;  // seeds, handled below
      case Action::KeepCell:
        keep_by_target_[pair_key(tr.target, tr.cell)].push_back(static_cast<int>(t));
        break;
      case Action::PushCell:
        push_by_inner_[pair_key(tr.target, tr.pushed_cell)].push_back(static_cast<int>(t));
        break;
    }
  }
  for (const Transition& tr : machine_.transitions()) {
    if (tr.action != Action::PopCell)
      continue;
    Word cost;
    if (tr.terminal != kEpsilon)
      cost.push_back(tr.terminal);
    relax(tr.state, tr.cell, tr.target, std::move(cost));
  }
  run();
}

const std::vector<int>& Saturation::facts_from(int state, int cell) const {
  auto it = settled_by_source_.find(pair_key(state, cell));
  return it == settled_by_source_.end() ? empty_list_ : it->second;
}

std::optional<int> Saturation::fact_id(int state, int cell, int target) const {
  auto it = fact_index_.find(triple_key(state, cell, target));
  if (it == fact_index_.end() || !facts_[static_cast<std::size_t>(it->second)].settled)
    return std::nullopt;
  return it->second;
}

void Saturation::relax(int state, int cell, int target, Word cost) {
  auto [it, inserted] = fact_index_.try_emplace(triple_key(state, cell, target),
                                                static_cast<int>(facts_.size()));
  if (inserted) {
    facts_.push_back({state, cell, target, cost, false});
    queue_.push({std::move(cost), it->second});
    return;
  }
  Fact& fact = facts_[static_cast<std::size_t>(it->second)];
  if (fact.settled || !machine_.cost_less(cost, fact.cost))
    return;
  fact.cost = cost;
  queue_.push({std::move(cost), it->second});
}

void Saturation::run() {
  while (!queue_.empty()) {
    QueueEntry entry = queue_.top();
    queue_.pop();
    Fact& fact = facts_[static_cast<std::size_t>(entry.fact)];
    if (fact.settled)
      continue;
    if (machine_.cost_less(fact.cost, entry.cost))
      continue;  // stale queue entry
    fact.settled = true;
    settled_by_source_[pair_key(fact.state, fact.cell)].push_back(entry.fact);

    // Keep-transitions into this fact's source state.
    if (auto it = keep_by_target_.find(pair_key(fact.state, fact.cell));
        it != keep_by_target_.end()) {
      for (int t : it->second) {
        const Transition& tr = machine_.transitions()[static_cast<std::size_t>(t)];
        Word cost;
        if (tr.terminal != kEpsilon)
          cost.push_back(tr.terminal);
        cost += fact.cost;
        relax(tr.state, tr.cell, fact.target, std::move(cost));
      }
    }

    // This fact pops a pushed cell: combine with facts popping the cell
    // underneath, both ways around the settling order.
    if (auto it = push_by_inner_.find(pair_key(fact.state, fact.cell));
        it != push_by_inner_.end()) {
      for (int t : it->second) {
        const Transition& tr = machine_.transitions()[static_cast<std::size_t>(t)];
        Word left;
        if (tr.terminal != kEpsilon)
          left.push_back(tr.terminal);
        left += fact.cost;
        for (int g : facts_from(fact.target, tr.cell)) {
          const Fact& right = facts_[static_cast<std::size_t>(g)];
          relax(tr.state, tr.cell, right.target, left + right.cost);
        }
        waiters_[pair_key(fact.target, tr.cell)].push_back({t, left});
      }
    }
    if (auto it = waiters_.find(pair_key(fact.state, fact.cell)); it != waiters_.end()) {
      for (const auto& [t, left] : it->second) {
        const Transition& tr = machine_.transitions()[static_cast<std::size_t>(t)];
        relax(tr.state, tr.cell, fact.target, left + fact.cost);
      }
    }
  }
}

} // namespace

// ---------------------------------------------------------------------------
// Grammar assembly
// ---------------------------------------------------------------------------

Grammar::Grammar(std::vector<NonterminalInfo> nonterminals,
                 std::vector<Production> productions, std::size_t start,
                 std::string terminals, std::optional<Word> min_word)
    : nonterminals_(std::move(nonterminals)),
      productions_(std::move(productions)),
      start_(start),
      terminals_(std::move(terminals)),
      min_word_(std::move(min_word)) {}

Grammar pda_to_grammar(const CollapsePda& pda) {
  Machine machine(pda);
  Saturation saturation(machine);

  // Chain nonterminals down the initial stack: chain[j] maps a control
  // state to the best way of consuming input while popping initial cells
  // j..0 and ending in the accepting state with an empty stack.
  const auto& initial = machine.initial_cells();
  std::size_t depth = initial.size();
  std::vector<std::unordered_map<int, std::pair<Word, int>>> chain(depth);
  for (std::size_t j = 0; j < depth; ++j) {
    int cell = initial[j];
    for (std::size_t s = 0; s < machine.states().size(); ++s) {
      int state = static_cast<int>(s);
      std::optional<std::pair<Word, int>> best;
      for (int f : saturation.facts_from(state, cell)) {
        const Fact& fact = saturation.facts()[static_cast<std::size_t>(f)];
        if (j == 0) {
          if (fact.target != machine.done())
            continue;
          if (!best || machine.cost_less(fact.cost, best->first))
            best = {fact.cost, f};
        } else {
          auto it = chain[j - 1].find(fact.target);
          if (it == chain[j - 1].end())
            continue;
          Word combined = fact.cost + it->second.first;
          if (!best || machine.cost_less(combined, best->first))
            best = {std::move(combined), f};
        }
      }
      if (best)
        chain[j][state] = std::move(*best);
    }
  }

  auto start_entry = chain[depth - 1].find(machine.scan0());
  bool generating = start_entry != chain[depth - 1].end();

  // Materialize the trimmed grammar: the start symbol, the chain
  // nonterminals, and every settled state-pair fact reachable from them.
  std::vector<Grammar::NonterminalInfo> nonterminals;
  std::vector<Grammar::Production> productions;

  std::unordered_map<std::uint64_t, std::size_t> chain_nt;  // (j, state)
  std::unordered_map<int, std::size_t> fact_nt;
  auto chain_key = [](std::size_t j, int state) {
    return (static_cast<std::uint64_t>(j) << 32) | static_cast<std::uint32_t>(state);
  };

  std::size_t start_nt = 0;
  if (generating) {
    std::deque<std::pair<std::size_t, int>> chain_queue;  // (j, state)
    std::deque<int> fact_queue;

    auto intern_chain = [&](std::size_t j, int state) {
      auto [it, inserted] = chain_nt.try_emplace(chain_key(j, state), nonterminals.size());
      if (inserted) {
        std::string name = j + 1 == depth && state == machine.scan0()
                               ? "S"
                               : "A" + std::to_string(j) + "(" + machine.state_name(state) + ")";
        nonterminals.push_back(
            {std::move(name), true, chain[j].at(state).first.size()});
        chain_queue.push_back({j, state});
      }
      return it->second;
    };
    auto intern_fact = [&](int f) {
      auto [it, inserted] = fact_nt.try_emplace(f, nonterminals.size());
      if (inserted) {
        const Fact& fact = saturation.facts()[static_cast<std::size_t>(f)];
        std::string name = "[" + machine.state_name(fact.state) + " " +
                           machine.cell_name(fact.cell) + " " +
                           machine.state_name(fact.target) + "]";
        nonterminals.push_back({std::move(name), true, fact.cost.size()});
        fact_queue.push_back(f);
      }
      return it->second;
    };

    start_nt = intern_chain(depth - 1, machine.scan0());

    while (!chain_queue.empty() || !fact_queue.empty()) {
      if (!chain_queue.empty()) {
        auto [j, state] = chain_queue.front();
        chain_queue.pop_front();
        std::size_t lhs = chain_nt.at(chain_key(j, state));
        int cell = initial[j];
        for (int f : saturation.facts_from(state, cell)) {
          const Fact& fact = saturation.facts()[static_cast<std::size_t>(f)];
          if (j == 0) {
            if (fact.target != machine.done())
              continue;
            productions.push_back({lhs, {Grammar::Symbol{false, 0, intern_fact(f)}}});
          } else {
            if (chain[j - 1].find(fact.target) == chain[j - 1].end())
              continue;
            productions.push_back(
                {lhs,
                 {Grammar::Symbol{false, 0, intern_fact(f)},
                  Grammar::Symbol{false, 0, intern_chain(j - 1, fact.target)}}});
          }
        }
        continue;
      }

      int f = fact_queue.front();
      fact_queue.pop_front();
      const Fact& fact = saturation.facts()[static_cast<std::size_t>(f)];
      std::size_t lhs = fact_nt.at(f);
      // Re-derive this fact's productions from the transitions out of its
      // source configuration.
      for (int ti : machine.transitions_from(fact.state, fact.cell)) {
        const Transition& tr = machine.transitions()[static_cast<std::size_t>(ti)];
        std::vector<Grammar::Symbol> body;
        if (tr.terminal != kEpsilon)
          body.push_back({true, tr.terminal, 0});
        switch (tr.action) {
          case Action::PopCell:
            if (tr.target == fact.target)
              productions.push_back({lhs, body});
            break;
          case Action::KeepCell:
            if (auto inner = saturation.fact_id(tr.target, tr.cell, fact.target)) {
              body.push_back({false, 0, intern_fact(*inner)});
              productions.push_back({lhs, std::move(body)});
            }
            break;
          case Action::PushCell:
            for (int g : saturation.facts_from(tr.target, tr.pushed_cell)) {
              const Fact& left = saturation.facts()[static_cast<std::size_t>(g)];
              if (auto right = saturation.fact_id(left.target, tr.cell, fact.target)) {
                auto with_children = body;
                with_children.push_back({false, 0, intern_fact(g)});
                with_children.push_back({false, 0, intern_fact(*right)});
                productions.push_back({lhs, std::move(with_children)});
              }
            }
            break;
        }
      }
    }
  } else {
    nonterminals.push_back({"S", false, std::nullopt});
    start_nt = 0;
  }

  std::string terminals = pda.system().alphabet().symbols();
  terminals.push_back(CollapsePda::kEndMarker);
  std::optional<Word> min_word;
  if (generating)
    min_word = start_entry->second.first;
  return Grammar(std::move(nonterminals), std::move(productions), start_nt,
                 std::move(terminals), std::move(min_word));
}

} // namespace strew
