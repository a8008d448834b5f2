// Concept satisfiability for ALCQIO with singleton nominals and the
// universal role, without a TBox. Satisfiable answers carry a finite model
// read off the completion graph.
//
// Rules: conjunction, disjunction (backtracking), exists / at-least
// (fresh successors, at-least successors pairwise distinct), value
// restriction along edges in both directions, choose and merge for
// at-most, nominal merging, and the universal-role rules (a value
// restriction over the universal role becomes a global label, an existential
// one spawns a global witness, and at-most counts over all nodes).
//
// Without universal value restrictions every node label has a strictly
// smaller quantifier depth than its parent's, so expansion terminates on its
// own. Global labels re-introduce cycles; pairwise ancestor blocking stops
// expansion there, and blocked nodes are folded onto their blockers when the
// model is built. The folded graph is checked label by label; if folding
// breaks a number restriction the answer is Unknown rather than a wrong
// model.
#pragma once

#include "locality/interpretation.hpp"
#include "locality/model.hpp"
#include "locality/normalize.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace locality {

struct Budget {
  std::uint64_t max_steps = 1'000'000;
  std::chrono::milliseconds max_time{5000};
};

struct SatResult {
  enum class Status { Satisfiable, Unsatisfiable, Unknown };

  Status status = Status::Unknown;
  std::optional<Interpretation> model;  // set for Satisfiable
  std::string reason;                   // set for Unknown
  std::uint64_t steps = 0;

  bool satisfiable() const { return status == Status::Satisfiable; }
  bool unsatisfiable() const { return status == Status::Unsatisfiable; }
  bool unknown() const { return status == Status::Unknown; }
};

namespace tableau_detail {

using CK = ConceptExpr::Kind;

struct BudgetExhausted {};
struct Undecided {
  std::string reason;
};

struct Entry {
  CK kind = CK::Top;
  int symbol = -1;  // concept name or individual index
  int role = -1;
  unsigned n = 0;
  std::vector<int> kids;
};

// Interned sub-concepts and roles of one satisfiability call. Append-only,
// shared by all branches of the search.
class Closure {
 public:
  int intern(const ConceptExpr& c) {
    if (auto it = ids_.find(c); it != ids_.end()) return it->second;
    Entry e;
    e.kind = c.kind();
    switch (c.kind()) {
      case CK::Name: e.symbol = index(concept_names_, concept_ids_, c.symbol()); break;
      case CK::OneOf: e.symbol = index(individuals_, individual_ids_, c.symbol()); break;
      default: break;
    }
    if (c.has_role()) {
      e.role = role_id(c.role());
      e.n = c.cardinality();
    }
    for (const auto& op : c.operands()) e.kids.push_back(intern(op));
    const int id = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
    exprs_.push_back(c);
    ids_.emplace(c, id);
    return id;
  }

  // Id of the negation normal form of the complement.
  int negation(int id) {
    if (auto it = negations_.find(id); it != negations_.end()) return it->second;
    const int neg = intern(nnf_negated(exprs_[id]));
    negations_[id] = neg;
    negations_[neg] = id;
    return neg;
  }

  int role_id(const RoleExpr& r) {
    if (auto it = role_ids_.find(r); it != role_ids_.end()) return it->second;
    const int id = static_cast<int>(roles_.size());
    roles_.push_back(r);
    role_ids_.emplace(r, id);
    return id;
  }
  int inverse_role(int id) { return role_id(inverse(roles_[id])); }
  const RoleExpr& role(int id) const { return roles_[id]; }
  bool universal(int role) const { return roles_[role].kind() == RoleExpr::Kind::Universal; }
  bool empty_role(int role) const { return roles_[role].kind() == RoleExpr::Kind::Empty; }

  const Entry& operator[](int id) const { return entries_[id]; }
  const std::vector<std::string>& concept_names() const { return concept_names_; }
  const std::vector<std::string>& individuals() const { return individuals_; }
  std::vector<std::string> role_names() const {
    std::set<std::string> names;
    for (const auto& r : roles_)
      if (!r.is_constant()) names.insert(r.name());
    return {names.begin(), names.end()};
  }

 private:
  static int index(std::vector<std::string>& v, std::map<std::string, int>& m, const std::string& s) {
    auto [it, inserted] = m.emplace(s, static_cast<int>(v.size()));
    if (inserted) v.push_back(s);
    return it->second;
  }

  std::unordered_map<ConceptExpr, int> ids_;
  std::vector<Entry> entries_;
  std::vector<ConceptExpr> exprs_;
  std::unordered_map<int, int> negations_;
  std::unordered_map<RoleExpr, int> role_ids_;
  std::vector<RoleExpr> roles_;
  std::vector<std::string> concept_names_;
  std::map<std::string, int> concept_ids_;
  std::vector<std::string> individuals_;
  std::map<std::string, int> individual_ids_;
};

struct Node {
  std::set<int> label;
  std::set<int> tags;   // individuals this node stands for
  std::set<int> fired;  // at-least concepts already expanded here
  int parent = -1;
  int merged_into = -1;
};

struct Edge {
  int role;
  int from;
  int to;
};

struct State {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> distinct;
  std::set<int> global;        // fillers of universal value restrictions
  std::set<int> global_fired;  // universal existentials already witnessed
  std::vector<int> nominal;    // individual -> node created for it
};

struct Alternative {
  enum class Kind { Add, Merge } kind;
  int node;
  int value;  // concept to add, or node to merge with
};

class Tableau {
 public:
  Tableau(Closure& closure, const Budget& budget)
      : cl_(closure), budget_(budget), deadline_(std::chrono::steady_clock::now() + budget.max_time) {}

  SatResult run(const ConceptExpr& c) {
    SatResult result;
    try {
      const int root_concept = cl_.intern(c);
      State s;
      new_node(s, -1);
      add(s, 0, root_concept);
      s.nominal.resize(cl_.individuals().size());
      for (std::size_t a = 0; a < cl_.individuals().size(); ++a) {
        const int x = new_node(s, -1);
        s.nodes[x].tags.insert(static_cast<int>(a));
        add(s, x, cl_.intern(ConceptExpr::one_of(cl_.individuals()[a])));
        s.nominal[a] = x;
      }
      auto model = search(std::move(s));
      if (model) {
        result.status = SatResult::Status::Satisfiable;
        result.model = std::move(model);
      } else {
        result.status = SatResult::Status::Unsatisfiable;
      }
    } catch (const BudgetExhausted&) {
      result.status = SatResult::Status::Unknown;
      result.reason = "budget exhausted";
    } catch (const Undecided& u) {
      result.status = SatResult::Status::Unknown;
      result.reason = u.reason;
    }
    result.steps = steps_;
    return result;
  }

 private:
  void tick() {
    ++steps_;
    if (steps_ > budget_.max_steps) throw BudgetExhausted{};
    if ((steps_ & 255) == 0 && std::chrono::steady_clock::now() > deadline_) throw BudgetExhausted{};
  }

  static bool live(const State& s, int x) { return s.nodes[x].merged_into < 0; }
  static int find(const State& s, int x) {
    while (s.nodes[x].merged_into >= 0) x = s.nodes[x].merged_into;
    return x;
  }
  static bool has(const State& s, int x, int c) { return s.nodes[x].label.count(c) != 0; }
  static bool is_distinct(const State& s, int a, int b) {
    return s.distinct.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  int new_node(State& s, int parent) {
    tick();
    const int id = static_cast<int>(s.nodes.size());
    s.nodes.emplace_back();
    s.nodes.back().parent = parent;
    for (int g : s.global) s.nodes.back().label.insert(g);
    return id;
  }

  bool add(State& s, int x, int c) {
    if (!s.nodes[x].label.insert(c).second) return false;
    tick();
    return true;
  }

  // Every node is a neighbour over the universal role, itself included.
  std::vector<int> neighbors(const State& s, int x, int role) {
    if (cl_.universal(role)) {
      std::vector<int> all;
      for (int y = 0; y < static_cast<int>(s.nodes.size()); ++y)
        if (live(s, y)) all.push_back(y);
      return all;
    }
    const int inv = cl_.inverse_role(role);
    std::set<int> out;
    for (const auto& e : s.edges) {
      if (e.from == x && e.role == role) out.insert(e.to);
      if (e.to == x && e.role == inv) out.insert(e.from);
    }
    return {out.begin(), out.end()};
  }

  // Identifies two nodes. Returns false on a clash (they were asserted
  // distinct).
  bool merge(State& s, int a, int b) {
    a = find(s, a);
    b = find(s, b);
    if (a == b) return true;
    if (is_distinct(s, a, b)) return false;
    tick();
    // Nodes standing for individuals survive; otherwise the older node.
    int into = std::min(a, b), from = std::max(a, b);
    if (s.nodes[from].tags.size() && s.nodes[into].tags.empty()) std::swap(into, from);
    Node& src = s.nodes[from];
    Node& dst = s.nodes[into];
    dst.label.insert(src.label.begin(), src.label.end());
    dst.tags.insert(src.tags.begin(), src.tags.end());
    dst.fired.insert(src.fired.begin(), src.fired.end());
    if (dst.parent == from) dst.parent = src.parent;
    src.merged_into = into;
    for (auto& n : s.nodes)
      if (n.parent == from) n.parent = into;
    for (auto& e : s.edges) {
      if (e.from == from) e.from = into;
      if (e.to == from) e.to = into;
    }
    std::set<std::pair<int, int>> distinct;
    for (auto [p, q] : s.distinct) {
      if (p == from) p = into;
      if (q == from) q = into;
      if (p == q) return false;
      distinct.insert({std::min(p, q), std::max(p, q)});
    }
    s.distinct = std::move(distinct);
    return true;
  }

  // Applies the non-branching, non-generating rules to a fixpoint. Returns
  // false on a clash.
  bool saturate(State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < static_cast<int>(s.nodes.size()); ++x) {
        if (!live(s, x)) continue;
        for (int g : s.global) changed |= add(s, x, g);
        const std::vector<int> label(s.nodes[x].label.begin(), s.nodes[x].label.end());
        for (int c : label) {
          if (!live(s, x)) break;
          const Entry& e = cl_[c];
          switch (e.kind) {
            case CK::Bottom: return false;
            case CK::Name:
              if (has(s, x, cl_.negation(c))) return false;
              break;
            case CK::Not: {
              const Entry& inner = cl_[e.kids[0]];
              if (inner.kind == CK::OneOf && s.nodes[x].tags.count(inner.symbol)) return false;
              if (has(s, x, e.kids[0])) return false;
              break;
            }
            case CK::OneOf: {
              const int rep = find(s, s.nominal[e.symbol]);
              if (rep != x) {
                if (!merge(s, x, rep)) return false;
                changed = true;
              }
              break;
            }
            case CK::And:
              for (int k : e.kids) changed |= add(s, x, k);
              break;
            case CK::ForAll:
              if (cl_.universal(e.role)) {
                if (s.global.insert(e.kids[0]).second) changed = true;
              } else if (!cl_.empty_role(e.role)) {
                for (int y : neighbors(s, x, e.role)) changed |= add(s, y, e.kids[0]);
              }
              break;
            case CK::Exists:
              if (cl_.empty_role(e.role)) return false;
              break;
            case CK::AtLeast:
              if (e.n > 0 && cl_.empty_role(e.role)) return false;
              break;
            case CK::AtMost: {
              if (cl_.empty_role(e.role)) break;
              std::vector<int> ys;
              for (int y : neighbors(s, x, e.role))
                if (has(s, y, e.kids[0])) ys.push_back(y);
              if (ys.size() <= e.n) break;
              bool mergeable = false;
              for (std::size_t i = 0; i < ys.size() && !mergeable; ++i)
                for (std::size_t j = i + 1; j < ys.size() && !mergeable; ++j)
                  mergeable = !is_distinct(s, ys[i], ys[j]);
              if (!mergeable) return false;
              break;
            }
            default: break;
          }
        }
      }
    }
    return true;
  }

  // First applicable branching rule: disjunction, then choose, then merge.
  std::vector<Alternative> branch(State& s) {
    const int count = static_cast<int>(s.nodes.size());
    for (int x = 0; x < count; ++x) {
      if (!live(s, x)) continue;
      for (int c : s.nodes[x].label) {
        const Entry& e = cl_[c];
        if (e.kind != CK::Or) continue;
        bool done = false;
        for (int k : e.kids) done = done || has(s, x, k);
        if (done) continue;
        std::vector<Alternative> alts;
        for (int k : e.kids) alts.push_back({Alternative::Kind::Add, x, k});
        return alts;
      }
    }
    for (int x = 0; x < count; ++x) {
      if (!live(s, x)) continue;
      for (int c : s.nodes[x].label) {
        const Entry& e = cl_[c];
        if (e.kind != CK::AtMost || cl_.empty_role(e.role)) continue;
        const int filler = e.kids[0];
        const int neg = cl_.negation(filler);
        for (int y : neighbors(s, x, e.role)) {
          if (has(s, y, filler) || has(s, y, neg)) continue;
          return {{Alternative::Kind::Add, y, filler}, {Alternative::Kind::Add, y, neg}};
        }
      }
    }
    for (int x = 0; x < count; ++x) {
      if (!live(s, x)) continue;
      for (int c : s.nodes[x].label) {
        const Entry& e = cl_[c];
        if (e.kind != CK::AtMost || cl_.empty_role(e.role)) continue;
        std::vector<int> ys;
        for (int y : neighbors(s, x, e.role))
          if (has(s, y, e.kids[0])) ys.push_back(y);
        if (ys.size() <= e.n) continue;
        std::vector<Alternative> alts;
        for (std::size_t i = 0; i < ys.size(); ++i)
          for (std::size_t j = i + 1; j < ys.size(); ++j)
            if (!is_distinct(s, ys[i], ys[j])) alts.push_back({Alternative::Kind::Merge, ys[i], ys[j]});
        return alts;
      }
    }
    return {};
  }

  // Roles on the edges from parent p to child x, seen from p.
  std::set<int> edge_roles(const State& s, int p, int x) {
    std::set<int> out;
    for (const auto& e : s.edges) {
      if (e.from == p && e.to == x) out.insert(e.role);
      if (e.from == x && e.to == p) out.insert(cl_.inverse_role(e.role));
    }
    return out;
  }

  // Pairwise ancestor blocking. blocker[x] >= 0 for directly blocked nodes,
  // -2 for nodes below a blocked node, -1 otherwise.
  std::vector<int> blocking(const State& s) {
    const int count = static_cast<int>(s.nodes.size());
    std::vector<int> status(count, -1);
    std::vector<bool> known(count, false);
    auto compute = [&](auto&& self, int x) -> int {
      if (known[x]) return status[x];
      known[x] = true;
      const Node& n = s.nodes[x];
      if (n.parent < 0 || !n.tags.empty()) return status[x] = -1;
      if (self(self, n.parent) != -1) return status[x] = -2;
      const auto roles = edge_roles(s, n.parent, x);
      for (int y = n.parent; y >= 0 && s.nodes[y].parent >= 0; y = s.nodes[y].parent) {
        const Node& m = s.nodes[y];
        if (m.label == n.label && s.nodes[m.parent].label == s.nodes[n.parent].label &&
            edge_roles(s, m.parent, y) == roles)
          return status[x] = y;
      }
      return status[x] = -1;
    };
    for (int x = 0; x < count; ++x)
      if (live(s, x)) compute(compute, x);
    return status;
  }

  // Expands the first node that still needs successors. Returns false when
  // nothing is left to generate.
  bool generate(State& s) {
    const auto blocked = blocking(s);
    const int count = static_cast<int>(s.nodes.size());
    for (int x = 0; x < count; ++x) {
      if (!live(s, x) || blocked[x] != -1) continue;
      const std::vector<int> label(s.nodes[x].label.begin(), s.nodes[x].label.end());
      for (int c : label) {
        const Entry& e = cl_[c];
        if (e.kind == CK::Exists) {
          const int filler = e.kids[0];
          if (cl_.universal(e.role)) {
            if (s.global_fired.count(c)) continue;
            bool witnessed = false;
            for (int y = 0; y < count && !witnessed; ++y) witnessed = live(s, y) && has(s, y, filler);
            s.global_fired.insert(c);
            if (witnessed) continue;
            const int y = new_node(s, -1);
            add(s, y, filler);
            return true;
          }
          bool witnessed = false;
          for (int y : neighbors(s, x, e.role)) witnessed = witnessed || has(s, y, filler);
          if (witnessed) continue;
          const int y = new_node(s, x);
          s.edges.push_back({e.role, x, y});
          add(s, y, filler);
          return true;
        }
        if (e.kind == CK::AtLeast && e.n > 0) {
          const bool global = cl_.universal(e.role);
          if (global ? s.global_fired.count(c) != 0 : s.nodes[x].fired.count(c) != 0) continue;
          std::vector<int> ys;
          for (unsigned i = 0; i < e.n; ++i) {
            const int y = new_node(s, global ? -1 : x);
            if (!global) s.edges.push_back({e.role, x, y});
            add(s, y, e.kids[0]);
            ys.push_back(y);
          }
          for (std::size_t i = 0; i < ys.size(); ++i)
            for (std::size_t j = i + 1; j < ys.size(); ++j) s.distinct.insert({ys[i], ys[j]});
          if (global)
            s.global_fired.insert(c);
          else
            s.nodes[x].fired.insert(c);
          return true;
        }
      }
    }
    return false;
  }

  std::optional<Interpretation> search(State s) {
    for (;;) {
      if (!saturate(s)) return std::nullopt;
      auto alts = branch(s);
      if (!alts.empty()) {
        for (const auto& alt : alts) {
          State child = s;
          tick();
          bool ok = true;
          if (alt.kind == Alternative::Kind::Add)
            add(child, alt.node, alt.value);
          else
            ok = merge(child, alt.node, alt.value);
          if (!ok) continue;
          if (auto model = search(std::move(child))) return model;
        }
        return std::nullopt;
      }
      if (generate(s)) continue;
      return build_model(s);
    }
  }

  Interpretation build_model(const State& s) {
    const auto blocked = blocking(s);
    const int count = static_cast<int>(s.nodes.size());
    std::vector<int> element(count, -1);
    std::vector<int> members;
    for (int x = 0; x < count; ++x) {
      if (live(s, x) && blocked[x] == -1) {
        element[x] = static_cast<int>(members.size());
        members.push_back(x);
      }
    }
    if (members.size() > kMaxDomain) throw Undecided{"model exceeds 64 elements"};
    auto target = [&](int x) -> int {
      if (element[x] >= 0) return element[x];
      if (blocked[x] >= 0) return element[blocked[x]];
      return -1;
    };

    Interpretation model(static_cast<unsigned>(members.size()));
    for (const auto& n : cl_.concept_names()) model.set_concept(n, 0);
    for (const auto& r : cl_.role_names()) model.role(r);
    std::vector<ElementSet> concepts(cl_.concept_names().size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int c : s.nodes[members[i]].label)
        if (cl_[c].kind == CK::Name) concepts[cl_[c].symbol] |= ElementSet{1} << i;
    for (std::size_t k = 0; k < concepts.size(); ++k) model.set_concept(cl_.concept_names()[k], concepts[k]);
    for (const auto& e : s.edges) {
      if (!live(s, e.from) || !live(s, e.to)) continue;
      if (element[e.from] < 0 && element[e.to] < 0) continue;
      const int u = target(e.from), v = target(e.to);
      if (u < 0 || v < 0) continue;
      const RoleExpr& r = cl_.role(e.role);
      if (r.kind() == RoleExpr::Kind::Name)
        model.role(r.name()).add(u, v);
      else if (r.kind() == RoleExpr::Kind::Inverse)
        model.role(r.name()).add(v, u);
    }
    for (std::size_t a = 0; a < cl_.individuals().size(); ++a)
      model.set_individual(cl_.individuals()[a], static_cast<unsigned>(element[find(s, s.nominal[a])]));

    if (!verify(s, members, model)) throw Undecided{"completion graph does not fold into a finite model"};
    return model;
  }

  // Every label concept must be satisfied by the folded graph, reading
  // extensions off the labels.
  bool verify(const State& s, const std::vector<int>& members, const Interpretation& model) {
    const unsigned size = model.domain_size;
    auto successors = [&](int role, unsigned x) -> ElementSet {
      const RoleExpr& r = cl_.role(role);
      switch (r.kind()) {
        case RoleExpr::Kind::Universal: return full_set(size);
        case RoleExpr::Kind::Empty: return 0;
        case RoleExpr::Kind::Name: return model.role_ext.at(r.name()).successors(x);
        case RoleExpr::Kind::Inverse: {
          const auto& rel = model.role_ext.at(r.name());
          ElementSet out = 0;
          for (unsigned y = 0; y < size; ++y)
            if (rel.has(y, x)) out |= ElementSet{1} << y;
          return out;
        }
      }
      return 0;
    };
    auto with = [&](int c) {
      ElementSet out = 0;
      for (unsigned i = 0; i < size; ++i)
        if (s.nodes[members[i]].label.count(c)) out |= ElementSet{1} << i;
      return out;
    };
    for (unsigned x = 0; x < size; ++x) {
      const Node& n = s.nodes[members[x]];
      for (int c : n.label) {
        const Entry& e = cl_[c];
        switch (e.kind) {
          case CK::Bottom: return false;
          case CK::OneOf:
            if (model.individual_ext.at(cl_.individuals()[e.symbol]) != x) return false;
            break;
          case CK::Not: {
            const Entry& inner = cl_[e.kids[0]];
            if (inner.kind == CK::OneOf && model.individual_ext.at(cl_.individuals()[inner.symbol]) == x)
              return false;
            if (inner.kind == CK::Name && n.label.count(e.kids[0])) return false;
            break;
          }
          case CK::And:
            for (int k : e.kids)
              if (!n.label.count(k)) return false;
            break;
          case CK::Or: {
            bool any = false;
            for (int k : e.kids) any = any || n.label.count(k);
            if (!any) return false;
            break;
          }
          case CK::Exists:
            if ((successors(e.role, x) & with(e.kids[0])) == 0) return false;
            break;
          case CK::ForAll:
            if ((successors(e.role, x) & ~with(e.kids[0])) != 0) return false;
            break;
          case CK::AtLeast:
            if (cardinality(successors(e.role, x) & with(e.kids[0])) < e.n) return false;
            break;
          case CK::AtMost: {
            const ElementSet succ = successors(e.role, x);
            const ElementSet pos = with(e.kids[0]);
            const ElementSet neg = with(cl_.negation(e.kids[0]));
            if ((succ & ~(pos | neg)) != 0) return false;
            if (cardinality(succ & pos) > e.n) return false;
            break;
          }
          default: break;
        }
      }
    }
    return true;
  }

  Closure& cl_;
  Budget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t steps_ = 0;
};

}  // namespace tableau_detail

// Decides satisfiability of a concept in negation normal form.
inline SatResult is_satisfiable(const ConceptExpr& c, const Budget& budget = {}) {
  tableau_detail::Closure closure;
  return tableau_detail::Tableau(closure, budget).run(c);
}

}  // namespace locality
