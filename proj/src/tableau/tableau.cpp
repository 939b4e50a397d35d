#include "tableau.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "concept_table.hpp"
#include "kedl/semantics.hpp"

namespace kedl::detail {

namespace {

using K = Concept::Kind;
using Label = boost::dynamic_bitset<>;

struct Link {
  int role;
  int other;
  friend bool operator==(const Link&, const Link&) = default;
};

struct TNode {
  Sort sort = Sort::Object;
  Label label;
  int parent = -1;
  RoleRef in_role;
  bool root = false;  // individuals, the query node and domain witnesses
  std::vector<std::string> individuals;
  std::vector<Link> out;  // edges in the role's own direction
  std::vector<Link> in;
};

struct Graph {
  std::vector<TNode> nodes;
};

struct Blocking {
  std::vector<int> blocker;     // direct blocker or -1
  std::vector<bool> indirect;   // some ancestor is blocked

  bool blocked(int n) const { return blocker[n] >= 0 || indirect[n]; }
};

class Engine {
 public:
  Engine(const KnowledgeBase& kb, const TableauOptions& opts) : kb_(kb), opts_(opts), table_(kb) {
    for (const auto& name : kb.sig.roles(RoleKind::ObjObj)) add_role(name, RoleKind::ObjObj);
    for (const auto& name : kb.sig.roles(RoleKind::AttrAttr)) add_role(name, RoleKind::AttrAttr);
    for (const auto& name : kb.sig.roles(RoleKind::Cross)) add_role(name, RoleKind::Cross);
  }

  SatResult run(const std::optional<Concept>& query) {
    for (Sort s : {Sort::Object, Sort::Attribute}) {
      bot_[index(s)] = table_.intern(Concept::bot(s));
      std::optional<Concept> gci;
      for (const auto& inc : kb_.inclusions) {
        if (inc.sub.sort() != s) continue;
        Concept c = to_nnf(Concept::disjunction(Concept::negation(inc.sub), inc.sup));
        gci = gci ? Concept::conjunction(*gci, c) : c;
      }
      if (gci) gci_[index(s)] = table_.intern(*gci);
    }

    Graph g;
    // Individuals sharing an object through one functional cross role are
    // the same element.
    const auto individuals = kb_.sig.entries();
    std::map<std::string, std::string> rep;
    for (const auto& e : individuals)
      if (e.category == Signature::Category::Individual) rep[e.name] = e.name;
    auto find = [&](std::string x) {
      while (rep[x] != x) x = rep[x];
      return x;
    };
    if (opts_.mode != Functionality::Unrestricted) {
      std::map<std::pair<std::string, std::string>, std::string> first;
      for (const auto& a : kb_.abox) {
        const auto* ra = std::get_if<RoleAssertion>(&a);
        if (!ra || kb_.sig.role_kind(ra->role) != RoleKind::Cross) continue;
        auto [it, fresh] = first.emplace(std::make_pair(ra->subject, ra->role), ra->object);
        if (fresh) continue;
        const std::string x = find(it->second), y = find(ra->object);
        if (x == y) continue;
        rep[y] = x;
        merges_.emplace_back(x, y);
        step("merge", -1, y + " into " + x);
      }
    }
    std::map<std::string, int> node_of;
    for (const auto& e : individuals) {
      if (e.category != Signature::Category::Individual) continue;
      const std::string r = find(e.name);
      auto it = node_of.find(r);
      if (it == node_of.end()) {
        it = node_of.emplace(r, new_node(g, e.sort, -1, {}, true)).first;
      }
      g.nodes[it->second].individuals.push_back(e.name);
      ind_node_[e.name] = it->second;
    }
    // Concept assertions are interned first, then written once the table is
    // complete and labels have their final width.
    std::vector<std::pair<int, int>> pending;
    for (const auto& a : kb_.abox) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a))
        pending.emplace_back(ind_node_.at(ca->individual), table_.intern(to_nnf(ca->expr)));
    }
    if (query) {
      query_node_ = new_node(g, query->sort(), -1, {}, true);
      pending.emplace_back(query_node_, table_.intern(to_nnf(*query)));
    }
    for (Sort s : {Sort::Object, Sort::Attribute}) {
      bool present = false;
      for (const auto& n : g.nodes) present = present || n.sort == s;
      if (!present) new_node(g, s, -1, {}, true);
    }
    width_ = table_.size();
    for (auto& n : g.nodes) n.label.resize(width_);
    for (auto [n, id] : pending) add(g, n, id, "init");
    for (const auto& a : kb_.abox) {
      if (const auto* ra = std::get_if<RoleAssertion>(&a))
        link(g, ind_node_.at(ra->subject), ind_node_.at(ra->object), role_index_.at(ra->role));
    }

    if (expand(g)) return Satisfiable{witness(*found_, query), merges_};
    if (trace_.empty() || trace_.back().rule != "clash") trace_.push_back(last_clash_);
    return Unsatisfiable{std::move(trace_)};
  }

 private:
  static int index(Sort s) { return s == Sort::Object ? 0 : 1; }

  void add_role(const std::string& name, RoleKind kind) {
    role_index_[name] = static_cast<int>(role_kinds_.size());
    role_kinds_.push_back(kind);
    role_names_.push_back(name);
  }

  void step(const std::string& rule, int node, const std::string& text) {
    if (trace_.size() < opts_.trace_limit) trace_.push_back({rule, node, text});
  }

  int new_node(Graph& g, Sort s, int parent, RoleRef in_role, bool root) {
    if (g.nodes.size() >= opts_.node_budget)
      throw ResourceError("completion graph exceeded " + std::to_string(opts_.node_budget) + " nodes");
    TNode n;
    n.sort = s;
    n.label = Label(width_);
    n.parent = parent;
    n.in_role = std::move(in_role);
    n.root = root;
    g.nodes.push_back(std::move(n));
    return static_cast<int>(g.nodes.size()) - 1;
  }

  static void link(Graph& g, int from, int to, int role) {
    Link l{role, to};
    for (const auto& e : g.nodes[from].out)
      if (e == l) return;
    g.nodes[from].out.push_back(l);
    g.nodes[to].in.push_back({role, from});
  }

  bool add(Graph& g, int n, int id, const char* rule) {
    if (g.nodes[n].label.test(id)) return false;
    g.nodes[n].label.set(id);
    step(rule, n, table_[id].concept_.to_string());
    return true;
  }

  // Nodes reachable from n through role (which may be an inverse).
  std::vector<int> neighbours(const Graph& g, int n, const RoleRef& role) const {
    std::vector<int> out;
    const int r = role_index_.at(role.name);
    const auto& links = role.kind == RoleKind::CrossInverse ? g.nodes[n].in : g.nodes[n].out;
    for (const auto& l : links)
      if (l.role == r) out.push_back(l.other);
    return out;
  }

  bool functional(const RoleRef& role) const {
    return role.kind == RoleKind::Cross && opts_.mode != Functionality::Unrestricted;
  }

  Blocking blocking(const Graph& g) const {
    const int n = static_cast<int>(g.nodes.size());
    Blocking b{std::vector<int>(n, -1), std::vector<bool>(n, false)};
    auto blockable = [&](int v) {
      const TNode& node = g.nodes[v];
      return !node.root && node.parent >= 0 && !g.nodes[node.parent].root &&
             node.in_role.kind != RoleKind::CrossInverse;
    };
    for (int v = 0; v < n; ++v) {
      const int p = g.nodes[v].parent;
      if (p >= 0 && b.blocked(p)) {
        b.indirect[v] = true;
        continue;
      }
      if (!blockable(v)) continue;
      const TNode& y = g.nodes[v];
      for (int x = p; x >= 0; x = g.nodes[x].parent) {
        if (!blockable(x)) continue;
        const TNode& xn = g.nodes[x];
        if (xn.in_role == y.in_role && xn.label == y.label &&
            g.nodes[xn.parent].label == g.nodes[p].label) {
          b.blocker[v] = x;
          break;
        }
      }
    }
    return b;
  }

  // Applies the deterministic rules until nothing changes; false on clash.
  bool saturate(Graph& g) {
    bool changed = true;
    while (changed) {
      changed = false;
      const Blocking b = blocking(g);
      for (int n = 0; n < static_cast<int>(g.nodes.size()); ++n) {
        if (b.indirect[n]) continue;
        if (const int gci = gci_[index(g.nodes[n].sort)]; gci >= 0) changed |= add(g, n, gci, "gci");
        for (auto id = g.nodes[n].label.find_first(); id != Label::npos; id = g.nodes[n].label.find_next(id)) {
          const TableEntry& e = table_[static_cast<int>(id)];
          switch (e.kind) {
            case K::And:
              changed |= add(g, n, e.a, "and");
              changed |= add(g, n, e.b, "and");
              break;
            case K::Atom:
            case K::Not:
              if (e.unfolding >= 0) changed |= add(g, n, e.unfolding, e.negated ? "unfold-neg" : "unfold");
              break;
            case K::Forall:
              for (int m : neighbours(g, n, e.role)) changed |= add(g, m, e.a, "all");
              break;
            case K::Exists:
              if (functional(e.role)) {
                auto ns = neighbours(g, n, e.role);
                if (!ns.empty()) changed |= add(g, ns.front(), e.a, "some-functional");
              }
              break;
            default:
              break;
          }
        }
      }
      if (!clash_free(g)) return false;
    }
    return true;
  }

  bool clash_free(const Graph& g) {
    for (int n = 0; n < static_cast<int>(g.nodes.size()); ++n) {
      const Label& l = g.nodes[n].label;
      if (l.test(bot_[index(g.nodes[n].sort)])) {
        clash(n, "bot");
        return false;
      }
      for (auto id = l.find_first(); id != Label::npos; id = l.find_next(id)) {
        const TableEntry& e = table_[static_cast<int>(id)];
        if (e.kind == K::Atom && e.complement >= 0 && l.test(e.complement)) {
          clash(n, e.atom + ", not " + e.atom);
          return false;
        }
      }
    }
    return true;
  }

  void clash(int n, const std::string& text) {
    last_clash_ = {"clash", n, text};
    step("clash", n, text);
  }

  std::optional<std::pair<int, int>> open_disjunction(const Graph& g, const Blocking& b) const {
    for (int n = 0; n < static_cast<int>(g.nodes.size()); ++n) {
      if (b.indirect[n]) continue;
      const Label& l = g.nodes[n].label;
      for (auto id = l.find_first(); id != Label::npos; id = l.find_next(id)) {
        const TableEntry& e = table_[static_cast<int>(id)];
        if (e.kind == K::Or && !l.test(e.a) && !l.test(e.b)) return std::make_pair(n, static_cast<int>(id));
      }
    }
    return std::nullopt;
  }

  // Creates one successor for the first unsatisfied existential (or, in
  // exactly-one mode, missing cross-role successor) of a non-blocked node.
  bool generate(Graph& g, const Blocking& b) {
    for (int n = 0; n < static_cast<int>(g.nodes.size()); ++n) {
      if (b.blocked(n)) continue;
      const Label l = g.nodes[n].label;
      for (auto id = l.find_first(); id != Label::npos; id = l.find_next(id)) {
        const TableEntry& e = table_[static_cast<int>(id)];
        if (e.kind != K::Exists) continue;
        const auto ns = neighbours(g, n, e.role);
        bool satisfied = false;
        for (int m : ns) satisfied = satisfied || g.nodes[m].label.test(e.a);
        if (satisfied || (functional(e.role) && !ns.empty())) continue;
        const int m = new_node(g, target_sort(e.role.kind), n, e.role, false);
        const int r = role_index_.at(e.role.name);
        if (e.role.kind == RoleKind::CrossInverse)
          link(g, m, n, r);
        else
          link(g, n, m, r);
        add(g, m, e.a, "some");
        return true;
      }
      if (opts_.mode == Functionality::ExactlyOne && g.nodes[n].sort == Sort::Object) {
        for (std::size_t r = 0; r < role_kinds_.size(); ++r) {
          if (role_kinds_[r] != RoleKind::Cross) continue;
          const RoleRef role{role_names_[r], RoleKind::Cross};
          if (!neighbours(g, n, role).empty()) continue;
          const int m = new_node(g, Sort::Attribute, n, role, false);
          link(g, n, m, static_cast<int>(r));
          step("total", m, role.name);
          return true;
        }
      }
    }
    return false;
  }

  bool expand(Graph& g) {
    while (true) {
      if (!saturate(g)) return false;
      const Blocking b = blocking(g);
      if (auto choice = open_disjunction(g, b)) {
        const auto [n, id] = *choice;
        const TableEntry& e = table_[id];
        Graph left = g;
        add(left, n, e.a, "or-left");
        if (expand(left)) return true;
        add(g, n, e.b, "or-right");
        continue;
      }
      if (generate(g, b)) continue;
      found_ = std::move(g);
      return true;
    }
  }

  Interpretation witness(const Graph& g, const std::optional<Concept>& query) const {
    const Blocking b = blocking(g);
    const int n = static_cast<int>(g.nodes.size());
    std::vector<std::size_t> element(n, 0);
    std::size_t count[2] = {0, 0};
    for (int v = 0; v < n; ++v)
      if (!b.blocked(v)) element[v] = count[index(g.nodes[v].sort)]++;
    Interpretation i(kb_.sig, count[0], count[1], opts_.mode);
    for (int v = 0; v < n; ++v) {
      if (b.blocked(v)) continue;
      const Label& l = g.nodes[v].label;
      for (auto id = l.find_first(); id != Label::npos; id = l.find_next(id)) {
        const TableEntry& e = table_[static_cast<int>(id)];
        if (e.kind == K::Atom && !kb_.definition_of(e.atom)) i.atom(e.atom).set(element[v]);
      }
      for (const auto& name : g.nodes[v].individuals) i.set_individual(name, {g.nodes[v].sort, element[v]});
      for (const auto& l2 : g.nodes[v].out) {
        int to = l2.other;
        if (b.indirect[to]) continue;
        if (b.blocker[to] >= 0) to = b.blocker[to];
        i.role(role_names_[l2.role]).insert(element[v], element[to]);
      }
    }
    for (const auto& name : definition_order(kb_))
      i.atom(name) = extension(kb_.definition_of(name)->body, i);

    const auto violations = validate_interpretation(i);
    bool ok = violations.empty() && satisfies_kb(i, kb_);
    if (ok && query) ok = extension(*query, i).test(element[query_node_]);
    if (!ok)
      throw std::logic_error("tableau witness failed the model check:\n" + serialize_interpretation(i));
    return i;
  }

  const KnowledgeBase& kb_;
  TableauOptions opts_;
  ConceptTable table_;
  std::size_t width_ = 0;
  int bot_[2] = {-1, -1};
  int gci_[2] = {-1, -1};
  std::unordered_map<std::string, int> role_index_;
  std::vector<RoleKind> role_kinds_;
  std::vector<std::string> role_names_;
  std::map<std::string, int> ind_node_;
  int query_node_ = -1;
  std::vector<std::pair<std::string, std::string>> merges_;
  std::vector<TraceStep> trace_;
  TraceStep last_clash_;
  std::optional<Graph> found_;
};

}  // namespace

SatResult run_tableau(const KnowledgeBase& kb, const std::optional<Concept>& query, const TableauOptions& opts) {
  return Engine(kb, opts).run(query);
}

}  // namespace kedl::detail
