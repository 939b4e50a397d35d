#include "search.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "kedl/semantics.hpp"

namespace kedl::detail {

namespace {

using Mask = std::uint32_t;
using K = Concept::Kind;

constexpr int kUnknown = -2;
constexpr int kNone = -1;

// Elements certainly in (must) and possibly in (may) an extension, over all
// completions of the current partial interpretation.
struct Tri {
  Mask must = 0;
  Mask may = 0;
};

struct Node {
  K kind;
  Sort sort;
  int atom = -1;  // primitive atom
  int body = -1;  // defined atom: node of its definition
  int role = -1;
  bool inverse = false;
  int a = -1;
  int b = -1;
};

enum class VarKind { Atom, Pair, Row, Individual };
struct Var {
  VarKind kind;
  int index;
  int x = 0;
  int y = 0;
};

struct State {
  std::vector<Mask> atom_val, atom_known;
  std::vector<std::vector<Mask>> pair_val, pair_known;
  std::vector<std::vector<int>> row;
  std::vector<int> ind;
};

enum class Status { True, False, Unknown };

class Search {
 public:
  Search(const SearchProblem& p, std::size_t delta, std::size_t sigma, Functionality mode)
      : p_(p), mode_(mode) {
    size_[0] = delta;
    size_[1] = sigma;
    const Signature& sig = p.kb.sig;
    for (const auto& e : sig.entries()) {
      switch (e.category) {
        case Signature::Category::Atom:
          atom_index_[e.name] = static_cast<int>(atom_sort_.size());
          atom_sort_.push_back(e.sort);
          atom_name_.push_back(e.name);
          break;
        case Signature::Category::Role:
          role_index_[e.name] = static_cast<int>(role_kind_.size());
          role_kind_.push_back(e.kind);
          role_name_.push_back(e.name);
          break;
        case Signature::Category::Individual:
          ind_index_[e.name] = static_cast<int>(ind_sort_.size());
          ind_sort_.push_back(e.sort);
          ind_name_.push_back(e.name);
          break;
      }
    }
    for (const auto& inc : p.kb.inclusions) inclusions_.emplace_back(compile(inc.sub), compile(inc.sup));
    for (const auto& a : p.kb.abox) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a))
        concept_assertions_.emplace_back(compile(ca->expr), ind_index_.at(ca->individual));
    }
    if (p.goal) goal_ = compile(*p.goal);
  }

  std::optional<Interpretation> run() {
    State st;
    st.atom_val.assign(atom_sort_.size(), 0);
    st.atom_known.assign(atom_sort_.size(), 0);
    st.pair_val.resize(role_kind_.size());
    st.pair_known.resize(role_kind_.size());
    st.row.resize(role_kind_.size());
    for (std::size_t r = 0; r < role_kind_.size(); ++r) {
      const std::size_t from = size(source_sort(role_kind_[r]));
      if (functional(static_cast<int>(r))) {
        st.row[r].assign(from, kUnknown);
      } else {
        st.pair_val[r].assign(from, 0);
        st.pair_known[r].assign(from, 0);
      }
    }
    st.ind.assign(ind_sort_.size(), -1);
    if (!dfs(st)) return std::nullopt;
    return complete(*found_);
  }

 private:
  std::size_t size(Sort s) const { return size_[s == Sort::Object ? 0 : 1]; }
  Mask full(Sort s) const { return static_cast<Mask>((std::uint64_t{1} << size(s)) - 1); }
  bool functional(int r) const {
    return role_kind_[r] == RoleKind::Cross && mode_ != Functionality::Unrestricted;
  }

  int compile(const Concept& c) {
    if (auto it = memo_.find(c); it != memo_.end()) return it->second;
    Node n{c.kind(), c.sort()};
    switch (c.kind()) {
      case K::Top:
      case K::Bot:
        break;
      case K::Atom:
        if (const Definition* d = p_.kb.definition_of(c.name()))
          n.body = compile(d->body);
        else
          n.atom = atom_index_.at(c.name());
        break;
      case K::Not:
        n.a = compile(c.operand());
        break;
      case K::Exists:
      case K::Forall:
        n.role = role_index_.at(c.role().name);
        n.inverse = c.role().kind == RoleKind::CrossInverse;
        n.a = compile(c.operand());
        break;
      default:
        n.a = compile(c.left());
        n.b = compile(c.right());
    }
    nodes_.push_back(n);
    const int id = static_cast<int>(nodes_.size()) - 1;
    memo_.emplace(c, id);
    return id;
  }

  // Edges of role r leaving element x of the role's source domain.
  Tri edges(const State& st, int r, int x) const {
    const Mask tgt = full(target_sort(role_kind_[r]));
    if (functional(r)) {
      const int v = st.row[r][x];
      if (v == kUnknown) return {0, tgt};
      if (v == kNone) return {0, 0};
      return {Mask{1} << v, Mask{1} << v};
    }
    const Mask val = st.pair_val[r][x];
    const Mask known = st.pair_known[r][x];
    return {val & known, (val | ~known) & tgt};
  }

  // Edges of the inverse of cross role r leaving attribute element u.
  Tri inverse_edges(const State& st, int r, int u) const {
    Tri out;
    for (std::size_t x = 0; x < size(Sort::Object); ++x) {
      const Tri e = edges(st, r, static_cast<int>(x));
      if (e.must >> u & 1) out.must |= Mask{1} << x;
      if (e.may >> u & 1) out.may |= Mask{1} << x;
    }
    return out;
  }

  Tri node_edges(const State& st, const Node& n, int x) const {
    return n.inverse ? inverse_edges(st, n.role, x) : edges(st, n.role, x);
  }

  // Variable deciding the edge x -> y of a quantifier node.
  Var edge_var(const Node& n, int x, int y) const {
    const int from = n.inverse ? y : x;
    const int to = n.inverse ? x : y;
    if (functional(n.role)) return {VarKind::Row, n.role, from};
    return {VarKind::Pair, n.role, from, to};
  }

  void evaluate(const State& st, std::vector<Tri>& v) const {
    v.resize(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const Node& n = nodes_[k];
      const Mask f = full(n.sort);
      Tri& out = v[k];
      switch (n.kind) {
        case K::Top:
          out = {f, f};
          break;
        case K::Bot:
          out = {0, 0};
          break;
        case K::Atom:
          if (n.body >= 0) {
            out = v[n.body];
          } else {
            const Mask val = st.atom_val[n.atom], known = st.atom_known[n.atom];
            out = {val & known, (val | ~known) & f};
          }
          break;
        case K::Not:
          out = {~v[n.a].may & f, ~v[n.a].must & f};
          break;
        case K::And:
          out = {v[n.a].must & v[n.b].must, v[n.a].may & v[n.b].may};
          break;
        case K::Or:
          out = {v[n.a].must | v[n.b].must, v[n.a].may | v[n.b].may};
          break;
        case K::Implies:
          out = {(~v[n.a].may | v[n.b].must) & f, (~v[n.a].must | v[n.b].may) & f};
          break;
        case K::Iff: {
          const Tri a = v[n.a], b = v[n.b];
          out = {((a.must & b.must) | (~a.may & ~b.may)) & f, ((a.may & b.may) | (~a.must & ~b.must)) & f};
          break;
        }
        case K::Exists:
        case K::Forall: {
          const Tri c = v[n.a];
          const Mask tgt = full(nodes_[n.a].sort);
          out = {0, 0};
          for (std::size_t x = 0; x < size(n.sort); ++x) {
            const Tri e = node_edges(st, n, static_cast<int>(x));
            const Mask bit = Mask{1} << x;
            if (n.kind == K::Exists) {
              if (e.must & c.must) out.must |= bit;
              if (e.may & c.may) out.may |= bit;
            } else {
              if ((e.may & ~c.must & tgt) == 0) out.must |= bit;
              if ((e.must & ~c.may & tgt) == 0) out.may |= bit;
            }
          }
          break;
        }
      }
    }
  }

  static bool undetermined(const Tri& t, int x) { return !(t.must >> x & 1) && (t.may >> x & 1); }

  // An unassigned variable on which the value of node k at x depends.
  Var find_var(const State& st, const std::vector<Tri>& v, int k, int x) const {
    const Node& n = nodes_[k];
    switch (n.kind) {
      case K::Atom:
        if (n.body >= 0) return find_var(st, v, n.body, x);
        return {VarKind::Atom, n.atom, x};
      case K::Not:
        return find_var(st, v, n.a, x);
      case K::And:
      case K::Or:
      case K::Implies:
      case K::Iff:
        return find_var(st, v, undetermined(v[n.a], x) ? n.a : n.b, x);
      case K::Exists:
      case K::Forall: {
        const Tri e = node_edges(st, n, x);
        const Tri c = v[n.a];
        for (std::size_t y = 0; y < size(nodes_[n.a].sort); ++y) {
          const int yi = static_cast<int>(y);
          if (!(e.may >> y & 1)) continue;
          if (n.kind == K::Exists && !(c.may >> y & 1)) continue;
          if (n.kind == K::Forall && (c.must >> y & 1)) continue;
          if (!(e.must >> y & 1)) return edge_var(n, x, yi);
          if (undetermined(c, yi)) return find_var(st, v, n.a, yi);
        }
        break;
      }
      default:
        break;
    }
    throw std::logic_error("model search: no open variable under an undetermined concept");
  }

  Status check_at(const std::vector<Tri>& v, int k, int x) const {
    if (v[k].must >> x & 1) return Status::True;
    if (!(v[k].may >> x & 1)) return Status::False;
    return Status::Unknown;
  }

  // Status of every constraint; on Unknown, var names one to branch on.
  Status check(const State& st, Var& var) const {
    std::vector<Tri> v;
    evaluate(st, v);
    bool open = false;
    auto note = [&](Var candidate) {
      if (!open) var = candidate;
      open = true;
    };
    if (goal_ >= 0) {
      Status s = check_at(v, goal_, 0);
      if (s == Status::False) return s;
      if (s == Status::Unknown) note(find_var(st, v, goal_, 0));
    }
    for (const auto& [l, r] : inclusions_) {
      const Tri a = v[l], b = v[r];
      if (a.must & ~b.may) return Status::False;
      const Mask pending = a.may & ~b.must;
      if (pending == 0 || open) continue;
      const int x = __builtin_ctz(pending);
      note(find_var(st, v, undetermined(a, x) ? l : r, x));
    }
    for (const auto& [k, ind] : concept_assertions_) {
      const int el = st.ind[ind];
      if (el < 0) {
        note({VarKind::Individual, ind});
        continue;
      }
      if (nodes_[k].sort != ind_sort_[ind]) return Status::False;
      Status s = check_at(v, k, el);
      if (s == Status::False) return s;
      if (s == Status::Unknown && !open) note(find_var(st, v, k, el));
    }
    auto role_status = [&](const RoleAssertion& ra, bool wanted) -> Status {
      const int r = role_index_.at(ra.role);
      const int a = ind_index_.at(ra.subject), b = ind_index_.at(ra.object);
      if (st.ind[a] < 0) {
        note({VarKind::Individual, a});
        return Status::Unknown;
      }
      if (st.ind[b] < 0) {
        note({VarKind::Individual, b});
        return Status::Unknown;
      }
      const Tri e = edges(st, r, st.ind[a]);
      const bool must = e.must >> st.ind[b] & 1, may = e.may >> st.ind[b] & 1;
      if (must == may) return must == wanted ? Status::True : Status::False;
      Node n{K::Exists, source_sort(role_kind_[r])};
      n.role = r;
      note(edge_var(n, st.ind[a], st.ind[b]));
      return Status::Unknown;
    };
    for (const auto& a : p_.kb.abox)
      if (const auto* ra = std::get_if<RoleAssertion>(&a))
        if (role_status(*ra, true) == Status::False) return Status::False;
    for (const auto& ra : p_.absent)
      if (role_status(ra, false) == Status::False) return Status::False;
    return open ? Status::Unknown : Status::True;
  }

  bool dfs(State& st) {
    Var var{VarKind::Atom, 0};
    const Status s = check(st, var);
    if (s == Status::False) return false;
    if (s == Status::True) {
      found_ = st;
      return true;
    }
    switch (var.kind) {
      case VarKind::Atom:
      case VarKind::Pair: {
        for (int value : {1, 0}) {
          State next = st;
          Mask& val = var.kind == VarKind::Atom ? next.atom_val[var.index] : next.pair_val[var.index][var.x];
          Mask& known = var.kind == VarKind::Atom ? next.atom_known[var.index] : next.pair_known[var.index][var.x];
          const int bit = var.kind == VarKind::Atom ? var.x : var.y;
          known |= Mask{1} << bit;
          if (value) val |= Mask{1} << bit;
          if (dfs(next)) return true;
        }
        return false;
      }
      case VarKind::Row: {
        const int n = static_cast<int>(size(target_sort(role_kind_[var.index])));
        for (int value = 0; value <= n; ++value) {
          if (value == n && mode_ == Functionality::ExactlyOne) break;
          State next = st;
          next.row[var.index][var.x] = value == n ? kNone : value;
          if (dfs(next)) return true;
        }
        return false;
      }
      case VarKind::Individual: {
        const int n = static_cast<int>(size(ind_sort_[var.index]));
        for (int value = 0; value < n; ++value) {
          State next = st;
          next.ind[var.index] = value;
          if (dfs(next)) return true;
        }
        return false;
      }
    }
    return false;
  }

  // Unassigned variables take default values; every constraint was already
  // decided, so any completion is a model.
  Interpretation complete(const State& st) const {
    Interpretation i(p_.kb.sig, size_[0], size_[1], mode_);
    for (std::size_t a = 0; a < atom_sort_.size(); ++a) {
      if (p_.kb.definition_of(atom_name_[a])) continue;
      ElementSet& ext = i.atom(atom_name_[a]);
      const Mask m = st.atom_val[a] & st.atom_known[a];
      for (std::size_t x = 0; x < ext.size(); ++x) ext.set(x, m >> x & 1);
    }
    for (std::size_t r = 0; r < role_kind_.size(); ++r) {
      RoleExtension& ext = i.role(role_name_[r]);
      for (std::size_t x = 0; x < ext.rows.size(); ++x) {
        if (functional(static_cast<int>(r))) {
          int v = st.row[r][x];
          if (v == kUnknown) v = mode_ == Functionality::ExactlyOne ? 0 : kNone;
          if (v >= 0) ext.insert(x, static_cast<std::size_t>(v));
        } else {
          const Mask m = st.pair_val[r][x] & st.pair_known[r][x];
          for (std::size_t y = 0; y < ext.rows[x].size(); ++y)
            if (m >> y & 1) ext.insert(x, y);
        }
      }
    }
    for (std::size_t k = 0; k < ind_sort_.size(); ++k)
      i.set_individual(ind_name_[k], {ind_sort_[k], static_cast<std::size_t>(std::max(st.ind[k], 0))});
    for (const auto& name : definition_order(p_.kb))
      i.atom(name) = extension(p_.kb.definition_of(name)->body, i);
    return i;
  }

  const SearchProblem& p_;
  Functionality mode_;
  std::size_t size_[2] = {0, 0};
  std::unordered_map<std::string, int> atom_index_, role_index_, ind_index_;
  std::vector<Sort> atom_sort_, ind_sort_;
  std::vector<std::string> atom_name_, role_name_, ind_name_;
  std::vector<RoleKind> role_kind_;
  std::vector<Node> nodes_;
  std::unordered_map<Concept, int> memo_;
  std::vector<std::pair<int, int>> inclusions_;
  std::vector<std::pair<int, int>> concept_assertions_;
  int goal_ = -1;
  std::optional<State> found_;
};

}  // namespace

std::optional<Interpretation> search_model(const SearchProblem& p, std::size_t delta, std::size_t sigma,
                                           Functionality mode) {
  return Search(p, delta, sigma, mode).run();
}

}  // namespace kedl::detail
