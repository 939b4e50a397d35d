#include <sstream>

#include "kedl/tableau.hpp"
#include "tableau.hpp"

namespace kedl {

SatResult is_satisfiable(const Concept& e, const KnowledgeBase& kb, const TableauOptions& opts) {
  check_sort(e, kb.sig);
  return detail::run_tableau(kb, e, opts);
}

SatResult is_consistent(const KnowledgeBase& kb, const TableauOptions& opts) {
  return detail::run_tableau(kb, std::nullopt, opts);
}

bool subsumes(const KnowledgeBase& kb, const Concept& sub, const Concept& sup, const TableauOptions& opts) {
  const Sort a = check_sort(sub, kb.sig);
  const Sort b = check_sort(sup, kb.sig);
  if (a != b)
    throw SortError(std::nullopt, std::string(to_string(a)), std::string(to_string(b)),
                    "subsumption between concepts of different sorts");
  return !is_sat(is_satisfiable(Concept::conjunction(sub, Concept::negation(sup)), kb, opts));
}

bool instance_of(const KnowledgeBase& kb, const std::string& individual, const Concept& e,
                 const TableauOptions& opts) {
  auto s = kb.sig.individual_sort(individual);
  if (!s)
    throw SortError(std::nullopt, "declared individual", "undeclared name",
                    "undeclared individual '" + individual + "'");
  const Sort c = check_sort(e, kb.sig);
  if (c != *s)
    throw SortError(std::nullopt, std::string(to_string(c)), std::string(to_string(*s)),
                    std::string(to_string(*s)) + " individual '" + individual + "' checked against " +
                        std::string(to_string(c)) + " concept");
  KnowledgeBase extended = kb;
  extended.abox.emplace_back(ConceptAssertion{Concept::negation(e), individual});
  return !is_sat(is_consistent(extended, opts));
}

namespace {

Hierarchy order(const KnowledgeBase& kb, Sort sort, const TableauOptions& opts) {
  const auto atoms = kb.sig.atoms(sort);
  const std::size_t n = atoms.size();
  std::vector<std::vector<bool>> sub(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sub[i][j] = i == j || subsumes(kb, Concept::atom(atoms[i], sort), Concept::atom(atoms[j], sort), opts);
    }
  }
  Hierarchy h;
  std::vector<int> cell_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (cell_of[i] >= 0) continue;
    cell_of[i] = static_cast<int>(h.cells.size());
    h.cells.push_back({atoms[i]});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cell_of[j] < 0 && sub[i][j] && sub[j][i]) {
        cell_of[j] = cell_of[i];
        h.cells.back().push_back(atoms[j]);
      }
    }
  }
  const std::size_t m = h.cells.size();
  std::vector<std::size_t> head(m);
  for (std::size_t i = n; i-- > 0;) head[cell_of[i]] = i;
  h.below.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) h.below[a][b] = sub[head[a]][head[b]];
  h.parents.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !h.below[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < m && direct; ++c)
        if (c != a && c != b && h.below[a][c] && h.below[c][b]) direct = false;
      if (direct) h.parents[a].push_back(static_cast<int>(b));
    }
  }
  return h;
}

}  // namespace

Classification classify(const KnowledgeBase& kb, const TableauOptions& opts) {
  if (!is_sat(is_consistent(kb, opts))) throw KbError("knowledge base is inconsistent; no hierarchy");
  return {order(kb, Sort::Object, opts), order(kb, Sort::Attribute, opts)};
}

std::string format_trace(const std::vector<TraceStep>& trace) {
  std::ostringstream out;
  for (const auto& s : trace) out << s.rule << ' ' << s.node << ' ' << s.concept_text << '\n';
  return out.str();
}

}  // namespace kedl
