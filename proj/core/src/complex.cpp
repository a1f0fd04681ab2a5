#include "orbtop/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbtop {

std::string kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::P: return "P";
    case ComplexKind::Q: return "Q";
    case ComplexKind::B: return "B";
    case ComplexKind::H: return "H";
  }
  return "?";
}

PresentationComplex PresentationComplex::P(FunctionHandle f) {
  if (!f.valid()) throw std::invalid_argument("P: invalid function handle");
  return PresentationComplex(ComplexKind::P, std::move(f), 0);
}

PresentationComplex PresentationComplex::Q(FunctionHandle f) {
  if (!f.valid()) throw std::invalid_argument("Q: invalid function handle");
  return PresentationComplex(ComplexKind::Q, std::move(f), 0);
}

PresentationComplex PresentationComplex::B(unsigned long n) {
  if (n < 1) throw std::invalid_argument("B(n) requires n >= 1");
  return PresentationComplex(ComplexKind::B, FunctionHandle(), n);
}

PresentationComplex PresentationComplex::H(unsigned long n) {
  if (n < 1) throw std::invalid_argument("H(n) requires n >= 1");
  return PresentationComplex(ComplexKind::H, FunctionHandle(), n);
}

std::string PresentationComplex::describe() const {
  switch (kind_) {
    case ComplexKind::P: return "P " + f_.name();
    case ComplexKind::Q: return "Q " + f_.name();
    case ComplexKind::B: return "B " + std::to_string(n_);
    case ComplexKind::H: return "H " + std::to_string(n_);
  }
  return "?";
}

std::vector<Integer> PresentationComplex::generator_indices() const {
  std::vector<Integer> out;
  if (kind_ == ComplexKind::B) {
    for (unsigned long i = 1; i <= n_ + 1; ++i) out.emplace_back(i);
  } else if (kind_ == ComplexKind::H) {
    for (unsigned long i = 0; i < n_; ++i) out.emplace_back(i);
  } else {
    throw std::logic_error("generator_indices: complex is not finite");
  }
  return out;
}

std::vector<Integer> PresentationComplex::cell_indices() const {
  std::vector<Integer> out;
  if (kind_ == ComplexKind::B) {
    for (unsigned long i = 1; i <= n_; ++i) out.emplace_back(i);
  } else if (kind_ == ComplexKind::H) {
    for (unsigned long i = 0; i < n_; ++i) out.emplace_back(i);
  } else {
    throw std::logic_error("cell_indices: complex is not finite");
  }
  return out;
}

namespace {

// The conjugation relator a_j^{-1} a_i a_j a_i^{-2}; when j = i it reduces
// (freely, then cyclically) to a_i^{-1}.
RelatorWord conjugation_relator(const Integer& i, const Integer& j) {
  if (i == j) return {neg(i)};
  return {neg(j), pos(i), pos(j), neg(i), neg(i)};
}

}  // namespace

RelatorCell PresentationComplex::relator(const Integer& i) const {
  RelatorCell cell;
  cell.index = i;
  switch (kind_) {
    case ComplexKind::P: {
      if (i < 1) throw std::out_of_range("P(f) cells are indexed by positive integers");
      cell.word = conjugation_relator(i, f_(i));
      break;
    }
    case ComplexKind::Q: {
      if (i < 1) throw std::out_of_range("Q(f) cells are indexed by positive integers");
      if (i == 1) {
        cell.word = {pos(Integer(1))};
      } else {
        Integer fi = f_(i);
        if (fi == i) {
          cell.degenerate = true;  // a_i = a_i reduces to the empty word
        } else {
          cell.word = {pos(i), neg(fi)};
        }
      }
      break;
    }
    case ComplexKind::B: {
      if (i < 1 || i > Integer(n_))
        throw std::out_of_range("B(n) cells are indexed 1..n");
      cell.word = conjugation_relator(i, Integer(i + 1));
      break;
    }
    case ComplexKind::H: {
      if (i < 0 || i >= Integer(n_))
        throw std::out_of_range("H(n) cells are indexed 0..n-1");
      Integer j = i + 1;
      if (j == Integer(n_)) j = 0;
      cell.word = conjugation_relator(i, j);
      break;
    }
  }
  return cell;
}

const FunctionHandle& PresentationComplex::function() const {
  if (kind_ != ComplexKind::P && kind_ != ComplexKind::Q)
    throw std::logic_error("function(): complex is not function-derived");
  return f_;
}

unsigned long PresentationComplex::n() const {
  if (!finite()) throw std::logic_error("n(): complex is not a B/H family member");
  return n_;
}

std::pair<Integer, Integer> Graph::edge(const Integer& i) const {
  if (i < 1) throw std::out_of_range("Gamma(f) edges are indexed by positive integers");
  Integer tail = i + 1;
  return {tail, f_(tail)};
}

Graph build_Gamma(FunctionHandle f) {
  if (!f.valid()) throw std::invalid_argument("Gamma: invalid function handle");
  return Graph(std::move(f));
}

bool ClosedSet::contains(const Integer& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

ClosedSet orbit_closure(const FunctionHandle& f, const std::vector<Integer>& seeds,
                        const OrbitBudget& budget) {
  if (seeds.empty()) throw std::invalid_argument("orbit_closure: no seeds");
  std::set<Integer> acc;
  Integer x, next;
  for (const Integer& seed : seeds) {
    if (seed < 1) throw std::invalid_argument("orbit_closure: seeds must be positive");
    x = seed;
    std::uint64_t steps = 0;
    while (!acc.count(x)) {
      if (steps >= budget.max_steps || bit_size(x) > budget.max_value_bits)
        throw BudgetExceeded(seed);
      acc.insert(x);
      f.eval_into(x, next);
      mpz_swap(x.get_mpz_t(), next.get_mpz_t());
      ++steps;
    }
  }
  ClosedSet S;
  S.elements.assign(acc.begin(), acc.end());
  return S;
}

void check_closed(const FunctionHandle& f, const ClosedSet& S) {
  for (const Integer& i : S.elements) {
    Integer fi = f(i);
    if (!S.contains(fi)) throw NotClosed(i, fi);
  }
}

namespace {

std::string gen_label(const Integer& i) { return "a" + i.get_str(); }
std::string cell_label(const Integer& i) { return "r" + i.get_str(); }

// Chain complex of a one-vertex 2-complex: basis1 = generators (all loops,
// so boundary1 = 0), basis2 = the given cells, boundary2 = exponent sums.
ChainComplex one_vertex_chain_complex(const std::vector<Integer>& gens,
                                      const std::vector<RelatorCell>& cells) {
  ChainComplex K;
  K.basis0 = {"pt"};
  std::map<Integer, std::size_t> row_of;
  for (const Integer& g : gens) {
    row_of.emplace(g, K.basis1.size());
    K.basis1.push_back(gen_label(g));
  }
  K.boundary1.rows = 1;
  K.boundary1.cols = K.basis1.size();
  K.boundary1.columns.assign(K.basis1.size(), {});
  K.boundary2.rows = K.basis1.size();
  K.boundary2.cols = cells.size();
  K.boundary2.columns.reserve(cells.size());
  for (const RelatorCell& cell : cells) {
    K.basis2.push_back(cell_label(cell.index));
    std::vector<std::pair<std::size_t, Integer>> col;
    for (const auto& [g, sum] : exponent_sums(cell.word)) {
      auto it = row_of.find(g);
      if (it == row_of.end())
        throw std::logic_error("relator letter outside the generator slice");
      col.emplace_back(it->second, sum);
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    K.boundary2.columns.push_back(std::move(col));
  }
  return K;
}

}  // namespace

ChainComplex truncate(const PresentationComplex& X, const ClosedSet& S) {
  if (X.finite())
    throw std::logic_error("truncate(X, S): use truncate_full for B/H complexes");
  for (const Integer& i : S.elements)
    if (i < 1)
      throw std::invalid_argument("truncation sets contain positive integers only");
  check_closed(X.function(), S);
  std::vector<RelatorCell> cells;
  cells.reserve(S.elements.size());
  for (const Integer& i : S.elements) cells.push_back(X.relator(i));
  return one_vertex_chain_complex(S.elements, cells);
}

ChainComplex truncate_full(const PresentationComplex& X) {
  if (!X.finite())
    throw std::logic_error("truncate_full: complex is not finite; supply a closed set");
  std::vector<RelatorCell> cells;
  for (const Integer& i : X.cell_indices()) cells.push_back(X.relator(i));
  return one_vertex_chain_complex(X.generator_indices(), cells);
}

ChainComplex truncate(const Graph& G, const ClosedSet& S) {
  const FunctionHandle& f = G.function();
  ChainComplex K;
  std::map<Integer, std::size_t> row_of;
  for (const Integer& i : S.elements) {
    row_of.emplace(i, K.basis0.size());
    K.basis0.push_back("v" + i.get_str());
  }
  K.boundary1.rows = K.basis0.size();
  for (const Integer& i : S.elements) {
    if (i < 2) continue;  // v_1 is the tail of no edge
    Integer head = f(i);
    auto it = row_of.find(head);
    if (it == row_of.end()) throw NotClosed(i, head);
    K.basis1.push_back("e" + Integer(i - 1).get_str());
    std::vector<std::pair<std::size_t, Integer>> col;
    std::size_t tail_row = row_of.at(i);
    std::size_t head_row = it->second;
    if (tail_row != head_row) {  // loop edges have zero boundary
      std::pair<std::size_t, Integer> tail_entry{tail_row, Integer(-1)};
      std::pair<std::size_t, Integer> head_entry{head_row, Integer(1)};
      if (head_entry.first < tail_entry.first) std::swap(tail_entry, head_entry);
      col.push_back(std::move(tail_entry));
      col.push_back(std::move(head_entry));
    }
    K.boundary1.columns.push_back(std::move(col));
  }
  K.boundary1.cols = K.basis1.size();
  K.boundary2.rows = K.basis1.size();
  K.boundary2.cols = 0;
  return K;
}

Integer euler_characteristic(const ChainComplex& K) {
  return Integer(K.basis0.size()) - Integer(K.basis1.size()) +
         Integer(K.basis2.size());
}

std::string export_complex(const PresentationComplex& X,
                           const std::vector<Integer>& cells) {
  std::ostringstream out;
  out << "complex " << X.describe() << '\n';
  std::set<Integer> gens;
  std::vector<RelatorCell> rel;
  rel.reserve(cells.size());
  for (const Integer& i : cells) {
    RelatorCell cell = X.relator(i);
    for (const Letter& l : cell.word) gens.insert(l.gen);
    if (!X.finite()) gens.insert(i);  // the generator of the same index
    rel.push_back(std::move(cell));
  }
  if (X.finite())
    for (const Integer& g : X.generator_indices()) gens.insert(g);
  for (const Integer& g : gens) out << "gen " << g << '\n';
  for (const RelatorCell& cell : rel) {
    out << "rel " << cell.index << ":";
    std::string w = format_word(cell.word);
    if (!w.empty()) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

std::string export_graph(const Graph& G, const std::vector<Integer>& edges) {
  std::ostringstream out;
  out << "graph Gamma " << G.function().name() << '\n';
  for (const Integer& i : edges) {
    auto [tail, head] = G.edge(i);
    out << "edge " << i << ": " << tail << ' ' << head << '\n';
  }
  return out.str();
}

}  // namespace orbtop
