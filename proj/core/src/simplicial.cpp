#include "orbtop/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "orbtop/errors.hpp"

namespace orbtop {

void SimplicialComplex::add_vertex(const std::string& a) { vertices.insert(a); }

void SimplicialComplex::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw std::invalid_argument("edge repeats vertex '" + a + "'");
  std::array<std::string, 2> e{a, b};
  std::sort(e.begin(), e.end());
  vertices.insert(a);
  vertices.insert(b);
  edges.insert(std::move(e));
}

void SimplicialComplex::add_triangle(const std::string& a, const std::string& b,
                                     const std::string& c) {
  if (a == b || b == c || a == c)
    throw std::invalid_argument("triangle repeats a vertex");
  add_edge(a, b);
  add_edge(b, c);
  add_edge(a, c);
  std::array<std::string, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  triangles.insert(std::move(t));
}

FiniteSlice full_slice(const PresentationComplex& X) {
  FiniteSlice s;
  s.generators = X.generator_indices();
  for (const Integer& i : X.cell_indices()) s.cells.push_back(X.relator(i));
  return s;
}

FiniteSlice closure_slice(const PresentationComplex& X, const ClosedSet& S) {
  check_closed(X.function(), S);
  FiniteSlice s;
  s.generators = S.elements;
  for (const Integer& i : S.elements) s.cells.push_back(X.relator(i));
  return s;
}

namespace {

std::string gen_tag(const Integer& g) { return "a" + g.get_str(); }

}  // namespace

SimplicialComplex presentation_to_simplicial(const FiniteSlice& slice) {
  SimplicialComplex K;
  const std::string p = "p";
  K.add_vertex(p);

  std::set<Integer> known_gens(slice.generators.begin(), slice.generators.end());
  // Each generator circle is subdivided into the boundary of a square:
  // p - Q1 - M - Q2 - p, where M is the circle's first-subdivision midpoint
  // and Q1/Q2 are the second-subdivision midpoints of its two halves.
  for (const Integer& g : slice.generators) {
    std::string tag = gen_tag(g);
    K.add_edge(p, "Q1." + tag);
    K.add_edge("Q1." + tag, "M." + tag);
    K.add_edge("M." + tag, "Q2." + tag);
    K.add_edge("Q2." + tag, p);
  }

  for (const RelatorCell& cell : slice.cells) {
    if (cell.word.empty()) throw EmptyRelator(cell.index);
    const std::size_t n = cell.word.size();
    const std::string r = "r" + cell.index.get_str();
    const std::string C = "C." + r;
    auto rho = [&r](std::size_t j) { return "rho." + r + "." + std::to_string(j); };
    auto sig = [&r](std::size_t j) { return "sig." + r + "." + std::to_string(j); };

    for (std::size_t j = 0; j < n; ++j) {
      const Letter& l = cell.word[j];
      if (!known_gens.count(l.gen))
        throw std::logic_error("relator letter outside the slice generators");
      std::string tag = gen_tag(l.gen);
      std::string M = "M." + tag;
      // Traversing the circle positively passes Q1 before M; an inverted
      // letter passes Q2 first.
      std::string q_first = (l.inverse ? "Q2." : "Q1.") + tag;
      std::string q_second = (l.inverse ? "Q1." : "Q2.") + tag;
      std::string rho_j = rho(j);
      std::string rho_next = rho((j + 1) % n);
      std::string sig_j = sig(j);
      std::string bA = "ba." + r + "." + std::to_string(j);
      std::string bB = "bb." + r + "." + std::to_string(j);

      // First-subdivision triangle (C, corner_j, M), coned from bA. Its
      // edges' second-subdivision midpoints: rho_j on the radius,
      // q_first on the boundary arc, sig_j on the spoke.
      K.add_triangle(bA, C, rho_j);
      K.add_triangle(bA, rho_j, p);
      K.add_triangle(bA, p, q_first);
      K.add_triangle(bA, q_first, M);
      K.add_triangle(bA, M, sig_j);
      K.add_triangle(bA, sig_j, C);

      // First-subdivision triangle (C, M, corner_{j+1}), coned from bB.
      K.add_triangle(bB, C, sig_j);
      K.add_triangle(bB, sig_j, M);
      K.add_triangle(bB, M, q_second);
      K.add_triangle(bB, q_second, p);
      K.add_triangle(bB, p, rho_next);
      K.add_triangle(bB, rho_next, C);
    }
  }
  return K;
}

SimplicialPresentation simplicial_to_presentation(const SimplicialComplex& K) {
  SimplicialPresentation out;
  if (K.vertices.empty()) {
    out.presentation = make_presentation(0, {});
    return out;
  }

  // Deterministic BFS spanning tree from the smallest vertex label.
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : K.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());

  const std::string& root = *K.vertices.begin();
  std::set<std::string> visited{root};
  std::set<std::array<std::string, 2>> tree;
  std::deque<std::string> frontier{root};
  while (!frontier.empty()) {
    std::string v = std::move(frontier.front());
    frontier.pop_front();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const std::string& w : it->second) {
      if (visited.insert(w).second) {
        std::array<std::string, 2> e{v, w};
        std::sort(e.begin(), e.end());
        tree.insert(std::move(e));
        frontier.push_back(w);
      }
    }
  }
  if (visited.size() != K.vertices.size()) {
    for (const std::string& v : K.vertices)
      if (!visited.count(v)) throw Disconnected(root, v);
  }

  // Non-tree edges become generators, numbered in sorted edge order.
  std::map<std::array<std::string, 2>, int> gen_of;
  for (const auto& e : K.edges) {
    if (tree.count(e)) {
      out.tree_edges.push_back(e);
      continue;
    }
    gen_of.emplace(e, static_cast<int>(gen_of.size()) + 1);
    out.generator_edges.push_back(e);
  }

  // Each triangle (a < b < c) reads off the loop a -> b -> c -> a; tree
  // edges contribute nothing, a non-tree edge contributes its generator,
  // inverted when traversed against the (smaller, larger) orientation.
  std::vector<Word> relators;
  for (const auto& t : K.triangles) {
    Word w;
    auto step = [&](const std::string& x, const std::string& y) {
      std::array<std::string, 2> e{x, y};
      bool forward = x < y;
      if (!forward) std::swap(e[0], e[1]);
      auto it = gen_of.find(e);
      if (it == gen_of.end()) return;  // tree edge
      Letter l;
      l.gen = it->second;
      l.inverse = !forward;
      w.push_back(std::move(l));
    };
    step(t[0], t[1]);
    step(t[1], t[2]);
    step(t[2], t[0]);
    relators.push_back(std::move(w));
  }
  out.presentation =
      make_presentation(static_cast<int>(gen_of.size()), relators);
  return out;
}

Integer euler_characteristic(const SimplicialComplex& K) {
  return Integer(K.vertices.size()) - Integer(K.edges.size()) +
         Integer(K.triangles.size());
}

Integer euler_characteristic(const FiniteSlice& slice) {
  return Integer(1) - Integer(slice.generators.size()) +
         Integer(slice.cells.size());
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& K) {
  ChainComplex C;
  std::map<std::string, std::size_t> vrow;
  for (const std::string& v : K.vertices) {
    vrow.emplace(v, C.basis0.size());
    C.basis0.push_back(v);
  }
  std::map<std::array<std::string, 2>, std::size_t> erow;
  C.boundary1.rows = C.basis0.size();
  for (const auto& e : K.edges) {
    erow.emplace(e, C.basis1.size());
    C.basis1.push_back(e[0] + "|" + e[1]);
    std::vector<std::pair<std::size_t, Integer>> col{{vrow.at(e[0]), Integer(-1)},
                                                     {vrow.at(e[1]), Integer(1)}};
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    C.boundary1.columns.push_back(std::move(col));
  }
  C.boundary1.cols = C.basis1.size();
  C.boundary2.rows = C.basis1.size();
  for (const auto& t : K.triangles) {
    C.basis2.push_back(t[0] + "|" + t[1] + "|" + t[2]);
    std::vector<std::pair<std::size_t, Integer>> col{
        {erow.at({t[1], t[2]}), Integer(1)},
        {erow.at({t[0], t[2]}), Integer(-1)},
        {erow.at({t[0], t[1]}), Integer(1)}};
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    C.boundary2.columns.push_back(std::move(col));
  }
  C.boundary2.cols = C.basis2.size();
  return C;
}

ChainComplex presentation_chain_complex(const FinitePresentation& p) {
  ChainComplex C;
  C.basis0 = {"pt"};
  for (int g = 1; g <= p.generator_count; ++g)
    C.basis1.push_back("a" + std::to_string(g));
  C.boundary1.rows = 1;
  C.boundary1.cols = C.basis1.size();
  C.boundary1.columns.assign(C.basis1.size(), {});
  C.boundary2.rows = C.basis1.size();
  std::size_t cell = 0;
  for (const std::vector<int>& rel : p.relators) {
    ++cell;
    C.basis2.push_back("r" + std::to_string(cell));
    std::map<int, Integer> sums;
    for (int l : rel) sums[std::abs(l)] += (l > 0 ? 1 : -1);
    std::vector<std::pair<std::size_t, Integer>> col;
    for (const auto& [g, sum] : sums)
      if (sgn(sum) != 0) col.emplace_back(static_cast<std::size_t>(g - 1), sum);
    C.boundary2.columns.push_back(std::move(col));
  }
  C.boundary2.cols = C.basis2.size();
  return C;
}

std::string export_simplicial(const SimplicialComplex& K) {
  std::ostringstream out;
  for (const std::string& v : K.vertices) out << "v " << v << '\n';
  for (const auto& e : K.edges) out << "e " << e[0] << ' ' << e[1] << '\n';
  for (const auto& t : K.triangles)
    out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

SimplicialComplex parse_simplicial(const std::string& text) {
  SimplicialComplex K;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head, a, b, c, extra;
    if (!(ls >> head)) continue;
    try {
      if (head == "v") {
        if (!(ls >> a)) throw std::invalid_argument("v needs one label");
        K.add_vertex(a);
      } else if (head == "e") {
        if (!(ls >> a >> b)) throw std::invalid_argument("e needs two labels");
        K.add_edge(a, b);
      } else if (head == "t") {
        if (!(ls >> a >> b >> c))
          throw std::invalid_argument("t needs three labels");
        K.add_triangle(a, b, c);
      } else {
        throw std::invalid_argument("expected v, e, or t, got '" + head + "'");
      }
      if (ls >> extra)
        throw std::invalid_argument("trailing text '" + extra + "'");
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, 1, e.what());
    }
  }
  return K;
}

}  // namespace orbtop
