#include "orbtop/coset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orbtop/errors.hpp"

namespace orbtop {

FinitePresentation make_presentation(int generator_count,
                                     const std::vector<Word>& relators) {
  if (generator_count < 0)
    throw std::invalid_argument("generator count must be non-negative");
  FinitePresentation p;
  p.generator_count = generator_count;
  std::size_t cell = 0;
  for (const Word& raw : relators) {
    ++cell;
    Word reduced = cyclic_reduce(raw);
    if (reduced.empty()) {
      p.warnings.push_back("relator " + std::to_string(cell) +
                           " reduces to the empty word; dropped");
      continue;
    }
    std::vector<int> rel;
    rel.reserve(reduced.size());
    for (const Letter& l : reduced) {
      if (l.gen < 1 || l.gen > generator_count)
        throw std::invalid_argument("relator letter " + l.gen.get_str() +
                                    " is outside 1.." +
                                    std::to_string(generator_count));
      int g = static_cast<int>(l.gen.get_ui());
      rel.push_back(l.inverse ? -g : g);
    }
    p.relators.push_back(std::move(rel));
  }
  return p;
}

namespace {

std::vector<int> conjugation_relator_1based(int i, int j) {
  if (i == j) return {-i};
  return {-j, i, j, -i, -i};
}

}  // namespace

FinitePresentation presentation_H(unsigned long n) {
  if (n < 1) throw std::invalid_argument("H(n) requires n >= 1");
  FinitePresentation p;
  p.generator_count = static_cast<int>(n);
  for (unsigned long i = 0; i < n; ++i) {
    unsigned long j = (i + 1) % n;
    p.relators.push_back(conjugation_relator_1based(static_cast<int>(i) + 1,
                                                    static_cast<int>(j) + 1));
  }
  return p;
}

FinitePresentation presentation_B(unsigned long n) {
  if (n < 1) throw std::invalid_argument("B(n) requires n >= 1");
  FinitePresentation p;
  p.generator_count = static_cast<int>(n) + 1;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    p.relators.push_back(conjugation_relator_1based(i, i + 1));
  return p;
}

FinitePresentation presentation_B_killed(unsigned long n) {
  FinitePresentation p = presentation_B(n);
  p.relators.push_back({static_cast<int>(n) + 1});
  return p;
}

FinitePresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int gens = -1;
  std::vector<Word> relators;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;  // blank line
    if (head == "gens") {
      long k;
      if (gens >= 0) throw ParseError(lineno, 1, "duplicate gens declaration");
      if (!(ls >> k) || k < 0)
        throw ParseError(lineno, 1, "gens needs a non-negative count");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, 1, "trailing text after gens count");
      gens = static_cast<int>(k);
    } else if (head == "rel") {
      if (gens < 0)
        throw ParseError(lineno, 1, "rel before the gens declaration");
      std::string rest;
      std::getline(ls, rest);
      try {
        relators.push_back(parse_word(rest));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, 1, e.what());
      }
    } else {
      throw ParseError(lineno, 1, "expected 'gens' or 'rel', got '" + head + "'");
    }
  }
  if (gens < 0) throw ParseError(lineno, 1, "missing gens declaration");
  try {
    return make_presentation(gens, relators);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, 1, e.what());
  }
}

std::string render_presentation(const FinitePresentation& p) {
  std::ostringstream out;
  out << "gens " << p.generator_count << '\n';
  for (const std::vector<int>& rel : p.relators) {
    out << "rel";
    for (int l : rel) out << ' ' << (l > 0 ? '+' : '-') << std::abs(l);
    out << '\n';
  }
  return out.str();
}

// --- Todd-Coxeter ----------------------------------------------------------

namespace {

// Letters +g/-g map to columns 2(g-1) / 2(g-1)+1; inv flips the low bit.
struct Enumerator {
  int ngens;
  int ncols;
  std::uint64_t max_cosets;
  std::vector<std::vector<int>> relators;  // letters as column indices

  std::vector<std::uint32_t> table;   // (1 + rows) * ncols, 0 = undefined
  std::vector<std::uint32_t> parent;  // union-find; parent[c] == c iff live or dead root path
  std::vector<std::uint32_t> queue;   // dead cosets awaiting row transfer
  std::uint64_t total_defined = 0;
  std::uint64_t live = 0;
  bool exhausted = false;

  std::uint32_t& at(std::uint32_t coset, int col) {
    return table[static_cast<std::size_t>(coset) * ncols + col];
  }

  static int inv(int col) { return col ^ 1; }

  std::uint32_t rep(std::uint32_t c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];  // path halving
      c = parent[c];
    }
    return c;
  }

  bool dead(std::uint32_t c) { return rep(c) != c; }

  // 0 on budget exhaustion, else the new coset id.
  std::uint32_t define(std::uint32_t from, int col) {
    if (total_defined >= max_cosets) {
      exhausted = true;
      return 0;
    }
    std::uint32_t fresh = static_cast<std::uint32_t>(parent.size());
    parent.push_back(fresh);
    table.resize(table.size() + ncols, 0);
    ++total_defined;
    ++live;
    at(from, col) = fresh;
    at(fresh, inv(col)) = from;
    return fresh;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller id as representative
    parent[b] = a;
    --live;
    queue.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint32_t gamma = queue[qi];
      for (int x = 0; x < ncols; ++x) {
        std::uint32_t delta = at(gamma, x);
        if (delta == 0) continue;
        at(gamma, x) = 0;
        at(delta, inv(x)) = 0;
        std::uint32_t mu = rep(gamma);
        std::uint32_t nu = rep(delta);
        std::uint32_t mu_x = at(mu, x);
        if (mu_x != 0) {
          merge(nu, mu_x);
        } else {
          std::uint32_t nu_xi = at(nu, inv(x));
          if (nu_xi != 0) {
            merge(mu, nu_xi);
          } else {
            at(mu, x) = nu;
            at(nu, inv(x)) = mu;
          }
        }
      }
    }
  }

  // Traces relator `rel` from alpha, filling gaps (definitions/deductions)
  // and firing coincidences; returns false on budget exhaustion.
  bool scan_and_fill(std::uint32_t alpha, const std::vector<int>& rel) {
    const std::size_t n = rel.size();
    for (;;) {
      std::uint32_t cf = alpha;
      std::size_t pf = 0;
      while (pf < n) {
        std::uint32_t next = at(cf, rel[pf]);
        if (next == 0) break;
        cf = next;
        ++pf;
      }
      if (pf == n) {
        if (cf != alpha) coincidence(cf, alpha);
        return true;
      }
      std::uint32_t cb = alpha;
      std::size_t pb = n;
      while (pb > pf) {
        std::uint32_t prev = at(cb, inv(rel[pb - 1]));
        if (prev == 0) break;
        cb = prev;
        --pb;
      }
      if (pb == pf) {
        if (cf != cb) coincidence(cf, cb);
        return true;
      }
      if (pb == pf + 1) {
        at(cf, rel[pf]) = cb;
        at(cb, inv(rel[pf])) = cf;
        return true;  // the gap closed; the trace is complete
      }
      if (define(cf, rel[pf]) == 0) return false;
    }
  }

  bool run() {
    parent.assign(2, 0);
    parent[1] = 1;
    table.assign(static_cast<std::size_t>(2) * ncols, 0);
    total_defined = 1;
    live = 1;
    for (std::uint32_t current = 1; current < parent.size(); ++current) {
      if (dead(current)) continue;
      for (const std::vector<int>& rel : relators) {
        if (!scan_and_fill(current, rel)) return false;
        if (dead(current)) break;
      }
      if (dead(current)) continue;
      for (int x = 0; x < ncols; ++x)
        if (at(current, x) == 0 && define(current, x) == 0) return false;
    }
    return true;
  }

  // Full soundness scan: the completed table must be consistent and every
  // relator must close at every live coset.
  void verify() {
    for (std::uint32_t c = 1; c < parent.size(); ++c) {
      if (rep(c) != c) continue;
      for (int x = 0; x < ncols; ++x) {
        std::uint32_t d = at(c, x);
        if (d == 0 || rep(d) != d || at(d, inv(x)) != c)
          throw std::logic_error("coset table failed the soundness scan");
      }
      for (const std::vector<int>& rel : relators) {
        std::uint32_t t = c;
        for (int l : rel) t = at(t, l);
        if (t != c)
          throw std::logic_error("relator does not close at a live coset");
      }
    }
  }
};

}  // namespace

EnumerationResult enumerate_cosets(const FinitePresentation& p,
                                   std::uint64_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  if (max_cosets > 0x7fffffffULL)
    throw std::invalid_argument("max_cosets above 2^31 is not supported");
  Enumerator e;
  e.ngens = p.generator_count;
  e.ncols = 2 * p.generator_count;
  e.max_cosets = max_cosets;
  e.relators.reserve(p.relators.size());
  for (const std::vector<int>& rel : p.relators) {
    std::vector<int> cols;
    cols.reserve(rel.size());
    for (int l : rel)
      cols.push_back(l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1);
    e.relators.push_back(std::move(cols));
  }

  EnumerationResult result;
  result.warnings = p.warnings;
  if (e.run()) {
    e.verify();
    result.completed = true;
    result.index = e.live;
  } else {
    result.completed = false;
    result.index = 0;
  }
  result.total_defined = e.total_defined;
  return result;
}

CertifyResult certify_trivial(const FinitePresentation& p,
                              std::uint64_t max_cosets) {
  EnumerationResult r = enumerate_cosets(p, max_cosets);
  CertifyResult c;
  c.index = r.index;
  c.total_defined = r.total_defined;
  c.warnings = r.warnings;
  if (!r.completed)
    c.status = CertifyStatus::Exhausted;
  else if (r.index == 1)
    c.status = CertifyStatus::Certified;
  else
    c.status = CertifyStatus::NotTrivial;
  return c;
}

}  // namespace orbtop
