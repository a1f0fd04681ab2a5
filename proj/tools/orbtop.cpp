// orbtop: command-line front end for the orbit-topology library.
//
// Exit codes: 0 = completed (including Exhausted / INCONCLUSIVE results),
// 2 = usage error, 3 = parse or validation failure, 4 = I/O failure.
// Payload output is byte-identical across runs with fixed inputs; timing
// goes to stderr and only behind --stats.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "orbtop/complex.hpp"
#include "orbtop/coset.hpp"
#include "orbtop/decider.hpp"
#include "orbtop/errors.hpp"
#include "orbtop/function.hpp"
#include "orbtop/gcf.hpp"
#include "orbtop/homology.hpp"
#include "orbtop/numbers.hpp"
#include "orbtop/orbit.hpp"
#include "orbtop/simplicial.hpp"
#include "orbtop/snf.hpp"
#include "orbtop/transform.hpp"
#include "orbtop/words.hpp"

namespace {

using namespace orbtop;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    if (std::cin.bad()) throw IoError("failed to read stdin");
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed to read " + path);
  return buf.str();
}

// Output sink: "-" means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (file_.is_open() && !file_) throw IoError("write failed");
    if (!file_.is_open() && std::cout.bad()) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
};

std::string path_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base.empty() ? "gcf" : base;
}

// Function specs accepted everywhere a function is expected:
//   C | collatz           the Collatz function
//   S | successor         n -> n + 1
//   hat:<spec>            the hat transform of <spec> (nests)
//   table:<path>@<spec>   finite override of <spec>; file lines "<in> <out>"
//   <path>                a GCF file in the DSL ("-" = stdin)
FunctionHandle resolve_function(const std::string& spec) {
  if (spec == "C" || spec == "collatz") return FunctionHandle::collatz();
  if (spec == "S" || spec == "successor") return FunctionHandle::successor();
  if (spec.rfind("hat:", 0) == 0)
    return hat(resolve_function(spec.substr(4)));
  if (spec.rfind("table:", 0) == 0) {
    std::string rest = spec.substr(6);
    std::size_t at = rest.rfind('@');
    if (at == std::string::npos)
      throw std::invalid_argument("table spec needs <path>@<base>: " + spec);
    FunctionHandle base = resolve_function(rest.substr(at + 1));
    std::string text = read_text(rest.substr(0, at));
    std::map<Integer, Integer> table;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::string k, v;
      if (!(fields >> k)) continue;
      if (!(fields >> v))
        throw ParseError(lineno, 1, "table line needs \"<in> <out>\"");
      std::string extra;
      if (fields >> extra)
        throw ParseError(lineno, 1, "trailing text after \"<in> <out>\"");
      table[parse_integer(k)] = parse_integer(v);
    }
    return FunctionHandle::table_override(base, std::move(table),
                                          path_stem(rest.substr(0, at)));
  }
  Gcf g = parse_gcf(read_text(spec), path_stem(spec));
  return FunctionHandle::from_gcf(std::move(g));
}

std::pair<Integer, Integer> parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("range must be <lo>..<hi>: " + text);
  Integer lo = parse_integer(text.substr(0, dots));
  Integer hi = parse_integer(text.substr(dots + 2));
  return {lo, hi};
}

std::vector<Integer> parse_index_list(const std::string& text) {
  std::vector<Integer> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(parse_integer(item));
  if (out.empty()) throw std::invalid_argument("empty index list");
  return out;
}

std::vector<Integer> range_list(const Integer& lo, const Integer& hi) {
  std::vector<Integer> out;
  for (Integer i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// --- complex construction shared by several subcommands -------------------

struct ComplexSpec {
  std::string kind;  // P | Q | B | H | Gamma
  std::string arg;   // function spec for P/Q/Gamma, n for B/H
};

bool is_graph_kind(const std::string& kind) { return kind == "Gamma"; }

PresentationComplex make_complex(const ComplexSpec& spec) {
  if (spec.kind == "P") return PresentationComplex::P(resolve_function(spec.arg));
  if (spec.kind == "Q") return PresentationComplex::Q(resolve_function(spec.arg));
  if (spec.kind == "B") return PresentationComplex::B(std::stoul(spec.arg));
  if (spec.kind == "H") return PresentationComplex::H(std::stoul(spec.arg));
  throw std::invalid_argument("unknown complex kind: " + spec.kind);
}

// Slice selection flags shared by truncate/homology/simplicial-convert.
struct SliceFlags {
  std::string set;      // explicit closed set "1,2,4"
  std::string closure;  // seeds whose orbit closure to take
  bool full = false;    // full slice (finite kinds only)
};

ClosedSet resolve_closed_set(const FunctionHandle& f, const SliceFlags& flags,
                             const OrbitBudget& budget) {
  if (!flags.set.empty()) {
    std::vector<Integer> elems = parse_index_list(flags.set);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    ClosedSet S{std::move(elems)};
    check_closed(f, S);
    return S;
  }
  if (!flags.closure.empty())
    return orbit_closure(f, parse_index_list(flags.closure), budget);
  throw std::invalid_argument("this kind needs --set or --closure");
}

ChainComplex make_chain(const ComplexSpec& spec, const SliceFlags& flags,
                        const OrbitBudget& budget) {
  if (is_graph_kind(spec.kind)) {
    Graph G = build_Gamma(resolve_function(spec.arg));
    return truncate(G, resolve_closed_set(G.function(), flags, budget));
  }
  PresentationComplex X = make_complex(spec);
  if (X.finite()) {
    if (!flags.set.empty() || !flags.closure.empty())
      throw std::invalid_argument(spec.kind + " is finite; use --full");
    return truncate_full(X);
  }
  return truncate(X, resolve_closed_set(X.function(), flags, budget));
}

void print_sparse(std::ostream& out, const std::string& tag,
                  const SparseMatrix& M,
                  const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& col_labels) {
  for (std::size_t j = 0; j < M.cols; ++j) {
    if (M.columns[j].empty()) continue;
    out << tag << ' ' << col_labels[j] << ':';
    for (const auto& [row, coeff] : M.columns[j])
      out << ' ' << row_labels[row] << ':' << coeff;
    out << '\n';
  }
}

void print_chain(std::ostream& out, const ChainComplex& K) {
  out << "dims " << K.basis0.size() << ' ' << K.basis1.size() << ' '
      << K.basis2.size() << '\n';
  auto basis_line = [&](const char* tag, const std::vector<std::string>& basis) {
    out << tag;
    for (const std::string& label : basis) out << ' ' << label;
    out << '\n';
  };
  basis_line("basis0", K.basis0);
  basis_line("basis1", K.basis1);
  basis_line("basis2", K.basis2);
  print_sparse(out, "d1", K.boundary1, K.basis0, K.basis1);
  print_sparse(out, "d2", K.boundary2, K.basis1, K.basis2);
}

// Boundary-column source for the streaming top-homology scan: exponent-sum
// columns for presentation kinds, edge boundaries for Gamma.
ColumnSource column_source(const ComplexSpec& spec) {
  if (is_graph_kind(spec.kind)) {
    auto G = std::make_shared<Graph>(build_Gamma(resolve_function(spec.arg)));
    return [G](std::uint64_t index) {
      auto [tail, head] = G->edge(Integer(static_cast<unsigned long>(index)));
      std::vector<std::pair<Integer, Integer>> col;
      if (tail == head) return col;  // loop edge: zero boundary
      col.emplace_back(tail, -1);
      col.emplace_back(head, 1);
      if (col[0].first > col[1].first) std::swap(col[0], col[1]);
      return col;
    };
  }
  auto X = std::make_shared<PresentationComplex>(make_complex(spec));
  std::shared_ptr<std::vector<Integer>> cells;
  if (X->finite())
    cells = std::make_shared<std::vector<Integer>>(X->cell_indices());
  return [X, cells](std::uint64_t index) {
    Integer cell = cells ? cells->at(index - 1)
                         : Integer(static_cast<unsigned long>(index));
    std::vector<std::pair<Integer, Integer>> col;
    for (auto& [gen, sum] : exponent_sums(X->relator(cell).word))
      col.emplace_back(gen, sum);
    return col;
  };
}

std::uint64_t cell_count_limit(const ComplexSpec& spec, std::uint64_t requested) {
  if (is_graph_kind(spec.kind)) return requested;
  PresentationComplex X = make_complex(spec);
  if (!X.finite()) return requested;
  std::uint64_t count = X.cell_indices().size();
  return std::min(requested, count);
}

FinitePresentation resolve_presentation(const std::string& what,
                                        const std::string& n_or_empty) {
  if (what == "H" || what == "B" || what == "Bkilled") {
    if (n_or_empty.empty())
      throw std::invalid_argument("family " + what + " needs <n>");
    unsigned long n = std::stoul(n_or_empty);
    if (what == "H") return presentation_H(n);
    if (what == "B") return presentation_B(n);
    return presentation_B_killed(n);
  }
  if (!n_or_empty.empty())
    throw std::invalid_argument("unexpected argument after presentation file");
  return parse_presentation(read_text(what));
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit topology toolkit: generalized Collatz functions, their "
               "presentation complexes, exact homology, and coset-enumeration "
               "certificates"};
  app.require_subcommand(1);
  bool stats = false;
  app.add_flag("--stats", stats, "print wall-clock timing to stderr");

  std::function<int()> action;

  // ---- gcf ---------------------------------------------------------------
  auto* gcf_cmd = app.add_subcommand("gcf", "parse, validate, and evaluate GCF files");
  gcf_cmd->require_subcommand(1);
  {
    auto path = std::make_shared<std::string>();
    auto* check = gcf_cmd->add_subcommand("check", "validate a GCF file");
    check->add_option("file", *path, "GCF file ('-' = stdin)")->required();
    check->callback([&action, path] {
      action = [path]() {
        Gcf g = parse_gcf(read_text(*path), path_stem(*path));
        ValidationReport r = validate(g);
        if (r.accepted) {
          std::cout << "ACCEPT\n";
          return 0;
        }
        std::cout << "REJECT: " << r.reason;
        if (r.residue >= 0) std::cout << " (residue " << r.residue << ")";
        if (r.witness)
          std::cout << " at x = " << *r.witness << " -> " << *r.value_at_witness;
        std::cout << '\n';
        return 3;
      };
    });
  }
  {
    auto path = std::make_shared<std::string>();
    auto xs = std::make_shared<std::vector<std::string>>();
    auto* eval_cmd = gcf_cmd->add_subcommand("eval", "evaluate at given points");
    eval_cmd->add_option("file", *path, "GCF file")->required();
    eval_cmd->add_option("x", *xs, "evaluation points (positive integers)")
        ->required();
    eval_cmd->callback([&action, path, xs] {
      action = [path, xs]() {
        FunctionHandle f = resolve_function(*path);
        for (const std::string& x : *xs) std::cout << f(parse_integer(x)) << '\n';
        return 0;
      };
    });
  }
  {
    auto path = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    auto* pre = gcf_cmd->add_subcommand("preimage", "list all x with g(x) = y");
    pre->add_option("file", *path, "GCF file")->required();
    pre->add_option("y", *y, "target value")->required();
    pre->callback([&action, path, y] {
      action = [path, y]() {
        std::vector<Integer> xs = resolve_function(*path).preimage(parse_integer(*y));
        for (std::size_t i = 0; i < xs.size(); ++i)
          std::cout << (i ? " " : "") << xs[i];
        std::cout << '\n';
        return 0;
      };
    });
  }

  // ---- orbit -------------------------------------------------------------
  auto* orbit_cmd = app.add_subcommand("orbit", "classify forward orbits");
  orbit_cmd->require_subcommand(1);
  {
    auto fn = std::make_shared<std::string>();
    auto seed = std::make_shared<std::string>();
    auto budget = std::make_shared<OrbitBudget>();
    auto* cls = orbit_cmd->add_subcommand("classify", "classify one orbit");
    cls->add_option("fn", *fn, "function spec")->required();
    cls->add_option("seed", *seed, "starting point")->required();
    cls->add_option("--max-steps", budget->max_steps, "evaluation budget");
    cls->add_option("--max-value-bits", budget->max_value_bits,
                    "iterate bit-size bound");
    cls->callback([&action, fn, seed, budget] {
      action = [fn, seed, budget]() {
        OrbitReport r = classify(resolve_function(*fn), parse_integer(*seed), *budget);
        std::cout << report_line(r) << '\n';
        return 0;
      };
    });
  }
  {
    auto fn = std::make_shared<std::string>();
    auto lo = std::make_shared<std::string>();
    auto hi = std::make_shared<std::string>();
    auto budget = std::make_shared<OrbitBudget>();
    auto threads = std::make_shared<int>(0);
    auto out_path = std::make_shared<std::string>("-");
    auto* scan_cmd = orbit_cmd->add_subcommand("scan", "classify a seed range");
    scan_cmd->add_option("fn", *fn, "function spec")->required();
    scan_cmd->add_option("lo", *lo, "first seed")->required();
    scan_cmd->add_option("hi", *hi, "last seed")->required();
    scan_cmd->add_option("--max-steps", budget->max_steps, "evaluation budget");
    scan_cmd->add_option("--max-value-bits", budget->max_value_bits,
                         "iterate bit-size bound");
    scan_cmd->add_option("--threads", *threads,
                         "worker threads (0 = available parallelism)");
    scan_cmd->add_option("-o,--output", *out_path, "output file ('-' = stdout)");
    scan_cmd->callback([&action, fn, lo, hi, budget, threads, out_path] {
      action = [fn, lo, hi, budget, threads, out_path]() {
        Output out(*out_path);
        ScanSummary summary = scan(
            resolve_function(*fn), parse_integer(*lo), parse_integer(*hi), *budget,
            [&](const OrbitReport& r) { out.stream() << report_line(r) << '\n'; },
            *threads);
        out.stream() << '\n';
        write_summary(out.stream(), summary);
        out.finish();
        return 0;
      };
    });
  }
  {
    auto fn = std::make_shared<std::string>();
    auto bound = std::make_shared<std::string>();
    auto kmax = std::make_shared<std::uint64_t>(3);
    auto* census = orbit_cmd->add_subcommand(
        "census", "all n <= bound with f^k(n) = n for some k <= k_max");
    census->add_option("fn", *fn, "function spec")->required();
    census->add_option("bound", *bound, "search bound")->required();
    census->add_option("k_max", *kmax, "max period")->required();
    census->callback([&action, fn, bound, kmax] {
      action = [fn, bound, kmax]() {
        for (const Integer& n :
             small_cycle_census(resolve_function(*fn), parse_integer(*bound), *kmax))
          std::cout << n << '\n';
        return 0;
      };
    });
  }

  // ---- hat ---------------------------------------------------------------
  auto* hat_cmd = app.add_subcommand("hat", "the hat transform");
  hat_cmd->require_subcommand(1);
  {
    auto fn = std::make_shared<std::string>();
    auto xs = std::make_shared<std::vector<std::string>>();
    auto* ev = hat_cmd->add_subcommand("eval", "evaluate hat(f) at given points");
    ev->add_option("fn", *fn, "base function spec")->required();
    ev->add_option("x", *xs, "evaluation points")->required();
    ev->callback([&action, fn, xs] {
      action = [fn, xs]() {
        FunctionHandle h = hat(resolve_function(*fn));
        for (const std::string& x : *xs) std::cout << h(parse_integer(x)) << '\n';
        return 0;
      };
    });
  }
  {
    auto fn = std::make_shared<std::string>();
    auto* wrap = hat_cmd->add_subcommand(
        "wrap", "register the wrapped handle; prints the name other commands "
                "accept as a function spec");
    wrap->add_option("fn", *fn, "base function spec")->required();
    wrap->callback([&action, fn] {
      action = [fn]() {
        FunctionHandle h = hat(resolve_function(*fn));  // validates the spec
        (void)h;
        std::cout << "hat:" << *fn << '\n';
        return 0;
      };
    });
  }

  // ---- complex -----------------------------------------------------------
  auto* complex_cmd = app.add_subcommand("complex", "presentation complexes and graphs");
  complex_cmd->require_subcommand(1);
  auto add_complex_args = [](CLI::App* cmd, std::shared_ptr<ComplexSpec> spec) {
    cmd->add_option("kind", spec->kind, "P | Q | B | H | Gamma")->required();
    cmd->add_option("arg", spec->arg, "function spec (P/Q/Gamma) or n (B/H)")
        ->required();
  };
  {
    auto spec = std::make_shared<ComplexSpec>();
    auto* build = complex_cmd->add_subcommand("build", "construct and summarize");
    add_complex_args(build, spec);
    build->callback([&action, spec] {
      action = [spec]() {
        if (is_graph_kind(spec->kind)) {
          Graph G = build_Gamma(resolve_function(spec->arg));
          std::cout << "graph Gamma " << G.function().name() << '\n'
                    << "vertices indexed by N+\n"
                    << "edges indexed by N+\n";
          return 0;
        }
        PresentationComplex X = make_complex(*spec);
        std::cout << "complex " << X.describe() << '\n';
        if (X.finite()) {
          std::cout << "gens " << X.generator_indices().size() << '\n'
                    << "cells " << X.cell_indices().size() << '\n';
        } else {
          std::cout << "gens indexed by N+\ncells indexed by N+\n";
        }
        return 0;
      };
    });
  }
  {
    auto spec = std::make_shared<ComplexSpec>();
    auto flags = std::make_shared<SliceFlags>();
    auto budget = std::make_shared<OrbitBudget>();
    auto out_path = std::make_shared<std::string>("-");
    auto* trunc = complex_cmd->add_subcommand(
        "truncate", "chain complex of a finite closed truncation");
    add_complex_args(trunc, spec);
    trunc->add_option("--set", flags->set, "closed index set, e.g. 1,2,4");
    trunc->add_option("--closure", flags->closure,
                      "seeds whose orbit closure to use");
    trunc->add_flag("--full", flags->full, "full truncation (B/H)");
    trunc->add_option("--max-steps", budget->max_steps, "closure budget");
    trunc->add_option("-o,--output", *out_path, "output file");
    trunc->callback([&action, spec, flags, budget, out_path] {
      action = [spec, flags, budget, out_path]() {
        Output out(*out_path);
        print_chain(out.stream(), make_chain(*spec, *flags, *budget));
        out.finish();
        return 0;
      };
    });
  }
  {
    auto spec = std::make_shared<ComplexSpec>();
    auto cells = std::make_shared<std::string>();
    auto upto = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>("-");
    auto* exp = complex_cmd->add_subcommand("export", "list cells as text");
    add_complex_args(exp, spec);
    exp->add_option("--cells", *cells, "explicit cell indices, e.g. 1,2,4");
    exp->add_option("--upto", *upto, "cells 1..N");
    exp->add_option("-o,--output", *out_path, "output file");
    exp->callback([&action, spec, cells, upto, out_path] {
      action = [spec, cells, upto, out_path]() {
        std::vector<Integer> indices;
        if (!cells->empty())
          indices = parse_index_list(*cells);
        else if (!upto->empty())
          indices = range_list(1, parse_integer(*upto));
        Output out(*out_path);
        if (is_graph_kind(spec->kind)) {
          if (indices.empty())
            throw std::invalid_argument("Gamma export needs --cells or --upto");
          out.stream() << export_graph(build_Gamma(resolve_function(spec->arg)),
                                       indices);
        } else {
          PresentationComplex X = make_complex(*spec);
          if (indices.empty()) {
            if (!X.finite())
              throw std::invalid_argument(spec->kind +
                                          " export needs --cells or --upto");
            indices = X.cell_indices();
          }
          out.stream() << export_complex(X, indices);
        }
        out.finish();
        return 0;
      };
    });
  }

  // ---- homology ----------------------------------------------------------
  auto* hom_cmd = app.add_subcommand("homology", "exact integer homology");
  hom_cmd->require_subcommand(1);
  {
    auto spec = std::make_shared<ComplexSpec>();
    auto flags = std::make_shared<SliceFlags>();
    auto budget = std::make_shared<OrbitBudget>();
    auto* comp = hom_cmd->add_subcommand("compute",
                                         "homology of a finite truncation");
    comp->add_option("kind", spec->kind, "P | Q | B | H | Gamma")->required();
    comp->add_option("arg", spec->arg, "function spec or n")->required();
    comp->add_option("--set", flags->set, "closed index set");
    comp->add_option("--closure", flags->closure, "seeds for orbit closure");
    comp->add_flag("--full", flags->full, "full truncation (B/H)");
    comp->add_option("--max-steps", budget->max_steps, "closure budget");
    comp->callback([&action, spec, flags, budget] {
      action = [spec, flags, budget]() {
        HomologyGroups h = homology(make_chain(*spec, *flags, *budget));
        std::cout << format_homology(h);
        return 0;
      };
    });
  }
  {
    auto spec = std::make_shared<ComplexSpec>();
    auto max_cells = std::make_shared<std::uint64_t>(1000);
    auto* toph = hom_cmd->add_subcommand(
        "toph", "streaming top-homology dependence scan");
    toph->add_option("kind", spec->kind, "P | Q | B | H | Gamma")->required();
    toph->add_option("arg", spec->arg, "function spec or n")->required();
    toph->add_option("--max-cells", *max_cells, "columns to process");
    toph->callback([&action, spec, max_cells] {
      action = [spec, max_cells]() {
        ColumnSource source = column_source(*spec);
        std::uint64_t limit = cell_count_limit(*spec, *max_cells);
        TophResult r = toph_stream(source, limit);
        if (!r.dependence_found) {
          std::cout << "NoDependence(" << r.cells_processed << ")\n";
          return 0;
        }
        if (!verify_certificate(source, r.certificate))
          throw std::logic_error("dependence certificate failed re-verification");
        std::cout << "cycle:";
        for (const auto& [cell, coeff] : r.certificate.coefficients)
          std::cout << ' ' << cell << ':' << coeff;
        std::cout << '\n';
        return 0;
      };
    });
  }
  {
    auto fn = std::make_shared<std::string>();
    auto start = std::make_shared<std::string>();
    auto max_vertices = std::make_shared<std::uint64_t>(10000);
    auto* fc = hom_cmd->add_subcommand(
        "component", "finite connected component detection in Gamma(f)");
    fc->add_option("fn", *fn, "function spec")->required();
    fc->add_option("start", *start, "start vertex")->required();
    fc->add_option("--max-vertices", *max_vertices, "exploration bound");
    fc->callback([&action, fn, start, max_vertices] {
      action = [fn, start, max_vertices]() {
        ComponentResult r = finite_component(resolve_function(*fn),
                                             parse_integer(*start), *max_vertices);
        if (r.exceeded) {
          std::cout << "Exceeded(" << *max_vertices << ")\n";
          return 0;
        }
        std::cout << "FiniteComponent:";
        for (const Integer& v : r.vertices) std::cout << ' ' << v;
        std::cout << '\n';
        return 0;
      };
    });
  }

  // ---- tc ----------------------------------------------------------------
  auto* tc_cmd = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
  tc_cmd->require_subcommand(1);
  auto add_tc_args = [](CLI::App* cmd, std::shared_ptr<std::string> what,
                        std::shared_ptr<std::string> n,
                        std::shared_ptr<std::uint64_t> max_cosets) {
    cmd->add_option("presentation", *what,
                    "H | B | Bkilled (with <n>) or a presentation file")
        ->required();
    cmd->add_option("n", *n, "family parameter");
    cmd->add_option("--max-cosets", *max_cosets, "total cosets ever defined");
  };
  {
    auto what = std::make_shared<std::string>();
    auto n = std::make_shared<std::string>();
    auto max_cosets = std::make_shared<std::uint64_t>(1000000);
    auto* certify = tc_cmd->add_subcommand("certify", "certify triviality");
    add_tc_args(certify, what, n, max_cosets);
    certify->callback([&action, what, n, max_cosets] {
      action = [what, n, max_cosets]() {
        FinitePresentation p = resolve_presentation(*what, *n);
        CertifyResult r = certify_trivial(p, *max_cosets);
        print_warnings(r.warnings);
        switch (r.status) {
          case CertifyStatus::Certified:
            std::cout << "Certified: trivial (index 1)\n";
            break;
          case CertifyStatus::NotTrivial:
            std::cout << "Not trivial: index " << r.index << '\n';
            break;
          case CertifyStatus::Exhausted:
            std::cout << "Exhausted: " << r.total_defined
                      << " cosets defined (limit " << *max_cosets << ")\n";
            break;
        }
        return 0;
      };
    });
  }
  {
    auto what = std::make_shared<std::string>();
    auto n = std::make_shared<std::string>();
    auto max_cosets = std::make_shared<std::uint64_t>(1000000);
    auto* enumerate = tc_cmd->add_subcommand("enumerate",
                                             "enumerate cosets of the trivial "
                                             "subgroup; prints the group order");
    add_tc_args(enumerate, what, n, max_cosets);
    enumerate->callback([&action, what, n, max_cosets] {
      action = [what, n, max_cosets]() {
        FinitePresentation p = resolve_presentation(*what, *n);
        EnumerationResult r = enumerate_cosets(p, *max_cosets);
        print_warnings(r.warnings);
        if (r.completed)
          std::cout << "Index(" << r.index << ")\n";
        else
          std::cout << "Exhausted(" << r.total_defined << ")\n";
        return 0;
      };
    });
  }

  // ---- simplicial ----------------------------------------------------------
  auto* simp_cmd = app.add_subcommand("simplicial", "simplicial conversions");
  simp_cmd->require_subcommand(1);
  {
    auto spec = std::make_shared<ComplexSpec>();
    auto flags = std::make_shared<SliceFlags>();
    auto budget = std::make_shared<OrbitBudget>();
    auto out_path = std::make_shared<std::string>("-");
    auto* conv = simp_cmd->add_subcommand(
        "convert", "second barycentric subdivision of a finite slice");
    conv->add_option("kind", spec->kind, "P | Q | B | H")->required();
    conv->add_option("arg", spec->arg, "function spec or n")->required();
    conv->add_option("--set", flags->set, "closed index set");
    conv->add_option("--closure", flags->closure, "seeds for orbit closure");
    conv->add_flag("--full", flags->full, "full slice (B/H)");
    conv->add_option("--max-steps", budget->max_steps, "closure budget");
    conv->add_option("-o,--output", *out_path, "output file");
    conv->callback([&action, spec, flags, budget, out_path] {
      action = [spec, flags, budget, out_path]() {
        if (is_graph_kind(spec->kind))
          throw std::invalid_argument("convert applies to P/Q/B/H only");
        PresentationComplex X = make_complex(*spec);
        FiniteSlice slice =
            X.finite() ? full_slice(X)
                       : closure_slice(X, resolve_closed_set(X.function(), *flags,
                                                             *budget));
        Output out(*out_path);
        out.stream() << export_simplicial(presentation_to_simplicial(slice));
        out.finish();
        return 0;
      };
    });
  }
  {
    auto path = std::make_shared<std::string>();
    auto* fromsc = simp_cmd->add_subcommand(
        "fromsc", "fundamental-group presentation of a simplicial complex");
    fromsc->add_option("file", *path, "simplicial complex file ('-' = stdin)")
        ->required();
    fromsc->callback([&action, path] {
      action = [path]() {
        SimplicialComplex K = parse_simplicial(read_text(*path));
        SimplicialPresentation sp = simplicial_to_presentation(K);
        print_warnings(sp.presentation.warnings);
        std::cout << render_presentation(sp.presentation);
        return 0;
      };
    });
  }
  {
    auto path = std::make_shared<std::string>();
    auto* euler = simp_cmd->add_subcommand("euler", "Euler characteristic");
    euler->add_option("file", *path, "simplicial complex file")->required();
    euler->callback([&action, path] {
      action = [path]() {
        std::cout << euler_characteristic(parse_simplicial(read_text(*path)))
                  << '\n';
        return 0;
      };
    });
  }

  // ---- decide --------------------------------------------------------------
  auto* decide_cmd = app.add_subcommand("decide", "semi-decision procedures");
  decide_cmd->require_subcommand(1);
  {
    auto fn = std::make_shared<std::string>();
    auto seeds = std::make_shared<std::string>();
    auto budget = std::make_shared<OrbitBudget>();
    auto out_path = std::make_shared<std::string>("-");
    auto* contract = decide_cmd->add_subcommand(
        "contract", "scan for a certificate of non-contractibility of P(f)");
    contract->add_option("--fn", *fn, "function spec")->required();
    contract->add_option("--seeds", *seeds, "seed range lo..hi")->required();
    contract->add_option("--max-steps", budget->max_steps, "per-seed budget");
    contract->add_option("--max-value-bits", budget->max_value_bits,
                         "iterate bit-size bound");
    contract->add_option("-o,--output", *out_path, "output file");
    contract->callback([&action, fn, seeds, budget, out_path] {
      action = [fn, seeds, budget, out_path]() {
        auto [lo, hi] = parse_range(*seeds);
        ContractibilityReport r =
            decide_contractibility(resolve_function(*fn), lo, hi, *budget);
        Output out(*out_path);
        write_report(out.stream(), r);
        out.finish();
        return 0;
      };
    });
  }
  {
    auto fn = std::make_shared<std::string>();
    auto seeds = std::make_shared<std::string>();
    auto budget = std::make_shared<OrbitBudget>();
    auto probe = std::make_shared<std::string>();
    auto max_vertices = std::make_shared<std::uint64_t>(10000);
    auto out_path = std::make_shared<std::string>("-");
    auto* connect = decide_cmd->add_subcommand(
        "connect", "scan for a certificate of disconnection of Gamma(f)");
    connect->add_option("--fn", *fn, "function spec")->required();
    connect->add_option("--seeds", *seeds, "seed range lo..hi")->required();
    connect->add_option("--max-steps", budget->max_steps, "per-seed budget");
    connect->add_option("--max-value-bits", budget->max_value_bits,
                        "iterate bit-size bound");
    connect->add_option("--probe", *probe,
                        "also probe the finite component of this vertex");
    connect->add_option("--max-vertices", *max_vertices,
                        "component exploration bound");
    connect->add_option("-o,--output", *out_path, "output file");
    connect->callback([&action, fn, seeds, budget, probe, max_vertices, out_path] {
      action = [fn, seeds, budget, probe, max_vertices, out_path]() {
        auto [lo, hi] = parse_range(*seeds);
        std::optional<Integer> probe_vertex;
        if (!probe->empty()) probe_vertex = parse_integer(*probe);
        ConnectivityReport r =
            decide_connectivity(resolve_function(*fn), lo, hi, *budget,
                                probe_vertex, *max_vertices);
        Output out(*out_path);
        write_report(out.stream(), r);
        out.finish();
        return 0;
      };
    });
  }

  // ---- reduce --------------------------------------------------------------
  {
    auto fn = std::make_shared<std::string>();
    auto upto = std::make_shared<std::string>("8");
    auto out_path = std::make_shared<std::string>("-");
    auto* reduce = app.add_subcommand(
        "reduce", "emit the hat-transform reduction bundle for a function");
    reduce->add_option("--fn", *fn, "function spec")->required();
    reduce->add_option("--upto", *upto, "cells 1..N of each emitted complex");
    reduce->add_option("-o,--output", *out_path, "output file");
    reduce->callback([&action, fn, upto, out_path] {
      action = [fn, upto, out_path]() {
        GcpBundle bundle = gcp_reduce(resolve_function(*fn));
        std::vector<Integer> cells = range_list(1, parse_integer(*upto));
        Output out(*out_path);
        out.stream() << "function " << bundle.g.name() << '\n'
                     << "hat " << bundle.g_hat.name() << '\n'
                     << export_complex(bundle.P_hat, cells)
                     << export_graph(bundle.Gamma, cells)
                     << export_complex(bundle.Q, cells);
        out.finish();
        return 0;
      };
    });
  }

  // ---- collatz ---------------------------------------------------------------
  auto* collatz_cmd = app.add_subcommand("collatz", "the Collatz function");
  collatz_cmd->require_subcommand(1);
  {
    auto upto = std::make_shared<std::string>("1000000");
    auto budget = std::make_shared<OrbitBudget>();
    auto threads = std::make_shared<int>(0);
    auto out_path = std::make_shared<std::string>("-");
    auto* verify = collatz_cmd->add_subcommand(
        "verify", "verify all orbits up to a bound reach the cycle (1,4,2)");
    verify->add_option("--upto", *upto, "verify seeds 1..N");
    verify->add_option("--max-steps", budget->max_steps, "per-seed budget");
    verify->add_option("--max-value-bits", budget->max_value_bits,
                       "iterate bit-size bound");
    verify->add_option("--threads", *threads,
                       "worker threads (0 = available parallelism)");
    verify->add_option("-o,--output", *out_path, "output file");
    verify->callback([&action, upto, budget, threads, out_path] {
      action = [upto, budget, threads, out_path]() {
        CollatzVerification v =
            collatz_verify(parse_integer(*upto), *budget, *threads);
        Output out(*out_path);
        write_report(out.stream(), v);
        out.finish();
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // keep 0 for --help/--version
  }

  try {
    auto start = std::chrono::steady_clock::now();
    int code = action ? action() : 2;
    if (stats) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cerr << "stats: wall " << ms << " ms\n";
    }
    return code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NotClosed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const EmptyRelator& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Disconnected& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InfinitePreimageRisk& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
