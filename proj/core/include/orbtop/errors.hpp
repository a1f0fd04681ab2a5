#pragma once

#include <stdexcept>
#include <string>

#include "orbtop/numbers.hpp"

namespace orbtop {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

// Some branch has a_i = 0 and b_i = y: the preimage of y is a whole residue
// class, so we refuse to enumerate it.
struct InfinitePreimageRisk : std::runtime_error {
  Integer value;
  explicit InfinitePreimageRisk(const Integer& y)
      : std::runtime_error("preimage of " + y.get_str() +
                           " is an arithmetic progression"),
        value(y) {}
};

struct NotClosed : std::runtime_error {
  Integer witness;        // i in S
  Integer image_outside;  // f(i) not in S
  NotClosed(const Integer& i, const Integer& fi)
      : std::runtime_error("set is not closed: contains " + i.get_str() +
                           " but not its image " + fi.get_str()),
        witness(i),
        image_outside(fi) {}
};

struct CompositionNonzero : std::runtime_error {
  CompositionNonzero()
      : std::runtime_error("boundary composition d1*d2 is nonzero") {}
};

// An orbit-closure walk hit a resource bound before every orbit closed;
// no partial set is returned.
struct BudgetExceeded : std::runtime_error {
  Integer seed;
  explicit BudgetExceeded(const Integer& seed_)
      : std::runtime_error("orbit of " + seed_.get_str() +
                           " did not close within the budget"),
        seed(seed_) {}
};

struct EmptyRelator : std::runtime_error {
  Integer cell;
  explicit EmptyRelator(const Integer& cell_)
      : std::runtime_error("cell " + cell_.get_str() +
                           " has an empty attaching word"),
        cell(cell_) {}
};

struct Disconnected : std::runtime_error {
  std::string vertex_a;
  std::string vertex_b;
  Disconnected(std::string a, std::string b)
      : std::runtime_error("complex is disconnected: " + a + " and " + b +
                           " lie in different components"),
        vertex_a(std::move(a)),
        vertex_b(std::move(b)) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what_) : std::runtime_error(what_) {}
};

}  // namespace orbtop
