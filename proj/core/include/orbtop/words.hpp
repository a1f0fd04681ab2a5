#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbtop/numbers.hpp"

namespace orbtop {

// A letter of a word in a free group: a generator index with an optional
// inversion. Indices are arbitrary-precision and may legitimately be 0
// (the H-family indexes generators by Z/n starting at 0).
struct Letter {
  Integer gen;
  bool inverse = false;
};

inline bool operator==(const Letter& a, const Letter& b) {
  return a.inverse == b.inverse && a.gen == b.gen;
}
inline bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }

// Convenience constructors mirroring the +i / -i notation.
inline Letter pos(Integer g) { return Letter{std::move(g), false}; }
inline Letter neg(Integer g) { return Letter{std::move(g), true}; }

using Word = std::vector<Letter>;
using RelatorWord = Word;

// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word w);
// Free reduction plus wrap-around cancellation of the first/last letters.
Word cyclic_reduce(Word w);
bool is_cyclically_reduced(const Word& w);

// Signed letter count per generator; generators with sum 0 are omitted.
std::map<Integer, Integer> exponent_sums(const Word& w);

// "-4 +3 +4 -3 -3"; the empty word renders as "" (callers print their own
// placeholder when needed).
std::string format_word(const Word& w);

// Parses whitespace-separated signed letters ("+3", "-0", ...). Every letter
// must carry an explicit sign. Throws std::invalid_argument on bad tokens.
Word parse_word(const std::string& text);

}  // namespace orbtop
