#include "orbtop/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace orbtop {

namespace {

bool cancels(const Letter& a, const Letter& b) {
  return a.inverse != b.inverse && a.gen == b.gen;
}

}  // namespace

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter& l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  return out;
}

Word cyclic_reduce(Word w) {
  Word out = free_reduce(std::move(w));
  while (out.size() >= 2 && cancels(out.front(), out.back())) {
    out.pop_back();
    out.erase(out.begin());
  }
  return out;
}

bool is_cyclically_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (cancels(w[i], w[i + 1])) return false;
  if (w.size() >= 2 && cancels(w.front(), w.back())) return false;
  return true;
}

std::map<Integer, Integer> exponent_sums(const Word& w) {
  std::map<Integer, Integer> sums;
  for (const Letter& l : w) sums[l.gen] += l.inverse ? -1 : 1;
  for (auto it = sums.begin(); it != sums.end();)
    it = (it->second == 0) ? sums.erase(it) : std::next(it);
  return sums;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w) {
    if (!first) out << ' ';
    first = false;
    out << (l.inverse ? '-' : '+') << l.gen;
  }
  return out.str();
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
      throw std::invalid_argument("word letter must look like +3 or -3, got '" +
                                  tok + "'");
    for (std::size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("word letter must look like +3 or -3, got '" +
                                    tok + "'");
    Letter l;
    l.inverse = tok[0] == '-';
    l.gen = Integer(tok.substr(1));
    w.push_back(std::move(l));
  }
  return w;
}

}  // namespace orbtop
