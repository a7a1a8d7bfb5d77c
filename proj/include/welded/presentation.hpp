#ifndef WELDED_PRESENTATION_HPP
#define WELDED_PRESENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "welded/gauss.hpp"
#include "welded/quandle.hpp"

namespace welded {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  ///< +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);
Word inverse(const Word& w);
int exponent_sum(const Word& w);

/// base^word, evaluated left to right: (base^a)^b with a*... for exponent +1
/// and the inverse operation for -1.
struct Power {
  std::size_t base = 0;
  Word word;

  friend bool operator==(const Power&, const Power&) = default;
};

struct QuandleRelation {
  Power lhs;
  Power rhs;

  friend bool operator==(const QuandleRelation&, const QuandleRelation&) = default;
};

struct QuandlePresentation {
  std::vector<std::string> generators;
  std::vector<QuandleRelation> relations;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// One generator per long arc (x1, x2, ... in long_arcs() order) and, per
/// classical crossing, x_in^(x_over^e) = x_out.
QuandlePresentation wirtinger_quandle(const GaussCode& g);

/// Over-arc generators met at the component's under-passages, with the
/// crossing signs as exponents, followed by the basepoint arc generator raised
/// to minus their sum. Exponent sum is zero.
Word preferred_longitude(const GaussCode& g, std::size_t comp);

/// Wirtinger presentation plus, per component i, a generator y_i and the
/// relation y_i^(L_i) = y_i.
QuandlePresentation parallel_quandle_presentation(const GaussCode& g);

/// Wirtinger presentation plus a free generator y (knots only).
QuandlePresentation split_presentation(const GaussCode& g);

/// Relators x_over^-e x_in x_over^e x_out^-1 (a^b read as b^-1 a b).
GroupPresentation wirtinger_group(const GaussCode& g);
/// Adds y and the relator y L y^-1 L^-1 (knots only).
GroupPresentation parallel_group_presentation(const GaussCode& g);

int evaluate(const Power& p, const std::vector<int>& assignment, const FiniteQuandle& x);

/// Number of generator assignments into X satisfying every relation.
std::uint64_t count_homs(const QuandlePresentation& p, const FiniteQuandle& x);

std::string to_text(const QuandlePresentation& p);
std::string to_text(const GroupPresentation& p);
std::string to_json(const QuandlePresentation& p);
std::string to_json(const GroupPresentation& p);
std::string word_to_text(const Word& w, const std::vector<std::string>& names);

}  // namespace welded

#endif  // WELDED_PRESENTATION_HPP
