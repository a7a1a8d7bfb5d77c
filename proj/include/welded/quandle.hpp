#ifndef WELDED_QUANDLE_HPP
#define WELDED_QUANDLE_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace welded {

enum class QuandleAxiom { idempotence, right_invertibility, self_distributivity, malformed };

std::string to_string(QuandleAxiom a);

/// Raised when a table is not a quandle. `witness` holds the offending
/// elements: (a) for idempotence, (a1, a2, b) with a1*b = a2*b for right
/// invertibility, (a, b, c) for self-distributivity.
class QuandleAxiomError : public std::invalid_argument {
 public:
  QuandleAxiomError(QuandleAxiom axiom, std::vector<int> witness, const std::string& what)
      : std::invalid_argument(what), axiom_(axiom), witness_(std::move(witness)) {}

  QuandleAxiom axiom() const noexcept { return axiom_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  QuandleAxiom axiom_;
  std::vector<int> witness_;
};

/// Finite quandle on {0, ..., n-1}: op(a, b) = a * b, inv(a, b) = a *bar b.
class FiniteQuandle {
 public:
  /// Checks the three axioms and derives the inverse table.
  explicit FiniteQuandle(std::vector<std::vector<int>> table, std::string name = "custom");

  std::size_t size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }

  int op(int a, int b) const noexcept { return table_[idx(a, b)]; }
  int inv(int a, int b) const noexcept { return inv_table_[idx(a, b)]; }
  /// a * b for exponent +1, a *bar b for -1.
  int act(int a, int b, int exponent) const noexcept { return exponent > 0 ? op(a, b) : inv(a, b); }

  std::vector<std::vector<int>> table() const;

 private:
  std::size_t idx(int a, int b) const noexcept { return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b); }

  std::size_t n_ = 0;
  std::string name_;
  std::vector<int> table_;
  std::vector<int> inv_table_;
};

/// Dihedral quandle R_n (a*b = 2b - a mod n) or trivial quandle T_n (a*b = a).
FiniteQuandle builtin_quandle(const std::string& name, std::size_t n);

/// Accepts "R3", "T2", "dihedral:5", "trivial:4".
FiniteQuandle quandle_from_name(const std::string& spec);

FiniteQuandle quandle_from_json(const std::string& text);
/// n lines of n comma-separated integers.
FiniteQuandle quandle_from_csv(const std::string& text);
/// Dispatches on the extension (.json or .csv).
FiniteQuandle load_quandle_file(const std::string& path);

/// Builtin name or table file path.
FiniteQuandle resolve_quandle(const std::string& spec);

std::string quandle_to_json(const FiniteQuandle& q);

}  // namespace welded

#endif  // WELDED_QUANDLE_HPP
