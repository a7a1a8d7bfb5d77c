#include "welded/quandle.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace welded {

std::string to_string(QuandleAxiom a) {
  switch (a) {
    case QuandleAxiom::idempotence: return "idempotence";
    case QuandleAxiom::right_invertibility: return "right-invertibility";
    case QuandleAxiom::self_distributivity: return "self-distributivity";
    case QuandleAxiom::malformed: return "malformed";
  }
  return "unknown";
}

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

FiniteQuandle::FiniteQuandle(std::vector<std::vector<int>> table, std::string name)
    : n_(table.size()), name_(std::move(name)) {
  if (n_ == 0) throw QuandleAxiomError(QuandleAxiom::malformed, {}, "quandle table is empty");
  table_.resize(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a) {
    if (table[a].size() != n_)
      throw QuandleAxiomError(QuandleAxiom::malformed, {static_cast<int>(a)}, "row " + std::to_string(a) + " has the wrong length");
    for (std::size_t b = 0; b < n_; ++b) {
      int v = table[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n_)
        throw QuandleAxiomError(QuandleAxiom::malformed, {static_cast<int>(a), static_cast<int>(b)},
                                "entry (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
      table_[a * n_ + b] = v;
    }
  }
  const int n = static_cast<int>(n_);
  for (int a = 0; a < n; ++a)
    if (op(a, a) != a)
      throw QuandleAxiomError(QuandleAxiom::idempotence, {a}, "idempotence fails: " + std::to_string(a) + " * " + std::to_string(a) + " != " + std::to_string(a));

  inv_table_.assign(n_ * n_, -1);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      int c = op(a, b);
      int& slot = inv_table_[idx(c, b)];
      if (slot >= 0)
        throw QuandleAxiomError(QuandleAxiom::right_invertibility, {slot, a, b},
                                "right invertibility fails: " + std::to_string(slot) + " * " + std::to_string(b) + " = " + std::to_string(a) +
                                    " * " + std::to_string(b));
      slot = a;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(op(a, c), op(b, c)))
          throw QuandleAxiomError(QuandleAxiom::self_distributivity, {a, b, c}, "self-distributivity fails at " + triple(a, b, c));
}

std::vector<std::vector<int>> FiniteQuandle::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
  return t;
}

FiniteQuandle builtin_quandle(const std::string& name, std::size_t n) {
  if (n == 0) throw std::invalid_argument("quandle order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  const int m = static_cast<int>(n);
  if (name == "dihedral") {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ((2 * b - a) % m + m) % m;
    return FiniteQuandle(std::move(t), "R" + std::to_string(n));
  }
  if (name == "trivial") {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a;
    return FiniteQuandle(std::move(t), "T" + std::to_string(n));
  }
  throw std::invalid_argument("unknown builtin quandle '" + name + "'");
}

FiniteQuandle quandle_from_name(const std::string& spec) {
  auto parse_order = [&](const std::string& digits) -> std::size_t {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("unknown quandle '" + spec + "'");
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (auto colon = spec.find(':'); colon != std::string::npos)
    return builtin_quandle(spec.substr(0, colon), parse_order(spec.substr(colon + 1)));
  if (!spec.empty() && spec[0] == 'R') return builtin_quandle("dihedral", parse_order(spec.substr(1)));
  if (!spec.empty() && spec[0] == 'T') return builtin_quandle("trivial", parse_order(spec.substr(1)));
  throw std::invalid_argument("unknown quandle '" + spec + "'");
}

FiniteQuandle quandle_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != table.size())
      throw QuandleAxiomError(QuandleAxiom::malformed, {}, "\"n\" does not match the table size");
    return FiniteQuandle(std::move(table), j.value("name", std::string("custom")));
  } catch (const nlohmann::json::exception& e) {
    throw QuandleAxiomError(QuandleAxiom::malformed, {}, std::string("malformed quandle JSON: ") + e.what());
  }
}

FiniteQuandle quandle_from_csv(const std::string& text) {
  std::vector<std::vector<int>> table;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<int> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(std::stoi(cell));
      } catch (const std::exception&) {
        throw QuandleAxiomError(QuandleAxiom::malformed, {}, "malformed CSV cell '" + cell + "'");
      }
    }
    table.push_back(std::move(row));
  }
  return FiniteQuandle(std::move(table));
}

FiniteQuandle load_quandle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open quandle file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return quandle_from_csv(buf.str());
  return quandle_from_json(buf.str());
}

FiniteQuandle resolve_quandle(const std::string& spec) {
  if (spec.find('/') != std::string::npos || spec.find(".json") != std::string::npos || spec.find(".csv") != std::string::npos)
    return load_quandle_file(spec);
  return quandle_from_name(spec);
}

std::string quandle_to_json(const FiniteQuandle& q) {
  nlohmann::ordered_json j;
  j["n"] = q.size();
  j["table"] = q.table();
  return j.dump();
}

}  // namespace welded
