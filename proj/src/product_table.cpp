#include "forestcalc/product_table.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "forestcalc/errors.hpp"

namespace forestcalc {

ProductTable::ProductTable(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw PreconditionError("table dimension must be positive");
  table_.assign(static_cast<std::size_t>(dimension) * dimension, std::vector<Rational>(dimension, Rational(0)));
}

void ProductTable::check_index(int i) const {
  if (i < 0 || i >= dimension_) throw PreconditionError("basis index " + std::to_string(i) + " out of range");
}

const std::vector<Rational>& ProductTable::entry(int i, int j) const {
  check_index(i);
  check_index(j);
  return table_[static_cast<std::size_t>(i) * dimension_ + j];
}

void ProductTable::set(int i, int j, std::vector<Rational> coefficients) {
  check_index(i);
  check_index(j);
  if (static_cast<int>(coefficients.size()) != dimension_) {
    throw MismatchError("table entry has " + std::to_string(coefficients.size()) + " coefficients, expected " +
                        std::to_string(dimension_));
  }
  table_[static_cast<std::size_t>(i) * dimension_ + j] = std::move(coefficients);
}

TableElement ProductTable::basis(int i) const {
  check_index(i);
  return TableElement(i);
}

TableElement ProductTable::product(const TableElement& a, const TableElement& b) const {
  return bilinear(a, b, [&](int i, int j) {
    TableElement out;
    const auto& e = entry(i, j);
    for (int k = 0; k < dimension_; ++k) out.add(k, e[k]);
    return out;
  });
}

ProductTable ProductTable::opposite() const {
  ProductTable out(dimension_);
  for (int i = 0; i < dimension_; ++i) {
    for (int j = 0; j < dimension_; ++j) out.set(i, j, entry(j, i));
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_index(std::string_view s, int line) {
  s = trim(s);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos || s.size() > 6) {
    throw ParseError("line " + std::to_string(line) + ": bad index '" + std::string(s) + "'");
  }
  return std::stoi(std::string(s));
}

}  // namespace

ProductTable parse_product_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::optional<ProductTable> table;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    if (!table) {
      if (s.substr(0, 9) != "dimension") throw ParseError("line " + std::to_string(line) + ": expected 'dimension d'");
      table.emplace(parse_index(s.substr(9), line));
      continue;
    }
    auto arrow = s.find("->");
    if (arrow == std::string_view::npos) throw ParseError("line " + std::to_string(line) + ": expected '->'");
    std::string_view lhs = trim(s.substr(0, arrow));
    auto space = lhs.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError("line " + std::to_string(line) + ": expected 'i j'");
    int i = parse_index(lhs.substr(0, space), line);
    int j = parse_index(lhs.substr(space + 1), line);
    std::vector<Rational> coeffs;
    std::string_view rhs = trim(s.substr(arrow + 2));
    while (true) {
      auto comma = rhs.find(',');
      coeffs.push_back(parse_rational(trim(rhs.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rhs = rhs.substr(comma + 1);
    }
    try {
      table->set(i, j, std::move(coeffs));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  if (!table) throw ParseError("missing 'dimension' header");
  return *table;
}

std::string to_string(const ProductTable& table) {
  std::string s = "dimension " + std::to_string(table.dimension()) + "\n";
  for (int i = 0; i < table.dimension(); ++i) {
    for (int j = 0; j < table.dimension(); ++j) {
      const auto& e = table.entry(i, j);
      bool zero = true;
      for (const auto& c : e) zero = zero && c == 0;
      if (zero) continue;
      s += std::to_string(i) + " " + std::to_string(j) + " -> ";
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) s += ",";
        s += to_string(e[k]);
      }
      s += "\n";
    }
  }
  return s;
}

}  // namespace forestcalc
