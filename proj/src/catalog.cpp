#include "nilschur/catalog.hpp"

#include <cctype>
#include <charconv>

namespace nilschur::catalog {

using liealg::BracketEntry;
using liealg::Vector;

namespace {

constexpr std::size_t kMaxParameter = 40;

BracketEntry basis_bracket(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  Vector value = exactla::zero_vector(n);
  value[k - 1] = 1;
  return {i - 1, j - 1, std::move(value)};
}

// 1-based triples (i, j, k) meaning [x_i, x_j] = x_k.
LieAlgebra from_table(std::size_t n, std::initializer_list<std::array<std::size_t, 3>> table) {
  std::vector<BracketEntry> entries;
  for (const auto& [i, j, k] : table) entries.push_back(basis_bracket(n, i, j, k));
  return LieAlgebra::validate(n, {}, entries);
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra::validate(n, {}, {}); }

LieAlgebra heisenberg(std::size_t m) {
  const std::size_t n = 2 * m + 1;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= 2 * m; ++i) labels.push_back("x" + std::to_string(i));
  labels.emplace_back("z");
  std::vector<BracketEntry> entries;
  for (std::size_t i = 1; i <= m; ++i) entries.push_back(basis_bracket(n, 2 * i - 1, 2 * i, n));
  return LieAlgebra::validate(n, std::move(labels), entries);
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Parses "X(k)" for the given prefix letter; nullopt when the shape differs.
std::optional<std::size_t> parameter(const std::string& name, char prefix) {
  if (name.size() < 4 || name[0] != prefix || name[1] != '(' || name.back() != ')') return std::nullopt;
  const std::string digits = name.substr(2, name.size() - 3);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw BadParameter("parameter of '" + name + "' is not a non-negative integer");
  }
  if (value == 0) throw BadParameter("parameter of '" + name + "' must be positive");
  if (value > kMaxParameter) {
    throw BadParameter("parameter of '" + name + "' exceeds " + std::to_string(kMaxParameter));
  }
  return value;
}

}  // namespace

LieAlgebra get_named(std::string_view raw) {
  const std::string name = trim(raw);
  if (auto n = parameter(name, 'A')) return abelian(*n);
  if (auto m = parameter(name, 'H')) return heisenberg(*m);
  if (name == "L5_7") return from_table(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}});
  if (name == "L5_8" || name == "L(4,5,2,4)") return from_table(5, {{1, 2, 4}, {1, 3, 5}});
  if (name == "L5_9") return from_table(5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
  if (name == "L6_26") return from_table(6, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}});
  throw UnknownName(name);
}

LieAlgebra parse_spec(std::string_view expr) {
  std::optional<LieAlgebra> result;
  std::size_t start = 0;
  while (start <= expr.size()) {
    std::size_t end = expr.find('+', start);
    if (end == std::string_view::npos) end = expr.size();
    const std::string term = trim(expr.substr(start, end - start));
    if (term.empty()) throw ParseError(start, "expected an algebra name");
    LieAlgebra next = [&] {
      try {
        return get_named(term);
      } catch (const InputError& e) {
        throw ParseError(start, e.what());
      }
    }();
    result = result ? liealg::direct_sum(*result, next) : std::move(next);
    start = end + 1;
  }
  return std::move(*result);
}

const std::vector<CatalogEntry>& list_all() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    const auto add = [&](std::string name, std::optional<Expected> expected) {
      std::string spec = name;
      out.push_back({std::move(name), [spec] { return parse_spec(spec); }, std::move(expected)});
    };
    for (std::size_t n = 1; n <= 8; ++n) {
      add("A(" + std::to_string(n) + ")", Expected{n * (n - 1) / 2, 1, 0, "abelian: n(n-1)/2"});
    }
    add("H(1)", Expected{2, 2, 1, "three-dimensional Heisenberg"});
    for (std::size_t m = 2; m <= 4; ++m) {
      add("H(" + std::to_string(m) + ")", Expected{2 * m * m - m - 1, 2, 1, "Heisenberg: 2m^2 - m - 1"});
    }
    add("L5_7", Expected{3, 4, 3, "filiform, meets the class-3 bound"});
    add("L5_8", Expected{6, 2, 2, "attains the general bound at m = 2"});
    add("L5_9", Expected{3, 3, 3, "meets the class-3 bound"});
    add("L6_26", Expected{8, 2, 3, "explicit cover: 15 symbols, 4 relations, 3 absorbed"});
    for (std::size_t k = 1; k <= 4; ++k) {
      const std::size_t n = k + 3;
      add("H(1)+A(" + std::to_string(k) + ")",
          Expected{(n - 1) * (n - 2) / 2 + 1, 2, 1, "m = 1 attainer: (n-1)(n-2)/2 + 1"});
    }
    add("L5_8+A(1)", Expected{9, 2, 2, "direct sum formula: 6 + 3"});
    add("H(2)+A(1)", Expected{9, 2, 1, "direct sum formula: 5 + 4"});
    return out;
  }();
  return entries;
}

}  // namespace nilschur::catalog
