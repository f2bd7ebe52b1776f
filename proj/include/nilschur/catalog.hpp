#ifndef NILSCHUR_CATALOG_HPP
#define NILSCHUR_CATALOG_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilschur/liealg.hpp"

namespace nilschur::catalog {

using liealg::LieAlgebra;

class UnknownName : public InputError {
 public:
  explicit UnknownName(const std::string& name) : InputError("UnknownName", "no catalog algebra named '" + name + "'") {}
};

class BadParameter : public InputError {
 public:
  explicit BadParameter(const std::string& what) : InputError("BadParameter", what) {}
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : InputError("ParseError", "at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A(n), H(m), L5_7, L5_8 (alias L(4,5,2,4)), L5_9, L6_26.
LieAlgebra get_named(std::string_view name);

/// '+'-separated catalog names, folded left with direct_sum.
LieAlgebra parse_spec(std::string_view expr);

struct Expected {
  std::size_t dim_M = 0;
  std::size_t nil_class = 0;
  std::size_t m = 0;
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  std::function<LieAlgebra()> builder;
  std::optional<Expected> expected;
};

/// Deterministic order; every entry with a known multiplier carries it.
const std::vector<CatalogEntry>& list_all();

}  // namespace nilschur::catalog

#endif  // NILSCHUR_CATALOG_HPP
