#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/algebra.hpp"

// Line-oriented algebra definition files:
//
//   # comment
//   field rational            |  field gf <p>
//   basis <name>+
//   mul <b> <b> = <combo>     products not listed are zero
//   map <name> <b> = <combo>  images not listed are zero
//
// where combo = [-] term ((+|-) term)* or 0, and term = [coeff*]<b> with
// coeff an integer or p/q.

namespace novikov {

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  const SourcePos& pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

struct ProductEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  Vector value;
  SourcePos pos;
};

struct MapEntry {
  std::size_t basis = 0;
  Vector value;
  SourcePos pos;
};

struct NamedMap {
  std::string name;
  std::vector<MapEntry> entries;
  SourcePos pos;
};

struct AlgebraDoc {
  FieldSpec field;
  std::vector<std::string> basis;
  std::vector<ProductEntry> products;
  std::vector<NamedMap> maps;

  std::optional<std::size_t> basis_index(std::string_view name) const;
  const NamedMap* find_map(std::string_view name) const;

  AlgebraTable table() const;
  /// Throws InvalidArgument for an unknown name.
  LinearMap linear_map(std::string_view name) const;

  /// Same field, basis, structure constants and maps; positions ignored.
  friend bool operator==(const AlgebraDoc& a, const AlgebraDoc& b);
};

AlgebraDoc parse_algebra_file(std::string_view text);

/// A linear combination of the basis, e.g. "e1 - 1/2*e2". Columns in
/// errors are relative to `text`; `line` is copied into the position.
Vector parse_combo(const AlgebraDoc& doc, std::string_view text, std::size_t line = 1);

std::string format_combo(const std::vector<std::string>& basis, const Vector& v);

/// Canonical text: every nonzero product and every map, in basis order.
std::string serialize(const AlgebraDoc& doc);

/// A document describing `table` and the given named maps.
AlgebraDoc make_doc(const AlgebraTable& table,
                    const std::vector<std::pair<std::string, LinearMap>>& maps = {});

}  // namespace novikov
