#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz::catalog {

using Params = std::map<std::string, Rational>;

/// One parameter of a family. Indexed parameters expand to prefix+index for
/// index in [first_index, n], e.g. a4..an.
struct ParamSpec {
  std::string name;
  bool indexed = false;
  std::size_t first_index = 0;
  bool integer = false;
  std::optional<Rational> default_value;  // absent means required
  std::string note;
};

struct Entry {
  std::string key;
  std::string description;
  std::size_t min_n = 1;
  std::string validity;
  /// Dimension of the built algebra is n + extra_dims (1 for solvable extensions).
  std::size_t extra_dims = 0;
  bool solvable_extension = false;
  std::vector<ParamSpec> params;
};

const std::vector<Entry>& list_entries();
const Entry& find_entry(std::string_view key);

/// Builds the named algebra; throws BadParams for an unknown key, n out of
/// range, unknown parameter names, or parameter values outside the family's
/// stated range. Basis order is e1..en, then x for solvable extensions.
Algebra build(std::string_view key, std::size_t n, const Params& params = {});

/// Parsed form of the CLI name grammar KEY(n[, name=value]...).
struct NameSpec {
  std::string key;
  std::size_t n = 0;
  Params params;
};

NameSpec parse_name(std::string_view text);
std::string format_name(const NameSpec& spec);
Algebra build_from_name(std::string_view text);

/// True when text looks like a catalog name rather than a file path.
bool looks_like_name(std::string_view text);

}  // namespace leibniz::catalog
