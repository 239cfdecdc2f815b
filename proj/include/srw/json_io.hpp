#ifndef SRW_JSON_IO_HPP
#define SRW_JSON_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "srw/core.hpp"
#include "srw/ideals.hpp"

namespace srw {

/// Contents of a semiring file:
/// {"n", "zero", "one", "add", "mul", "labels"?, "order"?}.
struct SemiringFile {
  SemiringTables tables;
  std::optional<std::vector<std::vector<bool>>> order;
};

/// Structural errors (bad JSON, missing keys, ragged rows) throw ParseError.
SemiringFile parse_semiring_json(std::string_view text);
SemiringFile read_semiring_file(const std::filesystem::path& path);

/// Validated semiring plus the view its file describes: the supplied order
/// when present, otherwise default_view.
OrderedView load_view(const SemiringFile& file);

nlohmann::json semiring_to_json(const FiniteSemiring& S, const OrderRelation* order = nullptr);

/// {"star": [int]}.
std::vector<int> parse_pc_function_json(std::string_view text);

/// Sorted element indices.
nlohmann::json to_json(const ElementSet& set);
inline nlohmann::json to_json(const IdealSet& I) { return to_json(I.members); }
nlohmann::json to_json(const std::vector<IdealSet>& ideals);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace srw

#endif  // SRW_JSON_IO_HPP
