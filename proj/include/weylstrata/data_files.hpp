#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylstrata/character_table.hpp"

namespace weylstrata {

// Parsed SPI 1 file. A file may instead state a rule for a whole family
// ("TYPE A", "CHAR any", "COUNT all": every irrep is in the image).
struct SpringerFile {
    std::string type_text;
    std::optional<int> characteristic; // empty for CHAR any
    bool all = false;                  // COUNT all
    std::vector<std::pair<IrrepLabel, std::string>> entries; // label, unipotent class (may be empty)
};

SpringerFile parse_springer_file(std::string_view text);

// Parsed SCM 1 file: stratum label -> Weyl-group class name, in file order.
struct StrataClassMap {
    CartanType type;
    std::vector<std::pair<IrrepLabel, std::string>> entries;

    const std::string* find(const IrrepLabel& label) const;
};

StrataClassMap parse_class_map(std::string_view text);

std::string read_file(const std::string& path);

} // namespace weylstrata
