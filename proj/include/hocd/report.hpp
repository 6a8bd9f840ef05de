#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hocd/gold_study.hpp"
#include "hocd/inverse_study.hpp"
#include "hocd/spectrum.hpp"

namespace hocd::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// p, n, order, modulus and the element encoding.
Json field_header(const Field& field);
std::string encoding_note(const Field& field);

// Elapsed time is never serialized here; it belongs in the meta file.
Json to_json(const SpectrumReport& report);
Json to_json(const InverseCaseReport& report);
Json to_json(const GoldSecondOrder& result);
Json to_json(const SubfieldUniformity& result);
Json to_json(const QuadraticCheck& result);

// "k:mult;k:mult;..."
std::string histogram_cell(const std::map<std::uint32_t, std::uint64_t>& histogram);
// "a1 a2 ... at|b", empty when there is no witness
std::string witness_cell(const std::vector<Witness>& witnesses);

// '#' header lines with the field and function, then
// c_index,t,max_count,histogram,first_witness.
std::string spectrum_csv(const Field& field, const std::string& function,
                         const std::map<Element, SpectrumReport>& reports);

// Writes every (path, content) pair through a temporary file in the same
// directory; renames happen only after all temporaries are written.
void write_files_atomically(const std::vector<std::pair<std::filesystem::path, std::string>>& files);

// Companion path for timing metadata: "<json>.meta.json".
std::filesystem::path meta_path(const std::filesystem::path& json_path);

}  // namespace hocd::report
