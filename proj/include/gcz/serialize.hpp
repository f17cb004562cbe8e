#pragma once

#include <string>

#include <json.hpp>

#include "gcz/array.hpp"
#include "gcz/correlation.hpp"
#include "gcz/seeds.hpp"
#include "gcz/verify.hpp"

namespace gcz {

using ordered_json = nlohmann::ordered_json;

// Complex values render as "re+imi": exact ones as Gaussian integers
// ("-4+4i"), inexact ones with 12 significant digits per component.
std::string format_complex(const ComplexValue& v);

// Canonical JSON for an array: {"q":..., "rows":..., "cols":..., "exp":[[...]]}.
ordered_json array_to_json(const UnimodularArray& a);
UnimodularArray array_from_json(const nlohmann::json& j);

// Pairs: {"first": <array>, "second": <array>}.
ordered_json pair_to_json(const ArrayPair& p);
ArrayPair pair_from_json(const nlohmann::json& j);

ordered_json table_to_json(const CorrelationTable& t);

// CSV: one row per tau1 (ascending over the table's range), columns tau2,
// values as format_complex, no header.
std::string table_to_csv(const CorrelationTable& t);

ordered_json report_to_json(const ZczReport& r);

ordered_json seed_to_json(const SeedRecord& s);

// File helpers used by the CLI; both throw Error(bad_input) on failure.
ArrayPair load_pair(const std::string& path);
void save_text(const std::string& path, const std::string& text);

// Uniform rendering for JSON artifacts: 2-space indent, trailing newline.
std::string dump_json(const ordered_json& j);

}  // namespace gcz
