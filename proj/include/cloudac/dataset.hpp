// Copyright 2026 The cloudac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// UCI heart-disease records (processed 14-attribute files) and their
// canonical payload serialization.

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cloudac/primitives.hpp"

namespace cloudac::dataset {

enum class Variant { kCleveland, kHungarian, kSwiss };

inline constexpr Variant kAllVariants[] = {Variant::kCleveland, Variant::kHungarian,
                                           Variant::kSwiss};

inline constexpr std::size_t kFieldCount = 14;

inline constexpr std::array<std::string_view, kFieldCount> kFieldNames = {
    "age",     "sex",   "cp",      "trestbps", "chol",  "fbs", "restecg",
    "thalach", "exang", "oldpeak", "slope",    "ca",    "thal", "num"};

std::string_view variant_name(Variant variant);
/// Accepts the lowercase names ("cleveland", "hungarian", "swiss") and
/// "switzerland". Throws kConfiguration otherwise.
Variant parse_variant(std::string_view name);
/// UCI file name, e.g. "processed.switzerland.data".
std::string_view default_file_name(Variant variant);

/// One patient row. Each value keeps the decimal text from the source file
/// so serialization is exact; std::nullopt marks a missing ("?") value.
struct HeartRecord {
  std::array<std::optional<std::string>, kFieldCount> values;

  bool missing(std::size_t field) const { return !values.at(field).has_value(); }
  /// Numeric value of a present field.
  double number(std::size_t field) const;

  friend bool operator==(const HeartRecord&, const HeartRecord&) = default;
};

/// True for an optional sign followed by digits with at most one decimal
/// point and at least one digit ("63.0", "-.5", "0").
bool is_decimal(std::string_view token);

/// Parses one comma-separated row. Throws kParse (message names `line_no`)
/// on a wrong field count or a token that is neither "?" nor decimal.
HeartRecord parse_row(std::string_view row, std::size_t line_no = 1);

/// Loads every record from `path`. Blank lines are skipped and a trailing
/// '\r' is ignored. Throws kIo when the file cannot be read.
std::vector<HeartRecord> load_dataset(const std::filesystem::path& path, Variant variant);

/// frame_concat of the 14 decimal texts, missing values rendered as "?".
ByteString record_to_payload(const HeartRecord& record);
/// Inverse of record_to_payload. Throws kDeserialization on bad framing,
/// the wrong number of fields or a non-decimal value.
HeartRecord payload_to_record(ByteView payload);

/// Missing-value count per column.
std::array<std::size_t, kFieldCount> missing_tally(const std::vector<HeartRecord>& records);

/// First row of the processed Cleveland file.
inline constexpr std::string_view kClevelandFirstRow =
    "63.0,1.0,1.0,145.0,233.0,1.0,2.0,150.0,0.0,2.3,3.0,0.0,6.0,0";

/// Default data directory: $CLOUDAC_DATA_DIR when set, otherwise
/// "data/heart-disease" relative to the working directory.
std::filesystem::path default_data_dir();

struct DatasetSource {
  std::string name;  // "sample" or a variant name
  std::optional<Variant> variant;
  std::filesystem::path path;  // empty for the built-in sample
};

/// Resolves "sample", a variant name (looked up in `data_dir`), or
/// "<variant>:<path>". Throws kConfiguration for unknown names.
DatasetSource resolve_source(std::string_view spec, const std::filesystem::path& data_dir);

/// Payloads for a resolved source: the sample row for "sample", otherwise
/// every record of the file.
std::vector<ByteString> load_payloads(const DatasetSource& source);

}  // namespace cloudac::dataset
