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

#include "cloudac/dataset.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include "cloudac/error.hpp"

namespace cloudac::dataset {

std::string_view variant_name(Variant variant) {
  switch (variant) {
    case Variant::kCleveland: return "cleveland";
    case Variant::kHungarian: return "hungarian";
    case Variant::kSwiss: return "swiss";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "cleveland") return Variant::kCleveland;
  if (name == "hungarian") return Variant::kHungarian;
  if (name == "swiss" || name == "switzerland") return Variant::kSwiss;
  throw Error(ErrorCode::kConfiguration, "unknown dataset variant '" + std::string(name) +
                                             "' (expected cleveland, hungarian or swiss)");
}

std::string_view default_file_name(Variant variant) {
  switch (variant) {
    case Variant::kCleveland: return "processed.cleveland.data";
    case Variant::kHungarian: return "processed.hungarian.data";
    case Variant::kSwiss: return "processed.switzerland.data";
  }
  return "";
}

double HeartRecord::number(std::size_t field) const {
  const auto& v = values.at(field);
  if (!v) throw Error(ErrorCode::kInvalidArgument, "field is missing");
  return std::strtod(v->c_str(), nullptr);
}

bool is_decimal(std::string_view token) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '-' || token[i] == '+')) ++i;
  bool digit = false;
  bool point = false;
  for (; i < token.size(); ++i) {
    char c = token[i];
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c == '.' && !point) {
      point = true;
    } else {
      return false;
    }
  }
  return digit;
}

HeartRecord parse_row(std::string_view row, std::size_t line_no) {
  if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
  HeartRecord record;
  std::size_t field = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = row.find(',', start);
    std::string_view token =
        row.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (field >= kFieldCount) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": more than " +
                                         std::to_string(kFieldCount) + " fields");
    }
    if (token == "?") {
      record.values[field] = std::nullopt;
    } else if (is_decimal(token)) {
      record.values[field] = std::string(token);
    } else {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": field " +
                                         std::to_string(field + 1) + " (" +
                                         std::string(kFieldNames[field]) + ") is not a number: '" +
                                         std::string(token) + "'");
    }
    ++field;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (field != kFieldCount) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                       std::to_string(kFieldCount) + " fields, found " +
                                       std::to_string(field));
  }
  return record;
}

std::vector<HeartRecord> load_dataset(const std::filesystem::path& path, Variant /*variant*/) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read dataset file " + path.string());
  }
  std::vector<HeartRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.find_first_not_of(" \t") == std::string_view::npos) continue;
    records.push_back(parse_row(view, line_no));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on " + path.string());
  return records;
}

ByteString record_to_payload(const HeartRecord& record) {
  std::vector<ByteString> fields;
  fields.reserve(kFieldCount);
  for (const auto& v : record.values) fields.push_back(to_bytes(v ? *v : "?"));
  return frame_concat(fields);
}

HeartRecord payload_to_record(ByteView payload) {
  std::vector<ByteString> fields;
  try {
    fields = parse_frames(payload);
  } catch (const Error& e) {
    throw Error(ErrorCode::kDeserialization, std::string("malformed record payload: ") + e.what());
  }
  if (fields.size() != kFieldCount) {
    throw Error(ErrorCode::kDeserialization, "record payload has " + std::to_string(fields.size()) +
                                                 " fields, expected " +
                                                 std::to_string(kFieldCount));
  }
  HeartRecord record;
  for (std::size_t i = 0; i < kFieldCount; ++i) {
    std::string text = to_string(fields[i]);
    if (text == "?") {
      record.values[i] = std::nullopt;
    } else if (is_decimal(text)) {
      record.values[i] = std::move(text);
    } else {
      throw Error(ErrorCode::kDeserialization,
                  "record payload field " + std::string(kFieldNames[i]) + " is not a number");
    }
  }
  return record;
}

std::array<std::size_t, kFieldCount> missing_tally(const std::vector<HeartRecord>& records) {
  std::array<std::size_t, kFieldCount> tally{};
  for (const auto& r : records) {
    for (std::size_t i = 0; i < kFieldCount; ++i) tally[i] += r.missing(i) ? 1 : 0;
  }
  return tally;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CLOUDAC_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return std::filesystem::path("data") / "heart-disease";
}

DatasetSource resolve_source(std::string_view spec, const std::filesystem::path& data_dir) {
  DatasetSource source;
  if (spec.empty() || spec == "sample") {
    source.name = "sample";
    return source;
  }
  std::size_t colon = spec.find(':');
  if (colon != std::string_view::npos) {
    source.variant = parse_variant(spec.substr(0, colon));
    source.path = std::string(spec.substr(colon + 1));
  } else {
    source.variant = parse_variant(spec);
    source.path = data_dir / default_file_name(*source.variant);
  }
  source.name = std::string(variant_name(*source.variant));
  return source;
}

std::vector<ByteString> load_payloads(const DatasetSource& source) {
  std::vector<ByteString> payloads;
  if (!source.variant) {
    payloads.push_back(record_to_payload(parse_row(kClevelandFirstRow)));
    return payloads;
  }
  for (const auto& record : load_dataset(source.path, *source.variant)) {
    payloads.push_back(record_to_payload(record));
  }
  return payloads;
}

}  // namespace cloudac::dataset
