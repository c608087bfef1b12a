#ifndef CIRCFIB_RECORDS_HPP
#define CIRCFIB_RECORDS_HPP

// Flat string records written as TSV (header line, then one row per record)
// or as JSON lines (one object per record, fields in order).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circfib {

struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const std::string& at(std::string_view key) const;

  friend bool operator==(const Record&, const Record&) = default;
};

enum class Format { tsv, jsonlines };

Format parse_format(std::string_view name);

std::string write_tsv(const std::vector<Record>& records);
std::string write_jsonlines(const std::vector<Record>& records);
std::string write_records(const std::vector<Record>& records, Format format);

std::vector<Record> parse_tsv(std::string_view text);
std::vector<Record> parse_jsonlines(std::string_view text);
std::vector<Record> parse_records(std::string_view text, Format format);

}  // namespace circfib

#endif  // CIRCFIB_RECORDS_HPP
