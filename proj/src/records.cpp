#include "circfib/records.hpp"

#include <sstream>

#include <json.hpp>

#include "circfib/errors.hpp"

namespace circfib {

namespace {

std::string escape_tsv(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_tsv(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    const char c = s[++i];
    out.push_back(c == 't' ? '\t' : c == 'n' ? '\n' : c);
  }
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    const auto stop = end == std::string_view::npos ? text.size() : end;
    lines.emplace_back(text.substr(start, stop - start));
    start = stop + 1;
  }
  return lines;
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = line.find('\t', start);
    out.push_back(unescape_tsv(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

}  // namespace

const std::string& Record::at(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  throw domain_error("record has no field '" + std::string(key) + "'");
}

Format parse_format(std::string_view name) {
  if (name == "tsv") return Format::tsv;
  if (name == "jsonlines") return Format::jsonlines;
  throw domain_error("unknown format '" + std::string(name) + "'");
}

// Rows are written under the first record's header; records with other
// field names start a new header block.
std::string write_tsv(const std::vector<Record>& records) {
  std::ostringstream out;
  const Record* header = nullptr;
  for (const auto& r : records) {
    const bool same = header && header->fields.size() == r.fields.size() &&
                      std::equal(r.fields.begin(), r.fields.end(), header->fields.begin(),
                                 [](const auto& a, const auto& b) { return a.first == b.first; });
    if (!same) {
      if (header) out << '\n';
      for (std::size_t i = 0; i < r.fields.size(); ++i) out << (i ? "\t" : "") << escape_tsv(r.fields[i].first);
      out << '\n';
      header = &r;
    }
    for (std::size_t i = 0; i < r.fields.size(); ++i) out << (i ? "\t" : "") << escape_tsv(r.fields[i].second);
    out << '\n';
  }
  return out.str();
}

std::string write_jsonlines(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields) j[k] = v;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string write_records(const std::vector<Record>& records, Format format) {
  return format == Format::tsv ? write_tsv(records) : write_jsonlines(records);
}

std::vector<Record> parse_tsv(std::string_view text) {
  std::vector<Record> out;
  std::vector<std::string> header;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) {
      header.clear();
      continue;
    }
    auto cells = split_tabs(line);
    if (header.empty()) {
      header = std::move(cells);
      continue;
    }
    if (cells.size() != header.size()) throw domain_error("tsv row has " + std::to_string(cells.size()) + " cells");
    Record r;
    for (std::size_t i = 0; i < cells.size(); ++i) r.add(header[i], std::move(cells[i]));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> parse_jsonlines(std::string_view text) {
  std::vector<Record> out;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    const auto j = nlohmann::ordered_json::parse(line);
    Record r;
    for (const auto& [k, v] : j.items()) r.add(k, v.get<std::string>());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> parse_records(std::string_view text, Format format) {
  return format == Format::tsv ? parse_tsv(text) : parse_jsonlines(text);
}

}  // namespace circfib
