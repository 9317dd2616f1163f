#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace spherecross::cli {

/// RFC-4180 field quoting: quote when the field contains a comma, quote, or
/// newline; embedded quotes are doubled.
inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_quote(fields[i]);
  }
  out += '\n';
  return out;
}

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fmt_int(long long v) { return std::to_string(v); }

/// Appends rows to a CSV file, writing the provenance comment line and the
/// header row when the file does not exist yet.
class CsvAppender {
 public:
  CsvAppender(const std::string& path, const std::string& provenance_json,
              const std::vector<std::string>& header) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    out_.open(path, std::ios::app | std::ios::binary);
    if (!out_) throw std::runtime_error("cannot open CSV file: " + path);
    if (fresh) {
      out_ << "# " << provenance_json << "\n";
      out_ << csv_row(header);
    }
  }

  void append(const std::vector<std::string>& fields) { out_ << csv_row(fields); }

 private:
  std::ofstream out_;
};

}  // namespace spherecross::cli
