#pragma once

#include <charconv>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stressdet/errors.hpp"

namespace stressdet::csv {

// Whole-file CSV with a header line. Fields are either numeric or plain
// strings; callers pick per column. Built on from_chars/to_chars so values
// round-trip exactly and parsing stays fast on multi-million-row files.

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;        // numeric columns
  std::vector<std::string> trailing_strings;       // last column when requested
};

// Reads a CSV of doubles. When `string_last_column` is set the final column
// is kept as text (dataset labels). Throws IoError/SchemaError.
Table read_table(const std::filesystem::path& path, bool string_last_column = false);

// Buffered writer emitting shortest round-trip representations.
class Writer {
 public:
  explicit Writer(const std::filesystem::path& path);
  ~Writer();

  Writer(const Writer&) = delete;
  Writer& operator=(const Writer&) = delete;

  void field(double v);
  void field(std::string_view s);
  void end_row();
  void close();  // flush + rename into place

 private:
  void put_separator();

  std::filesystem::path path_;
  std::string buffer_;
  bool row_open_ = false;
  bool closed_ = false;
};

std::string format_double(double v);
double parse_double(std::string_view s, const char* context);

}  // namespace stressdet::csv
