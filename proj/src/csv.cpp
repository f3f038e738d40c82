#include "stressdet/csv.hpp"

#include <cstdio>
#include <fstream>

namespace stressdet::csv {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string data;
  in.seekg(0, std::ios::end);
  data.resize(static_cast<std::size_t>(in.tellg()));
  in.seekg(0);
  in.read(data.data(), static_cast<std::streamsize>(data.size()));
  return data;
}

std::vector<std::string_view> split_line(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, const char* context) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw SchemaError(std::string(context) + ": bad numeric field '" +
                      std::string(s) + "'");
  }
  return v;
}

Table read_table(const std::filesystem::path& path, bool string_last_column) {
  const std::string data = read_file(path);
  Table table;

  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= data.size()) return false;
    std::size_t eol = data.find('\n', pos);
    if (eol == std::string::npos) eol = data.size();
    line = std::string_view(data).substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    return true;
  };

  std::string_view line;
  if (!next_line(line) || line.empty()) {
    throw SchemaError(path.string() + ": missing header line");
  }
  for (std::string_view h : split_line(line)) table.header.emplace_back(h);

  const std::size_t ncols = table.header.size();
  const std::size_t numeric = string_last_column ? ncols - 1 : ncols;
  table.columns.resize(numeric);

  std::size_t row = 1;
  while (next_line(line)) {
    ++row;
    if (line.empty()) continue;
    const std::vector<std::string_view> fields = split_line(line);
    if (fields.size() != ncols) {
      throw SchemaError(path.string() + ":" + std::to_string(row) +
                        ": expected " + std::to_string(ncols) + " fields, got " +
                        std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < numeric; ++c) {
      table.columns[c].push_back(parse_double(fields[c], path.c_str()));
    }
    if (string_last_column) {
      table.trailing_strings.emplace_back(fields.back());
    }
  }
  return table;
}

Writer::Writer(const std::filesystem::path& path) : path_(path) {
  buffer_.reserve(1 << 20);
}

Writer::~Writer() {
  if (!closed_) {
    // abandoned writer: leave a .partial file rather than a truncated output
    try {
      std::ofstream out(path_.string() + ".partial", std::ios::binary);
      out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    } catch (...) {
    }
  }
}

void Writer::put_separator() {
  if (row_open_) buffer_.push_back(',');
  row_open_ = true;
}

void Writer::field(double v) {
  put_separator();
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  buffer_.append(buf, res.ptr);
}

void Writer::field(std::string_view s) {
  put_separator();
  buffer_.append(s);
}

void Writer::end_row() {
  buffer_.push_back('\n');
  row_open_ = false;
}

void Writer::close() {
  if (closed_) return;
  std::ofstream out(path_, std::ios::binary);
  if (!out) throw IoError("cannot write " + path_.string());
  out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  if (!out) throw IoError("short write to " + path_.string());
  closed_ = true;
  buffer_.clear();
}

}  // namespace stressdet::csv
