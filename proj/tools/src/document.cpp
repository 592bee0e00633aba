#include "document.hpp"

#include <algorithm>
#include <stdexcept>

namespace regionbound::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or csv)");
}

Value::Value(std::string s) : text(s), json(std::move(s)) {}
Value::Value(const char* s) : Value(std::string(s)) {}
Value::Value(const BigInt& n) : text(to_decimal(n)), json(to_decimal(n)) {}
Value::Value(bool b) : text(b ? "true" : "false"), json(b) {}
Value::Value(const Histogram& h) : text(h.to_string()), json(histogram_to_json(h)) {}
Value::Value(std::string s, Json j) : text(std::move(s)), json(std::move(j)) {}

void Document::add(std::string key, Value value) {
  fields.emplace_back(std::move(key), std::move(value));
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_text(const Document& doc, std::ostream& out) {
  std::size_t key_width = 0;
  for (const auto& [key, value] : doc.fields) key_width = std::max(key_width, key.size());
  for (const auto& [key, value] : doc.fields) {
    out << key << ':' << std::string(key_width - key.size() + 1, ' ') << value.text << '\n';
  }
  if (doc.columns.empty()) return;
  if (!doc.fields.empty()) out << '\n';

  std::vector<std::size_t> widths;
  for (const auto& c : doc.columns) widths.push_back(c.size());
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].text.size());
    }
  }
  auto line = [&](auto cell_text, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      std::string cell = cell_text(i);
      s += cell;
      if (i + 1 < n) s += std::string(widths[i] - cell.size() + 2, ' ');
    }
    out << s << '\n';
  };
  line([&](std::size_t i) { return doc.columns[i]; }, doc.columns.size());
  for (const auto& row : doc.rows) {
    line([&](std::size_t i) { return row[i].text; }, row.size());
  }
}

void render_json(const Document& doc, std::ostream& out) {
  Json j = Json::object();
  for (const auto& [key, value] : doc.fields) j[key] = value.json;
  if (!doc.columns.empty()) {
    Json rows = Json::array();
    for (const auto& row : doc.rows) {
      Json r = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) r[doc.columns[i]] = row[i].json;
      rows.push_back(std::move(r));
    }
    j[doc.rows_key] = std::move(rows);
  }
  out << j.dump(2) << '\n';
}

// Header fields are repeated as leading columns on every row.
void render_csv(const Document& doc, std::ostream& out) {
  std::vector<std::string> header;
  for (const auto& [key, value] : doc.fields) header.push_back(key);
  header.insert(header.end(), doc.columns.begin(), doc.columns.end());
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(cells[i]);
    }
    out << '\n';
  };
  emit(header);
  std::vector<std::string> prefix;
  for (const auto& [key, value] : doc.fields) prefix.push_back(value.text);
  if (doc.columns.empty()) {
    emit(prefix);
    return;
  }
  for (const auto& row : doc.rows) {
    std::vector<std::string> cells = prefix;
    for (const auto& v : row) cells.push_back(v.text);
    emit(cells);
  }
}

}  // namespace

void Document::render(std::ostream& out, Format format) const {
  switch (format) {
    case Format::text: render_text(*this, out); break;
    case Format::json: render_json(*this, out); break;
    case Format::csv: render_csv(*this, out); break;
  }
}

}  // namespace regionbound::cli
