#pragma once

#include <concepts>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "regionbound/histogram.hpp"
#include "regionbound/json_io.hpp"

namespace regionbound::cli {

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

/// One value in a report. Text and CSV print `text`; JSON emits `json`.
struct Value {
  std::string text;
  Json json;

  Value(std::string s);
  Value(const char* s);
  Value(const BigInt& n);
  Value(bool b);
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Value(T n) : text(std::to_string(n)), json(n) {}
  Value(const Histogram& h);
  Value(std::string s, Json j);
};

/// Key/value header followed by an optional table; every output format is
/// rendered from the same instance.
struct Document {
  std::vector<std::pair<std::string, Value>> fields;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
  std::string rows_key = "rows";

  void add(std::string key, Value value);
  void render(std::ostream& out, Format format) const;
};

}  // namespace regionbound::cli
