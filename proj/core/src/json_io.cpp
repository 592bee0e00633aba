#include "regionbound/json_io.hpp"

#include <stdexcept>

namespace regionbound {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

std::string text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw std::invalid_argument("expected a number string, got " + j.dump());
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(text(v)));
  return out;
}

}  // namespace

Json histogram_to_json(const Histogram& h) {
  Json entries = Json::array();
  for (const auto& e : h.entries()) entries.push_back(to_decimal(e));
  return Json{{"entries", entries}};
}

Histogram histogram_from_json(const Json& j) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw std::invalid_argument("'entries' must be an array");
  std::vector<BigInt> values;
  for (const auto& e : entries) values.push_back(parse_decimal(text(e)));
  return Histogram(std::move(values));
}

Json arrangement_to_json(const OrientedArrangement1D& arrangement) {
  return Json{{"points", rationals_to_json(arrangement.points)},
              {"orientations", arrangement.orientations}};
}

OrientedArrangement1D arrangement1d_from_json(const Json& j) {
  OrientedArrangement1D arrangement;
  arrangement.points = rationals_from_json(field(j, "points"));
  arrangement.orientations = field(j, "orientations").get<std::vector<int>>();
  arrangement.validate();
  return arrangement;
}

Json arrangement_to_json(const OrientedArrangement2D& arrangement) {
  Json lines = Json::array();
  for (const Line& line : arrangement.lines) {
    lines.push_back(Json{{"a", to_string(line.a)}, {"b", to_string(line.b)}, {"c", to_string(line.c)}});
  }
  return Json{{"lines", lines}};
}

OrientedArrangement2D arrangement2d_from_json(const Json& j) {
  const Json& lines = field(j, "lines");
  if (!lines.is_array()) throw std::invalid_argument("'lines' must be an array");
  OrientedArrangement2D arrangement;
  for (const auto& l : lines) {
    Line line{parse_rational(text(field(l, "a"))), parse_rational(text(field(l, "b"))),
              parse_rational(text(field(l, "c")))};
    if (line.degenerate()) throw std::invalid_argument("line with a = b = 0");
    arrangement.lines.push_back(std::move(line));
  }
  return arrangement;
}

Json net_to_json(const ReluNet1D& net) {
  Json layers = Json::array();
  for (const ReluLayer& layer : net.layers) {
    Json weights = Json::array();
    for (const auto& row : layer.weights) weights.push_back(rationals_to_json(row));
    layers.push_back(Json{{"weights", weights}, {"bias", rationals_to_json(layer.bias)}});
  }
  return Json{{"input_dim", 1}, {"layers", layers}};
}

ReluNet1D net_from_json(const Json& j) {
  if (j.contains("input_dim") && j.at("input_dim") != 1) {
    throw std::invalid_argument("only networks with input dimension 1 are supported");
  }
  const Json& layers = field(j, "layers");
  if (!layers.is_array()) throw std::invalid_argument("'layers' must be an array");
  ReluNet1D net;
  for (const auto& l : layers) {
    ReluLayer layer;
    const Json& weights = field(l, "weights");
    if (!weights.is_array()) throw std::invalid_argument("'weights' must be an array of rows");
    for (const auto& row : weights) layer.weights.push_back(rationals_from_json(row));
    layer.bias = rationals_from_json(field(l, "bias"));
    net.layers.push_back(std::move(layer));
  }
  net.validate();
  return net;
}

Json counterexample_to_json(const Tau2Counterexample& counterexample) {
  return Json{{"kind", "tau2-counterexample"},
              {"seed", counterexample.seed},
              {"trial", counterexample.trial},
              {"p1", counterexample.arrangement.size()},
              {"arrangement", arrangement_to_json(counterexample.arrangement)},
              {"histogram", histogram_to_json(counterexample.histogram)},
              {"conjectured_bound", histogram_to_json(counterexample.conjectured)}};
}

Json bound_to_json(const ComposedBound& bound, std::string_view family,
                   const Architecture& arch) {
  Json layers = Json::array();
  for (const auto& h : bound.per_layer) layers.push_back(histogram_to_json(h));
  return Json{{"bound", to_decimal(bound.bound)},
              {"family", family},
              {"conjectured", bound.conjectured},
              {"architecture", arch.to_string()},
              {"per_layer_histograms", layers}};
}

Json matrix_to_json(const BoundMatrix& matrix) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < matrix.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < matrix.dim(); ++j) row.push_back(to_decimal(matrix.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace regionbound
