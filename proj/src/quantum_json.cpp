#include <cmath>
#include <map>

#include "spectrachrome/errors.hpp"
#include "spectrachrome/json_io.hpp"

namespace spectrachrome {

using nlohmann::json;

json quantum_coloring_to_json(const QuantumColoring& qc) {
  json out = json::array();
  for (Vertex v = 0; v < qc.n; ++v)
    for (std::size_t h = 0; h < qc.c; ++h) {
      const ComplexMatrix& p = qc.at(v, h);
      json entries = json::array();
      for (std::size_t i = 0; i < qc.d; ++i)
        for (std::size_t j = 0; j < qc.d; ++j)
          entries.push_back(json::array({stable_number(p(i, j).real()), stable_number(p(i, j).imag())}));
      out.push_back(json{{"v", v}, {"h", h}, {"matrix", entries}});
    }
  return out;
}

namespace {

std::size_t index_field(const json& entry, const char* key, std::size_t pos) {
  const auto it = entry.find(key);
  if (it == entry.end() || !it->is_number_integer() || it->get<long long>() < 0) {
    throw StructuralError("projector entry " + std::to_string(pos) + ": field '" + key +
                          "' must be a nonnegative integer");
  }
  return it->get<std::size_t>();
}

}  // namespace

QuantumColoring parse_quantum_coloring(std::string_view text, std::optional<std::size_t> n) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("projector JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw StructuralError("projector JSON must be an array of {v, h, matrix} entries");

  struct Entry {
    std::size_t v, h;
    std::vector<Complex> values;
  };
  std::vector<Entry> entries;
  std::size_t max_v = 0, max_h = 0, d = 0;
  for (std::size_t pos = 0; pos < doc.size(); ++pos) {
    const json& e = doc[pos];
    if (!e.is_object()) throw StructuralError("projector entry " + std::to_string(pos) + " is not an object");
    Entry entry{index_field(e, "v", pos), index_field(e, "h", pos), {}};
    const auto m = e.find("matrix");
    if (m == e.end() || !m->is_array()) {
      throw StructuralError("projector entry " + std::to_string(pos) + ": 'matrix' must be an array");
    }
    for (const json& z : *m) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw StructuralError("projector entry " + std::to_string(pos) + ": entries must be [re, im] pairs");
      }
      const double re = z[0].get<double>(), im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw StructuralError("projector entry " + std::to_string(pos) + " has a non-finite value");
      }
      entry.values.emplace_back(re, im);
    }
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entry.values.size()))));
    if (side == 0 || side * side != entry.values.size()) {
      throw StructuralError("projector entry " + std::to_string(pos) + " has " +
                            std::to_string(entry.values.size()) + " entries, not a positive square");
    }
    if (d == 0) d = side;
    if (side != d) {
      throw StructuralError("projector entry " + std::to_string(pos) + " has dimension " + std::to_string(side) +
                            ", earlier entries have " + std::to_string(d));
    }
    max_v = std::max(max_v, entry.v);
    max_h = std::max(max_h, entry.h);
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) throw StructuralError("projector JSON has no entries");
  const std::size_t vertices = n ? *n : max_v + 1;
  if (max_v >= vertices) {
    throw StructuralError("projector for vertex " + std::to_string(max_v) + " but the graph has " +
                          std::to_string(vertices) + " vertices");
  }

  QuantumColoring qc(vertices, max_h + 1, d);
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (const Entry& e : entries) {
    if (seen[{e.v, e.h}]) {
      throw StructuralError("duplicate projector for v=" + std::to_string(e.v) + ", h=" + std::to_string(e.h));
    }
    seen[{e.v, e.h}] = true;
    ComplexMatrix& p = qc.at(e.v, e.h);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p(i, j) = e.values[i * d + j];
  }
  return qc;
}

}  // namespace spectrachrome
