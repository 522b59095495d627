#include "rearr/serialize.hpp"

#include <sstream>

namespace rearr {

using nlohmann::json;

namespace {

std::size_t cell_field(const json& step, const char* key) {
  if (!step.contains(key) || !step[key].is_number_integer()) {
    throw FormatError(std::string("step is missing integer field '") + key + "'");
  }
  const auto v = step[key].get<std::int64_t>();
  if (v < 0) {
    throw FormatError(std::string("step field '") + key + "' is negative");
  }
  return static_cast<std::size_t>(v);
}

json steps_json(const std::vector<Transposition>& steps) {
  json out = json::array();
  for (const auto& t : steps) {
    out.push_back({{"y", t.y}, {"a", t.a}, {"b", t.b}});
  }
  return out;
}

}  // namespace

json to_json(const Rearrangement& r) {
  return {{"initial", r.initial.str()}, {"steps", steps_json(r.steps)}};
}

std::vector<Transposition> steps_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("steps")) {
      throw FormatError("record has no 'steps' member");
    }
    list = &j["steps"];
  }
  if (!list->is_array()) {
    throw FormatError("'steps' must be an array");
  }
  std::vector<Transposition> steps;
  for (const json& step : *list) {
    if (!step.is_object()) {
      throw FormatError("each step must be an object {\"y\",\"a\",\"b\"}");
    }
    steps.push_back({cell_field(step, "y"), cell_field(step, "a"), cell_field(step, "b")});
  }
  return steps;
}

Rearrangement rearrangement_from_json(const json& j) {
  if (!j.is_object() || !j.contains("initial") || !j["initial"].is_string()) {
    throw FormatError("rearrangement record needs a string 'initial'");
  }
  try {
    return {parse_config(j["initial"].get<std::string>()), steps_from_json(j)};
  } catch (const ParseError& e) {
    throw FormatError(std::string("bad 'initial': ") + e.what(), e.position());
  }
}

json costed_json(const Rearrangement& r) {
  json out = to_json(r);
  std::uint64_t cells = 0;
  for (const auto& t : r.steps) {
    cells += cost(t);
  }
  out["cost_cells"] = cells;
  out["cost_normalized"] = to_string(normalized(cells, r.initial.size()));
  return out;
}

json to_json(const SolveResult& result) {
  json out = to_json(result.witness);
  out["cost_cells"] = result.cost;
  out["cost_normalized"] = to_string(normalized(result.cost, result.witness.initial.size()));
  out["explored"] = result.explored;
  return out;
}

json to_json(const BoundCertificate& cert) {
  json chain = json::array();
  for (const auto& v : cert.chain) {
    chain.push_back({{"n", v.n}, {"value", to_string(v.value)}});
  }
  return {{"kappa", to_string(cert.kappa)},
          {"eps", to_string(cert.eps)},
          {"n_eps", cert.n_eps},
          {"bound", to_string(cert.bound)},
          {"degenerate", cert.degenerate},
          {"chain", chain}};
}

json to_json(const ValidationReport& report, std::size_t n) {
  json out = {{"valid", report.valid},
              {"complete", report.complete},
              {"gamma_cells", report.gamma},
              {"gamma", to_string(normalized(report.gamma, n))},
              {"final", report.final_state.str()}};
  out["failing_step"] = report.failing_step ? json(*report.failing_step) : json(nullptr);
  return out;
}

torus::GridMask parse_mask(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().empty()) {
    lines.pop_back();
  }
  const std::size_t m = lines.size();
  if (m == 0) {
    throw FormatError("empty mask");
  }
  std::vector<std::uint8_t> cells;
  cells.reserve(m * m);
  for (std::size_t row = 0; row < m; ++row) {
    if (lines[row].size() != m) {
      throw FormatError("mask line " + std::to_string(row + 1) + " has " +
                            std::to_string(lines[row].size()) + " characters, expected " +
                            std::to_string(m),
                        row + 1);
    }
    for (char ch : lines[row]) {
      if (ch != '0' && ch != '1') {
        throw FormatError("illegal character in mask line " + std::to_string(row + 1), row + 1);
      }
      cells.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }
  return torus::GridMask(m, std::move(cells));
}

std::string format_mask(const torus::GridMask& mask) {
  std::string out;
  const std::size_t m = mask.side();
  out.reserve(m * (m + 1));
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      out.push_back(mask.at(row, col) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

torus::FlowProgram parse_program(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("program is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) {
    throw FormatError("program must be a JSON array of steps");
  }
  torus::FlowProgram program;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& step = j[k];
    if (!step.is_object() || !step.contains("axis") || !step.contains("shifts") ||
        !step["axis"].is_string() || !step["shifts"].is_array()) {
      throw FormatError("step " + std::to_string(k) + " needs 'axis' and 'shifts'");
    }
    const auto axis = step["axis"].get<std::string>();
    torus::ShearStep parsed;
    if (axis == "H") {
      parsed.axis = torus::Axis::Horizontal;
    } else if (axis == "V") {
      parsed.axis = torus::Axis::Vertical;
    } else {
      throw FormatError("step " + std::to_string(k) + " has unknown axis '" + axis + "'");
    }
    for (const json& s : step["shifts"]) {
      if (!s.is_number_integer()) {
        throw FormatError("step " + std::to_string(k) + " has a non-integer shift");
      }
      parsed.shifts.push_back(s.get<std::int64_t>());
    }
    if (k == 0) {
      program.m = parsed.shifts.size();
    } else if (parsed.shifts.size() != program.m) {
      throw FormatError("step " + std::to_string(k) + " has a different grid side");
    }
    program.steps.push_back(std::move(parsed));
  }
  return program;
}

std::string format_program(const torus::FlowProgram& program) {
  json out = json::array();
  for (const auto& step : program.steps) {
    out.push_back({{"axis", step.axis == torus::Axis::Horizontal ? "H" : "V"},
                   {"shifts", step.shifts}});
  }
  return out.dump();
}

}  // namespace rearr
