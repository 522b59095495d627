#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rearr/bounds.hpp"
#include "rearr/moves.hpp"
#include "rearr/solvers.hpp"
#include "rearr/torus.hpp"

namespace rearr {

/// Malformed record or file. `position` is a line number for text formats
/// and 0 when not applicable.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what, std::size_t position = 0)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// {"initial": "<bits>", "steps": [{"y":..,"a":..,"b":..}, ...]}
nlohmann::json to_json(const Rearrangement& r);
Rearrangement rearrangement_from_json(const nlohmann::json& j);

/// Accepts a bare step list or any object carrying a "steps" member.
std::vector<Transposition> steps_from_json(const nlohmann::json& j);

/// Rearrangement record plus cost_cells, cost_normalized ("p/q") and explored.
nlohmann::json to_json(const SolveResult& result);

/// Rearrangement record plus cost_cells and cost_normalized.
nlohmann::json costed_json(const Rearrangement& r);

// {"kappa": "p/q", "eps": "p/q", "n_eps": int, "bound": "p/q", "degenerate": bool, "chain": [...]}
nlohmann::json to_json(const BoundCertificate& cert);

nlohmann::json to_json(const ValidationReport& report, std::size_t n);

/// M lines of M '0'/'1' characters; row 0 first.
torus::GridMask parse_mask(std::string_view text);
std::string format_mask(const torus::GridMask& mask);

/// [{"axis": "H"|"V", "shifts": [int, ...]}, ...]; M is the shift count.
torus::FlowProgram parse_program(std::string_view text);
std::string format_program(const torus::FlowProgram& program);

}  // namespace rearr
