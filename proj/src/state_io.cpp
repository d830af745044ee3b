#include "xxzcorr/state_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace xxz {

TwoQubitState read_state(std::istream& is) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries"))
    throw std::invalid_argument("state file needs an object with 'dim' and 'entries'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<int>() != 4)
    throw std::invalid_argument("state file: 'dim' must be 4 for a two-qubit state");
  const auto& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != 16)
    throw std::invalid_argument("state file: 'entries' must hold 16 [re, im] pairs");

  Matrix4c m;
  for (int k = 0; k < 16; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::invalid_argument("state file: entry " + std::to_string(k) + " is not a [re, im] pair");
    m(k / 4, k % 4) = cplx(e[0].get<double>(), e[1].get<double>());
  }
  return TwoQubitState::normalized(m, kStateFileTolerance);
}

TwoQubitState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
  return read_state(in);
}

void write_state(std::ostream& os, const TwoQubitState& rho) {
  nlohmann::ordered_json doc;
  doc["dim"] = 4;
  auto entries = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) entries.push_back({rho(i, j).real(), rho(i, j).imag()});
  doc["entries"] = std::move(entries);
  os << doc.dump(2) << '\n';
}

void write_state_file(const std::string& path, const TwoQubitState& rho) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write state file '" + path + "'");
  write_state(out, rho);
}

}  // namespace xxz
