#include "fite/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace fite {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  return in;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return (hash == std::string::npos) ? line : line.substr(0, hash);
}

}  // namespace

PauliHamiltonian parse_graph_file(std::istream& in, const std::string& name) {
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(strip_comment(line));
    Edge edge;
    if (!(fields >> edge.u)) continue;  // blank or comment-only line
    if (!(fields >> edge.v)) {
      throw ValidationError(name + ":" + std::to_string(line_number) +
                            ": expected `u v [weight]`");
    }
    if (!(fields >> edge.weight)) {
      edge.weight = 1.0;
      fields.clear();  // leave the stream readable for the trailing-token check
    }
    std::string trailing;
    if (fields >> trailing) {
      throw ValidationError(name + ":" + std::to_string(line_number) +
                            ": unexpected trailing field '" + trailing + "'");
    }
    if (edge.u < 0 || edge.v < 0) {
      throw ValidationError(name + ":" + std::to_string(line_number) +
                            ": vertex indices must be nonnegative");
    }
    if (edge.u == edge.v) {
      throw ValidationError(name + ":" + std::to_string(line_number) + ": self-loop on vertex " +
                            std::to_string(edge.u));
    }
    max_vertex = std::max({max_vertex, edge.u, edge.v});
    edges.push_back(edge);
  }
  if (max_vertex < 0) {
    throw ValidationError(name + ": no edges found");
  }
  return maxcut_hamiltonian(max_vertex + 1, edges);
}

PauliHamiltonian load_graph_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return parse_graph_file(in, path);
}

PauliHamiltonian parse_hubo_json(std::istream& in, const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(name + ": " + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    std::vector<PauliTerm> terms;
    double shift = 0.0;
    for (const auto& entry : doc.at("terms")) {
      const double coeff = entry.at("coeff").get<double>();
      Bits mask = 0;
      for (const auto& q : entry.at("qubits")) {
        const int qubit = q.get<int>();
        if (qubit < 0 || qubit >= n) {
          throw ValidationError(name + ": qubit index " + std::to_string(qubit) +
                                " out of range [0, " + std::to_string(n) + ")");
        }
        mask |= bit_mask(qubit);
      }
      if (mask == 0) {
        shift += coeff;
      } else {
        terms.push_back(PauliTerm{mask, coeff});
      }
    }
    return PauliHamiltonian(n, std::move(terms), shift);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(name + ": " + e.what());
  }
}

PauliHamiltonian load_hubo_json(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return parse_hubo_json(in, path);
}

PauliHamiltonian load_instance(const std::string& path, std::optional<InstanceType> type) {
  InstanceType resolved;
  if (type.has_value()) {
    resolved = *type;
  } else {
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    resolved = json ? InstanceType::kHubo : InstanceType::kMaxCut;
  }
  return (resolved == InstanceType::kHubo) ? load_hubo_json(path) : load_graph_file(path);
}

InitSpec parse_init_spec(const std::string& text, int num_qubits) {
  if (text == "uniform") return InitUniform{};
  if (text.rfind("file:", 0) == 0) {
    const std::string path = text.substr(5);
    if (path.empty()) throw ValidationError("--init file: needs a path");
    return InitFile{path};
  }
  if (text.rfind("warm:", 0) == 0) {
    InitWarm warm;
    bool have_bias = false;
    std::istringstream fields(text.substr(5));
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) {
        throw ValidationError("--init warm: field '" + field + "' is not key=value");
      }
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (key == "p") {
        try {
          warm.bias = std::stod(value);
        } catch (const std::exception&) {
          throw ValidationError("--init warm: bias '" + value + "' is not a number");
        }
        have_bias = true;
      } else if (key == "gstar") {
        if (value != "auto") warm.target = parse_bits(value, num_qubits);
      } else {
        throw ValidationError("--init warm: unknown field '" + key + "'");
      }
    }
    if (!have_bias) throw ValidationError("--init warm: missing p=<float>");
    return warm;
  }
  throw ValidationError("unrecognized --init spec '" + text +
                        "' (expected uniform | warm:p=<float>,gstar=<bits|auto> | file:<path>)");
}

QuantumState prepare_initial_state(const InitSpec& spec, int num_qubits,
                                   const Spectrum* spectrum) {
  if (std::holds_alternative<InitUniform>(spec)) return uniform_state(num_qubits);
  if (const auto* warm = std::get_if<InitWarm>(&spec)) {
    Bits target;
    if (warm->target.has_value()) {
      target = *warm->target;
    } else {
      if (spectrum == nullptr || spectrum->ground_set.empty()) {
        throw ValidationError("gstar=auto needs an enumerated spectrum");
      }
      target = spectrum->ground_set.front();  // smallest ground bitstring
    }
    return warm_start(num_qubits, WarmStartSpec{target, warm->bias});
  }
  return load_amplitude_file(std::get<InitFile>(spec).path, num_qubits);
}

QuantumState load_amplitude_file(const std::string& path, int num_qubits) {
  std::ifstream in = open_or_throw(path);
  std::vector<Amplitude> amps;
  amps.reserve(std::size_t{1} << num_qubits);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(strip_comment(line));
    double re = 0.0, im = 0.0;
    if (!(fields >> re)) continue;
    if (!(fields >> im)) {
      throw ValidationError(path + ":" + std::to_string(line_number) + ": expected `re im`");
    }
    amps.emplace_back(re, im);
  }
  if (amps.size() != (std::size_t{1} << num_qubits)) {
    throw ValidationError(path + ": found " + std::to_string(amps.size()) +
                          " amplitudes, expected 2^" + std::to_string(num_qubits));
  }
  return QuantumState::normalized(num_qubits, std::move(amps));
}

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace fite
