#include "fite/pauli_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "fite/limits.hpp"

namespace fite {

namespace {

void check_var_range(int index, int num_vars) {
  if (index < 0 || index >= num_vars) {
    throw ValidationError("variable index " + std::to_string(index) + " out of range [0, " +
                          std::to_string(num_vars) + ")");
  }
}

}  // namespace

PuboPolynomial::PuboPolynomial(int num_vars, std::vector<Monomial> monomials)
    : num_vars_(num_vars) {
  if (num_vars < 1) throw ValidationError("polynomial needs at least one variable");
  if (num_vars > register_limits().max_system_qubits) {
    throw ResourceError("variable count " + std::to_string(num_vars) +
                        " exceeds the system cap of " +
                        std::to_string(register_limits().max_system_qubits));
  }
  // Merge by canonical (sorted, deduped) index set.
  std::map<std::vector<int>, double> merged;
  for (Monomial& m : monomials) {
    for (int v : m.vars) check_var_range(v, num_vars);
    std::sort(m.vars.begin(), m.vars.end());
    m.vars.erase(std::unique(m.vars.begin(), m.vars.end()), m.vars.end());
    merged[m.vars] += m.coeff;
  }
  for (auto& [vars, coeff] : merged) {
    if (coeff == 0.0) continue;
    monomials_.push_back(Monomial{vars, coeff});
  }
}

double PuboPolynomial::evaluate(Bits assignment) const {
  double total = 0.0;
  for (const Monomial& m : monomials_) {
    bool all_set = true;
    for (int v : m.vars) {
      if (!get_bit(assignment, v)) {
        all_set = false;
        break;
      }
    }
    if (all_set) total += m.coeff;
  }
  return total;
}

PauliHamiltonian::PauliHamiltonian(int num_qubits, std::vector<PauliTerm> terms,
                                   double identity_shift)
    : num_qubits_(num_qubits), identity_shift_(identity_shift) {
  if (num_qubits < 1) throw ValidationError("Hamiltonian needs at least one qubit");
  if (num_qubits > register_limits().max_system_qubits) {
    throw ResourceError("qubit count " + std::to_string(num_qubits) +
                        " exceeds the system cap of " +
                        std::to_string(register_limits().max_system_qubits));
  }
  const Bits valid = (num_qubits == 64) ? ~Bits{0} : (bit_mask(num_qubits) - 1);
  std::map<Bits, double> merged;
  for (const PauliTerm& t : terms) {
    if ((t.mask & ~valid) != 0) {
      throw ValidationError("term mask touches a qubit outside [0, " +
                            std::to_string(num_qubits) + ")");
    }
    if (t.mask == 0) {
      identity_shift_ += t.coeff;  // identity component never stored as a term
      continue;
    }
    merged[t.mask] += t.coeff;
  }
  l1_norm_ = 0.0;
  for (auto& [mask, coeff] : merged) {
    if (coeff == 0.0) continue;
    terms_.push_back(PauliTerm{mask, coeff});
    l1_norm_ += std::abs(coeff);
  }
}

double PauliHamiltonian::energy(Bits bits) const {
  double total = 0.0;
  for (const PauliTerm& t : terms_) total += t.coeff * parity_sign(t.mask & bits);
  return total;
}

std::vector<int> PauliHamiltonian::localities() const {
  std::vector<int> out;
  out.reserve(terms_.size());
  for (const PauliTerm& t : terms_) out.push_back(t.locality());
  return out;
}

PauliHamiltonian to_hamiltonian(const PuboPolynomial& poly) {
  // x_i = (I - Z_i)/2, so a degree-k monomial on index set S expands to
  // coeff/2^k * sum over subsets T of S of (-1)^|T| Z_T.
  std::vector<PauliTerm> terms;
  double shift = 0.0;
  for (const Monomial& m : poly.monomials()) {
    Bits set_mask = 0;
    for (int v : m.vars) set_mask |= bit_mask(v);
    const double scale = std::ldexp(m.coeff, -static_cast<int>(m.vars.size()));
    Bits sub = set_mask;
    while (true) {
      const double c = scale * parity_sign(sub);
      if (sub == 0) {
        shift += c;
      } else {
        terms.push_back(PauliTerm{sub, c});
      }
      if (sub == 0) break;
      sub = (sub - 1) & set_mask;
    }
  }
  return PauliHamiltonian(poly.num_vars(), std::move(terms), shift);
}

Spectrum compute_spectrum(const PauliHamiltonian& hamiltonian) {
  const int n = hamiltonian.num_qubits();
  if (n > register_limits().max_enum_qubits) {
    throw ResourceError("spectrum enumeration over " + std::to_string(n) +
                        " qubits exceeds the cap of " +
                        std::to_string(register_limits().max_enum_qubits));
  }
  const std::size_t dim = std::size_t{1} << n;
  Spectrum spec;
  spec.num_qubits = n;
  spec.energies.assign(dim, 0.0);
  for (const PauliTerm& t : hamiltonian.terms()) {
    const double c = t.coeff;
    for (std::size_t x = 0; x < dim; ++x) {
      spec.energies[x] += c * parity_sign(t.mask & x);
    }
  }
  spec.e0 = spec.energies[0];
  for (double e : spec.energies) spec.e0 = std::min(spec.e0, e);
  double delta = 0.0;
  bool has_excited = false;
  for (std::size_t x = 0; x < dim; ++x) {
    const double above = spec.energies[x] - spec.e0;
    if (above <= kDegeneracyTol) {
      spec.ground_set.push_back(static_cast<Bits>(x));
    } else if (!has_excited || above < delta) {
      has_excited = true;
      delta = above;
    }
  }
  spec.delta = has_excited ? delta : 0.0;
  return spec;
}

PauliHamiltonian maxcut_hamiltonian(int num_vertices, const std::vector<Edge>& edges) {
  std::vector<PauliTerm> terms;
  terms.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw ValidationError("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw ValidationError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") touches a vertex outside [0, " + std::to_string(num_vertices) +
                            ")");
    }
    terms.push_back(PauliTerm{bit_mask(e.u) | bit_mask(e.v), e.weight});
  }
  return PauliHamiltonian(num_vertices, std::move(terms));
}

std::uint64_t limit_projector_rank(const PauliHamiltonian& hamiltonian) {
  const int n = hamiltonian.num_qubits();
  if (n > register_limits().max_enum_qubits) {
    throw ResourceError("projector rank enumeration over " + std::to_string(n) +
                        " qubits exceeds the cap of " +
                        std::to_string(register_limits().max_enum_qubits));
  }
  const std::size_t dim = std::size_t{1} << n;
  std::uint64_t rank = 0;
  for (std::size_t x = 0; x < dim; ++x) {
    bool survives = true;
    for (const PauliTerm& t : hamiltonian.terms()) {
      const double sgn = (t.coeff > 0.0) ? 1.0 : -1.0;
      if (parity_sign(t.mask & x) != -sgn) {
        survives = false;
        break;
      }
    }
    if (survives) ++rank;
  }
  return rank;
}

}  // namespace fite
