#pragma once

#include <cstddef>
#include <vector>

#include "fite/bits.hpp"
#include "fite/errors.hpp"

namespace fite {

/// Absolute tolerance used to group nearly equal energies into one level.
inline constexpr double kDegeneracyTol = 1e-9;

/// One monomial c * prod_{i in vars} x_i of a polynomial over binary
/// variables x_i in {0,1}. vars is sorted and duplicate-free.
struct Monomial {
  std::vector<int> vars;
  double coeff = 0.0;
};

/// A polynomial cost function C(x) over {0,1}^n. Construction sorts and
/// dedupes each index set (x_i^2 = x_i on binary inputs) and merges repeated
/// monomials by summing their coefficients.
class PuboPolynomial {
 public:
  PuboPolynomial(int num_vars, std::vector<Monomial> monomials);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Evaluates C(x) at a bit assignment.
  double evaluate(Bits assignment) const;

 private:
  int num_vars_;
  std::vector<Monomial> monomials_;
};

/// One Pauli-Z string term: coeff * prod_{i in mask} Z_i.
/// Invariants: mask != 0 (the identity component lives in
/// PauliHamiltonian::identity_shift) and coeff != 0.
struct PauliTerm {
  Bits mask = 0;
  double coeff = 0.0;

  int locality() const { return popcount(mask); }
};

/// A diagonal Hamiltonian H = sum_mu coeff_mu Z_mask_mu, plus the scalar
/// identity shift c extracted at construction. Duplicate masks are merged,
/// exact-zero coefficients dropped, and terms stored sorted by mask.
class PauliHamiltonian {
 public:
  PauliHamiltonian(int num_qubits, std::vector<PauliTerm> terms, double identity_shift = 0.0);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  double identity_shift() const { return identity_shift_; }

  /// l1 norm W = sum |coeff| over stored (non-identity) terms.
  double l1_norm() const { return l1_norm_; }

  /// Diagonal matrix element <bits|H|bits> = sum_mu coeff_mu *
  /// (-1)^popcount(mask_mu & bits). The identity shift is NOT included;
  /// callers add it when comparing against the original cost function.
  double energy(Bits bits) const;

  /// Z-string weights, in term order (planner input).
  std::vector<int> localities() const;

 private:
  int num_qubits_;
  std::vector<PauliTerm> terms_;
  double identity_shift_;
  double l1_norm_;
};

/// Exact diagonal spectrum from full basis enumeration.
struct Spectrum {
  int num_qubits = 0;
  double e0 = 0.0;
  /// Gap to the lowest strictly excited level; 0 when every state is ground.
  double delta = 0.0;
  std::vector<Bits> ground_set;   // ascending
  std::vector<double> energies;   // dense, length 2^n

  std::size_t dim() const { return energies.size(); }
  bool is_ground(Bits x) const { return energies[x] <= e0 + kDegeneracyTol; }
};

/// Expands C(x) into Pauli-Z form via x_i = (I - Z_i)/2. The expansion is
/// exact: energy(bits) + identity_shift == C(bits) for every bitstring.
PauliHamiltonian to_hamiltonian(const PuboPolynomial& poly);

/// Dense 2^n enumeration of all diagonal energies. Degenerate levels are
/// grouped with absolute tolerance kDegeneracyTol.
Spectrum compute_spectrum(const PauliHamiltonian& hamiltonian);

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// H = sum_{(u,v)} weight * Z_u Z_v. Duplicate edges merge; self-loops are
/// rejected. An edge cut by a labeling contributes -weight, uncut +weight.
PauliHamiltonian maxcut_hamiltonian(int num_vertices, const std::vector<Edge>& edges);

/// Number of basis states on which every term sits in its lower eigenspace,
/// i.e. (-1)^popcount(mask & bits) = -sgn(coeff) for all terms. This is the
/// rank of the infinite-beta limit of the normalized block product; from the
/// uniform state the limiting success probability is rank / 2^n.
std::uint64_t limit_projector_rank(const PauliHamiltonian& hamiltonian);

}  // namespace fite
