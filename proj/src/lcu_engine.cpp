#include "fite/lcu_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fite/limits.hpp"
#include "fite/rng.hpp"

namespace fite {

namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0)) {
    throw ValidationError("beta must be nonnegative, got " + std::to_string(beta));
  }
}

void check_joint_cap(int system_qubits, int num_ancillas) {
  const int total = system_qubits + num_ancillas;
  if (total > register_limits().max_joint_qubits) {
    throw ResourceError("joint register of " + std::to_string(system_qubits) + " system + " +
                        std::to_string(num_ancillas) + " ancilla qubits exceeds the cap of " +
                        std::to_string(register_limits().max_joint_qubits));
  }
}

}  // namespace

LcuBlock make_lcu_block(const PauliTerm& term, double beta) {
  check_beta(beta);
  LcuBlock block;
  block.term = term;
  block.beta = beta;
  const double decay = std::exp(-2.0 * beta * std::abs(term.coeff));
  block.alpha_w = 0.5 * (1.0 + decay);
  block.gamma_w = 0.5 * (1.0 - decay);
  return block;
}

UnitaryProgram build_lcu_program(const PauliHamiltonian& hamiltonian, double beta) {
  check_beta(beta);
  UnitaryProgram program;
  program.system_qubits = hamiltonian.num_qubits();
  program.num_ancillas = static_cast<int>(hamiltonian.term_count());
  check_joint_cap(program.system_qubits, program.num_ancillas);

  program.blocks.reserve(hamiltonian.term_count());
  program.gates.reserve(3 * hamiltonian.term_count());
  int index = 0;
  for (const PauliTerm& term : hamiltonian.terms()) {
    const LcuBlock block = make_lcu_block(term, beta);
    const int ancilla = program.ancilla_qubit(index++);
    const double c = std::sqrt(block.alpha_w);
    const double s = std::sqrt(block.gamma_w);
    const double sign = (term.coeff > 0.0) ? -1.0 : 1.0;  // encoded unitary is -sgn(x) Z_mask
    program.blocks.push_back(block);
    program.gates.push_back(AncillaRotation{ancilla, c, s, false});
    program.gates.push_back(ControlledTermFlip{ancilla, term.mask, sign});
    program.gates.push_back(AncillaRotation{ancilla, c, s, true});
  }
  return program;
}

JointState::JointState(const QuantumState& system, int num_ancillas)
    : system_qubits_(system.num_qubits()), num_ancillas_(num_ancillas) {
  if (num_ancillas < 0) throw ValidationError("ancilla count must be nonnegative");
  check_joint_cap(system_qubits_, num_ancillas_);
  amps_.assign(std::size_t{1} << total_qubits(), Amplitude{0.0, 0.0});
  std::copy(system.amplitudes().begin(), system.amplitudes().end(), amps_.begin());
}

void JointState::apply(const Gate& gate) {
  if (const auto* rot = std::get_if<AncillaRotation>(&gate)) {
    // [[c, -s], [s, c]] on one qubit, or its transpose.
    const std::size_t stride = std::size_t{1} << rot->qubit;
    const double c = rot->c;
    const double s = rot->transposed ? -rot->s : rot->s;
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t low = base; low < base + stride; ++low) {
        const Amplitude a0 = amps_[low];
        const Amplitude a1 = amps_[low + stride];
        amps_[low] = c * a0 - s * a1;
        amps_[low + stride] = s * a0 + c * a1;
      }
    }
    return;
  }
  const auto& flip = std::get<ControlledTermFlip>(gate);
  const std::size_t control = std::size_t{1} << flip.ancilla;
  const std::size_t dim = amps_.size();
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if ((idx & control) == 0) continue;
    amps_[idx] *= flip.sign * parity_sign(flip.system_mask & idx);
  }
}

void JointState::apply(const UnitaryProgram& program) {
  if (program.system_qubits != system_qubits_ || program.num_ancillas != num_ancillas_) {
    throw ValidationError("program register layout does not match the joint state");
  }
  for (const Gate& gate : program.gates) apply(gate);
}

double JointState::norm_sq() const {
  double total = 0.0;
  for (const Amplitude& a : amps_) total += std::norm(a);
  return total;
}

double JointState::good_probability() const {
  const std::size_t system_dim = std::size_t{1} << system_qubits_;
  double total = 0.0;
  for (std::size_t x = 0; x < system_dim; ++x) total += std::norm(amps_[x]);
  return total;
}

QuantumState JointState::post_selected_system() const {
  const std::size_t system_dim = std::size_t{1} << system_qubits_;
  std::vector<Amplitude> block(amps_.begin(), amps_.begin() + system_dim);
  return QuantumState::normalized(system_qubits_, std::move(block));
}

void JointState::scale_good_subspace(Amplitude factor) {
  const std::size_t system_dim = std::size_t{1} << system_qubits_;
  for (std::size_t x = 0; x < system_dim; ++x) amps_[x] *= factor;
}

void JointState::reflect_about(const JointState& axis, Amplitude coefficient) {
  if (axis.amps_.size() != amps_.size()) {
    throw ValidationError("reflection axis dimension does not match the state");
  }
  Amplitude overlap{0.0, 0.0};
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(axis.amps_[i]) * amps_[i];
  const Amplitude scale = coefficient * overlap;
  for (std::size_t i = 0; i < dim; ++i) amps_[i] -= scale * axis.amps_[i];
}

std::vector<double> JointState::probabilities() const {
  std::vector<double> probs(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) probs[i] = std::norm(amps_[i]);
  return probs;
}

LcuOutcome analytic_outcome(const PauliHamiltonian& hamiltonian, const Spectrum& spectrum,
                            const QuantumState& state, double beta) {
  check_beta(beta);
  if (state.dim() != spectrum.dim() ||
      spectrum.num_qubits != hamiltonian.num_qubits()) {
    throw ValidationError("hamiltonian, spectrum and state dimensions do not match");
  }
  const std::size_t dim = state.dim();
  // Partition sum with the ground envelope factored out:
  //   S = sum_x |c_x|^2 e^(-2 beta (E_x - E_0)),  S in [gamma_0, 1].
  double partition = 0.0;
  std::vector<Amplitude> post(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const double above = spectrum.energies[x] - spectrum.e0;
    const double filter = std::exp(-beta * above);
    post[x] = state.amplitude(x) * filter;
    partition += std::norm(state.amplitude(x)) * filter * filter;
  }
  if (partition <= 0.0) {
    throw ValidationError("partition sum underflowed: the state has no ground-subspace "
                          "support and beta is too large");
  }
  const double log_p =
      -2.0 * beta * (hamiltonian.l1_norm() + spectrum.e0) + std::log(partition);
  const double inv_norm = 1.0 / std::sqrt(partition);
  for (Amplitude& a : post) a *= inv_norm;
  QuantumState post_state = QuantumState::from_amplitudes(state.num_qubits(), std::move(post));
  const double f_ground = ground_overlap(post_state, spectrum);
  return LcuOutcome{std::exp(log_p), log_p, std::move(post_state), f_ground};
}

LcuOutcome run_gate_level(const PauliHamiltonian& hamiltonian, const Spectrum& spectrum,
                          const QuantumState& state, double beta) {
  const UnitaryProgram program = build_lcu_program(hamiltonian, beta);
  JointState joint(state, program.num_ancillas);
  joint.apply(program);
  const double p_success = joint.good_probability();
  if (p_success <= 0.0) {
    throw ValidationError("post-selected amplitudes underflowed at beta = " +
                          std::to_string(beta) + "; use the analytic path at this scale");
  }
  QuantumState post_state = joint.post_selected_system();
  const double f_ground = ground_overlap(post_state, spectrum);
  return LcuOutcome{p_success, std::log(p_success), std::move(post_state), f_ground};
}

ShotReport sample_shots(const PauliHamiltonian& hamiltonian, const Spectrum& spectrum,
                        const QuantumState& state, double beta, std::uint64_t shots,
                        std::uint64_t seed) {
  if (shots < 1) throw ValidationError("shot count must be at least 1");
  const UnitaryProgram program = build_lcu_program(hamiltonian, beta);
  JointState joint(state, program.num_ancillas);
  joint.apply(program);
  const std::vector<double> probs = joint.probabilities();

  std::vector<double> cdf(probs.size());
  double running = 0.0;
  std::size_t last_supported = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    cdf[i] = running;
    if (probs[i] > 0.0) last_supported = i;
  }
  // Draws past the accumulated total (roundoff leaves it just under 1) fall
  // back to the highest outcome that actually has support.
  const std::size_t system_dim = std::size_t{1} << program.system_qubits;
  const int total_qubits = program.total_qubits();
  ShotReport report;
  report.shots = shots;
  report.seed = seed;
  std::map<std::size_t, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = counter_uniform(seed, i);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t outcome =
        (it == cdf.end()) ? last_supported : static_cast<std::size_t>(it - cdf.begin());
    ++counts[outcome];
    if (outcome < system_dim) {
      ++report.successes;
      if (spectrum.is_ground(static_cast<Bits>(outcome))) ++report.ground_hits;
    }
  }
  for (const auto& [outcome, count] : counts) {
    report.histogram[format_bits(static_cast<Bits>(outcome), total_qubits)] = count;
  }
  return report;
}

}  // namespace fite
