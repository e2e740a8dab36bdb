#include "fite/sweep.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "fite/instance_io.hpp"
#include "fite/state_prep.hpp"

namespace fite {

namespace {

// Gate-level sweeps are dense-statevector work per row; refuse grids whose
// total amplitude updates would run for minutes.
constexpr double kGateSweepOpBudget = 2e10;

/// Fills out[i] = fn(i) for i in [0, count), chunked across threads. Rows are
/// independent and land in their own slot, so the result does not depend on
/// the thread count. The first exception thrown by any row is rethrown on
/// the calling thread.
void parallel_rows(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, count);
  if (workers < 2 || count < 16) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::mutex error_mutex;
  std::exception_ptr error;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, &error_mutex, &error, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  Amplitude overlap{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    overlap += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return std::norm(overlap);
}

}  // namespace

std::vector<double> BetaGrid::values() const {
  if (!(step > 0.0)) throw ValidationError("beta step must be positive");
  if (!(start >= 0.0)) throw ValidationError("beta grid must be nonnegative");
  if (stop < start) throw ValidationError("beta grid stop is below start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> betas(count);
  for (std::size_t i = 0; i < count; ++i) betas[i] = start + static_cast<double>(i) * step;
  return betas;
}

std::vector<SweepRecord> run_lcu_sweep(const PauliHamiltonian& hamiltonian,
                                       const Spectrum& spectrum, const QuantumState& state,
                                       const BetaGrid& grid, bool gate_level) {
  const std::vector<double> betas = grid.values();
  const double gamma0 = ground_overlap(state, spectrum);
  const double rate = hamiltonian.l1_norm() + spectrum.e0;

  if (gate_level) {
    const double per_row = 3.0 * static_cast<double>(hamiltonian.term_count()) *
                           std::ldexp(1.0, hamiltonian.num_qubits() +
                                               static_cast<int>(hamiltonian.term_count()));
    if (per_row * static_cast<double>(betas.size()) > kGateSweepOpBudget) {
      throw ResourceError(
          "gate-level sweep over " + std::to_string(betas.size()) +
          " beta points exceeds the simulation budget; use a coarser --beta step");
    }
  }

  std::vector<SweepRecord> records(betas.size());
  parallel_rows(betas.size(), [&](std::size_t i) {
    const double beta = betas[i];
    const LcuOutcome analytic = analytic_outcome(hamiltonian, spectrum, state, beta);
    SweepRecord& row = records[i];
    row.beta = beta;
    row.p_lcu = analytic.p_success;
    row.f_g = analytic.f_ground;
    row.product = analytic.p_success * analytic.f_ground;
    row.envelope = gamma0 * std::exp(-2.0 * beta * rate);
    if (gamma0 > 0.0 && analytic.f_ground > 0.0) {
      const double log_product = analytic.log_p_success + std::log(analytic.f_ground);
      const double log_envelope = std::log(gamma0) - 2.0 * beta * rate;
      row.rel_err = std::abs(std::expm1(log_product - log_envelope));
    }
    if (gate_level) {
      const LcuOutcome gate = run_gate_level(hamiltonian, spectrum, state, beta);
      row.p_lcu_gate = gate.p_success;
      row.f_g_gate = gate.f_ground;
      row.state_fidelity = fidelity(analytic.post_state, gate.post_state);
    }
  });
  return records;
}

void write_lcu_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                   bool gate_level) {
  out << "beta,p_lcu,f_g,product,envelope,rel_err";
  if (gate_level) out << ",p_lcu_gate,f_g_gate,state_fidelity";
  out << "\n";
  for (const SweepRecord& row : records) {
    out << format_double(row.beta) << ',' << format_double(row.p_lcu) << ','
        << format_double(row.f_g) << ',' << format_double(row.product) << ','
        << format_double(row.envelope) << ',' << format_double(row.rel_err);
    if (gate_level) {
      out << ',' << format_double(row.p_lcu_gate.value_or(0.0)) << ','
          << format_double(row.f_g_gate.value_or(0.0)) << ','
          << format_double(row.state_fidelity.value_or(0.0));
    }
    out << "\n";
  }
}

std::vector<FpaaRecord> run_fpaa_sweep(const PauliHamiltonian& hamiltonian,
                                       const Spectrum& spectrum, const QuantumState& state,
                                       const BetaGrid& grid,
                                       const std::vector<int>& query_depths, double delta) {
  const std::vector<double> betas = grid.values();
  std::vector<FpaaSchedule> schedules;
  schedules.reserve(query_depths.size());
  for (int depth : query_depths) {
    if (depth < 0 || (depth > 0 && depth % 2 == 0)) {
      throw ValidationError("query depths must be odd (or 0 for no amplification), got " +
                            std::to_string(depth));
    }
    if (depth > 0) schedules.push_back(phase_schedule(depth, delta));
  }

  std::vector<FpaaRecord> records(betas.size() * query_depths.size());
  parallel_rows(betas.size(), [&](std::size_t i) {
    const double beta = betas[i];
    const LcuOutcome unamplified = run_gate_level(hamiltonian, spectrum, state, beta);
    const UnitaryProgram program = build_lcu_program(hamiltonian, beta);
    std::size_t schedule_index = 0;
    for (std::size_t d = 0; d < query_depths.size(); ++d) {
      FpaaRecord& row = records[i * query_depths.size() + d];
      row.beta = beta;
      row.query_depth = query_depths[d];
      row.delta = delta;
      row.p_unamp = unamplified.p_success;
      if (query_depths[d] == 0) {
        row.p_amp = unamplified.p_success;
        row.p_amp_formula = unamplified.p_success;
        row.f_g = unamplified.f_ground;
      } else {
        const FpaaSchedule& schedule = schedules[schedule_index++];
        const AmplifiedOutcome amp = amplify(program, state, schedule, spectrum);
        row.p_amp = amp.p_amplified;
        row.p_amp_formula = analytic_pl(unamplified.p_success, schedule.query_depth, delta);
        row.f_g = amp.f_ground;
      }
      row.p_g = row.p_amp * row.f_g;
    }
  });
  return records;
}

void write_fpaa_csv(std::ostream& out, const std::vector<FpaaRecord>& records) {
  out << "beta,L,delta,p_unamp,p_amp,p_amp_formula,f_g,p_g\n";
  for (const FpaaRecord& row : records) {
    out << format_double(row.beta) << ',' << row.query_depth << ',' << format_double(row.delta)
        << ',' << format_double(row.p_unamp) << ',' << format_double(row.p_amp) << ','
        << format_double(row.p_amp_formula) << ',' << format_double(row.f_g) << ','
        << format_double(row.p_g) << "\n";
  }
}

}  // namespace fite
