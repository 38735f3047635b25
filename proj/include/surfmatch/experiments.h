// Copyright 2026 Surfmatch Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SURFMATCH_EXPERIMENTS_H
#define SURFMATCH_EXPERIMENTS_H

#include <cstdint>
#include <optional>
#include <vector>

#include "surfmatch/decoder.h"

namespace surfmatch {

/// Outcome of one memory experiment: the round at which the decoded state
/// first failed, or censored-at-cap.
struct TrialOutcome {
    int failure_round = 0;  // rounds survived; == cap when censored
    bool censored = false;
    uint8_t failure_class = 0;
};

/// Result of one (code, distance, p0) sweep point.
struct SweepPoint {
    CodeKind code;
    int distance;
    double p0;
    int64_t trials;
    double mean_ttf;
    double std_error;  // sample stddev of the mean
    int64_t censored;
};

/// One row of the failure-count table: out of `samples` uniform k-subsets of
/// data qubits hit by bit flips, `failures` decoded to a logical error.
struct FailureCountRow {
    CodeKind code;
    int distance;
    int num_data;
    int k;
    int64_t samples;
    int64_t failures;
    bool exhaustive;

    double ratio() const {
        return samples == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(samples);
    }
};

struct CrossingResult {
    bool found = false;
    double p0 = 0.0;
    double sigma = 0.0;
};

/// Runs one memory trial. Each round applies one time step of noise and one
/// syndrome extraction, then decides whether a decode at this point would
/// fail.
///
/// Ideal extraction: a memory-error step hits every data qubit, the syndrome
/// is read perfectly, and the round's error is decoded and (hypothetically)
/// corrected in place, so each round starts from a clean codeword up to
/// stabilizers. Circuit extraction: the frame and record evolve untouched;
/// each round the full 3D detection-event history plus one ideally extracted
/// final round is decoded on the side, and the trial fails at the first round
/// where that decode leaves a logical error.
///
/// The trial is deterministic in (seed, trial_index) and independent of
/// scheduling. `mask` selects which residual classes count as failure.
TrialOutcome run_time_to_failure_trial(const Lattice &lattice, const ErrorModel &model,
                                       uint64_t seed, uint64_t trial_index, int round_cap,
                                       FailureMask mask = FailureMask::ANY);

/// Runs `trials` independent trials across `workers` threads and reduces in
/// trial-index order, so the result is byte-stable for a fixed seed no matter
/// the worker count. Censored trials enter the mean as lower bounds.
SweepPoint run_sweep_point(const Lattice &lattice, const ErrorModel &model, double p0,
                           int64_t trials, uint64_t seed, int round_cap, int workers,
                           FailureMask mask = FailureMask::ANY);

/// Estimates the failure ratio r_k for k-error subsets under ideal
/// extraction. Enumerates all C(Q, k) subsets when that count does not exceed
/// `samples`, otherwise draws `samples` uniform subsets. `flip_type` X places
/// bit flips and assesses X-class failure; Z is the dual experiment.
FailureCountRow estimate_failure_ratios(const Lattice &lattice, int k, int64_t samples,
                                        uint64_t seed, Pauli flip_type = Pauli::X);

/// Logical error rate per round from the count table via the binomial sum
/// sum_k C(Q,k) r_k p^k (1-p)^(Q-k) with p = (2/3) p0 (only two of the three
/// single-qubit Paulis contain a bit flip). Rows absent from the table
/// contribute zero.
double logical_error_rate(const std::vector<FailureCountRow> &table, double p0);

/// Crossing of two mean-TTF sweeps over a common p0 grid, found by linear
/// interpolation of the log-TTF difference at its first sign change.
/// Uncertainty is first-order propagation of the standard errors.
CrossingResult find_crossing(const std::vector<SweepPoint> &sweep_a,
                             const std::vector<SweepPoint> &sweep_b);

/// Total single-fault injections into one circuit-level round that lead to
/// logical failure (exhaustive over every location and Pauli outcome).
int count_failing_single_faults(const Lattice &lattice, int time_edge_weight = 1);

int default_worker_count();

}  // namespace surfmatch

#endif
