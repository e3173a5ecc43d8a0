// Copyright 2026 The fixedzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fixedzz/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <cmath>
#include <ostream>
#include <thread>

#include "fixedzz/kernels/kernels.hpp"
#include "fixedzz/rng.hpp"
#include "fixedzz/schedule_io.hpp"

namespace fixedzz {

double phase_invariant_fidelity(const Matrix &u, const Matrix &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols() || u.rows() == 0) {
        throw ValidationError("fidelity needs two square matrices of equal size");
    }
    const Complex trace = (u.adjoint() * v).trace();
    return std::clamp(std::abs(trace) / static_cast<double>(u.rows()), 0.0, 1.0);
}

double state_fidelity(const StateVector &psi, const StateVector &phi) {
    if (psi.n_qubits() != phi.n_qubits()) {
        throw ValidationError("state fidelity needs states of equal size");
    }
    const Complex overlap = kernels::active().inner_product(psi.amplitudes(), phi.amplitudes());
    return std::clamp(std::norm(overlap), 0.0, 1.0);
}

McSummary summarize(double lambda, const std::vector<double> &infidelities) {
    McSummary s;
    s.lambda = lambda;
    s.trials = infidelities.size();
    if (infidelities.empty()) {
        return s;
    }
    double sum = 0.0;
    for (double x : infidelities) {
        sum += x;
    }
    const double mean = sum / static_cast<double>(infidelities.size());
    double sq = 0.0;
    for (double x : infidelities) {
        sq += (x - mean) * (x - mean);
    }
    s.mean_infidelity = std::clamp(mean, 0.0, 1.0);
    if (infidelities.size() > 1) {
        const double var = sq / static_cast<double>(infidelities.size() - 1);
        s.stderr_infidelity = std::sqrt(var / static_cast<double>(infidelities.size()));
    }
    return s;
}

std::optional<double> fit_loglog_slope(const std::vector<double> &x, const std::vector<double> &y,
                                       std::string *note) {
    auto reject = [&](const char *why) -> std::optional<double> {
        if (note != nullptr) {
            *note = why;
        }
        return std::nullopt;
    };
    if (x.size() != y.size() || x.size() < 2) {
        return reject("need at least two points");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            return reject("log-log fit needs positive coordinates");
        }
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    if (sxx == 0.0) {
        return reject("zero variance in lambda");
    }
    return sxy / sxx;
}

namespace {

double trial_infidelity(Propagator &propagator, const PulseSchedule &schedule,
                        const McTarget &target) {
    if (const auto *u = std::get_if<Matrix>(&target)) {
        return 1.0 - phase_invariant_fidelity(
                         *u, reconstruct_unitary(propagator, schedule, propagator.model().n_qubits()));
    }
    const auto &st = std::get<StateTarget>(target);
    StateVector out = st.initial;
    simulate_schedule(out, propagator, schedule);
    return 1.0 - state_fidelity(st.expected, out);
}

} // namespace

McSweepResult mc_sweep(const DeviceModel &model, const ScheduleGenerator &generator,
                       const McTarget &target, const std::vector<double> &lambdas,
                       const SweepOptions &options) {
    if (options.trials < 2) {
        throw ValidationError("mc_sweep needs at least 2 trials per lambda");
    }
    const std::size_t total = lambdas.size() * options.trials;
    std::vector<TrialRecord> records(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        Propagator propagator(model);
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
            try {
                const double lambda = lambdas[i / options.trials];
                const std::uint64_t trial = i % options.trials;
                const PulseSchedule schedule = generator(lambda, trial, options.master_seed);
                records[i] = TrialRecord{lambda, trial, schedule.duration(),
                                         trial_infidelity(propagator, schedule, target),
                                         trial_key(options.master_seed, trial)};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = total;
            }
        }
    };

    const unsigned workers = std::max(1U, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    McSweepResult result;
    std::vector<double> means;
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
        std::vector<double> sample;
        sample.reserve(options.trials);
        for (std::size_t t = 0; t < options.trials; ++t) {
            sample.push_back(records[l * options.trials + t].infidelity);
        }
        result.summaries.push_back(summarize(lambdas[l], sample));
        means.push_back(result.summaries.back().mean_infidelity);
    }
    result.fit_slope = fit_loglog_slope(lambdas, means, &result.fit_note);
    result.records = std::move(records);
    return result;
}

void write_trials_csv(std::ostream &out, const std::vector<TrialRecord> &records) {
    out << "# infidelity = 1 - |Tr(U_target^dagger U)|/dim\n";
    out << "lambda,trial,duration,infidelity,seed\n";
    for (const auto &r : records) {
        out << format_real(r.lambda) << ',' << r.trial << ',' << format_real(r.duration) << ','
            << format_real(r.infidelity) << ',' << r.seed << '\n';
    }
}

} // namespace fixedzz
