// Independent seeded trials with a deterministic first-success merge.
#pragma once

#include <algorithm>
#include <vector>

#include "bisect/parallel.hpp"

namespace bisect {

template <class Outcome>
struct TrialRun {
    std::vector<Outcome> outcomes;  // every evaluated trial, by index
    int accepted = -1;              // lowest accepted index, or -1
};

/// Evaluates trials 0, 1, ... in batches and stops after the first batch that
/// contains an accepted trial. Trial i must depend only on i, so the result is
/// the same for serial and parallel execution.
template <class Outcome, class Eval>
TrialRun<Outcome> run_trials(int max_trials, Execution ex, Eval eval) {
    TrialRun<Outcome> run;
    const int batch = ex == Execution::parallel ? std::max(1, 2 * worker_count()) : 1;
    for (int start = 0; start < max_trials && run.accepted < 0; start += batch) {
        const int stop = std::min(max_trials, start + batch);
        run.outcomes.resize(static_cast<std::size_t>(stop));
        if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (int i = start; i < stop; ++i) run.outcomes[i] = eval(i);
        } else {
            for (int i = start; i < stop; ++i) run.outcomes[i] = eval(i);
        }
        for (int i = start; i < stop; ++i)
            if (run.outcomes[i].accepted) {
                run.accepted = i;
                break;
            }
    }
    if (run.accepted >= 0) run.outcomes.resize(static_cast<std::size_t>(run.accepted) + 1);
    return run;
}

}  // namespace bisect
