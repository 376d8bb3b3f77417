#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lande/direction.hpp"
#include "lande/general_j.hpp"

// Monte Carlo simulator for sequential spin-projection measurements: a
// prepared state passes through an ordered chain of analyzers, collapsing
// onto one projection at each stage.  the exact outcome distribution is a
// product of single-step transition probabilities; simulated histograms
// are compared against it with a Pearson chi-square test.

namespace lande {

// thrown by goodness_of_fit when every cell is pooled away (expected count
// below the chi-square validity floor)
class InsufficientShots : public Error {
public:
    using Error::Error;
};

// prepared projection index is 0-based, ordered by descending projection
// (0 = +J, ..., 2J = -J), matching amplitude-table rows
struct MeasurementChain {
    SpinSystem system;
    Direction prepared_direction;
    int prepared_index;
    std::vector<Direction> analyzers;  // length >= 1
};

// one projection index per analyzer
using OutcomeSequence = std::vector<int>;

struct OutcomeHistogram {
    std::map<OutcomeSequence, std::int64_t> counts;
    std::int64_t shots;
};

struct GofResult {
    double chi2;
    int dof;
    double p_value;
    bool pass;  // p_value > 0.001
};

// exact distribution over outcome sequences: product over the chain of
// single-step transition probabilities (closed-form table for J = 1,
// squared moduli of general_amplitudes_j otherwise); sums to 1
std::map<OutcomeSequence, double> chain_distribution(const MeasurementChain& chain);

// sample `shots` passes through the chain, collapsing after each analyzer;
// deterministic for a given seed
OutcomeHistogram simulate(const MeasurementChain& chain, std::int64_t shots, std::uint64_t seed);

// Pearson chi-square of the histogram against the expected distribution.
// cells with expected count below 5 are pooled into one cell (and merged
// into the smallest kept cell if the pool itself stays below 5);
// dof = cells - 1; the p-value uses the regularized incomplete gamma
// function.  throws InsufficientShots if no cell survives pooling.
GofResult goodness_of_fit(const OutcomeHistogram& h, const std::map<OutcomeSequence, double>& dist);

}  // namespace lande
