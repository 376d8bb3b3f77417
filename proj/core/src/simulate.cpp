#include "lande/simulate.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "lande/spin1.hpp"

namespace lande {

namespace {

// --- seeding and sampling -------------------------------------------------
//
// xoshiro256** with splitmix64 state initialization. chosen because its
// output sequence is pinned by the published reference implementation (the
// standard library leaves distribution internals unspecified), and jump()
// gives documented, non-overlapping 2^128-step substreams: shots are split
// into fixed-size batches, batch b drawing from the seed stream jumped b
// times, so results are reproducible and independent of batch scheduling.

struct SplitMix64 {
    std::uint64_t x;
    std::uint64_t next() {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

struct Xoshiro256ss {
    std::array<std::uint64_t, 4> s;

    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s) w = sm.next();
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // uniform in [0, 1) from the top 53 bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // advance 2^128 steps (reference jump polynomial)
    void jump() {
        static constexpr std::uint64_t kJump[] = {0x180EC6D33CFD0ABAULL, 0xD5A61266F0C9392CULL,
                                                  0xA9582618E03FC9AAULL, 0x39ABDC4529B1661CULL};
        std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
        for (std::uint64_t mask : kJump)
            for (int b = 0; b < 64; ++b) {
                if (mask & (1ULL << b)) {
                    s0 ^= s[0];
                    s1 ^= s[1];
                    s2 ^= s[2];
                    s3 ^= s[3];
                }
                next();
            }
        s = {s0, s1, s2, s3};
    }
};

constexpr std::int64_t kShotsPerBatch = 65536;

// --- chain plumbing --------------------------------------------------------

void check_chain(const MeasurementChain& chain) {
    if (chain.system.two_j < 0) throw Error("chain: twoJ must be nonnegative");
    if (chain.system.dim() > kMaxDim) throw DimTooLarge("chain: dimension exceeds 21");
    if (chain.prepared_index < 0 || chain.prepared_index >= chain.system.dim())
        throw Error("chain: prepared projection index out of range");
    if (chain.analyzers.empty()) throw Error("chain: needs at least one analyzer");
}

// row-major transition probabilities from projections along `from` to
// projections along `to`: closed forms at J = 1, squared moduli of the
// numeric amplitude table otherwise
std::vector<double> step_table(const SpinSystem& s, const Direction& from, const Direction& to) {
    const int n = s.dim();
    std::vector<double> p(static_cast<size_t>(n) * static_cast<size_t>(n));
    if (s.two_j == 2) {
        const auto t = probability_table(from, to);
        for (int i = 0; i < 3; ++i)
            for (int f = 0; f < 3; ++f) p[static_cast<size_t>(i) * 3 + f] = t[static_cast<size_t>(i)][static_cast<size_t>(f)];
    } else {
        const AmplitudeTable t = general_amplitudes_j(s, from, to);
        for (int i = 0; i < n; ++i)
            for (int f = 0; f < n; ++f) p[static_cast<size_t>(i) * n + f] = std::norm(t.entries(i, f));
    }
    return p;
}

std::vector<std::vector<double>> step_tables(const MeasurementChain& chain) {
    std::vector<std::vector<double>> tables;
    tables.reserve(chain.analyzers.size());
    const Direction* prev = &chain.prepared_direction;
    for (const Direction& d : chain.analyzers) {
        tables.push_back(step_table(chain.system, *prev, d));
        prev = &d;
    }
    return tables;
}

// --- chi-square helpers ----------------------------------------------------

// regularized incomplete gamma functions: lower series for x < a+1, upper
// continued fraction (modified Lentz) otherwise
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 1000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_fraction(double a, double x) {
    constexpr double kFloor = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kFloor;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kFloor) d = kFloor;
        c = b + an / c;
        if (std::abs(c) < kFloor) c = kFloor;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// upper tail Q(a, x) = 1 - P(a, x)
double gamma_q(double a, double x) {
    if (x <= 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_fraction(a, x);
}

}  // namespace

std::map<OutcomeSequence, double> chain_distribution(const MeasurementChain& chain) {
    check_chain(chain);
    const int n = chain.system.dim();
    const size_t steps = chain.analyzers.size();
    const auto tables = step_tables(chain);

    double total_outcomes = 1.0;
    for (size_t t = 0; t < steps; ++t) total_outcomes *= n;
    if (total_outcomes > 1e7) throw Error("chain: outcome space too large to enumerate");

    std::map<OutcomeSequence, double> dist;
    OutcomeSequence seq(steps, 0);
    while (true) {
        double p = 1.0;
        int prev = chain.prepared_index;
        for (size_t t = 0; t < steps; ++t) {
            p *= tables[t][static_cast<size_t>(prev) * n + seq[t]];
            prev = seq[t];
        }
        dist.emplace(seq, p);
        // odometer over the outcome digits
        size_t t = steps;
        while (t > 0) {
            --t;
            if (++seq[t] < n) break;
            seq[t] = 0;
            if (t == 0) return dist;
        }
    }
}

OutcomeHistogram simulate(const MeasurementChain& chain, std::int64_t shots, std::uint64_t seed) {
    check_chain(chain);
    if (shots < 1) throw Error("simulate: shots must be positive");
    const int n = chain.system.dim();
    const size_t steps = chain.analyzers.size();
    const auto tables = step_tables(chain);

    // cumulative rows plus each row's last positive column, the fallback when
    // rounding pushes the draw past the accumulated total
    std::vector<std::vector<double>> cdf(steps);
    std::vector<std::vector<int>> last_pos(steps);
    for (size_t t = 0; t < steps; ++t) {
        cdf[t].resize(static_cast<size_t>(n) * n);
        last_pos[t].assign(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int f = 0; f < n; ++f) {
                const double p = tables[t][static_cast<size_t>(i) * n + f];
                if (p > 0.0) last_pos[t][static_cast<size_t>(i)] = f;
                acc += p;
                cdf[t][static_cast<size_t>(i) * n + f] = acc;
            }
        }
    }

    OutcomeHistogram h;
    h.shots = shots;
    Xoshiro256ss stream_head(seed);
    OutcomeSequence seq(steps, 0);
    for (std::int64_t first = 0; first < shots; first += kShotsPerBatch) {
        Xoshiro256ss g = stream_head;  // substream for this batch
        const std::int64_t batch = std::min(kShotsPerBatch, shots - first);
        for (std::int64_t shot = 0; shot < batch; ++shot) {
            int state = chain.prepared_index;
            for (size_t t = 0; t < steps; ++t) {
                const double u = g.uniform();
                const double* row = &cdf[t][static_cast<size_t>(state) * n];
                int pick = last_pos[t][static_cast<size_t>(state)];
                for (int f = 0; f < n; ++f) {
                    if (u < row[f]) {
                        pick = f;
                        break;
                    }
                }
                seq[t] = pick;
                state = pick;
            }
            ++h.counts[seq];
        }
        stream_head.jump();
    }
    return h;
}

GofResult goodness_of_fit(const OutcomeHistogram& h, const std::map<OutcomeSequence, double>& dist) {
    for (const auto& [seq, cnt] : h.counts)
        if (cnt > 0 && dist.find(seq) == dist.end())
            throw Error("goodness of fit: observed outcome outside the expected support");

    const double shots = static_cast<double>(h.shots);
    constexpr double kMinExpected = 5.0;

    // cells with expected count below 5 are pooled; an undersized pool is
    // merged into the smallest kept cell
    std::vector<std::pair<double, double>> cells;  // (count, expected)
    double pool_count = 0.0;
    double pool_expected = 0.0;
    size_t smallest_kept = 0;
    for (const auto& [seq, p] : dist) {
        const double expected = shots * p;
        const auto it = h.counts.find(seq);
        const double count = it == h.counts.end() ? 0.0 : static_cast<double>(it->second);
        if (expected >= kMinExpected) {
            cells.emplace_back(count, expected);
            if (expected < cells[smallest_kept].second) smallest_kept = cells.size() - 1;
        } else {
            pool_count += count;
            pool_expected += expected;
        }
    }
    if (cells.empty()) throw InsufficientShots("goodness of fit: every cell is below the expected-count floor");
    if (pool_expected >= kMinExpected) {
        cells.emplace_back(pool_count, pool_expected);
    } else if (pool_expected > 0.0 || pool_count > 0.0) {
        cells[smallest_kept].first += pool_count;
        cells[smallest_kept].second += pool_expected;
    }

    GofResult r;
    r.chi2 = 0.0;
    for (const auto& [count, expected] : cells) {
        const double diff = count - expected;
        r.chi2 += diff * diff / expected;
    }
    r.dof = static_cast<int>(cells.size()) - 1;
    r.p_value = r.dof == 0 ? 1.0 : gamma_q(0.5 * r.dof, 0.5 * r.chi2);
    r.pass = r.p_value > 0.001;
    return r;
}

}  // namespace lande
