#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fivol {

/// Neumaier-compensated accumulator. Results are independent of how the
/// additions interleave with reads, but depend on the order of add() calls;
/// all reductions in this library add in a fixed index order so outputs are
/// bit-reproducible across thread counts.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    void add(const KahanSum& other) {
        add(other.sum_);
        add(other.comp_);
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Volume of the unit ball in R^n.
inline double unit_ball_volume(int n) {
    if (n < 0) throw std::invalid_argument("unit_ball_volume: n < 0");
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    k = std::min(k, n - k);
    for (int j = 1; j <= k; ++j) r = r * double(n - k + j) / double(j);
    return std::round(r);
}

inline double sqr(double x) { return x * x; }

/// Chunked parallel map-reduce with deterministic combination order.
/// `partial(begin, end)` computes the chunk sum; chunk results are combined
/// in chunk-index order, so the total does not depend on `threads`.
inline double parallel_reduce(std::int64_t n, int threads,
                              const std::function<double(std::int64_t, std::int64_t)>& partial) {
    if (threads < 1) threads = 1;
    const std::int64_t chunk_count = std::max<std::int64_t>(1, std::min<std::int64_t>(threads * 8, n));
    std::vector<double> partials(chunk_count, 0.0);
    auto run_chunk = [&](std::int64_t c) {
        std::int64_t lo = n * c / chunk_count;
        std::int64_t hi = n * (c + 1) / chunk_count;
        partials[c] = partial(lo, hi);
    };
    if (threads == 1 || chunk_count == 1) {
        for (std::int64_t c = 0; c < chunk_count; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::int64_t next = 0;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (std::int64_t c = t; c < chunk_count; c += threads) run_chunk(c);
            });
        }
        (void)next;
        for (auto& th : pool) th.join();
    }
    KahanSum total;
    for (double p : partials) total.add(p);
    return total.value();
}

/// Uniformly spread directions on S^{n-1}, deterministic. n in {1,2,3}
/// gets structured nets, higher n falls back to seeded random directions.
std::vector<std::vector<double>> sphere_net(int n, int count);

/// Dense net on the closed ball of given radius: scaled sphere net times
/// a radius grid, plus the center. Reports the net's radial spacing.
struct BallNet {
    std::vector<std::vector<double>> points;
    double spacing;
};
BallNet ball_net(int n, double radius, int radial_count, int dir_count);

}  // namespace fivol
