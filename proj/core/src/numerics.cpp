#include "fivol/numerics.hpp"

#include <cmath>

namespace fivol {

std::vector<std::vector<double>> sphere_net(int n, int count) {
    std::vector<std::vector<double>> dirs;
    if (n == 1) {
        dirs.push_back({1.0});
        dirs.push_back({-1.0});
        return dirs;
    }
    if (n == 2) {
        dirs.reserve(count);
        for (int k = 0; k < count; ++k) {
            double a = 2.0 * M_PI * double(k) / double(count);
            dirs.push_back({std::cos(a), std::sin(a)});
        }
        return dirs;
    }
    if (n == 3) {
        // Fibonacci spiral.
        dirs.reserve(count);
        const double ga = M_PI * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < count; ++k) {
            double z = 1.0 - 2.0 * (double(k) + 0.5) / double(count);
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double a = ga * double(k);
            dirs.push_back({r * std::cos(a), r * std::sin(a), z});
        }
        return dirs;
    }
    std::mt19937_64 rng(0x5eedULL + std::uint64_t(n));
    std::normal_distribution<double> gauss(0.0, 1.0);
    dirs.reserve(count);
    for (int k = 0; k < count; ++k) {
        std::vector<double> v(n);
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (int j = 0; j < n; ++j) {
                v[j] = gauss(rng);
                norm2 += v[j] * v[j];
            }
        } while (norm2 < 1e-12);
        double inv = 1.0 / std::sqrt(norm2);
        for (int j = 0; j < n; ++j) v[j] *= inv;
        dirs.push_back(v);
    }
    return dirs;
}

BallNet ball_net(int n, double radius, int radial_count, int dir_count) {
    BallNet net;
    net.spacing = radius / double(radial_count);
    auto dirs = sphere_net(n, dir_count);
    net.points.push_back(std::vector<double>(n, 0.0));
    for (int k = 1; k <= radial_count; ++k) {
        double r = radius * double(k) / double(radial_count);
        for (const auto& d : dirs) {
            std::vector<double> p(n);
            for (int j = 0; j < n; ++j) p[j] = r * d[j];
            net.points.push_back(std::move(p));
        }
    }
    return net;
}

}  // namespace fivol
