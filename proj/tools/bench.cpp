// Benchmark comparing the OpenMP enumeration and confluence kernels against
// their single-threaded reference paths.
#include <chrono>
#include <cstdio>

#include "mq/classify.hpp"
#include "mq/reduction.hpp"

using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main() {
    for (long long d : {4, 5, 6}) {
        auto t0 = clock_type::now();
        auto serial = mq::enumerate_zero_settings_serial(d);
        double ts = seconds_since(t0);

        t0 = clock_type::now();
        auto parallel = mq::enumerate_zero_settings(d);
        double tp = seconds_since(t0);

        std::printf("enumerate d=%lld: serial %.3fs, parallel %.3fs (x%.2f), %zu settings%s\n", d,
                    ts, tp, tp > 0 ? ts / tp : 0.0, parallel.size(),
                    serial.size() == parallel.size() ? "" : " [MISMATCH]");
    }

    // confluence batch on a fixed family of dense settings
    auto s = mq::make_setting(4, {1, 2, 1, 2},
                              {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}, {1, 0, 1}, {2, 1, 1}});
    auto t0 = clock_type::now();
    bool ok = true;
    for (int r = 0; r < 8; ++r)
        ok = mq::verify_confluence(s, 64, 1000 + r) && ok;
    double tc = seconds_since(t0);
    std::printf("confluence 8x64 trials: %.3fs%s\n", tc, ok ? "" : " [FAILED]");
    return ok ? 0 : 1;
}
