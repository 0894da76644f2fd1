// Compares the serial reference kernels against the OpenMP versions.

#include "apg/conjectures.hpp"
#include "apg/sylvester.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    uint64_t omit_limit = argc > 1 ? std::strtoull(argv[1], nullptr, 10)
                                   : 10'000'000;
    uint64_t range_hi = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20'000;

    std::cout << "enumerate_omitted, N = " << omit_limit << "\n";
    auto t0 = std::chrono::steady_clock::now();
    auto serial = apg::enumerate_omitted_serial(omit_limit);
    double ts = seconds(t0);
    std::cout << "  serial:   " << ts << " s, " << serial.size() << " omitted\n";

    t0 = std::chrono::steady_clock::now();
    auto parallel = apg::enumerate_omitted(omit_limit);
    double tp = seconds(t0);
    std::cout << "  parallel: " << tp << " s, " << parallel.size()
              << " omitted\n";
    if (serial != parallel) {
        std::cerr << "MISMATCH between serial and parallel kernels\n";
        return 1;
    }
    std::cout << "  speedup: " << ts / tp << "x\n\n";

    apg::SearchPolicy policy;
    std::cout << "verify_range even, [4, " << range_hi << "]\n";
    t0 = std::chrono::steady_clock::now();
    auto one = apg::verify_range(apg::RangeMode::Even, 4, range_hi, policy, 1);
    ts = seconds(t0);
    std::cout << "  1 worker:  " << ts << " s, resolved " << one.resolved << "\n";

    t0 = std::chrono::steady_clock::now();
    auto many = apg::verify_range(apg::RangeMode::Even, 4, range_hi, policy, 0);
    tp = seconds(t0);
    std::cout << "  all cores: " << tp << " s, resolved " << many.resolved
              << "\n";
    if (one.resolved != many.resolved || one.unresolved != many.unresolved) {
        std::cerr << "MISMATCH between worker counts\n";
        return 1;
    }
    std::cout << "  speedup: " << ts / tp << "x\n";
    return 0;
}
