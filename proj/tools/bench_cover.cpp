// Compares the serial combination sweep against the OpenMP-parallel one
// on a B_{m,n} coverability instance. Both must agree exactly.

#include <chrono>
#include <iostream>
#include <random>

#include "surf/cover.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    int m = 2, n = 6, k = 3, edges = 10;
    if (argc > 1) m = std::atoi(argv[1]);
    if (argc > 2) n = std::atoi(argv[2]);
    if (argc > 3) k = std::atoi(argv[3]);
    if (argc > 4) edges = std::atoi(argv[4]);

    std::mt19937_64 rng(42);
    surf::CoverInstance inst{m, n, k, {}};
    std::uniform_int_distribution<int> len(1, m), vertex(1, n);
    for (int i = 0; i < edges; ++i) {
        std::vector<int> u;
        for (int l = len(rng); l > 0; --l) u.push_back(vertex(rng));
        inst.hyperedges.push_back(std::move(u));
    }

    std::cout << "instance: m=" << m << " n=" << n << " k=" << k << " edges=" << edges << "\n";
    surf::ReactionSystem sys = surf::build_cover_system(m, n);
    std::cout << "system: " << sys.reactions.size() << " reactions\n";

    auto t0 = std::chrono::steady_clock::now();
    surf::CoverResult serial = surf::is_k_coverable_serial(sys, inst);
    const double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    surf::CoverResult parallel = surf::is_k_coverable_parallel(sys, inst);
    const double parallel_s = seconds_since(t0);

    std::cout << "serial:   " << serial_s << " s, coverable=" << serial.coverable << "\n";
    std::cout << "parallel: " << parallel_s << " s, coverable=" << parallel.coverable << "\n";
    if (serial.coverable != parallel.coverable || serial.witness != parallel.witness) {
        std::cout << "MISMATCH between serial and parallel results\n";
        return 1;
    }
    std::cout << "speedup:  " << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "x\n";
    return 0;
}
