// Compares the OpenMP distance search against the serial reference on a
// family of random symplectic check matrices and reports wall times.

#include <chrono>
#include <cstdio>
#include <random>

#include "eaqec/code.hpp"

using namespace eaqec;

namespace {

EaqecCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
    while (true) {
        BinMatrix h(0, 2 * n);
        std::uniform_int_distribution<int> bit(0, 1);
        for (std::size_t r = 0; r < rows; ++r) {
            BitVector row(2 * n);
            for (std::size_t c = 0; c < 2 * n; ++c) row.set(c, bit(rng));
            h.append_row(row);
        }
        if (rank(h) == rows) return from_check_matrix(h);
    }
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    auto parse_arg = [&](int idx, std::size_t fallback) -> std::size_t {
        if (argc <= idx) return fallback;
        char* end = nullptr;
        unsigned long v = std::strtoul(argv[idx], &end, 10);
        if (end == argv[idx] || *end != '\0' || v == 0) {
            std::fprintf(stderr, "usage: %s [n] [rows] [reps]   (positive integers)\n", argv[0]);
            std::exit(2);
        }
        return v;
    };
    std::size_t n = parse_arg(1, 11);
    std::size_t rows = parse_arg(2, 4);
    std::size_t reps = parse_arg(3, 3);
    if (rows > 2 * n) {
        std::fprintf(stderr, "rows must be at most 2n\n");
        return 2;
    }

    std::mt19937_64 rng(12345);
    std::printf("n=%zu rows=%zu reps=%zu (codeword space dim %zu)\n", n, rows, reps,
                2 * n - rows);
    double total_par = 0, total_ser = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        EaqecCode code = random_code(rng, n, rows);
        DistanceResult d_par, d_ser;
        double t_par = time_ms([&] { d_par = distance(code, n); });
        double t_ser = time_ms([&] { d_ser = distance_serial(code, n); });
        bool agree = d_par.d == d_ser.d && d_par.degenerate == d_ser.degenerate &&
                     d_par.exceeds_cap == d_ser.exceeds_cap;
        std::printf("rep %zu: d=%zu%s  parallel %.1f ms  serial %.1f ms  %s\n", r, d_par.d,
                    d_par.degenerate ? " (degenerate)" : "", t_par, t_ser,
                    agree ? "agree" : "MISMATCH");
        if (!agree) return 1;
        total_par += t_par;
        total_ser += t_ser;
    }
    std::printf("total: parallel %.1f ms, serial %.1f ms, speedup %.2fx\n", total_par, total_ser,
                total_ser / (total_par > 0 ? total_par : 1));
    return 0;
}
