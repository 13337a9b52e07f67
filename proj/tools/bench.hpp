#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hampat::cli {

struct BenchRow {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    double alpha = 0.0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::string stage;
    std::string outcome;
    int retries = 0;
    double ms = 0.0;
};

inline constexpr const char* kBenchHeader = "instance,n,m,alpha,K,seed,stage,outcome,retries,ms";

[[nodiscard]] std::vector<std::string> bench_suites();

// Runs every (case, seed) of the suite on `jobs` worker threads. Rows come
// back in grid order regardless of scheduling. Throws std::invalid_argument
// for an unknown suite.
[[nodiscard]] std::vector<BenchRow> run_bench(const std::string& suite, std::size_t seeds, std::size_t jobs);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace hampat::cli
