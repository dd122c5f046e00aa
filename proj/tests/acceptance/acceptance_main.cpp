// Acceptance suite: runs every verification criterion at its stated size and
// prints one pass/fail line per criterion. Exit code 0 only when all pass.

#include <cstring>
#include <iostream>

#include "pba/acceptance.hpp"

int main(int argc, char** argv) {
    pba::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
        if (std::strcmp(argv[i], "--max-n") == 0 && i + 1 < argc) opt.oracle_max_n = std::atoi(argv[++i]);
    }
    auto results = pba::run_acceptance(opt);
    bool ok = pba::report_acceptance(results, std::cout);
    return ok ? 0 : 1;
}
