#include <iostream>

#include "zigzagcat/acceptance.hpp"

int main() {
    auto results = zzc::run_acceptance({}, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += !r.pass;
    std::cout << results.size() - failed << "/" << results.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
