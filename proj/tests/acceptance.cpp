// Runs every acceptance criterion and prints one pass/fail line per criterion.

#include <cstdio>
#include <cstring>

#include "basket3/verify.hpp"

int main(int argc, char** argv) {
    basket3::AcceptanceOptions opt;
    for (int i = 1; i < argc; i++) {
        if (std::strcmp(argv[i], "--skip") == 0 && i + 1 < argc) opt.skip.insert(argv[++i]);
    }
    auto results = basket3::run_acceptance(opt);
    bool all = true;
    for (const auto& c : results) {
        std::printf("%s [%6.1fs] %s\n", c.pass ? "PASS" : "FAIL", c.seconds, c.name.c_str());
        if (!c.detail.empty()) std::printf("     %s\n", c.detail.c_str());
        all = all && c.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
