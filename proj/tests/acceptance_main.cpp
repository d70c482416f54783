#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include "lll/acceptance.hpp"

int main(int argc, char** argv)
{
    int first = 1, last = lll::kAcceptanceCount;
    if (argc > 1 && std::string(argv[1]) != "all") first = last = std::atoi(argv[1]);
    bool all_pass = true;
    for (int n = first; n <= last; ++n) {
        try {
            for (const auto& line : lll::run_acceptance(n)) {
                std::printf("%s\n", lll::format_line(line).c_str());
                all_pass = all_pass && line.pass;
            }
        } catch (const std::exception& e) {
            std::printf("FAIL [%d] error: %s\n", n, e.what());
            all_pass = false;
        }
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
