#ifndef LLL_ACCEPTANCE_HPP
#define LLL_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace lll {

struct AcceptanceLine {
    int criterion = 0;
    std::string label;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr int kAcceptanceCount = 11;

// Runs one acceptance criterion (1..11); some criteria report several lines.
std::vector<AcceptanceLine> run_acceptance(int criterion);
std::string format_line(const AcceptanceLine& line);

}  // namespace lll

#endif
