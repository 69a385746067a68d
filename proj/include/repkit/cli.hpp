#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repkit::cli {

/// Exit codes: 0 success, 1 property-negative, 2 input error,
/// 3 internal assertion.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace repkit::cli
