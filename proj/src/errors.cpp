#include "starkdyn/errors.hpp"

namespace starkdyn {

namespace {

std::string join_problems(const std::vector<std::string>& problems)
{
    std::string out = "invalid configuration";
    for (const auto& p : problems) {
        out += "\n  ";
        out += p;
    }
    return out;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
  : Error(join_problems(problems)), problems_(std::move(problems))
{
}

} // namespace starkdyn
