#pragma once

// Error taxonomy shared across modules. Parse errors live with the DSL in
// text.hpp; everything mathematical that can be rejected lands here.

#include <stdexcept>
#include <string>

namespace branchlaw {

// A problem whose group dimensions do not fit together (wrong corank, model
// equation violated). Mapped to its own process exit code by the CLI.
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace branchlaw
