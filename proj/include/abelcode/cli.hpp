#pragma once

/**
 * @file cli.hpp
 * @brief Code specification documents and the command runner behind the `abelcode` tool.
 *
 * Specs are JSON documents:
 *   {"kind": "block", "symbols": [[2], [2], [2]], "generators": [[1, 1, 0], [0, 1, 1]]}
 *   {"kind": "convolutional", "symbol": [2], "form": "kernel", "taps": [[1, 1]], "horizon": 12}
 * A symbol entry is a plain integer when its group has one cyclic factor and a list of
 * residues otherwise.
 */

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abelcode/codes.hpp"
#include "abelcode/convolutional.hpp"

namespace abelcode::cli {

/// Parse or validation failure. The message carries a line/column or a field path.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using CodeSpec = std::variant<BlockCode, ConvolutionalCode>;

CodeSpec parse_spec(const std::string& text);

/// Canonical document: block generators are the canonical basis of the code.
std::string emit_spec(const CodeSpec& spec);

struct RunResult {
    int exit_code = 0;  ///< 0 success or property holds, 1 property fails or mismatch, 2 usage or input error
    std::string out;
    std::string err;
};

/// Runs one command; args excludes the program name.
RunResult run(const std::vector<std::string>& args);

}  // namespace abelcode::cli
