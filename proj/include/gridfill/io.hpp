#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gridfill/instance.hpp"

namespace gridfill {

struct ParseError : std::runtime_error {
    int line;  // 1-based line of the offending content
    ParseError(int line_, const std::string& what_);
};

// Instance file: header "n k J", then per row J candidate-set lines of
// exactly k integers followed by one tail-set line of k integers. '#' starts
// a comment that runs to end of line; blank lines are ignored.
Instance parse_instance(std::string_view text);

// Canonical form: single spaces, ascending set elements, one trailing
// newline per line, no comments. parse(serialize(x)) == x.
std::string serialize_instance(const Instance& inst);

// Assignment file: header "n k J_out", then k row lines of exactly J_out
// integers, then one line of k tail values.
Assignment parse_assignment(std::string_view text);
std::string serialize_assignment(const Assignment& a);

}  // namespace gridfill
