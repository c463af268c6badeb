// io.hpp
// JSON input files for the CLI: mu-tables and generator lists.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eab/matgrp.hpp"
#include "eab/sms.hpp"

namespace eab {

// Malformed input; line/col are 1-based, 0 when no position applies.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, int line, int col);
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

// {"rank": k, "mu": [0/1 x 2^k]}. Only the structure is checked here;
// bilinearity is left to validate().
SymplecticMetricSpace parse_mu_table(const std::string& text);

struct GeneratorInput {
    FieldMode mode = FieldMode::Real;
    int n = 0;
    std::vector<ProjectiveElement> generators;
};

// {"field_mode": "real|complex|quaternion", "n": n,
//  "generators": [{"perm": [...], "entries": ["1","-i",...], "conj": false}]}
GeneratorInput parse_generators(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace eab
