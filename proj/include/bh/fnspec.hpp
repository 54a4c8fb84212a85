#pragma once

#include "bh/harmonic.hpp"

#include <string>

namespace bh {

/// Error with the offending position inside the spec string.
struct FnSpecError : std::invalid_argument {
    FnSpecError(const std::string& msg, std::size_t position)
        : std::invalid_argument("fnspec: " + msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Builds an evaluator from the spec mini-language:
///   table:FILE
///   thoma:a=1/2,1/2;b=1/3
///   flange:k=1,l=1,nu=1;a=1/2;b=1/2;c=1
///   product:w1=1/3;f1=<spec>;f2=<spec>
///   prod-case2:f1=<spec>;nu2=<label>
///   prod-case3:nu1=<label>;f2=<spec>
///   slow:w=1/2;f=<spec>
///   slow-case2:nu=<label>;c=p/q
///   slow-case3:m=2;f=<spec>
/// Nested <spec> values may be parenthesized; parentheses are required when
/// an inner spec would swallow a following ";key=" of the outer one.
FnPtr parse_fnspec(const std::string& spec, GraphPtr graph);

/// Loads a table function from JSON: { "values": { "<label>": "p/q"|"inf" } }.
FnPtr load_table_fn(const std::string& path, GraphPtr graph);

}  // namespace bh
