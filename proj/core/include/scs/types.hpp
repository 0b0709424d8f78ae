/*
 * types.hpp
 *
 * Shared primitive types: symbol codes and lexicographic ranges.
 */

#ifndef SCS_TYPES_HPP
#define SCS_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scs {

// Integer code of one text symbol. Code 0 is reserved for the separator;
// input symbols map to 1..sigma in byte order.
using code_t = uint8_t;

inline constexpr code_t SEPARATOR = 0;

// Inclusive interval [lo, hi] of 1-indexed lexicographic ranks.
// Empty iff lo > hi.
struct lex_range {
    int64_t lo = 1;
    int64_t hi = 0;

    bool empty() const { return lo > hi; }
    int64_t size() const { return empty() ? 0 : hi - lo + 1; }
    bool operator==(const lex_range&) const = default;
};

// Inclusive interval [lo, hi] of 1-based kept-string ids. Empty iff lo > hi.
struct id_interval {
    int64_t lo = 1;
    int64_t hi = 0;

    bool empty() const { return lo > hi; }
    int64_t size() const { return empty() ? 0 : hi - lo + 1; }
    bool operator==(const id_interval&) const = default;
};

// Thrown when a documented operation precondition is violated.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// Thrown on malformed input files or serialized blobs.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int64_t line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_number(line) {}
    int64_t line_number;
};

} // namespace scs

#endif
