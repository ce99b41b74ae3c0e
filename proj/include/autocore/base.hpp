#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace autocore {

// Exact rational scalar. All stoichiometric arithmetic in this library is
// exact; floating point appears only in the Perron cross-check.
using Rat = boost::multiprecision::mpq_rational;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bound exhaustion and refusals are distinct from "nothing found".
class BoundsError : public Error {
public:
  explicit BoundsError(const std::string& what) : Error(what) {}
};

inline int sgn(const Rat& x) { return x.sign(); }

// "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& x);

// Accepts "p" or "p/q" with optional leading '-'. Returns nullopt on junk.
std::optional<Rat> parse_rat(std::string_view s);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace autocore
