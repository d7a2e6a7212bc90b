#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ussp/errors.hpp"
#include "ussp/nat.hpp"

namespace ussp {

/// A target sum together with the strictly increasing weight set.
struct Instance {
  Nat target_s;
  std::vector<Nat> weights;

  std::size_t n() const { return weights.size(); }

  void validate() const {
    if (weights.empty()) throw ValidationError("instance needs at least one weight");
    Nat prev = 0u;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i].is_zero()) throw ValidationError("weights must be >= 1");
      if (i > 0 && weights[i] <= prev) {
        throw ValidationError("weights must be strictly increasing (offending value " +
                              weights[i].str() + ")");
      }
      prev = weights[i];
    }
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class MethodTag { chain, multi, dp };

inline std::string_view method_name(MethodTag tag) {
  switch (tag) {
    case MethodTag::chain: return "chain";
    case MethodTag::multi: return "multi";
    case MethodTag::dp: return "dp";
  }
  return "?";
}

inline bool solution_satisfies(Nat target, std::span<const Nat> weights,
                               std::span<const Nat> coefficients) {
  if (weights.size() != coefficients.size()) return false;
  try {
    Nat total = 0u;
    for (std::size_t i = 0; i < weights.size(); ++i) total += weights[i] * coefficients[i];
    return total == target;
  } catch (const OverflowError&) {
    return false;  // a valid solution's partial sums never leave the range
  }
}

/// Non-negative coefficient vector; the exact-sum certificate is checked at
/// construction, so a Solution in hand is always valid for its instance.
struct Solution {
  std::vector<Nat> coefficients;
  MethodTag method_tag = MethodTag::dp;

  static Solution checked(Nat target, std::span<const Nat> weights,
                          std::vector<Nat> coefficients, MethodTag tag) {
    if (!solution_satisfies(target, weights, coefficients)) {
      throw ValidationError("solution does not satisfy the instance");
    }
    return Solution{std::move(coefficients), tag};
  }
};

/// Instance file format: '#'-prefixed comment lines, then one line with the
/// decimal target, then one line of space-separated strictly increasing
/// weights. Trailing newline optional.
inline Instance parse_instance(std::istream& in) {
  Instance inst;
  std::string line;
  std::size_t line_no = 0;
  int data_lines = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    ++data_lines;
    if (data_lines > 2) throw ParseError(line_no, 1, "unexpected extra data line");

    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos >= line.size()) break;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      std::string_view token(line.data() + start, pos - start);
      auto value = Nat::parse(token);
      if (!value) {
        throw ParseError(line_no, start + 1,
                         "expected a decimal integer, got '" + std::string(token) + "'");
      }
      if (data_lines == 1) {
        inst.target_s = *value;
        std::size_t rest = pos;
        while (rest < line.size() && (line[rest] == ' ' || line[rest] == '\t')) ++rest;
        if (rest < line.size()) {
          throw ParseError(line_no, rest + 1, "target line must hold exactly one integer");
        }
        break;
      }
      inst.weights.push_back(*value);
    }
    if (data_lines == 2 && inst.weights.empty()) {
      throw ParseError(line_no, 1, "weight line is empty");
    }
  }
  if (data_lines < 2) {
    throw ParseError(line_no == 0 ? 1 : line_no, 1,
                     data_lines == 0 ? "missing target line" : "missing weight line");
  }
  inst.validate();
  return inst;
}

inline std::string format_instance(const Instance& inst) {
  std::string out = inst.target_s.str();
  out += '\n';
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    if (i > 0) out += ' ';
    out += inst.weights[i].str();
  }
  out += '\n';
  return out;
}

}  // namespace ussp
