#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udt/rational.hpp"

namespace udt {

// Index sequence (n_1,...,n_k) naming a construction point; all indices >= 1.
struct Address {
  std::vector<std::int64_t> indices;

  Address() = default;
  explicit Address(std::vector<std::int64_t> ix);

  int depth() const { return static_cast<int>(indices.size()); }
  std::int64_t last() const { return indices.back(); }

  // dotted form "1.2.5", used in CSV output and log lines
  std::string str() const;
};

bool operator==(const Address& a, const Address& b);

// The point value a_{n_1..n_k}, by the defining recursion:
//   a_n = 2^-n,   a_{u,n} = a_{u+} + 2^-(n+3) * r_u,
// evaluated iteratively in O(depth). Always lands in (0, 1/2].
Rational a_value(const Address& addr);

// Gap r_{n_1..n_k} = a_{addr} - a_{parent_successor(addr)}; computed by the
// closed form 2^-(n_1+1) * prod_{i>=2} 2^-(n_i+4) (a power of two).
Rational r_value(const Address& addr);

struct AddressValue {
  Rational a;
  Rational r;
  int depth;
};
AddressValue address_value(const Address& addr);

// (n_1,...,n_k) -> (n_1,...,n_k+1)
Address parent_successor(const Address& addr);

// (n_1,...,n_k) -> (n_1,...,n_k,n)
Address child(const Address& addr, std::int64_t n);

// (n_1,...,n_k) -> (n_1,...,n_k-1); requires n_k >= 2
Address decrement_last(const Address& addr);

// order by point value (equals reverse lexicographic order on indices)
bool value_less(const Address& a, const Address& b);

// JSON wire format: array of positive integers, e.g. [1,2,5]
std::string to_json_string(const Address& addr);
Address address_from_json_string(const std::string& text);

}  // namespace udt
