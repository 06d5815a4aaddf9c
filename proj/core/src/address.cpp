#include "udt/address.hpp"

#include <json.hpp>

namespace udt {

Address::Address(std::vector<std::int64_t> ix) : indices(std::move(ix)) {
  if (indices.empty()) throw std::invalid_argument("address must be non-empty");
  for (auto n : indices)
    if (n < 1) throw std::invalid_argument("address indices must be >= 1");
}

std::string Address::str() const {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(indices[i]);
  }
  return out;
}

bool operator==(const Address& a, const Address& b) { return a.indices == b.indices; }

AddressValue address_value(const Address& addr) {
  // a(prefix_j) = a(prefix_{j-1}) - r(prefix_{j-1}) * (1 - 2^-(n_j+3)),
  // which is the defining recursion with a(u+) = a(u) - r(u) substituted in.
  const auto& ix = addr.indices;
  Rational a = pow2(-ix[0]);
  Rational r = pow2(-(ix[0] + 1));
  for (std::size_t j = 1; j < ix.size(); ++j) {
    a -= r * (Rational(1) - pow2(-(ix[j] + 3)));
    r *= pow2(-(ix[j] + 4));
  }
  return {std::move(a), std::move(r), addr.depth()};
}

Rational a_value(const Address& addr) { return address_value(addr).a; }

Rational r_value(const Address& addr) {
  long long e = addr.indices[0] + 1;
  for (std::size_t j = 1; j < addr.indices.size(); ++j) e += addr.indices[j] + 4;
  return pow2(-e);
}

Address parent_successor(const Address& addr) {
  Address out = addr;
  ++out.indices.back();
  return out;
}

Address child(const Address& addr, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("child index must be >= 1");
  Address out = addr;
  out.indices.push_back(n);
  return out;
}

Address decrement_last(const Address& addr) {
  if (addr.last() < 2) throw std::invalid_argument("cannot decrement index 1");
  Address out = addr;
  --out.indices.back();
  return out;
}

bool value_less(const Address& a, const Address& b) { return a_value(a) < a_value(b); }

std::string to_json_string(const Address& addr) {
  return nlohmann::json(addr.indices).dump();
}

Address address_from_json_string(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return Address(j.get<std::vector<std::int64_t>>());
}

}  // namespace udt
