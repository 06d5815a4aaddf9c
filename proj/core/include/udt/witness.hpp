#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udt/construction.hpp"
#include "udt/density.hpp"
#include "udt/errors.hpp"

namespace udt {

// gamma_n increasing to 1 and delta_n decreasing to 0, either as closed
// geometric forms (gamma_n = 1 - c q^n, delta_n = c q^n) or finite tables.
class SequenceSpec {
 public:
  enum class Kind { Geometric, Table };

  // A default-constructed spec is a placeholder; build real ones through the
  // factories below.
  SequenceSpec() = default;

  static SequenceSpec geometric(Rational c_gamma, Rational q_gamma, Rational c_delta,
                                Rational q_delta);
  static SequenceSpec table(std::vector<Rational> gammas, std::vector<Rational> deltas);
  // "geo:c:q" (gamma_n = 1 - c q^n resp. delta_n = c q^n) or "table:a,b,c"
  static SequenceSpec parse(const std::string& gamma_spec, const std::string& delta_spec);

  Kind kind() const { return kind_; }
  // 1-based; table specs throw RangeExhausted past the end
  Rational gamma(int n) const;
  Rational delta(int n) const;
  int table_size() const { return static_cast<int>(gamma_table_.size()); }

  std::string gamma_str() const;
  std::string delta_str() const;

  const Rational& c_gamma() const { return c_gamma_; }
  const Rational& q_gamma() const { return q_gamma_; }
  const Rational& c_delta() const { return c_delta_; }
  const Rational& q_delta() const { return q_delta_; }
  const std::vector<Rational>& gamma_table() const { return gamma_table_; }
  const std::vector<Rational>& delta_table() const { return delta_table_; }

 private:
  Kind kind_ = Kind::Geometric;
  Rational c_gamma_, q_gamma_, c_delta_, q_delta_;
  std::vector<Rational> gamma_table_, delta_table_;
};

// delta_n = min{ delta~_n' : gamma~_n' < 1 - 10^-(n+1) }, aligning an
// arbitrary attacked pair with the canonical gamma_n = 1 - 10^-n grid.
std::vector<Rational> derive_coarse_deltas(const SequenceSpec& fine, int n_max);

struct WitnessLevel {
  int k = 0;
  std::int64_t n = 0;  // chosen last index
  Address address;     // (n_1-1, ..., n_{k-1}-1, n_k)
  Rational x;
  Rational r_x;
  Rational rho;
  Rational gamma;
  Rational delta;
  Rational density_hi;
  Interval interval;
};

struct WitnessCertificate {
  Rational epsilon;
  SequenceSpec seq;
  std::vector<WitnessLevel> levels;
  Interval enclosure;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;
  void check(bool pass, const std::string& what);
};

struct WitnessOptions {
  std::int64_t index_cap = 1 << 20;
};

// The nested-interval selection: at level k pick the smallest n_k > 1 such
// that the point x = a(n_1-1,...,n_{k-1}-1,n_k) has r_x = r/2 < delta_k and
// [x - rho, x + rho] with rho = alpha_k r_x / 2 fits strictly inside the
// previous interval; certify density_hi < gamma_k from the truncation.
// Selection uses exact address arithmetic only, so the chosen indices do not
// depend on eps; eps decides certifiability alone.
WitnessCertificate find_non_udt_witness(const SequenceSpec& seq, int levels, const Rational& eps,
                                        const WitnessOptions& opt = {});

// Self-contained re-verification: rebuilds the truncation from the recorded
// epsilon and re-derives every inequality from certificate fields alone.
VerifyReport verify_non_udt_witness(const WitnessCertificate& cert);
VerifyReport verify_non_udt_witness(const WitnessCertificate& cert, const TruncatedSet& t);

// fixed sequences defining E': gamma'_n = 1 - 2^-n, delta'_n = 2^-100n
Rational gamma_prime(int n);
Rational delta_prime(int n);

struct SudtStep {
  int j = 0;
  int k_prime = 0;        // k'_j
  int m_prime = 0;        // m'_j
  std::int64_t m = 0;     // m_j
  std::int64_t n_next = 0;  // n'_{k'_j + 1}
  std::int64_t i = 0;       // i_j (0 on the final step)
  // condition (b) at depth k'_j + 1
  Rational gamma_m, density_ceiling, delta_m, two_r_next;
  // condition (a) for j+1 (unset on the final step)
  Rational gamma_prime_next, density_floor_next, delta_prime_next, chain_r_next;
};

struct SudtCertificate {
  SequenceSpec attacked;
  std::vector<std::int64_t> chain;  // n'_1 .. n'_{last depth}
  // base case j = 1: delta'_1 < r(1,...,1 ten ones), gamma'_1 < 1 - 384 alpha_10
  Rational base_delta_prime, base_chain_r, base_gamma_prime, base_density_floor;
  std::vector<SudtStep> steps;
  Interval enclosure;
};

struct SudtOptions {
  std::int64_t m_cap = 1'000'000;
  std::int64_t n_cap = 1'000'000;
  std::int64_t i_cap = 100'000;
};

// The non-SUDT induction against an attacked (gamma_n, delta_n)
// pair; every selection takes the smallest qualifying integer and every
// recorded inequality is exact.
SudtCertificate find_non_sudt_witness(const SequenceSpec& attacked, int j_max,
                                      const SudtOptions& opt = {});
VerifyReport verify_non_sudt_witness(const SudtCertificate& cert);

struct EndpointCheck {
  Rational x;
  Side side = Side::Right;
  Tri result = Tri::Unknown;
};

struct SudtFiniteCertificate {
  IntervalSet set;
  Rational min_component_length;
  std::vector<Rational> deltas;
  std::vector<EndpointCheck> endpoint_checks;
};

// For a finite union of non-degenerate closed intervals,
// delta_n = min component length makes every component endpoint a certified
// member of s^{gamma,delta_n} via its full side. Other inputs are rejected.
SudtFiniteCertificate sudt_deltas_finite_union(const IntervalSet& s, const SequenceSpec& gammas,
                                               int n_max);

// |[a(parent_successor(addr)), a(child(addr,1))]| / r(addr); equals 1/16 for
// every address, which bounds |closure(A) ∩ K| / |K| from above.
Rational abar_sparsity_check(const Address& addr);

std::string to_json_string(const SequenceSpec& s);
SequenceSpec sequence_spec_from_json_string(const std::string& text);
std::string to_json_string(const WitnessCertificate& c);
WitnessCertificate witness_certificate_from_json_string(const std::string& text);
std::string to_json_string(const SudtCertificate& c);
SudtCertificate sudt_certificate_from_json_string(const std::string& text);
std::string to_json_string(const SudtFiniteCertificate& c);

}  // namespace udt
