#include "udt/witness.hpp"

#include <algorithm>

#include "json_util.hpp"

namespace udt {

void VerifyReport::check(bool pass, const std::string& what) {
  if (!pass) ok = false;
  lines.push_back((pass ? "ok " : "FAIL ") + what);
}

// ---------------------------------------------------------------- sequences

SequenceSpec SequenceSpec::geometric(Rational c_gamma, Rational q_gamma, Rational c_delta,
                                     Rational q_delta) {
  if (c_gamma <= 0 || q_gamma <= 0 || q_gamma >= 1 || c_gamma * q_gamma >= 1)
    throw std::invalid_argument("geometric gamma spec needs c > 0, 0 < q < 1, c*q < 1");
  if (c_delta <= 0 || q_delta <= 0 || q_delta >= 1)
    throw std::invalid_argument("geometric delta spec needs c > 0, 0 < q < 1");
  SequenceSpec s;
  s.kind_ = Kind::Geometric;
  s.c_gamma_ = std::move(c_gamma);
  s.q_gamma_ = std::move(q_gamma);
  s.c_delta_ = std::move(c_delta);
  s.q_delta_ = std::move(q_delta);
  return s;
}

SequenceSpec SequenceSpec::table(std::vector<Rational> gammas, std::vector<Rational> deltas) {
  if (gammas.empty() || gammas.size() != deltas.size())
    throw std::invalid_argument("sequence tables must be non-empty and equally sized");
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i] <= 0 || gammas[i] >= 1)
      throw std::invalid_argument("table gamma values must lie in (0,1)");
    if (deltas[i] <= 0) throw std::invalid_argument("table delta values must be > 0");
    if (i > 0 && gammas[i] <= gammas[i - 1])
      throw std::invalid_argument("table gamma values must be strictly increasing");
    if (i > 0 && deltas[i] > deltas[i - 1])
      throw std::invalid_argument("table delta values must be nonincreasing");
  }
  SequenceSpec s;
  s.kind_ = Kind::Table;
  s.gamma_table_ = std::move(gammas);
  s.delta_table_ = std::move(deltas);
  return s;
}

Rational SequenceSpec::gamma(int n) const {
  if (n < 1) throw std::invalid_argument("sequence index must be >= 1");
  if (kind_ == Kind::Table) {
    if (n > table_size())
      throw RangeExhausted("gamma table exhausted at n = " + std::to_string(n));
    return gamma_table_[static_cast<std::size_t>(n) - 1];
  }
  return Rational(1) - c_gamma_ * rat_pow(q_gamma_, static_cast<unsigned>(n));
}

Rational SequenceSpec::delta(int n) const {
  if (n < 1) throw std::invalid_argument("sequence index must be >= 1");
  if (kind_ == Kind::Table) {
    if (n > table_size())
      throw RangeExhausted("delta table exhausted at n = " + std::to_string(n));
    return delta_table_[static_cast<std::size_t>(n) - 1];
  }
  return c_delta_ * rat_pow(q_delta_, static_cast<unsigned>(n));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_rational(tok));
  return out;
}

}  // namespace

SequenceSpec SequenceSpec::parse(const std::string& gamma_spec, const std::string& delta_spec) {
  auto g = split(gamma_spec, ':');
  auto d = split(delta_spec, ':');
  if (g.empty() || d.empty() || g[0] != d[0])
    throw std::invalid_argument("gamma and delta specs must share a kind (geo: or table:)");
  if (g[0] == "geo") {
    if (g.size() != 3 || d.size() != 3)
      throw std::invalid_argument("geometric spec format is geo:<c>:<q>");
    return geometric(parse_rational(g[1]), parse_rational(g[2]), parse_rational(d[1]),
                     parse_rational(d[2]));
  }
  if (g[0] == "table") {
    if (g.size() != 2 || d.size() != 2)
      throw std::invalid_argument("table spec format is table:<r1>,<r2>,...");
    return table(parse_list(g[1]), parse_list(d[1]));
  }
  throw std::invalid_argument("unknown sequence kind '" + g[0] + "'");
}

std::string SequenceSpec::gamma_str() const {
  if (kind_ == Kind::Geometric) return "geo:" + to_string(c_gamma_) + ":" + to_string(q_gamma_);
  std::string out = "table:";
  for (std::size_t i = 0; i < gamma_table_.size(); ++i)
    out += (i ? "," : "") + to_string(gamma_table_[i]);
  return out;
}

std::string SequenceSpec::delta_str() const {
  if (kind_ == Kind::Geometric) return "geo:" + to_string(c_delta_) + ":" + to_string(q_delta_);
  std::string out = "table:";
  for (std::size_t i = 0; i < delta_table_.size(); ++i)
    out += (i ? "," : "") + to_string(delta_table_[i]);
  return out;
}

std::vector<Rational> derive_coarse_deltas(const SequenceSpec& fine, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  constexpr int scan_cap = 10'000'000;
  std::vector<Rational> out;
  for (int n = 1; n <= n_max; ++n) {
    Rational target = Rational(1) - pow10(-(n + 1));  // gamma_{n+1} on the canonical grid
    int best = 0;
    for (int np = 1;; ++np) {
      if (fine.kind() == SequenceSpec::Kind::Table && np > fine.table_size()) {
        if (best == fine.table_size())
          throw RangeExhausted(
              "delta coarsening: table exhausted while every entry still has gamma~ < " +
              to_string(target));
        break;
      }
      if (np > scan_cap) throw CapExceeded("delta coarsening scan exceeded cap");
      if (fine.gamma(np) < target)
        best = np;
      else
        break;
    }
    if (best == 0)
      throw RangeExhausted("delta coarsening: no n' with gamma~_{n'} < " + to_string(target));
    out.push_back(fine.delta(best));
  }
  return out;
}

// ---------------------------------------------------------- non-UDT witness

WitnessCertificate find_non_udt_witness(const SequenceSpec& seq, int levels, const Rational& eps,
                                        const WitnessOptions& opt) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  TruncatedSet t = truncate(eps);
  WitnessCertificate cert;
  cert.epsilon = eps;
  cert.seq = seq;
  Address w;
  Interval prev;
  for (int k = 1; k <= levels; ++k) {
    Rational gk = seq.gamma(k);
    Rational dk = seq.delta(k);
    Rational ak = alpha(k);
    Rational ceiling = Rational(1) - 2 * ak;
    if (!(gk > ceiling))
      throw NotCertifiable("level " + std::to_string(k) + ": gamma_k = " + to_string(gk) +
                           " <= 1 - 2 alpha_k = " + to_string(ceiling) +
                           "; no depth-" + std::to_string(k) +
                           " point can fall below gamma_k — coarsen the sequence first "
                           "(derive_coarse_deltas)");
    std::int64_t chosen = 0;
    Address cand;
    Rational x, rx, rho;
    Address base;
    if (k > 1) base = decrement_last(w);
    for (std::int64_t n = 2; n <= opt.index_cap; ++n) {
      Address c = k == 1 ? Address({n}) : child(base, n);
      AddressValue av = address_value(c);
      Rational rxc = av.r / 2;
      Rational rhoc = ak * rxc / 2;
      if (!(rxc < dk)) continue;
      if (k > 1) {
        if (!(av.a - rhoc > prev.lo && av.a + rhoc < prev.hi)) continue;
        if (!(4 * rhoc <= prev.length())) continue;
      }
      chosen = n;
      cand = std::move(c);
      x = std::move(av.a);
      rx = std::move(rxc);
      rho = std::move(rhoc);
      break;
    }
    if (chosen == 0)
      throw CapExceeded("level " + std::to_string(k) + ": no index below cap " +
                        std::to_string(opt.index_cap) + " satisfies the level constraints");
    Interval ik = Interval::closed(x - rho, x + rho);
    DensityBound b = max_one_sided_density(t, x, rx);
    if (!(b.hi < gk))
      throw NeedsFinerEps("level " + std::to_string(k) + ": certified density_hi = " +
                          to_string(b.hi) + " is not < gamma_k = " + to_string(gk) +
                          " at eps = " + to_string(eps) + "; needs finer eps");
    cert.levels.push_back({k, chosen, cand, x, rx, rho, gk, dk, b.hi, ik});
    w = cand;
    prev = ik;
  }
  cert.enclosure = prev;
  return cert;
}

VerifyReport verify_non_udt_witness(const WitnessCertificate& cert) {
  return verify_non_udt_witness(cert, truncate(cert.epsilon));
}

VerifyReport verify_non_udt_witness(const WitnessCertificate& cert, const TruncatedSet& t) {
  VerifyReport rep;
  rep.check(!cert.levels.empty(), "certificate has at least one level");
  Address w;
  Interval prev;
  for (std::size_t i = 0; i < cert.levels.size(); ++i) {
    const WitnessLevel& lv = cert.levels[i];
    const int k = static_cast<int>(i) + 1;
    const std::string tag = "level " + std::to_string(k) + ": ";
    rep.check(lv.k == k, tag + "level number");
    rep.check(lv.n > 1, tag + "n_k > 1");
    if (lv.n <= 1) break;
    Address expect = k == 1 ? Address({lv.n}) : child(decrement_last(w), lv.n);
    rep.check(lv.address == expect, tag + "address is (n_1-1,...,n_{k-1}-1,n_k)");
    AddressValue av = address_value(expect);
    rep.check(lv.x == av.a, tag + "x = a_value(address)");
    rep.check(lv.r_x == av.r / 2, tag + "r_x = r_value/2");
    rep.check(lv.rho == alpha(k) * lv.r_x / 2, tag + "rho = alpha_k r_x / 2");
    rep.check(lv.gamma == cert.seq.gamma(k) && lv.delta == cert.seq.delta(k),
              tag + "gamma_k/delta_k match the sequence");
    rep.check(lv.r_x < lv.delta, tag + "r_x < delta_k  (" + to_string(lv.r_x) + " < " +
                                     to_string(lv.delta) + ")");
    DensityBound b = max_one_sided_density(t, lv.x, lv.r_x);
    rep.check(lv.density_hi < lv.gamma, tag + "density_hi < gamma_k  (" +
                                            to_string(lv.density_hi) + " < " +
                                            to_string(lv.gamma) + ")");
    rep.check(b.hi <= lv.density_hi, tag + "density bound reproduced from truncation");
    Interval expect_iv = Interval::closed(lv.x - lv.rho, lv.x + lv.rho);
    rep.check(lv.interval == expect_iv, tag + "interval = [x-rho, x+rho]");
    rep.check(lv.interval.lo < lv.x && lv.x < lv.interval.hi, tag + "x interior to I_k");
    if (k > 1) {
      rep.check(prev.lo < lv.interval.lo && lv.interval.hi < prev.hi,
                tag + "I_k strictly inside I_{k-1}");
      rep.check(2 * lv.interval.length() <= prev.length(), tag + "length at most half");
    }
    w = expect;
    prev = lv.interval;
  }
  rep.check(cert.enclosure == prev, "enclosure equals the last interval");
  return rep;
}

// --------------------------------------------------------- non-SUDT witness

Rational gamma_prime(int n) { return Rational(1) - pow2(-n); }

Rational delta_prime(int n) { return pow2(-100LL * n); }

namespace {

Rational chain_prefix_r(const std::vector<std::int64_t>& chain, std::size_t depth) {
  return r_value(Address(std::vector<std::int64_t>(chain.begin(), chain.begin() + depth)));
}

}  // namespace

SudtCertificate find_non_sudt_witness(const SequenceSpec& attacked, int j_max,
                                      const SudtOptions& opt) {
  if (j_max < 1) throw std::invalid_argument("j_max must be >= 1");
  SudtCertificate cert;
  cert.attacked = attacked;
  cert.chain.assign(10, 1);
  int k_prime = 10;
  int m_prime = 1;
  Rational chain_r = chain_prefix_r(cert.chain, 10);  // 2^-47
  cert.base_delta_prime = delta_prime(1);
  cert.base_chain_r = chain_r;
  cert.base_gamma_prime = gamma_prime(1);
  cert.base_density_floor = Rational(1) - 384 * alpha(10);
  if (!(cert.base_delta_prime < cert.base_chain_r) ||
      !(cert.base_gamma_prime < cert.base_density_floor))
    throw std::logic_error("non-SUDT base case comparisons failed");
  std::int64_t m_prev = 0;
  for (int j = 1; j <= j_max; ++j) {
    SudtStep st;
    st.j = j;
    st.k_prime = k_prime;
    st.m_prime = m_prime;
    // (b): smallest m > m_{j-1} with gamma_m above the selection margin
    // 1 - alpha(k'+2)/4 (stronger than the sound requirement at depth k'+1)
    Rational margin = Rational(1) - alpha(k_prime + 2) / 4;
    std::int64_t m = m_prev + 1;
    for (;; ++m) {
      if (m - m_prev > opt.m_cap)
        throw CapExceeded("m_j search exceeded cap at j = " + std::to_string(j));
      if (attacked.gamma(static_cast<int>(m)) > margin) break;
    }
    st.m = m;
    st.gamma_m = attacked.gamma(static_cast<int>(m));
    st.delta_m = attacked.delta(static_cast<int>(m));
    st.density_ceiling = Rational(1) - alpha(k_prime + 1) / 4;
    std::int64_t n = 1;
    for (;; ++n) {
      if (n > opt.n_cap)
        throw CapExceeded("n'_{k'+1} search exceeded cap at j = " + std::to_string(j));
      Rational r_c = chain_r * pow2(-(n + 4));
      if (2 * r_c < st.delta_m) {
        chain_r = std::move(r_c);
        break;
      }
    }
    cert.chain.push_back(n);
    st.n_next = n;
    st.two_r_next = 2 * chain_r;
    if (j == j_max) {
      cert.steps.push_back(std::move(st));
      break;
    }
    // (a) for j+1: then the chain is padded with ones up to depth k'+i
    Rational r_run = chain_r;
    std::int64_t i = 1;
    for (;; ++i) {
      if (i > opt.i_cap) throw CapExceeded("i_j search exceeded cap at j = " + std::to_string(j));
      if (i > 1) r_run *= pow2(-5);
      Rational gp = gamma_prime(m_prime + static_cast<int>(i));
      Rational floor = Rational(1) - 384 * alpha(k_prime + static_cast<int>(i));
      if (gp < floor && delta_prime(m_prime + static_cast<int>(i)) < r_run) break;
    }
    st.i = i;
    for (std::int64_t z = 1; z < i; ++z) cert.chain.push_back(1);
    chain_r = r_run;
    m_prime += static_cast<int>(i);
    k_prime += static_cast<int>(i);
    st.gamma_prime_next = gamma_prime(m_prime);
    st.density_floor_next = Rational(1) - 384 * alpha(k_prime);
    st.delta_prime_next = delta_prime(m_prime);
    st.chain_r_next = chain_r;
    cert.steps.push_back(std::move(st));
    m_prev = m;
  }
  cert.enclosure = k_interval(Address(cert.chain));
  return cert;
}

VerifyReport verify_non_sudt_witness(const SudtCertificate& cert) {
  VerifyReport rep;
  rep.check(cert.chain.size() >= 11, "chain covers the base and at least one step");
  bool ones = cert.chain.size() >= 10;
  for (std::size_t i = 0; ones && i < 10; ++i) ones = cert.chain[i] == 1;
  rep.check(ones, "base chain entries n'_1..n'_10 are all 1");
  if (!rep.ok) return rep;
  rep.check(cert.base_delta_prime == delta_prime(1) &&
                cert.base_chain_r == chain_prefix_r(cert.chain, 10) &&
                cert.base_gamma_prime == gamma_prime(1) &&
                cert.base_density_floor == Rational(1) - 384 * alpha(10),
            "base values reproduce");
  rep.check(cert.base_delta_prime < cert.base_chain_r,
            "base: delta'_1 < r(1,...,1)  (2^-100 < 2^-47)");
  rep.check(cert.base_gamma_prime < cert.base_density_floor,
            "base: gamma'_1 < 1 - 384 alpha_10  (1/2 < 1 - 384e-10)");
  int k_prime = 10;
  int m_prime = 1;
  std::int64_t m_prev = 0;
  std::size_t pos = 10;  // next chain entry to consume
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    const SudtStep& st = cert.steps[s];
    const std::string tag = "step j=" + std::to_string(st.j) + ": ";
    rep.check(st.j == static_cast<int>(s) + 1, tag + "step numbering");
    rep.check(st.k_prime == k_prime && st.m_prime == m_prime, tag + "k'_j and m'_j continue");
    rep.check(st.m > m_prev, tag + "m_j strictly increasing");
    if (pos >= cert.chain.size()) {
      rep.check(false, tag + "chain too short");
      return rep;
    }
    rep.check(cert.chain[pos] == st.n_next, tag + "chain records n'_{k'_j+1}");
    Rational two_r = 2 * chain_prefix_r(cert.chain, pos + 1);
    rep.check(two_r == st.two_r_next, tag + "2 r(chain) reproduces");
    rep.check(st.gamma_m == cert.attacked.gamma(static_cast<int>(st.m)) &&
                  st.delta_m == cert.attacked.delta(static_cast<int>(st.m)),
              tag + "attacked sequence values match");
    rep.check(st.density_ceiling == Rational(1) - alpha(k_prime + 1) / 4,
              tag + "ceiling is 1 - alpha_{k'_j+1}/4");
    rep.check(two_r < st.delta_m, tag + "(b) radius: 2 r < delta_{m_j}  (" + to_string(two_r) +
                                      " < " + to_string(st.delta_m) + ")");
    rep.check(st.gamma_m > st.density_ceiling, tag + "(b) ceiling: gamma_{m_j} > 1 - alpha/4  (" +
                                                 to_string(st.gamma_m) + " > " +
                                                 to_string(st.density_ceiling) + ")");
    const bool last = s + 1 == cert.steps.size();
    if (last) {
      rep.check(st.i == 0, tag + "final step does not extend the chain");
      rep.check(pos + 1 == cert.chain.size(), tag + "chain ends after n'_{k'_j+1}");
      break;
    }
    rep.check(st.i >= 1, tag + "i_j >= 1");
    if (st.i < 1) return rep;
    bool pad = pos + static_cast<std::size_t>(st.i) <= cert.chain.size();
    for (std::size_t z = pos + 1; pad && z < pos + static_cast<std::size_t>(st.i); ++z)
      pad = cert.chain[z] == 1;
    rep.check(pad, tag + "chain padded with ones up to k'_{j+1}");
    if (!pad) return rep;
    k_prime += static_cast<int>(st.i);
    m_prime += static_cast<int>(st.i);
    pos += static_cast<std::size_t>(st.i);
    Rational chain_r = chain_prefix_r(cert.chain, pos);
    rep.check(st.gamma_prime_next == gamma_prime(m_prime) &&
                  st.density_floor_next == Rational(1) - 384 * alpha(k_prime) &&
                  st.delta_prime_next == delta_prime(m_prime) && st.chain_r_next == chain_r,
              tag + "(a) values reproduce");
    rep.check(st.gamma_prime_next < st.density_floor_next,
              tag + "(a) gamma'_{m'_{j+1}} < 1 - 384 alpha_{k'_{j+1}}");
    rep.check(st.delta_prime_next < st.chain_r_next,
              tag + "(a) delta'_{m'_{j+1}} < r(chain at k'_{j+1})");
    m_prev = st.m;
  }
  rep.check(cert.enclosure == k_interval(Address(cert.chain)),
            "enclosure is K(chain) at the final depth");
  return rep;
}

// ------------------------------------------------------------ finite unions

SudtFiniteCertificate sudt_deltas_finite_union(const IntervalSet& s, const SequenceSpec& gammas,
                                               int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (s.empty()) throw std::invalid_argument("set must be a non-empty finite union of intervals");
  Rational min_len;
  bool first = true;
  for (const auto& p : s.parts()) {
    if (p.degenerate())
      throw std::invalid_argument("degenerate component [" + to_string(p.lo) +
                                  "] rejected: components must be non-degenerate closed intervals");
    if (first || p.length() < min_len) min_len = p.length();
    first = false;
  }
  SudtFiniteCertificate cert;
  cert.set = s;
  cert.min_component_length = min_len;
  cert.deltas.assign(static_cast<std::size_t>(n_max), min_len);
  TruncatedSet t = exact_set(s);
  Rational g = gammas.gamma(n_max);
  for (const auto& p : s.parts()) {
    cert.endpoint_checks.push_back(
        {p.lo, Side::Right, in_E_gamma_delta(t, p.lo, g, min_len, min_len)});
    cert.endpoint_checks.push_back(
        {p.hi, Side::Left, in_E_gamma_delta(t, p.hi, g, min_len, min_len)});
  }
  return cert;
}

Rational abar_sparsity_check(const Address& addr) {
  Rational bottom = a_value(parent_successor(addr));
  Rational top = a_value(child(addr, 1));
  return (top - bottom) / r_value(addr);
}

// ------------------------------------------------------------------- JSON

namespace {

nlohmann::json seq_json(const SequenceSpec& s) {
  if (s.kind() == SequenceSpec::Kind::Geometric)
    return {{"kind", "geometric"},
            {"c_gamma", detail::rat_json(s.c_gamma())},
            {"q_gamma", detail::rat_json(s.q_gamma())},
            {"c_delta", detail::rat_json(s.c_delta())},
            {"q_delta", detail::rat_json(s.q_delta())}};
  nlohmann::json g = nlohmann::json::array(), d = nlohmann::json::array();
  for (const auto& v : s.gamma_table()) g.push_back(detail::rat_json(v));
  for (const auto& v : s.delta_table()) d.push_back(detail::rat_json(v));
  return {{"kind", "table"}, {"gamma", g}, {"delta", d}};
}

SequenceSpec seq_from(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "geometric")
    return SequenceSpec::geometric(detail::rat_from(j.at("c_gamma")),
                                   detail::rat_from(j.at("q_gamma")),
                                   detail::rat_from(j.at("c_delta")),
                                   detail::rat_from(j.at("q_delta")));
  if (kind == "table") {
    std::vector<Rational> g, d;
    for (const auto& e : j.at("gamma")) g.push_back(detail::rat_from(e));
    for (const auto& e : j.at("delta")) d.push_back(detail::rat_from(e));
    return SequenceSpec::table(std::move(g), std::move(d));
  }
  throw std::invalid_argument("unknown sequence kind '" + kind + "'");
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

}  // namespace

std::string to_json_string(const SequenceSpec& s) { return seq_json(s).dump(2); }

SequenceSpec sequence_spec_from_json_string(const std::string& text) {
  return seq_from(nlohmann::json::parse(text));
}

std::string to_json_string(const WitnessCertificate& c) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lv : c.levels)
    levels.push_back({{"k", lv.k},
                      {"n", lv.n},
                      {"address", lv.address.indices},
                      {"x", detail::rat_json(lv.x)},
                      {"r_x", detail::rat_json(lv.r_x)},
                      {"rho", detail::rat_json(lv.rho)},
                      {"gamma", detail::rat_json(lv.gamma)},
                      {"delta", detail::rat_json(lv.delta)},
                      {"density_hi", detail::rat_json(lv.density_hi)},
                      {"interval", detail::interval_json(lv.interval)}});
  nlohmann::json j{{"type", "non-udt"},
                   {"epsilon", detail::rat_json(c.epsilon)},
                   {"sequence", seq_json(c.seq)},
                   {"levels", levels},
                   {"enclosure", detail::interval_json(c.enclosure)}};
  return j.dump(2);
}

WitnessCertificate witness_certificate_from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("type").get<std::string>() != "non-udt")
    throw std::invalid_argument("certificate type is not non-udt");
  WitnessCertificate c;
  c.epsilon = detail::rat_from(j.at("epsilon"));
  c.seq = seq_from(j.at("sequence"));
  for (const auto& e : j.at("levels")) {
    WitnessLevel lv;
    lv.k = e.at("k").get<int>();
    lv.n = e.at("n").get<std::int64_t>();
    lv.address = Address(e.at("address").get<std::vector<std::int64_t>>());
    lv.x = detail::rat_from(e.at("x"));
    lv.r_x = detail::rat_from(e.at("r_x"));
    lv.rho = detail::rat_from(e.at("rho"));
    lv.gamma = detail::rat_from(e.at("gamma"));
    lv.delta = detail::rat_from(e.at("delta"));
    lv.density_hi = detail::rat_from(e.at("density_hi"));
    lv.interval = detail::interval_from(e.at("interval"));
    c.levels.push_back(std::move(lv));
  }
  c.enclosure = detail::interval_from(j.at("enclosure"));
  return c;
}

std::string to_json_string(const SudtCertificate& c) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& st : c.steps) {
    nlohmann::json e{{"j", st.j},
                     {"k_prime", st.k_prime},
                     {"m_prime", st.m_prime},
                     {"m", st.m},
                     {"n_next", st.n_next},
                     {"i", st.i},
                     {"check_b",
                      {{"gamma_m", detail::rat_json(st.gamma_m)},
                       {"density_ceiling", detail::rat_json(st.density_ceiling)},
                       {"delta_m", detail::rat_json(st.delta_m)},
                       {"two_r_next", detail::rat_json(st.two_r_next)}}}};
    if (st.i > 0)
      e["check_a"] = {{"gamma_prime_next", detail::rat_json(st.gamma_prime_next)},
                      {"density_floor_next", detail::rat_json(st.density_floor_next)},
                      {"delta_prime_next", detail::rat_json(st.delta_prime_next)},
                      {"chain_r_next", detail::rat_json(st.chain_r_next)}};
    steps.push_back(std::move(e));
  }
  nlohmann::json j{
      {"type", "non-sudt"},
      {"attacked", seq_json(c.attacked)},
      {"chain", c.chain},
      {"base",
       {{"delta_prime_1", detail::rat_json(c.base_delta_prime)},
        {"chain_r", detail::rat_json(c.base_chain_r)},
        {"gamma_prime_1", detail::rat_json(c.base_gamma_prime)},
        {"density_floor", detail::rat_json(c.base_density_floor)}}},
      {"levels", steps},
      {"enclosure", detail::interval_json(c.enclosure)},
      {"note", "condition (a) is certified by the small-radius floor on the whole K interval; "
               "condition (b) by the two-sided removal ceiling at depth k'_j+1"}};
  return j.dump(2);
}

SudtCertificate sudt_certificate_from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("type").get<std::string>() != "non-sudt")
    throw std::invalid_argument("certificate type is not non-sudt");
  SudtCertificate c;
  c.attacked = seq_from(j.at("attacked"));
  c.chain = j.at("chain").get<std::vector<std::int64_t>>();
  const auto& b = j.at("base");
  c.base_delta_prime = detail::rat_from(b.at("delta_prime_1"));
  c.base_chain_r = detail::rat_from(b.at("chain_r"));
  c.base_gamma_prime = detail::rat_from(b.at("gamma_prime_1"));
  c.base_density_floor = detail::rat_from(b.at("density_floor"));
  for (const auto& e : j.at("levels")) {
    SudtStep st;
    st.j = e.at("j").get<int>();
    st.k_prime = e.at("k_prime").get<int>();
    st.m_prime = e.at("m_prime").get<int>();
    st.m = e.at("m").get<std::int64_t>();
    st.n_next = e.at("n_next").get<std::int64_t>();
    st.i = e.at("i").get<std::int64_t>();
    const auto& cb = e.at("check_b");
    st.gamma_m = detail::rat_from(cb.at("gamma_m"));
    st.density_ceiling = detail::rat_from(cb.at("density_ceiling"));
    st.delta_m = detail::rat_from(cb.at("delta_m"));
    st.two_r_next = detail::rat_from(cb.at("two_r_next"));
    if (st.i > 0) {
      const auto& ca = e.at("check_a");
      st.gamma_prime_next = detail::rat_from(ca.at("gamma_prime_next"));
      st.density_floor_next = detail::rat_from(ca.at("density_floor_next"));
      st.delta_prime_next = detail::rat_from(ca.at("delta_prime_next"));
      st.chain_r_next = detail::rat_from(ca.at("chain_r_next"));
    }
    c.steps.push_back(std::move(st));
  }
  c.enclosure = detail::interval_from(j.at("enclosure"));
  return c;
}

std::string to_json_string(const SudtFiniteCertificate& c) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& ec : c.endpoint_checks)
    checks.push_back({{"x", detail::rat_json(ec.x)},
                      {"side", ec.side == Side::Right ? "right" : "left"},
                      {"result", tri_name(ec.result)}});
  nlohmann::json deltas = nlohmann::json::array();
  for (const auto& d : c.deltas) deltas.push_back(detail::rat_json(d));
  nlohmann::json j{{"type", "sudt-finite"},
                   {"set", detail::interval_set_json(c.set)},
                   {"min_component_length", detail::rat_json(c.min_component_length)},
                   {"deltas", deltas},
                   {"levels", checks},
                   {"basis", "endpoint-full-side"}};
  return j.dump(2);
}

}  // namespace udt
