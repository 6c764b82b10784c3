#include "torsion/lie.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "torsion/error.hpp"

namespace torsion {

RayConfig::RayConfig(int n, std::vector<std::int64_t> tau, std::int64_t m)
    : n_(n), tau_(std::move(tau)), m_(m) {
  if (n_ < 1) throw InvalidArgument("n must be at least 1, got " + std::to_string(n_));
  if (tau_.size() != static_cast<std::size_t>(n_) + 1)
    throw InvalidArgument("tau must have n+1 = " + std::to_string(n_ + 1) + " entries, got " +
                          std::to_string(tau_.size()));
  for (std::size_t i = 0; i < tau_.size(); ++i) {
    if (tau_[i] < 0) throw InvalidArgument("tau entries must be non-negative");
    if (i > 0 && tau_[i] > tau_[i - 1]) throw InvalidArgument("tau not non-increasing");
  }
  if (m_ < 0) throw InvalidArgument("m must be non-negative, got " + std::to_string(m_));
}

std::vector<std::int64_t> RayConfig::highest_weight() const {
  std::vector<std::int64_t> w(tau_);
  for (auto& x : w) x += m_;
  return w;
}

WeightVector rho_m(int n) {
  if (n < 1) throw InvalidArgument("rho_m: n must be at least 1");
  WeightVector w;
  w.coords.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w.coords[static_cast<std::size_t>(j)] = n - 1 - j;
  return w;
}

std::int64_t lambda_tau_k(const RayConfig& cfg, int k) {
  if (k < 0 || k > cfg.n())
    throw InvalidArgument("k = " + std::to_string(k) + " outside [0, " + std::to_string(cfg.n()) +
                          "]");
  return cfg.m() + cfg.tau()[static_cast<std::size_t>(k)] + cfg.n() - k;
}

std::vector<std::int64_t> lambdas(const RayConfig& cfg) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(cfg.n()) + 1);
  for (int k = 0; k <= cfg.n(); ++k) out.push_back(lambda_tau_k(cfg, k));
  return out;
}

WeightVector sigma_weight_plus_rho(const RayConfig& cfg, int k) {
  if (k < 0 || k > cfg.n())
    throw InvalidArgument("k = " + std::to_string(k) + " outside [0, " + std::to_string(cfg.n()) +
                          "]");
  const auto lam = lambdas(cfg);
  WeightVector w;
  w.coords.reserve(static_cast<std::size_t>(cfg.n()));
  for (int j = 0; j <= cfg.n(); ++j)
    if (j != k) w.coords.push_back(lam[static_cast<std::size_t>(j)]);
  return w;
}

// --- SignedPermutation -----------------------------------------------------

namespace {

int permutation_sign(std::span<const int> perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  const std::size_t n = perm_.size();
  if (signs_.size() != n) throw InvalidArgument("perm and signs differ in length");
  std::vector<bool> hit(n, false);
  for (int p : perm_) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || hit[static_cast<std::size_t>(p)])
      throw InvalidArgument("perm is not a bijection");
    hit[static_cast<std::size_t>(p)] = true;
  }
  int flips = 0;
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InvalidArgument("signs must be +1 or -1");
    flips += s < 0;
  }
  if (flips % 2) throw InvalidArgument("W(D_n) allows only an even number of sign changes");
  det_ = permutation_sign(perm_);
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  return SignedPermutation(std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignedPermutation SignedPermutation::inverse() const {
  // s(w)[perm[i]] = signs[perm[i]] w[i]  =>  s^{-1}(x)[i] = signs[perm[i]] x[perm[i]].
  const std::size_t n = perm_.size();
  std::vector<int> inv(n), sg(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
    sg[i] = signs_[static_cast<std::size_t>(perm_[i])];
  }
  return SignedPermutation(std::move(inv), std::move(sg));
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank()) throw InvalidArgument("compose: rank mismatch");
  const std::size_t n = a.perm_.size();
  std::vector<int> perm(n), signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto mid = static_cast<std::size_t>(b.perm_[i]);
    const auto out = static_cast<std::size_t>(a.perm_[mid]);
    perm[i] = static_cast<int>(out);
    signs[out] = a.signs_[out] * b.signs_[mid];
  }
  return SignedPermutation(std::move(perm), std::move(signs));
}

WeightVector apply_weyl(const SignedPermutation& s, const WeightVector& w) {
  if (w.size() != static_cast<std::size_t>(s.rank()))
    throw InvalidArgument("apply_weyl: weight has " + std::to_string(w.size()) +
                          " coordinates, group element has rank " + std::to_string(s.rank()));
  WeightVector out;
  out.coords.resize(w.size());
  const auto perm = s.perm();
  const auto signs = s.signs();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto j = static_cast<std::size_t>(perm[i]);
    out.coords[j] = signs[j] * w.coords[i];
  }
  return out;
}

// --- WeylGroupD ------------------------------------------------------------

int weyl_rank_cap() {
  if (const char* env = std::getenv("TORSION_WEYL_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 8;
}

WeylGroupD::WeylGroupD(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("W(D_n) needs n >= 1");
  const int cap = weyl_rank_cap();
  if (n > cap)
    throw ResourceCapExceeded("Weyl group rank " + std::to_string(n) + " exceeds the cap " +
                              std::to_string(cap) + " (set TORSION_WEYL_CAP to raise it)");
}

std::uint64_t WeylGroupD::size() const noexcept {
  std::uint64_t s = std::uint64_t{1} << (n_ - 1);
  for (int i = 2; i <= n_; ++i) s *= static_cast<std::uint64_t>(i);
  return s;
}

WeylGroupD::iterator::iterator(int n) : n_(n), perm_(static_cast<std::size_t>(n)), done_(false) {
  for (int i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;
  refresh();
}

void WeylGroupD::iterator::refresh() {
  std::vector<int> signs(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) signs[static_cast<std::size_t>(i)] = (mask_ >> i) & 1 ? -1 : 1;
  current_ = SignedPermutation(perm_, std::move(signs));
}

WeylGroupD::iterator& WeylGroupD::iterator::operator++() {
  // Next even-weight sign mask; when exhausted, advance the permutation.
  const std::uint64_t limit = std::uint64_t{1} << n_;
  do {
    ++mask_;
  } while (mask_ < limit && std::popcount(mask_) % 2);
  if (mask_ >= limit) {
    mask_ = 0;
    if (!std::next_permutation(perm_.begin(), perm_.end())) {
      done_ = true;
      return *this;
    }
  }
  refresh();
  return *this;
}

std::vector<SignedPermutation> enumerate_weyl_D(int n) {
  WeylGroupD group(n);
  std::vector<SignedPermutation> out;
  out.reserve(group.size());
  for (const auto& s : group) out.push_back(s);
  return out;
}

// --- Weyl dimension --------------------------------------------------------

BigInt weyl_dim(const RayConfig& cfg) {
  // D_{n+1}: dim = Π_{i<j} (l_i² - l_j²) / (r_i² - r_j²), l = Λ + ρ_G, r = ρ_G = (n, ..., 0).
  const int rank = cfg.n() + 1;
  const auto hw = cfg.highest_weight();
  BigInt num = 1, den = 1;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      const BigInt li = hw[static_cast<std::size_t>(i)] + (rank - 1 - i);
      const BigInt lj = hw[static_cast<std::size_t>(j)] + (rank - 1 - j);
      const long ri = rank - 1 - i, rj = rank - 1 - j;
      num *= (li - lj) * (li + lj);
      den *= BigInt((ri - rj) * (ri + rj));
    }
  }
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw LemmaViolation("Weyl dimension formula produced a non-integer");
  return q;
}

// --- EllipticClass ---------------------------------------------------------

void EllipticClass::validate(int n) const {
  if (d < 1 || d > n)
    throw InvalidArgument("d = " + std::to_string(d) + " outside [1, " + std::to_string(n) + "]");
  const auto expected = static_cast<std::size_t>(n + 1 - d);
  if (angles.size() != expected)
    throw InvalidArgument("expected n+1-d = " + std::to_string(expected) + " angles, got " +
                          std::to_string(angles.size()));
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (angles[i].is_trivial()) throw InvalidArgument("angle must be nonzero mod 2pi");
    for (std::size_t j = 0; j < i; ++j)
      if (angles[i].same_rotation(angles[j])) throw InvalidArgument("angles must be distinct");
  }
  if (weight <= 0) throw InvalidArgument("class weight must be positive");
}

}  // namespace torsion
