#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "torsion/angle.hpp"
#include "torsion/rational.hpp"

namespace torsion {

/// Base highest weight τ of G = Spin(1, 2n+1) shifted along the ray by m.
///
/// The representation τ(m) has highest weight Σ_i (m + τ_i) e_i. Only the base
/// τ must be dominant; the uniform shift by m preserves that.
class RayConfig {
 public:
  /// Throws InvalidArgument unless n ≥ 1, tau has n+1 entries, is non-increasing
  /// and non-negative, and m ≥ 0.
  RayConfig(int n, std::vector<std::int64_t> tau, std::int64_t m = 0);

  int n() const noexcept { return n_; }
  std::span<const std::int64_t> tau() const noexcept { return tau_; }
  std::int64_t m() const noexcept { return m_; }

  RayConfig with_m(std::int64_t m) const { return RayConfig(n_, tau_, m); }

  /// (m + τ_1, ..., m + τ_{n+1}).
  std::vector<std::int64_t> highest_weight() const;

  friend bool operator==(const RayConfig&, const RayConfig&) = default;

 private:
  int n_;
  std::vector<std::int64_t> tau_;
  std::int64_t m_;
};

/// Integral weight in the basis e_2, ..., e_{n+1} of the Cartan of M = Spin(2n).
struct WeightVector {
  std::vector<std::int64_t> coords;

  std::size_t size() const noexcept { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// ρ_M = (n-1, n-2, ..., 0).
WeightVector rho_m(int n);

/// λ_{τ(m),k} = m + τ_{k+1} + n - k, for 0 ≤ k ≤ n.
std::int64_t lambda_tau_k(const RayConfig& cfg, int k);

/// (λ_0, ..., λ_n), strictly decreasing.
std::vector<std::int64_t> lambdas(const RayConfig& cfg);

/// Λ(σ_{τ(m),k}) + ρ_M: the λ-list with λ_k removed.
WeightVector sigma_weight_plus_rho(const RayConfig& cfg, int k);

/// Element of W(D_n): a permutation of the n slots followed by an even number of sign flips.
class SignedPermutation {
 public:
  /// perm[i] is the slot that input slot i moves to; signs apply to output slots.
  /// Throws InvalidArgument if perm is not a bijection, a sign is not ±1,
  /// or the number of flips is odd.
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);

  static SignedPermutation identity(int n);

  int rank() const noexcept { return static_cast<int>(perm_.size()); }
  std::span<const int> perm() const noexcept { return perm_; }
  std::span<const int> signs() const noexcept { return signs_; }
  /// Determinant as a linear map; equals the permutation sign since the flips are even.
  int det() const noexcept { return det_; }

  SignedPermutation inverse() const;
  /// (a ∘ b)(w) = a(b(w)).
  friend SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.perm_ == b.perm_ && a.signs_ == b.signs_;
  }

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
  int det_ = 1;
};

/// Output slot perm[i] carries signs[perm[i]] × input slot i.
WeightVector apply_weyl(const SignedPermutation& s, const WeightVector& w);

/// Largest rank accepted by WeylGroupD; TORSION_WEYL_CAP overrides the default of 8.
int weyl_rank_cap();

/// Lazy range over all 2^{n-1}·n! elements of W(D_n).
///
///   for (const auto& s : WeylGroupD(3)) { ... }
class WeylGroupD {
 public:
  /// Throws InvalidArgument for n < 1 and ResourceCapExceeded above weyl_rank_cap().
  explicit WeylGroupD(int n);

  int rank() const noexcept { return n_; }
  std::uint64_t size() const noexcept;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SignedPermutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const SignedPermutation*;
    using reference = const SignedPermutation&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class WeylGroupD;
    explicit iterator(int n);
    void refresh();

    int n_ = 0;
    std::vector<int> perm_;
    std::uint64_t mask_ = 0;
    bool done_ = true;
    SignedPermutation current_ = SignedPermutation::identity(1);
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

/// Materializes the group; mostly useful for tests.
std::vector<SignedPermutation> enumerate_weyl_D(int n);

/// dim τ(m) by the Weyl dimension formula over the positive roots e_i ± e_j of D_{n+1}.
BigInt weyl_dim(const RayConfig& cfg);

/// Elliptic conjugacy class: d identity blocks followed by rotations R_φ for the n+1-d angles.
struct EllipticClass {
  int d = 1;
  std::vector<Angle> angles;
  /// Stands for vol(Γ_γ\G_γ).
  Rational weight{1};

  /// Throws InvalidArgument unless 1 ≤ d ≤ n, angles.size() == n+1-d, every angle is a
  /// nontrivial rotation, the angles are pairwise distinct mod 2π and weight > 0.
  void validate(int n) const;

  std::int64_t period() const { return common_period(angles); }

  friend bool operator==(const EllipticClass&, const EllipticClass&) = default;
};

}  // namespace torsion
