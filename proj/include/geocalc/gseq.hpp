#pragma once

// Truncated geometric sequences: the difference operator, the sup and
// difference norms, summation by parts, tail sums and dual-set diagnostics.
//
// Indices are 1-based to match x_1, x_2, ... in the usual notation.

#include <cstddef>
#include <vector>

#include "geocalc/garith.hpp"

namespace geocalc {

/// x_1 ... x_N. With finite_tail set, x_k = 1 for every k > N.
class GSeq {
 public:
  explicit GSeq(std::vector<GNum> prefix, bool finite_tail = false);

  const std::vector<GNum>& prefix() const { return prefix_; }
  bool finite_tail() const { return finite_tail_; }
  std::size_t size() const { return prefix_.size(); }

  /// x_k for k >= 1. Past the prefix this is 1 for a finite tail, otherwise
  /// IndexError.
  GNum at(std::size_t k) const;
  bool defined_at(std::size_t k) const;

 private:
  std::vector<GNum> prefix_;
  bool finite_tail_ = false;
};

/// Entrywise x (+) y over the longer of the two prefixes.
GSeq gadd(const GSeq& x, const GSeq& y);
/// Scalar multiple alpha (*) x.
GSeq gmul(GNum alpha, const GSeq& x);

/// (x_k (-) x_{k+1}). Needs two entries, or one with a finite tail.
GSeq delta_g(const GSeq& x);

/// sup_k |x_k|^G over the represented entries.
GNum sup_norm(const GSeq& x);

/// |x_1|^G (+) ||Delta_G x||_inf.
GNum delta_norm(const GSeq& x);

/// (1, x_2, x_3, ...).
GSeq head_normalize(const GSeq& x);

struct IdentitySides {
  GNum lhs;
  GNum rhs;
  double log_gap() const;
};

/// Both sides of the summation-by-parts identity
///   sum_{k<=n} a_k (*) b_k = sum_{k<=n} S_k (*) (b_k (-) b_{k+1}) (+) S_n (*) b_{n+1}
/// with S_k = a_1 (+) ... (+) a_k.
IdentitySides geometric_abel_sum(const GSeq& a, const GSeq& b, std::size_t n);

/// R_n = a_{n+1} (+) a_{n+2} (+) ...; requires a finite tail.
GNum tail_sum(const GSeq& a, std::size_t n);

/// Both sides of sum_{k<=n} e^k (*) a_{k+1} = sum_{k<=n} R_k (-) e^n (*) R_{n+1}.
IdentitySides corollary3_identity(const GSeq& a, std::size_t n);

struct DualReport {
  /// Partial sums of e^k (*) |a_k|^G.
  std::vector<GNum> d1_partial;
  /// Partial sums of e^k (*) a_k.
  std::vector<GNum> d2_partial;
  /// R_1 ... R_N; empty unless exact.
  std::vector<GNum> tail_sums;
  /// Partial sums of |R_k|^G; empty unless exact.
  std::vector<GNum> r_abs_partial;
  /// max_n |sum_{k<=n} e^k (*) a_k|^G.
  GNum d3_sup;
  /// True when the input has a finite tail, so the sums above are the
  /// complete series rather than truncations.
  bool exact = false;
};

DualReport dual_partial_sums(const GSeq& a);

}  // namespace geocalc
