#include "geocalc/gseq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geocalc/errors.hpp"

namespace geocalc {

GSeq::GSeq(std::vector<GNum> prefix, bool finite_tail)
    : prefix_(std::move(prefix)), finite_tail_(finite_tail) {
  if (prefix_.empty()) throw TableTooSmall("a sequence needs at least one entry");
}

bool GSeq::defined_at(std::size_t k) const {
  return k >= 1 && (k <= prefix_.size() || finite_tail_);
}

GNum GSeq::at(std::size_t k) const {
  if (k == 0) throw IndexError("sequence indices start at 1");
  if (k <= prefix_.size()) return prefix_[k - 1];
  if (finite_tail_) return GNum::zero();
  throw IndexError("index " + std::to_string(k) + " is past the " +
                   std::to_string(prefix_.size()) + " known entries");
}

GSeq gadd(const GSeq& x, const GSeq& y) {
  const std::size_t n = std::max(x.size(), y.size());
  std::vector<GNum> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(gadd(x.at(k), y.at(k)));
  return GSeq(std::move(out), x.finite_tail() && y.finite_tail());
}

GSeq gmul(GNum alpha, const GSeq& x) {
  std::vector<GNum> out;
  out.reserve(x.size());
  for (const GNum& v : x.prefix()) out.push_back(gmul(alpha, v));
  return GSeq(std::move(out), x.finite_tail());
}

GSeq delta_g(const GSeq& x) {
  const std::size_t n = x.finite_tail() ? x.size() : x.size() - 1;
  if (n == 0) {
    throw TableTooSmall("the difference of a sequence needs two entries or a finite tail");
  }
  std::vector<GNum> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(gsub(x.at(k), x.at(k + 1)));
  return GSeq(std::move(out), x.finite_tail());
}

GNum sup_norm(const GSeq& x) {
  double m = 0.0;
  for (const GNum& v : x.prefix()) m = std::max(m, std::abs(v.log_value()));
  return GNum::from_exponent(m);
}

GNum delta_norm(const GSeq& x) { return gadd(gabs(x.at(1)), sup_norm(delta_g(x))); }

GSeq head_normalize(const GSeq& x) {
  std::vector<GNum> out = x.prefix();
  out.front() = GNum::zero();
  return GSeq(std::move(out), x.finite_tail());
}

double IdentitySides::log_gap() const { return std::abs(lhs.log_value() - rhs.log_value()); }

IdentitySides geometric_abel_sum(const GSeq& a, const GSeq& b, std::size_t n) {
  if (n > 0 && (!a.defined_at(n) || !b.defined_at(n + 1))) {
    throw IndexError("summation by parts to n = " + std::to_string(n) +
                     " needs a_1..a_n and b_1..b_{n+1}");
  }
  std::vector<GNum> lhs_terms;
  std::vector<GNum> rhs_terms;
  std::vector<GNum> running;  // a_1 .. a_k
  GNum partial;               // S_k
  for (std::size_t k = 1; k <= n; ++k) {
    lhs_terms.push_back(gmul(a.at(k), b.at(k)));
    running.push_back(a.at(k));
    partial = gsum(running);
    rhs_terms.push_back(gmul(partial, gsub(b.at(k), b.at(k + 1))));
  }
  if (n > 0) rhs_terms.push_back(gmul(partial, b.at(n + 1)));
  return {gsum(lhs_terms), gsum(rhs_terms)};
}

namespace {

void require_finite_tail(const GSeq& a, const char* what) {
  if (!a.finite_tail()) {
    throw InfiniteTailError(std::string(what) +
                            " needs a sequence whose tail is the geometric zero");
  }
}

}  // namespace

GNum tail_sum(const GSeq& a, std::size_t n) {
  require_finite_tail(a, "tail sum");
  if (n >= a.size()) return GNum::zero();
  const auto first = a.prefix().begin() + static_cast<std::ptrdiff_t>(n);
  return gsum(std::vector<GNum>(first, a.prefix().end()));
}

IdentitySides corollary3_identity(const GSeq& a, std::size_t n) {
  require_finite_tail(a, "the tail-sum identity");
  std::vector<GNum> lhs_terms;
  std::vector<GNum> tails;
  for (std::size_t k = 1; k <= n; ++k) {
    const GNum weight = GNum::from_exponent(static_cast<double>(k));
    lhs_terms.push_back(gmul(weight, a.at(k + 1)));
    tails.push_back(tail_sum(a, k));
  }
  const GNum correction =
      gmul(GNum::from_exponent(static_cast<double>(n)), tail_sum(a, n + 1));
  return {gsum(lhs_terms), gsub(gsum(tails), correction)};
}

DualReport dual_partial_sums(const GSeq& a) {
  DualReport r;
  r.exact = a.finite_tail();
  std::vector<GNum> d1_terms;
  std::vector<GNum> d2_terms;
  double sup = 0.0;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    const GNum weight = GNum::from_exponent(static_cast<double>(k));
    d1_terms.push_back(gmul(weight, gabs(a.at(k))));
    d2_terms.push_back(gmul(weight, a.at(k)));
    r.d1_partial.push_back(gsum(d1_terms));
    r.d2_partial.push_back(gsum(d2_terms));
    sup = std::max(sup, std::abs(r.d2_partial.back().log_value()));
  }
  r.d3_sup = GNum::from_exponent(sup);
  if (r.exact) {
    std::vector<GNum> abs_tails;
    for (std::size_t k = 1; k <= a.size(); ++k) {
      r.tail_sums.push_back(tail_sum(a, k));
      abs_tails.push_back(gabs(r.tail_sums.back()));
      r.r_abs_partial.push_back(gsum(abs_tails));
    }
  }
  return r;
}

}  // namespace geocalc
