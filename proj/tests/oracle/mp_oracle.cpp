#include "mp_oracle.hpp"

#include <mpfr.h>

#include <cmath>


namespace oracle {

namespace {

class Mp {
 public:
  Mp() { mpfr_init2(v_, kBits); mpfr_set_ui(v_, 0, MPFR_RNDN); }
  explicit Mp(double d) { mpfr_init2(v_, kBits); mpfr_set_d(v_, d, MPFR_RNDN); }
  Mp(const Mp& o) { mpfr_init2(v_, kBits); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mp& operator=(const Mp& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~Mp() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// x^{1/k} by mpfr_rootn (exact root, not exp/log).
Mp kth_root(double x, std::size_t k) {
  Mp out(x);
  mpfr_rootn_ui(out.get(), out.get(), static_cast<unsigned long>(k), MPFR_RNDN);
  return out;
}

Mp direct_ratio_minus_one(std::size_t n, double s_n, double s_next) {
  Mp a = kth_root(s_n, n);
  Mp b = kth_root(s_next, n + 1);
  Mp q;
  mpfr_div(q.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_sub_ui(q.get(), q.get(), 1, MPFR_RNDN);
  return q;
}

}  // namespace

double ratio_minus_one(std::size_t n, double s_n, double s_next) {
  return direct_ratio_minus_one(n, s_n, s_next).to_double();
}

std::string ratio_minus_one_digits(std::size_t n, double s_n, double s_next,
                                   int digits) {
  Mp q = direct_ratio_minus_one(n, s_n, s_next);
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, q.get());
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

double exponent(std::size_t n, double s_n, double s_next) {
  Mp q = direct_ratio_minus_one(n, s_n, s_next);
  if (mpfr_sgn(q.get()) <= 0) return std::nan("");
  mpfr_log(q.get(), q.get(), MPFR_RNDN);
  Mp ln_n(static_cast<double>(n));
  mpfr_log(ln_n.get(), ln_n.get(), MPFR_RNDN);
  mpfr_div(q.get(), q.get(), ln_n.get(), MPFR_RNDN);
  mpfr_neg(q.get(), q.get(), MPFR_RNDN);
  return q.to_double();
}

SandwichVerdict sandwich(std::size_t n, double p_n, double p_next, double eps) {
  Mp left = kth_root(p_n, n);
  Mp right = kth_root(p_next, n + 1);
  Mp nn(static_cast<double>(n));

  Mp lo_factor;  // 1 + n^-2
  mpfr_pow_si(lo_factor.get(), nn.get(), -2, MPFR_RNDN);
  mpfr_add_ui(lo_factor.get(), lo_factor.get(), 1, MPFR_RNDN);
  Mp hi_factor;  // 1 + n^{-2+eps}
  Mp expo(-2.0 + eps);
  mpfr_pow(hi_factor.get(), nn.get(), expo.get(), MPFR_RNDN);
  mpfr_add_ui(hi_factor.get(), hi_factor.get(), 1, MPFR_RNDN);

  Mp lower;
  mpfr_mul(lower.get(), lo_factor.get(), right.get(), MPFR_RNDN);
  Mp upper;
  mpfr_mul(upper.get(), hi_factor.get(), right.get(), MPFR_RNDN);
  return {mpfr_less_p(lower.get(), left.get()) != 0,
          mpfr_less_p(left.get(), upper.get()) != 0};
}

double sum(std::span<const double> values) {
  Mp acc;
  for (double v : values) mpfr_add_d(acc.get(), acc.get(), v, MPFR_RNDN);
  return acc.to_double();
}

double gamma_estimate(std::size_t n) {
  Mp acc;
  Mp term;
  for (std::size_t r = 1; r <= n; ++r) {
    mpfr_ui_div(term.get(), 1, Mp(static_cast<double>(r)).get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
  }
  Mp ln(static_cast<double>(n));
  mpfr_log(ln.get(), ln.get(), MPFR_RNDN);
  mpfr_sub(acc.get(), acc.get(), ln.get(), MPFR_RNDN);
  return acc.to_double();
}

double mertens_estimate(std::span<const std::uint64_t> primes) {
  Mp acc;
  Mp term;
  for (std::uint64_t p : primes) {
    mpfr_ui_div(term.get(), 1, Mp(static_cast<double>(p)).get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
  }
  Mp ll(static_cast<double>(primes.back()));
  mpfr_log(ll.get(), ll.get(), MPFR_RNDN);
  mpfr_log(ll.get(), ll.get(), MPFR_RNDN);
  mpfr_sub(acc.get(), acc.get(), ll.get(), MPFR_RNDN);
  return acc.to_double();
}

double mean_formula_rhs(std::span<const double> terms) {
  const std::size_t n = terms.size();
  Mp acc;
  for (double s : terms) {
    Mp root = kth_root(s, n);
    mpfr_add(acc.get(), acc.get(), root.get(), MPFR_RNDN);
  }
  mpfr_mul_ui(acc.get(), acc.get(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
  mpfr_div_ui(acc.get(), acc.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_div_ui(acc.get(), acc.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return acc.to_double();
}

bool is_prime_trial(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_by_trial(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 2; x <= limit; ++x) {
    if (is_prime_trial(x)) out.push_back(x);
  }
  return out;
}

}  // namespace oracle
