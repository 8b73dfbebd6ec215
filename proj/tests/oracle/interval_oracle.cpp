#include "oracle/interval_oracle.hpp"

#include <stdexcept>

namespace golden::oracle {

ExprPtr constant(const exact::Rational& q) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Const;
  e->value = q;
  return e;
}

ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr square_root(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Sqrt;
  e->lhs = std::move(a);
  return e;
}

MpfrInterval::MpfrInterval(mpfr_prec_t prec) {
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
}

MpfrInterval::~MpfrInterval() {
  mpfr_clear(lo);
  mpfr_clear(hi);
}

MpfrInterval::MpfrInterval(const MpfrInterval& other) : valid(other.valid) {
  mpfr_init2(lo, mpfr_get_prec(other.lo));
  mpfr_init2(hi, mpfr_get_prec(other.hi));
  mpfr_set(lo, other.lo, MPFR_RNDN);
  mpfr_set(hi, other.hi, MPFR_RNDN);
}

namespace {

using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min over the four endpoint combinations rounded down, max rounded up.
void corners(MpfrInterval& out, const MpfrInterval& a, const MpfrInterval& b, BinaryFn fn, mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr xs[2] = {a.lo, a.hi};
  mpfr_srcptr ys[2] = {b.lo, b.hi};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      fn(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo)) mpfr_set(out.lo, t, MPFR_RNDD);
      fn(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi)) mpfr_set(out.hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
}

}  // namespace

MpfrInterval evaluate(const Expr& e, mpfr_prec_t prec) {
  MpfrInterval out(prec);
  switch (e.kind) {
    case Expr::Kind::Const:
      mpfr_set_q(out.lo, e.value.value().get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(out.hi, e.value.value().get_mpq_t(), MPFR_RNDU);
      return out;
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      const MpfrInterval a = evaluate(*e.lhs, prec);
      const MpfrInterval b = evaluate(*e.rhs, prec);
      out.valid = a.valid && b.valid;
      if (e.kind == Expr::Kind::Add) {
        mpfr_add(out.lo, a.lo, b.lo, MPFR_RNDD);
        mpfr_add(out.hi, a.hi, b.hi, MPFR_RNDU);
      } else {
        mpfr_sub(out.lo, a.lo, b.hi, MPFR_RNDD);
        mpfr_sub(out.hi, a.hi, b.lo, MPFR_RNDU);
      }
      return out;
    }
    case Expr::Kind::Mul: {
      const MpfrInterval a = evaluate(*e.lhs, prec);
      const MpfrInterval b = evaluate(*e.rhs, prec);
      out.valid = a.valid && b.valid;
      corners(out, a, b, mpfr_mul, prec);
      return out;
    }
    case Expr::Kind::Div: {
      const MpfrInterval a = evaluate(*e.lhs, prec);
      const MpfrInterval b = evaluate(*e.rhs, prec);
      out.valid = a.valid && b.valid && (mpfr_sgn(b.lo) > 0 || mpfr_sgn(b.hi) < 0);
      if (out.valid) corners(out, a, b, mpfr_div, prec);
      return out;
    }
    case Expr::Kind::Sqrt: {
      const MpfrInterval a = evaluate(*e.lhs, prec);
      out.valid = a.valid && mpfr_sgn(a.hi) >= 0;
      if (!out.valid) return out;
      if (mpfr_sgn(a.lo) > 0) {
        mpfr_sqrt(out.lo, a.lo, MPFR_RNDD);
      } else {
        mpfr_set_zero(out.lo, 1);
      }
      mpfr_sqrt(out.hi, a.hi, MPFR_RNDU);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<int> sign(const Expr& e, mpfr_prec_t prec) {
  const MpfrInterval v = evaluate(e, prec);
  if (!v.valid) return std::nullopt;
  if (mpfr_sgn(v.lo) > 0) return 1;
  if (mpfr_sgn(v.hi) < 0) return -1;
  return std::nullopt;
}

std::optional<std::string> decimal(const Expr& e, unsigned digits, mpfr_prec_t prec) {
  const MpfrInterval v = evaluate(e, prec);
  if (!v.valid) return std::nullopt;
  mpfr_t scale;
  mpfr_t t;
  mpfr_init2(scale, prec);
  mpfr_init2(t, prec);
  mpfr_ui_pow_ui(scale, 10, digits, MPFR_RNDN);  // exact: 10^digits fits in prec bits
  mpz_t lo_k;
  mpz_t hi_k;
  mpz_init(lo_k);
  mpz_init(hi_k);
  mpfr_mul(t, v.lo, scale, MPFR_RNDD);
  mpfr_add_d(t, t, 0.5, MPFR_RNDD);
  mpfr_get_z(lo_k, t, MPFR_RNDD);
  mpfr_mul(t, v.hi, scale, MPFR_RNDU);
  mpfr_add_d(t, t, 0.5, MPFR_RNDU);
  mpfr_get_z(hi_k, t, MPFR_RNDD);
  std::optional<std::string> out;
  if (mpz_cmp(lo_k, hi_k) == 0) {
    mpz_class k(lo_k);
    std::string body = mpz_class(::abs(k)).get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    if (digits > 0) body.insert(body.size() - digits, ".");
    out = (sgn(k) < 0 ? "-" : "") + body;
  }
  mpz_clear(lo_k);
  mpz_clear(hi_k);
  mpfr_clear(scale);
  mpfr_clear(t);
  return out;
}

bool consistent_with(const Expr& e, const exact::Rational& lo, const exact::Rational& hi, mpfr_prec_t prec) {
  const MpfrInterval v = evaluate(e, prec);
  if (!v.valid) return false;
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, v.hi);
  const bool upper_ok = mpq_cmp(lo.value().get_mpq_t(), q) <= 0;
  mpfr_get_q(q, v.lo);
  const bool lower_ok = mpq_cmp(q, hi.value().get_mpq_t()) <= 0;
  mpq_clear(q);
  return upper_ok && lower_ok;
}

double approx(const Expr& e) {
  const MpfrInterval v = evaluate(e, 128);
  return mpfr_get_d(v.lo, MPFR_RNDN);
}

}  // namespace golden::oracle
