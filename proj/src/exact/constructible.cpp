#include "golden/exact/constructible.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "golden/exact/errors.hpp"

namespace golden::exact {

namespace {

struct Interval {
  bool bounded = false;
  Dyadic lo;
  Dyadic hi;
};

struct Cache {
  bool valid = false;
  long bits = -1;
  Interval interval;
};

double log2_upper(const mpz_class& v) {
  if (mpz_cmpabs_ui(v.get_mpz_t(), 1) <= 0) return 0.0;
  return static_cast<double>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

}  // namespace

struct Node {
  Op op = Op::Const;
  Rational value;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  // log2 of the BFMSS upper bounds u(E) and l(E).
  double log2_u = 0.0;
  double log2_l = 0.0;

  mutable std::mutex mutex;
  mutable Cache cache;
  mutable std::atomic<long> last_sign_bits{0};
  // Decided sign plus 2, or 0 while unknown.
  mutable std::atomic<int> known_sign{0};
};

namespace {

using NodePtr = std::shared_ptr<const Node>;

// --- interning -------------------------------------------------------------

struct Key {
  Op op;
  const Node* a;
  const Node* b;
  std::string constant;

  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = std::hash<int>{}(static_cast<int>(k.op));
    const auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U); };
    mix(std::hash<const void*>{}(k.a));
    mix(std::hash<const void*>{}(k.b));
    mix(std::hash<std::string>{}(k.constant));
    return h;
  }
};

class InternTable {
 public:
  template <typename Make>
  NodePtr get_or_create(const Key& key, Make&& make) {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) {
      if (auto alive = it->second.lock()) return alive;
    }
    NodePtr node = make();
    table_[key] = node;
    if (table_.size() > sweep_at_) sweep();
    return node;
  }

 private:
  void sweep() {
    std::erase_if(table_, [](const auto& kv) { return kv.second.expired(); });
    sweep_at_ = std::max<std::size_t>(4096, 2 * table_.size());
  }

  std::mutex mutex_;
  std::unordered_map<Key, std::weak_ptr<const Node>, KeyHash> table_;
  std::size_t sweep_at_ = 4096;
};

InternTable& intern_table() {
  static InternTable table;
  return table;
}

NodePtr make_const(const Rational& q) {
  Key key{Op::Const, nullptr, nullptr, q.to_string()};
  return intern_table().get_or_create(key, [&] {
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->value = q;
    n->log2_u = log2_upper(q.numerator());
    n->log2_l = log2_upper(q.denominator());
    return NodePtr(n);
  });
}

NodePtr make_node(Op op, const NodePtr& a, const NodePtr& b) {
  Key key{op, a.get(), b.get(), {}};
  return intern_table().get_or_create(key, [&] {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = a;
    n->rhs = b;
    switch (op) {
      case Op::Add:
      case Op::Sub:
        n->log2_u = std::max(a->log2_u + b->log2_l, a->log2_l + b->log2_u) + 1.0;
        n->log2_l = a->log2_l + b->log2_l;
        break;
      case Op::Mul:
        n->log2_u = a->log2_u + b->log2_u;
        n->log2_l = a->log2_l + b->log2_l;
        break;
      case Op::Div:
        n->log2_u = a->log2_u + b->log2_l;
        n->log2_l = a->log2_l + b->log2_u;
        break;
      case Op::Sqrt:
        // sqrt(U/L) = sqrt(UL)/L or U/sqrt(UL), whichever bound is smaller.
        if (a->log2_u >= a->log2_l) {
          n->log2_u = (a->log2_u + a->log2_l) / 2.0;
          n->log2_l = a->log2_l;
        } else {
          n->log2_u = a->log2_u;
          n->log2_l = (a->log2_u + a->log2_l) / 2.0;
        }
        break;
      case Op::Const:
        break;
    }
    return NodePtr(n);
  });
}

// --- interval evaluation ---------------------------------------------------

Interval eval(const Node& n, long p);

Interval eval_fresh(const Node& n, long p) {
  Interval out;
  switch (n.op) {
    case Op::Const:
      out.bounded = true;
      out.lo = Dyadic::floor_of(n.value, p);
      out.hi = Dyadic::ceil_of(n.value, p);
      return out;
    case Op::Add:
    case Op::Sub: {
      const Interval a = eval(*n.lhs, p);
      const Interval b = eval(*n.rhs, p);
      if (!a.bounded || !b.bounded) return out;
      out.bounded = true;
      if (n.op == Op::Add) {
        out.lo = (a.lo + b.lo).floor_to(p);
        out.hi = (a.hi + b.hi).ceil_to(p);
      } else {
        out.lo = (a.lo - b.hi).floor_to(p);
        out.hi = (a.hi - b.lo).ceil_to(p);
      }
      return out;
    }
    case Op::Mul: {
      const Interval a = eval(*n.lhs, p);
      const Interval b = eval(*n.rhs, p);
      if (!a.bounded || !b.bounded) return out;
      const Dyadic c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
      const Dyadic* lo = &c[0];
      const Dyadic* hi = &c[0];
      for (const Dyadic& v : c) {
        if (v < *lo) lo = &v;
        if (*hi < v) hi = &v;
      }
      out.bounded = true;
      out.lo = lo->floor_to(p);
      out.hi = hi->ceil_to(p);
      return out;
    }
    case Op::Div: {
      const Interval a = eval(*n.lhs, p);
      const Interval b = eval(*n.rhs, p);
      if (!a.bounded || !b.bounded) return out;
      if (b.lo.sign() <= 0 && b.hi.sign() >= 0) return out;
      const Dyadic* num[2] = {&a.lo, &a.hi};
      const Dyadic* den[2] = {&b.lo, &b.hi};
      bool first = true;
      for (const Dyadic* x : num) {
        for (const Dyadic* y : den) {
          Dyadic lo = Dyadic::floor_quotient(*x, *y, p);
          Dyadic hi = Dyadic::ceil_quotient(*x, *y, p);
          if (first || lo < out.lo) out.lo = std::move(lo);
          if (first || out.hi < hi) out.hi = std::move(hi);
          first = false;
        }
      }
      out.bounded = true;
      return out;
    }
    case Op::Sqrt: {
      const Interval a = eval(*n.lhs, p);
      if (!a.bounded) return out;
      const Dyadic zero;
      out.bounded = true;
      out.lo = Dyadic::floor_sqrt(max(a.lo, zero), p);
      out.hi = Dyadic::ceil_sqrt(max(a.hi, zero), p);
      return out;
    }
  }
  return out;
}

Interval eval(const Node& n, long p) {
  if (n.op == Op::Const) return eval_fresh(n, p);
  {
    std::lock_guard lock(n.mutex);
    if (n.cache.valid && n.cache.bits >= p) return n.cache.interval;
  }
  Interval fresh = eval_fresh(n, p);
  std::lock_guard lock(n.mutex);
  if (n.cache.valid && n.cache.interval.bounded) {
    if (fresh.bounded) {
      fresh.lo = max(fresh.lo, n.cache.interval.lo);
      fresh.hi = min(fresh.hi, n.cache.interval.hi);
    } else {
      fresh = n.cache.interval;
    }
  }
  if (!n.cache.valid || n.cache.bits < p) {
    n.cache.valid = true;
    n.cache.bits = p;
    n.cache.interval = fresh;
  }
  return fresh;
}

std::size_t count_radicals(const Node& root) {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{&root};
  std::size_t count = 0;
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->op == Op::Sqrt) ++count;
    if (n->lhs) stack.push_back(n->lhs.get());
    if (n->rhs) stack.push_back(n->rhs.get());
  }
  return count;
}

constexpr double kMaxSeparationBits = 1u << 30;

double separation_bits(const Node& n) {
  // BFMSS: a nonzero value satisfies |E| >= 1 / (u^(D-1) * l), D = 2^radicals.
  const double degree = std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(count_radicals(n), 1000)));
  const double bits = (degree - 1.0) * n.log2_u + n.log2_l;
  return bits * (1.0 + 1e-9) + 2.0;
}

// --- square-root simplification ---------------------------------------------

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    for (unsigned c = 2; c < 1000; ++c) {
      bool prime = true;
      for (unsigned d : out) {
        if (d * d > c) break;
        if (c % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

std::string render(const Node& n) {
  switch (n.op) {
    case Op::Const: {
      const std::string s = n.value.to_string();
      return (n.value.sign() < 0 || !n.value.is_integer()) ? "(" + s + ")" : s;
    }
    case Op::Sqrt:
      return "sqrt(" + render(*n.lhs) + ")";
    case Op::Add:
      return "(" + render(*n.lhs) + " + " + render(*n.rhs) + ")";
    case Op::Sub:
      return "(" + render(*n.lhs) + " - " + render(*n.rhs) + ")";
    case Op::Mul:
      return "(" + render(*n.lhs) + " * " + render(*n.rhs) + ")";
    case Op::Div:
      return "(" + render(*n.lhs) + " / " + render(*n.rhs) + ")";
  }
  return {};
}

}  // namespace

// --- ConstructibleReal -------------------------------------------------------

ConstructibleReal::ConstructibleReal() : node_(make_const(Rational(0))) {}
ConstructibleReal::ConstructibleReal(std::int64_t n) : node_(make_const(Rational(n))) {}
ConstructibleReal::ConstructibleReal(const Rational& q) : node_(make_const(q)) {}

std::optional<Rational> ConstructibleReal::as_rational() const {
  if (node_->op == Op::Const) return node_->value;
  return std::nullopt;
}

Op ConstructibleReal::op() const { return node_->op; }

Real operator+(const Real& a, const Real& b) {
  const auto qa = a.as_rational();
  const auto qb = b.as_rational();
  if (qa && qb) return Real(*qa + *qb);
  if (qa && qa->is_zero()) return b;
  if (qb && qb->is_zero()) return a;
  return Real(make_node(Op::Add, a.node_, b.node_));
}

Real operator-(const Real& a, const Real& b) {
  const auto qa = a.as_rational();
  const auto qb = b.as_rational();
  if (qa && qb) return Real(*qa - *qb);
  if (qb && qb->is_zero()) return a;
  if (a.node_ == b.node_) return Real();
  // 0 - (0 - x) = x
  if (qa && qa->is_zero() && b.node_->op == Op::Sub && b.node_->lhs->op == Op::Const &&
      b.node_->lhs->value.is_zero()) {
    return Real(b.node_->rhs);
  }
  return Real(make_node(Op::Sub, a.node_, b.node_));
}

Real Real::operator-() const { return Real() - *this; }

Real operator*(const Real& a, const Real& b) {
  const auto qa = a.as_rational();
  const auto qb = b.as_rational();
  if (qa && qb) return Real(*qa * *qb);
  if ((qa && qa->is_zero()) || (qb && qb->is_zero())) return Real();
  if (qa && *qa == Rational(1)) return b;
  if (qb && *qb == Rational(1)) return a;
  // Rational factors go on the left.
  if (qb) return Real(make_node(Op::Mul, b.node_, a.node_));
  return Real(make_node(Op::Mul, a.node_, b.node_));
}

Real operator/(const Real& a, const Real& b) {
  const auto qa = a.as_rational();
  const auto qb = b.as_rational();
  if (qb) {
    if (qb->is_zero()) throw ArithmeticError(ArithmeticErrorKind::DivisionByZero, "division by zero");
    if (qa) return Real(*qa / *qb);
    return Real(qb->reciprocal()) * a;
  } else if (b.sign() == 0) {
    throw ArithmeticError(ArithmeticErrorKind::DivisionByZero, "division by an expression equal to zero");
  }
  if (qa && qa->is_zero()) return Real();
  if (a.node_ == b.node_) return Real(1);
  return Real(make_node(Op::Div, a.node_, b.node_));
}

Real sqrt(const Real& x) {
  if (const auto q = x.as_rational()) {
    if (q->sign() < 0) throw ArithmeticError(ArithmeticErrorKind::NegativeRadicand, "square root of " + q->to_string());
    if (q->is_zero()) return Real();
    // sqrt(n/d) = k * sqrt(m) / d with n*d = k^2 * m.
    mpz_class rest = q->numerator() * q->denominator();
    mpz_class k = 1;
    for (unsigned p : small_primes()) {
      const mpz_class sq = mpz_class(p) * p;
      if (sq > rest) break;
      while (mpz_divisible_p(rest.get_mpz_t(), sq.get_mpz_t()) != 0) {
        rest /= sq;
        k *= p;
      }
    }
    const Rational coef(k, q->denominator());
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      return Real(coef * Rational(r, mpz_class(1)));
    }
    Real radical(make_node(Op::Sqrt, make_const(Rational(rest, mpz_class(1))), nullptr));
    return Real(coef) * radical;
  }
  const int s = x.sign();
  if (s < 0) throw ArithmeticError(ArithmeticErrorKind::NegativeRadicand, "square root of a negative expression");
  if (s == 0) return Real();
  if (x.node_->op == Op::Mul && x.node_->lhs == x.node_->rhs) return abs(Real(x.node_->lhs));
  return Real(make_node(Op::Sqrt, x.node_, nullptr));
}

Real abs(const Real& x) { return x.sign() < 0 ? -x : x; }

std::size_t Real::radical_count() const { return count_radicals(*node_); }

double Real::separation_bound_bits() const { return separation_bits(*node_); }

long Real::last_sign_precision() const { return node_->last_sign_bits.load(); }

int Real::sign(long start_bits) const {
  if (node_->op == Op::Const) return node_->value.sign();
  if (const int known = node_->known_sign.load(); known != 0) return known - 2;
  const auto decide = [this](long bits, int s) {
    node_->last_sign_bits = bits;
    node_->known_sign = s + 2;
    return s;
  };
  long p = std::max(start_bits, 2L);
  double sep = -1.0;
  for (;;) {
    const Interval iv = eval(*node_, p);
    if (iv.bounded) {
      if (iv.lo.sign() > 0) return decide(p, 1);
      if (iv.hi.sign() < 0) return decide(p, -1);
      if (sep < 0.0) {
        sep = separation_bits(*node_);
        if (sep > kMaxSeparationBits) {
          throw std::runtime_error("separation bound of " + std::to_string(sep) +
                                   " bits exceeds the supported precision");
        }
      }
      if (iv.hi - iv.lo < Dyadic::power_of_two(-static_cast<long>(std::ceil(sep)))) return decide(p, 0);
    }
    p *= 2;
  }
}

IntervalEnclosure Real::refine(long bits) const {
  if (bits < 1) throw std::invalid_argument("refine: bits must be positive");
  const Dyadic target = Dyadic::power_of_two(-bits);
  long p = bits + 8;
  for (;;) {
    const Interval iv = eval(*node_, p);
    if (iv.bounded && iv.hi - iv.lo <= target) return IntervalEnclosure{iv.lo, iv.hi, bits};
    p *= 2;
  }
}

std::string Real::to_decimal(unsigned digits) const {
  if (digits > 10000) throw std::invalid_argument("to_decimal: at most 10000 digits");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational rscale(scale, mpz_class(1));
  const Rational half(1, 2);

  mpz_class k;
  long p = static_cast<long>(std::ceil(digits * 3.3219280948873626)) + 16;
  for (;;) {
    const Interval iv = eval(*node_, p);
    if (iv.bounded) {
      const Rational nlo = iv.lo.to_rational() * rscale;
      const Rational nhi = iv.hi.to_rational() * rscale;
      const Rational a = nlo - half;
      const Rational b = nhi - half;
      mpz_class ceil_a;
      mpz_class floor_b;
      mpz_cdiv_q(ceil_a.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
      mpz_fdiv_q(floor_b.get_mpz_t(), b.numerator().get_mpz_t(), b.denominator().get_mpz_t());
      if (floor_b < ceil_a) {
        k = ceil_a;  // no rounding boundary inside the enclosure
        break;
      }
      if (floor_b == ceil_a && nhi - nlo < Rational(1)) {
        const mpz_class m = ceil_a;
        const Rational boundary = (Rational(m, mpz_class(1)) + half) / rscale;
        const int s = (*this - Real(boundary)).sign();
        if (s > 0) {
          k = m + 1;
        } else if (s < 0) {
          k = m;
        } else {
          k = mpz_even_p(m.get_mpz_t()) != 0 ? m : mpz_class(m + 1);
        }
        break;
      }
    }
    p *= 2;
  }

  std::string body = mpz_class(::abs(k)).get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (sgn(k) < 0 ? "-" : "") + body;
}

double Real::to_double() const {
  if (const auto q = as_rational()) return q->to_double();
  const IntervalEnclosure e = refine(80);
  return ((e.lo + e.hi) * Dyadic(mpz_class(1), -1)).to_double();
}

std::string Real::to_string() const {
  std::string s = render(*node_);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')' && node_->op != Op::Const) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

bool operator==(const Real& a, const Real& b) {
  if (a.node_ == b.node_) return true;
  return (a - b).sign() == 0;
}

std::strong_ordering operator<=>(const Real& a, const Real& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const int s = (a - b).sign();
  return s <=> 0;
}

std::string serialize(std::span<const Real> values) {
  std::unordered_map<const Node*, std::size_t> ids;
  std::ostringstream out;
  std::function<std::size_t(const Node*)> visit = [&](const Node* n) -> std::size_t {
    if (auto it = ids.find(n); it != ids.end()) return it->second;
    std::size_t a = 0;
    std::size_t b = 0;
    if (n->lhs) a = visit(n->lhs.get());
    if (n->rhs) b = visit(n->rhs.get());
    const std::size_t id = ids.size();
    ids.emplace(n, id);
    out << '%' << id << " = ";
    switch (n->op) {
      case Op::Const: out << "const " << n->value.to_string(); break;
      case Op::Add: out << "add %" << a << " %" << b; break;
      case Op::Sub: out << "sub %" << a << " %" << b; break;
      case Op::Mul: out << "mul %" << a << " %" << b; break;
      case Op::Div: out << "div %" << a << " %" << b; break;
      case Op::Sqrt: out << "sqrt %" << a; break;
    }
    out << '\n';
    return id;
  };
  std::vector<std::size_t> roots;
  roots.reserve(values.size());
  for (const Real& v : values) roots.push_back(visit(v.node_.get()));
  out << "roots";
  for (std::size_t r : roots) out << " %" << r;
  out << '\n';
  return out.str();
}

const Real& phi() {
  static const Real value = (Real(1) + sqrt(Real(5))) / Real(2);
  return value;
}

const Real& sqrt_phi() {
  static const Real value = sqrt(phi());
  return value;
}

const Real& phi_sqrt_phi() {
  static const Real value = phi() * sqrt_phi();
  return value;
}

const Real& sqrt_two_phi() {
  static const Real value = sqrt(Real(2) * phi());
  return value;
}

}  // namespace golden::exact
