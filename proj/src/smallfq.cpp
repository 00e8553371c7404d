#include "fundclass/smallfq.hpp"

#include <algorithm>
#include <numeric>

namespace fundclass::fq {

namespace {

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

// Polynomial helpers over F_p with coefficient vectors (constant term first).
std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
    long dm = static_cast<long>(m.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= dm) {
        long da = static_cast<long>(a.size()) - 1;
        long lead = a.back();
        if (lead != 0) {
            // m is monic
            for (long j = 0; j <= dm; ++j)
                a[da - dm + j] = mod_pos(a[da - dm + j] - lead * m[j], p);
        }
        a.pop_back();
    }
    return a;
}

std::vector<long> poly_trim(std::vector<long> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<long> poly_gcd(std::vector<long> a, std::vector<long> b, long p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // reduce a mod b (b made monic)
        long inv_lead = 1;
        {
            long lead = b.back(), t = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) t = t * base % p;
                base = base * base % p;
                e >>= 1;
            }
            inv_lead = t;
        }
        std::vector<long> bm = b;
        for (auto& c : bm) c = c * inv_lead % p;
        a = poly_trim(poly_mod(std::move(a), bm, p));
        std::swap(a, b);
    }
    return a;
}

// x^(p^k) mod h, by repeated squaring of x^p.
std::vector<long> xq_power(const std::vector<long>& h, long p, long k) {
    std::vector<long> x = {0, 1};
    std::vector<long> cur = poly_mod(x, h, p);
    for (long i = 0; i < k; ++i) {
        // cur -> cur^p mod h
        std::vector<long> acc = {1};
        std::vector<long> base = cur;
        long e = p;
        while (e) {
            if (e & 1) acc = poly_mod(poly_mul(acc, base, p), h, p);
            base = poly_mod(poly_mul(base, base, p), h, p);
            e >>= 1;
        }
        cur = acc;
    }
    return cur;
}

bool is_irreducible(const std::vector<long>& h, long p) {
    long d = static_cast<long>(h.size()) - 1;
    // x^(p^d) == x mod h, and x^(p^(d/l)) != x for prime l | d.
    std::vector<long> xqd = xq_power(h, p, d);
    std::vector<long> x = {0, 1};
    if (poly_trim(poly_mod(x, h, p)) != poly_trim(xqd)) {
        // compare after subtracting
        std::vector<long> diff = xqd;
        diff.resize(std::max(diff.size(), size_t(2)), 0);
        diff[1] = mod_pos(diff[1] - 1, p);
        if (!poly_trim(diff).empty()) return false;
    }
    for (auto [l, e] : trial_factor(d)) {
        (void)e;
        std::vector<long> xq = xq_power(h, p, d / l);
        std::vector<long> diff = xq;
        diff.resize(std::max(diff.size(), size_t(2)), 0);
        diff[1] = mod_pos(diff[1] - 1, p);
        diff = poly_trim(diff);
        if (diff.empty()) return false;
        auto g = poly_gcd(diff, h, p);
        if (static_cast<long>(g.size()) - 1 > 0) return false;
    }
    return true;
}

} // namespace

std::vector<std::pair<long, int>> trial_factor(long n) {
    std::vector<std::pair<long, int>> out;
    for (long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            int e = 0;
            while (n % f == 0) {
                n /= f;
                ++e;
            }
            out.emplace_back(f, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::vector<long> SmallFq::least_irreducible(long p, long d) {
    if (d == 1) return {0, 1}; // y
    // enumerate constant-first coefficient tuples by integer value
    long count = 1;
    for (long i = 0; i < d; ++i) {
        count *= p;
        if (count > 2000000) throw resource_error("residue field too large for polynomial search");
    }
    for (long v = 0; v < count; ++v) {
        std::vector<long> h(d + 1, 0);
        long t = v;
        for (long j = 0; j < d; ++j) {
            h[j] = t % p;
            t /= p;
        }
        h[d] = 1;
        if (is_irreducible(h, p)) return h;
    }
    throw input_error("no irreducible polynomial found (impossible)");
}

SmallFq::SmallFq(long p, std::vector<long> modulus_poly) : p_(p), h_(std::move(modulus_poly)) {
    if (!is_prime_small(p_)) throw input_error("residue characteristic must be prime");
    d_ = static_cast<long>(h_.size()) - 1;
    if (d_ < 1 || h_[d_] != 1) throw input_error("modulus must be monic of degree >= 1");
    q_ = 1;
    for (long i = 0; i < d_; ++i) {
        q_ *= p_;
        if (q_ > 100000000) throw resource_error("residue field exceeds size bound");
    }
    for (auto& c : h_) c = mod_pos(c, p_);
    if (!is_irreducible(h_, p_)) throw input_error("modulus polynomial is reducible");
}

FqElem SmallFq::one() const {
    FqElem a(d_, 0);
    a[0] = 1;
    return a;
}

FqElem SmallFq::from_int(long v) const {
    FqElem a(d_, 0);
    a[0] = mod_pos(v, p_);
    return a;
}

bool SmallFq::is_zero(const FqElem& a) const {
    return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

FqElem SmallFq::add(const FqElem& a, const FqElem& b) const {
    FqElem c(d_);
    for (long j = 0; j < d_; ++j) c[j] = mod_pos(a[j] + b[j], p_);
    return c;
}

FqElem SmallFq::sub(const FqElem& a, const FqElem& b) const {
    FqElem c(d_);
    for (long j = 0; j < d_; ++j) c[j] = mod_pos(a[j] - b[j], p_);
    return c;
}

FqElem SmallFq::neg(const FqElem& a) const {
    FqElem c(d_);
    for (long j = 0; j < d_; ++j) c[j] = mod_pos(-a[j], p_);
    return c;
}

std::vector<long> SmallFq::reduce(std::vector<long> poly) const {
    poly = poly_mod(std::move(poly), h_, p_);
    poly.resize(d_, 0);
    return poly;
}

FqElem SmallFq::mul(const FqElem& a, const FqElem& b) const {
    return reduce(poly_mul(a, b, p_));
}

FqElem SmallFq::pow(const FqElem& a, long long k) const {
    FqElem acc = one(), base = a;
    long long e = k;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FqElem SmallFq::inv(const FqElem& a) const {
    if (is_zero(a)) throw input_error("inverse of zero in residue field");
    return pow(a, q_ - 2);
}

FqElem SmallFq::frobenius(const FqElem& a, long k) const {
    FqElem c = a;
    long kk = ((k % d_) + d_) % d_;
    for (long i = 0; i < kk; ++i) c = pow(c, p_);
    return c;
}

long SmallFq::encode(const FqElem& a) const {
    long v = 0;
    for (long j = d_ - 1; j >= 0; --j) v = v * p_ + a[j];
    return v;
}

FqElem SmallFq::decode(long code) const {
    FqElem a(d_, 0);
    for (long j = 0; j < d_; ++j) {
        a[j] = code % p_;
        code /= p_;
    }
    return a;
}

long SmallFq::element_order(const FqElem& a) const {
    if (is_zero(a)) throw input_error("order of zero");
    long order = q_ - 1;
    for (auto [l, e] : trial_factor(q_ - 1)) {
        (void)e;
        while (order % l == 0 && equal(pow(a, order / l), one())) order /= l;
    }
    return order;
}

FqElem SmallFq::canonical_generator() const {
    ensure_tables();
    return gen_;
}

void SmallFq::ensure_tables() const {
    if (!dlog_table_.empty()) return;
    for (long code = 1; code < q_; ++code) {
        FqElem cand = decode(code);
        if (element_order(cand) == q_ - 1) {
            gen_ = cand;
            break;
        }
    }
    dlog_table_.assign(q_, -1);
    FqElem cur = one();
    for (long k = 0; k < q_ - 1; ++k) {
        dlog_table_[encode(cur)] = static_cast<int32_t>(k);
        cur = mul(cur, gen_);
    }
}

long SmallFq::dlog(const FqElem& a) const {
    if (is_zero(a)) throw input_error("dlog of zero");
    ensure_tables();
    return dlog_table_[encode(a)];
}

FqElem SmallFq::trace_to(const FqElem& a, long f) const {
    if (f <= 0 || d_ % f != 0) throw input_error("trace target degree must divide d");
    FqElem acc = zero(), cur = a;
    for (long i = 0; i < d_ / f; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur, f);
    }
    return acc;
}

} // namespace fundclass::fq
