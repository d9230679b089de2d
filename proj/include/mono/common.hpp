#ifndef MONO_COMMON_HPP
#define MONO_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};
struct generation_error : std::runtime_error {
    explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

// Dense vertex set over 0..n-1. Iteration order is always ascending, which is
// what makes the lexicographic tie-breaking rules elsewhere deterministic.
class VertexSet {
  public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}
    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet of(int n, const std::vector<int>& vs) {
        VertexSet s(n);
        for (int v : vs) s.add(v);
        return s;
    }

    int capacity() const { return n_; }
    void add(int v) { w_[v >> 6] |= (uint64_t{1} << (v & 63)); }
    void remove(int v) { w_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    bool contains(int v) const {
        return v >= 0 && v < n_ && (w_[v >> 6] >> (v & 63)) & 1;
    }
    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    VertexSet operator|(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator-(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }
    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }
    int intersect_count(const VertexSet& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size() && i < o.w_.size(); ++i)
            c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size() && i < o.w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~(i < o.w_.size() ? o.w_[i] : 0)) return false;
        return true;
    }
    int min() const {  // -1 when empty
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                out.push_back(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

  private:
    template <typename Op>
    VertexSet apply(const VertexSet& o, Op op) const {
        VertexSet r(std::max(n_, o.n_));
        for (size_t i = 0; i < r.w_.size(); ++i) {
            uint64_t a = i < w_.size() ? w_[i] : 0;
            uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
            r.w_[i] = op(a, b);
        }
        return r;
    }
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }
    int n_;
    std::vector<uint64_t> w_;
};

// Seeded RNG. mt19937_64 plus hand-rolled draws: std::uniform_int_distribution
// is implementation-defined, and experiment records must replay bit-identically.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t raw() { return eng_(); }
    // uniform in [0, bound), bound >= 1; rejection keeps it unbiased
    uint64_t below(uint64_t bound) {
        uint64_t lim = ~uint64_t{0} - ~uint64_t{0} % bound;
        uint64_t x;
        do { x = eng_(); } while (x >= lim);
        return x % bound;
    }
    int uniform(int lo, int hi) { return lo + int(below(uint64_t(hi - lo + 1))); }
    double unit() { return double(eng_() >> 11) * 0x1.0p-53; }
    bool coin() { return eng_() & 1; }
    Rng fork(uint64_t salt) { return Rng(eng_() ^ (salt * 0x9e3779b97f4a7c15ull)); }

  private:
    std::mt19937_64 eng_;
};

// Exact rational with cross-multiplied comparisons; densities and epsilon
// thresholds go through this so regularity verdicts are bit-exact.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    explicit Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw precondition_error("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    static Frac of(long long n) { return Frac(n, 1); }
    // parse "0.25", "1/4", "3"
    static Frac parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash != std::string::npos)
            return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        auto dot = s.find('.');
        if (dot == std::string::npos) return Frac(std::stoll(s), 1);
        std::string frac = s.substr(dot + 1);
        if (frac.size() > 15) throw parse_error("Frac: too many decimal digits: " + s);
        long long den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::string whole = s.substr(0, dot);
        bool neg = !whole.empty() && whole[0] == '-';
        long long w = (whole.empty() || whole == "-") ? 0 : std::stoll(whole);
        long long f = frac.empty() ? 0 : std::stoll(frac);
        long long n = (neg ? -1 : 1) * ((w < 0 ? -w : w) * den + f);
        return Frac(n, den);
    }
    friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
    friend Frac operator/(Frac a, Frac b) {
        if (b.num == 0) throw precondition_error("Frac: division by zero");
        return Frac(a.num * b.den, a.den * b.num);
    }
    friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Frac a, Frac b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(Frac a, Frac b) { return b < a; }
    friend bool operator>=(Frac a, Frac b) { return b <= a; }
    friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
    Frac abs() const { return num < 0 ? Frac(-num, den) : *this; }
    double to_double() const { return double(num) / double(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Counting bounds for a finite multiset S with elements in [0, b]:
//   |{s >= a}| <= sum(S)/a, and, when a <= mean(S) < max(S) <= b,
//   |{s <= a}| <= (b*|S| - sum(S)) / (b - a).
struct MarkovBounds {
    double bound_geq = 0;
    std::optional<double> bound_leq;  // absent when the part-ii precondition fails
};

inline MarkovBounds markov_bounds(const std::vector<double>& s, double a,
                                  std::optional<double> b = std::nullopt) {
    if (s.empty()) throw precondition_error("markov_bounds: empty multiset");
    if (!(a > 0)) throw precondition_error("markov_bounds: a must be positive");
    double sum = 0, mx = s.front();
    for (double x : s) {
        if (x < 0) throw precondition_error("markov_bounds: negative element");
        sum += x;
        mx = std::max(mx, x);
    }
    MarkovBounds out;
    out.bound_geq = sum / a;
    if (b) {
        double mean = sum / double(s.size());
        if (a <= mean && mean < mx && mx <= *b && *b > a)
            out.bound_leq = (*b * double(s.size()) - sum) / (*b - a);
    }
    return out;
}

}  // namespace mono

#endif
