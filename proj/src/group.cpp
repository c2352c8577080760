#include "hecke/group.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

Mat::Mat(RingElem a, RingElem b, RingElem c, RingElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != RingElem(a_.p(), 1L)) throw DomainError("matrix determinant is not 1");
    normalize();
}

Mat::Mat(Unchecked, RingElem a, RingElem b, RingElem c, RingElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize();
}

void Mat::normalize() {
    int s = sign(trace());
    if (s == 0) s = c_.is_zero() ? sign(a_) : sign(c_);
    if (s < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

Mat Mat::identity(int p) { return Mat(Unchecked{}, RingElem(p, 1L), RingElem(p, 0L), RingElem(p, 0L), RingElem(p, 1L)); }

Mat Mat::operator*(const Mat& r) const {
    return Mat(Unchecked{}, a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_, c_ * r.a_ + d_ * r.c_, c_ * r.b_ + d_ * r.d_);
}

Mat Mat::inverse() const { return Mat(Unchecked{}, d_, -b_, -c_, a_); }

Mat Mat::transpose() const { return Mat(Unchecked{}, a_, c_, b_, d_); }

Mat Mat::pow(unsigned e) const {
    Mat result = identity(p());
    Mat base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

FieldElem Mat::apply(const FieldElem& z) const {
    const FieldElem den = FieldElem(c_) * z + FieldElem(d_);
    if (den.is_zero()) throw DomainError("Moebius image is infinity");
    return (FieldElem(a_) * z + FieldElem(b_)) / den;
}

std::string Mat::to_string() const {
    return "[[" + a_.to_string() + ", " + b_.to_string() + "], [" + c_.to_string() + ", " + d_.to_string() + "]]";
}

std::string to_string(MatClass k) {
    switch (k) {
        case MatClass::hyperbolic: return "hyperbolic";
        case MatClass::parabolic: return "parabolic";
        case MatClass::elliptic: return "elliptic";
    }
    return "?";
}

Mat generator_S(int p) {
    return Mat(RingElem(p, 1L), RingElem::lambda(p), RingElem(p, 0L), RingElem(p, 1L));
}

Mat generator_T(int p) { return Mat(RingElem(p, 0L), RingElem(p, -1L), RingElem(p, 1L), RingElem(p, 0L)); }

Mat generator_U(int p) { return Mat(RingElem::lambda(p), RingElem(p, -1L), RingElem(p, 1L), RingElem(p, 0L)); }

RingElem chebyshev_a(int p, int j) {
    if (j < 0) throw DomainError("negative index");
    const RingElem lam = RingElem::lambda(p);
    RingElem prev(p, 0L);
    RingElem cur(p, 1L);
    if (j == 0) return prev;
    for (int i = 1; i < j; ++i) {
        RingElem next = lam * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Mat generator_V(int p, int j) {
    if (j < 1 || j > p - 1)
        throw DomainError("generator index " + std::to_string(j) + " outside 1.." + std::to_string(p - 1));
    const RingElem aj = chebyshev_a(p, j);
    return Mat(aj, chebyshev_a(p, j + 1), chebyshev_a(p, j - 1), aj);
}

MatClass classify(const Mat& m) {
    const int s = sign(m.trace() - RingElem(m.p(), 2L));
    if (s > 0) return MatClass::hyperbolic;
    if (s == 0) return MatClass::parabolic;
    return MatClass::elliptic;
}

// ---------------------------------------------------------------- words

std::vector<int> canonical_rotation(const std::vector<int>& letters) {
    if (letters.empty()) throw DomainError("empty word");
    const std::size_t n = letters.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const int x = letters[(s + i) % n];
            const int y = letters[(best + i) % n];
            if (x != y) {
                if (x < y) best = s;
                break;
            }
        }
    }
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = letters[(best + i) % n];
    return out;
}

std::pair<std::vector<int>, int> primitive_root(const std::vector<int>& letters) {
    const std::size_t n = letters.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = letters[i] == letters[i - d];
        if (periodic) return {std::vector<int>(letters.begin(), letters.begin() + static_cast<long>(d)), static_cast<int>(n / d)};
    }
    return {letters, 1};
}

bool is_primitive_word(const std::vector<int>& letters) {
    if (letters.empty()) throw DomainError("empty word");
    return primitive_root(letters).second == 1;
}

GenWord GenWord::make(int p, std::vector<int> letters) {
    if (p < 3) throw DomainError("p must be at least 3, got " + std::to_string(p));
    if (letters.empty()) throw DomainError("empty generator word");
    for (int j : letters)
        if (j < 1 || j > p - 1)
            throw DomainError("letter " + std::to_string(j) + " outside 1.." + std::to_string(p - 1));
    return GenWord{p, canonical_rotation(letters)};
}

bool GenWord::primitive() const { return is_primitive_word(letters); }

bool GenWord::parabolic() const {
    const int first = letters.front();
    if (first != 1 && first != p - 1) return false;
    return std::all_of(letters.begin(), letters.end(), [&](int j) { return j == first; });
}

std::string GenWord::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(letters[i]);
    }
    return s;
}

GenWord transpose_word(const GenWord& w) {
    std::vector<int> t(w.letters.rbegin(), w.letters.rend());
    for (int& j : t) j = w.p - j;
    return GenWord{w.p, canonical_rotation(t)};
}

Mat word_to_matrix(const GenWord& w) {
    Mat m = Mat::identity(w.p);
    for (int j : w.letters) m = m * generator_V(w.p, j);
    return m;
}

std::vector<GenWord> enumerate_words(int p, int n) {
    if (p < 3) throw DomainError("p must be at least 3, got " + std::to_string(p));
    if (n < 1) throw DomainError("word length must be positive");
    std::vector<GenWord> out;
    if (n == 1) {
        for (int j = 2; j <= p - 2; ++j) out.push_back(GenWord{p, {j}});
        return out;
    }
    // Duval's iteration: successive Lyndon words of length ≤ n in lexicographic order.
    const int k = p - 1;
    std::vector<int> w{1};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == n) out.push_back(GenWord{p, w});
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == k) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

}  // namespace hecke
