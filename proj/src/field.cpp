#include "stanley/field.hpp"

#include <stdexcept>

#include "stanley/bigint.hpp"

namespace stanley {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// One-step fraction-free (Bareiss) elimination over the integers with row
// pivoting and column skipping. Every intermediate entry is a minor of the
// original matrix, and each division is exact. Returns false if an entry
// would overflow 64 bits, in which case the caller reruns with big integers.
bool bareiss_rank_int64(IntMatrix m, int& rank_out) {
    std::vector<long long> w(m.a.begin(), m.a.end());
    auto at = [&](int r, int c) -> long long& {
        return w[static_cast<std::size_t>(r) * m.cols + c];
    };

    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(at(pivot, c), at(rank, c));

        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                long long t1, t2;
                if (__builtin_mul_overflow(at(rank, col), at(r, c), &t1)) return false;
                if (__builtin_mul_overflow(at(r, col), at(rank, c), &t2)) return false;
                long long num;
                if (__builtin_sub_overflow(t1, t2, &num)) return false;
                at(r, c) = num / prev;
            }
            at(r, col) = 0;
        }
        prev = at(rank, col);
        ++rank;
    }
    rank_out = rank;
    return true;
}

int bareiss_rank_bigint(const IntMatrix& m) {
    std::vector<BigInt> w;
    w.reserve(m.a.size());
    for (int v : m.a) w.emplace_back(v);
    auto at = [&](int r, int c) -> BigInt& {
        return w[static_cast<std::size_t>(r) * m.cols + c];
    };

    int rank = 0;
    BigInt prev(1);
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(at(pivot, c), at(rank, c));

        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c)
                at(r, c) = BigInt::div_exact(
                    at(rank, col) * at(r, c) - at(r, col) * at(rank, c), prev);
            at(r, col) = BigInt(0);
        }
        prev = at(rank, col);
        ++rank;
    }
    return rank;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // Extended Euclid; p is prime and a is nonzero mod p.
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    t %= p;
    if (t < 0) t += p;
    return t;
}

}  // namespace

int rank_exact_char0(const IntMatrix& m) {
    int r = 0;
    if (bareiss_rank_int64(m, r)) return r;
    return bareiss_rank_bigint(m);
}

int rank_mod_p(const IntMatrix& m, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    std::vector<std::int64_t> w(m.a.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::int64_t v = m.a[i] % p;
        if (v < 0) v += p;
        w[i] = v;
    }
    auto at = [&](int r, int c) -> std::int64_t& {
        return w[static_cast<std::size_t>(r) * m.cols + c];
    };

    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(at(pivot, c), at(rank, c));

        const std::int64_t inv = mod_inverse(at(rank, col), p);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (at(r, col) == 0) continue;
            const std::int64_t factor = at(r, col) * inv % p;
            for (int c = col; c < m.cols; ++c) {
                at(r, c) = (at(r, c) - factor * at(rank, c)) % p;
                if (at(r, c) < 0) at(r, c) += p;
            }
        }
        ++rank;
    }
    return rank;
}

int rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (field.characteristic == 0) return rank_exact_char0(m);
    return rank_mod_p(m, field.characteristic);
}

}  // namespace stanley
