#include "stanley/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // Avoid overflow on LLONG_MIN by working in unsigned space.
    unsigned long long u =
        v > 0 ? static_cast<unsigned long long>(v)
              : ~static_cast<unsigned long long>(v) + 1ULL;
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

void BigInt::trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInt BigInt::normalized(int sign, std::vector<std::uint32_t> mag) const {
    trim(mag);
    BigInt out;
    out.sign_ = mag.empty() ? 0 : sign;
    out.mag_ = std::move(mag);
    return out;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out[i] = static_cast<std::uint32_t>(s & 0xffffffffULL);
        carry = s >> 32;
    }
    trim(out);
    return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (s < 0) {
            s += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(s);
    }
    trim(out);
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] +
                                out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(out);
    return out;
}

// Binary long division: slow in theory, fine at the sizes elimination
// produces here.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& num,
                        const std::vector<std::uint32_t>& den,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
    if (den.empty()) throw std::domain_error("division by zero");
    quot.assign(num.size(), 0);
    rem.clear();
    if (cmp_mag(num, den) < 0) {
        rem = num;
        trim(quot);
        return;
    }
    const int total_bits = static_cast<int>(num.size()) * 32;
    for (int bit = total_bits - 1; bit >= 0; --bit) {
        // rem = rem << 1 | num[bit]
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            std::uint32_t next = rem[i] >> 31;
            rem[i] = (rem[i] << 1) | carry;
            carry = next;
        }
        if (carry) rem.push_back(carry);
        if ((num[bit / 32] >> (bit % 32)) & 1u) {
            if (rem.empty())
                rem.push_back(1);
            else
                rem[0] |= 1u;
        }
        if (cmp_mag(rem, den) >= 0) {
            rem = sub_mag(rem, den);
            quot[bit / 32] |= (1u << (bit % 32));
        }
    }
    trim(quot);
    trim(rem);
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_)
        return a.normalized(a.sign_, BigInt::add_mag(a.mag_, b.mag_));
    const int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return a.normalized(a.sign_, BigInt::sub_mag(a.mag_, b.mag_));
    return a.normalized(b.sign_, BigInt::sub_mag(b.mag_, a.mag_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    return a.normalized(a.sign_ * b.sign_, BigInt::mul_mag(a.mag_, b.mag_));
}

BigInt BigInt::div_exact(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (num.is_zero()) return BigInt();
    std::vector<std::uint32_t> q, r;
    divmod_mag(num.mag_, den.mag_, q, r);
    if (!r.empty()) throw std::logic_error("division was not exact");
    return num.normalized(num.sign_ * den.sign_, std::move(q));
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    const int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

bool BigInt::fits_int64() const {
    if (mag_.size() < 2) return true;
    if (mag_.size() > 2) return false;
    const std::uint64_t v =
        (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    return sign_ > 0 ? v <= 0x7fffffffffffffffULL : v <= 0x8000000000000000ULL;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt exceeds 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return sign_ >= 0 ? static_cast<long long>(v)
                      : -static_cast<long long>(v - 1) - 1;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> rest = mag_;
    std::string digits;
    const std::vector<std::uint32_t> ten = {10};
    while (!rest.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(rest, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.empty() ? 0 : r[0])));
        rest = std::move(q);
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace stanley
