#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stanley {

// Signed arbitrary-precision integer, sized for fraction-free elimination
// on small matrices: magnitudes stay in the hundreds of bits, so a plain
// base-2^32 schoolbook implementation is enough.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Quotient of an exact division; the remainder is required to be zero.
    static BigInt div_exact(const BigInt& num, const BigInt& den);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator<(const BigInt& a, const BigInt& b);

    // Fits in a signed 64-bit value?
    bool fits_int64() const;
    long long to_int64() const;

    std::string to_string() const;

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian limbs, no leading zeros

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& num,
                           const std::vector<std::uint32_t>& den,
                           std::vector<std::uint32_t>& quot,
                           std::vector<std::uint32_t>& rem);
    static void trim(std::vector<std::uint32_t>& v);
    BigInt normalized(int sign, std::vector<std::uint32_t> mag) const;
};

}  // namespace stanley
