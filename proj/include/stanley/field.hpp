#pragma once

#include <cstdint>
#include <vector>

namespace stanley {

// Coefficient field for rank computations: characteristic 0 means exact
// integer (fraction-free) elimination, a prime p means arithmetic mod p.
struct FieldSpec {
    std::int64_t characteristic = 0;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::int64_t p);

// Dense row-major matrix of small integer entries (boundary maps here only
// ever hold -1, 0, 1).
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

int rank(const IntMatrix& m, const FieldSpec& field);

// Exposed for direct testing against the rational-elimination oracle.
int rank_exact_char0(const IntMatrix& m);
int rank_mod_p(const IntMatrix& m, std::int64_t p);

}  // namespace stanley
